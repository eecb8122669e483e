use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, IsTerminal, Write};
use std::path::Path;

use jacobi_moments::rational::{to_decimal, to_exact_string};
use jacobi_moments::Rational;
use serde::Serialize;
use serde_json::{Map, Value};

pub const DECIMAL_DIGITS: usize = 12;

/// A single computed value as printed by `ik`, `limit` and `mc`.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: &'static str,
    pub inputs: BTreeMap<String, String>,
    /// Exact value as `p/q`.
    pub value: String,
    /// Display-only rendering, 12 significant digits.
    pub decimal: String,
    pub provenance: String,
    #[serde(flatten)]
    pub extras: Map<String, Value>,
}

impl OutputRecord {
    pub fn new(command: &'static str, value: &Rational, provenance: impl Into<String>) -> Self {
        Self {
            command,
            inputs: BTreeMap::new(),
            value: to_exact_string(value),
            decimal: to_decimal(value, DECIMAL_DIGITS),
            provenance: provenance.into(),
            extras: Map::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn extra(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.extras.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }
}

/// Writes `data` to `out` if given, else stdout.
pub fn emit(out: Option<&Path>, data: &str) -> io::Result<()> {
    match out {
        Some(p) => {
            let mut f = File::create(p)?;
            f.write_all(data.as_bytes())?;
            if !data.ends_with('\n') {
                f.write_all(b"\n")?;
            }
            Ok(())
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(data.as_bytes())?;
            if !data.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

/// Colour only on a terminal and only when `NO_COLOR` is unset or empty.
pub fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && io::stdout().is_terminal()
}

pub fn paint(text: &str, ansi: &str, color: bool) -> String {
    if color {
        format!("\x1b[{ansi}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}
