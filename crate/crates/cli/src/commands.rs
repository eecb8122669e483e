use std::collections::BTreeMap;
use std::path::Path;

use clap::ValueEnum;
use jacobi_moments::asymptotics::{
    catalan_numerator, dyck_numerator, ik_limit, ik_limit_expanded, ik_limit_l1l2, l1l2_from_slopes,
    limit_dyck_novaes, special_cases, LimitQuery, SpecialCase,
};
use jacobi_moments::oracle::{brute_average, density_ik, mc_sample_pk, ChainConfig, MonomialPoly, SpectralParams, BRUTE_MAX_VARIABLES};
use jacobi_moments::rational::{int, to_decimal, to_exact_string, to_f64};
use jacobi_moments::schur_moments::{ik_closed, ik_via_schur};
use jacobi_moments::verify::{self, Check, Suite};
use jacobi_moments::{Error, Rational, ScalingParams, UniPoly};
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::output::{emit, paint, use_color, OutputRecord, DECIMAL_DIGITS};
use crate::{IkArgs, LimitArgs, LimitForm, McArgs, SuiteArg, TableArgs, VerifyArgs};

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn exact(r: &Rational) -> String {
    to_exact_string(r)
}

pub fn ik(args: &IkArgs, out: Option<&Path>) -> CliResult<()> {
    let value = ik_closed(args.k, &args.a, &args.b, args.n)?;
    let mut record = OutputRecord::new("ik", &value, "hook-sum closed form")
        .input("k", args.k)
        .input("n", args.n)
        .input("a", exact(&args.a))
        .input("b", exact(&args.b));
    if args.cross_check {
        let mut routes = Map::new();
        let mut compare = |name: &str, other: Rational| -> CliResult<()> {
            if other != value {
                return Err(CliError::Consistency(format!(
                    "{name} gives {} but the closed form gives {}",
                    exact(&other),
                    exact(&value)
                )));
            }
            routes.insert(name.to_string(), Value::String(exact(&other)));
            Ok(())
        };
        compare("schur-hooks", ik_via_schur(args.k, &args.a, &args.b, args.n)?)?;
        if let Ok(sp) = SpectralParams::from_ab(&args.a, &args.b, args.n) {
            compare("density", density_ik(args.k, &sp)?)?;
        }
        let n = args.n as usize;
        if n <= BRUTE_MAX_VARIABLES && args.a.is_positive() && args.b.is_positive() {
            compare("brute-force", brute_average(&MonomialPoly::power_sum(n, args.k as u32), n, &args.a, &args.b)?)?;
        }
        record = record.extra("cross_checks", routes);
    }
    emit(out, &record.to_json())?;
    Ok(())
}

fn symbolic_family(case: &SpecialCase, k: i64) -> jacobi_moments::Result<Option<(&'static str, UniPoly)>> {
    Ok(match case {
        SpecialCase::Catalan { .. } => Some(("catalan", catalan_numerator(k)?)),
        SpecialCase::Dyck { .. } => Some(("dyck", dyck_numerator(k)?)),
        _ => None,
    })
}

pub fn limit(args: &LimitArgs, out: Option<&Path>) -> CliResult<()> {
    let k = args.k;
    let query = LimitQuery::from_slopes(k, args.a1.clone(), args.b1.clone())?;
    let general = ik_limit(&query);
    let (l1, l2) = l1l2_from_slopes(&args.a1, &args.b1)?;
    let mut forms: Vec<(String, Rational)> = vec![
        ("general".into(), general.clone()),
        ("expanded".into(), ik_limit_expanded(&query)),
        ("l1l2".into(), ik_limit_l1l2(k, &l1, &l2)?),
    ];
    let specials = special_cases(&args.a1, &args.b1);
    for case in &specials {
        forms.push((case.name().into(), case.evaluate(k)?));
        if let SpecialCase::Dyck { l } = case {
            forms.push(("dyck-alternating".into(), limit_dyck_novaes(k, l)?));
        }
    }
    if let Some((name, v)) = forms.iter().find(|(_, v)| *v != general) {
        return Err(CliError::Consistency(format!(
            "form '{name}' gives {} but the general formula gives {}",
            exact(v),
            exact(&general)
        )));
    }
    let special = specials.first();
    let provenance = match (args.form, special) {
        (LimitForm::General, _) | (LimitForm::AutoSpecial, None) => "general limit formula".to_string(),
        (LimitForm::L1l2, _) => "(l1, l2) form".to_string(),
        (LimitForm::AutoSpecial, Some(case)) => format!("special case {}", case.name()),
    };
    let mut record = OutputRecord::new("limit", &general, provenance)
        .input("k", k)
        .input("a1", exact(&args.a1))
        .input("b1", exact(&args.b1))
        .input("form", value_name(args.form))
        .extra("special", special.map_or(Value::Null, |c| Value::String(c.name().into())))
        .extra("forms", forms.iter().map(|(n, v)| (n.clone(), Value::String(exact(v)))).collect::<Map<_, _>>());
    if args.form == LimitForm::L1l2 {
        record = record.extra("l1", exact(&l1)).extra("l2", exact(&l2));
    }
    if args.symbolic {
        let mut sym = Map::new();
        for case in &specials {
            if let Some((name, num)) = symbolic_family(case, k)? {
                let text = format!("({}) / (1 + l)^{}", num.to_string().replace('x', "l"), 2 * k - 1);
                sym.insert(name.into(), Value::String(text));
            }
        }
        record = record.extra("symbolic", sym);
    }
    emit(out, &record.to_json())?;
    Ok(())
}

enum Cell {
    Row(Row),
    Skipped(String),
}

struct Row {
    k: i64,
    n: i64,
    value: Rational,
    limit: Rational,
    err: Rational,
}

pub fn table(args: &TableArgs, out: Option<&Path>) -> CliResult<()> {
    let ns: Vec<i64> = args
        .n_list
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| CliError::Usage(format!("--n-list entry '{s}' is not a positive integer")))
        })
        .collect::<CliResult<_>>()?;
    if ns.is_empty() {
        return Err(CliError::Usage("--n-list is empty".into()));
    }
    let params = ScalingParams::new(args.a1.clone(), args.a0.clone(), args.b1.clone(), args.b0.clone());
    let limits: Vec<Rational> = (1..=args.k_max)
        .map(|k| LimitQuery::new(k, params.clone()).map(|q| ik_limit(&q)))
        .collect::<jacobi_moments::Result<_>>()?;
    let cells: Vec<(i64, i64)> = (1..=args.k_max).flat_map(|k| ns.iter().map(move |&n| (k, n))).collect();
    let rows: Vec<CliResult<Cell>> = cells
        .par_iter()
        .map(|&(k, n)| {
            let nn = int(n);
            match ik_closed(k, &params.a_at(&nn), &params.b_at(&nn), n) {
                Ok(v) => {
                    let value = v / &nn;
                    let limit = limits[(k - 1) as usize].clone();
                    let err = (&value - &limit).abs();
                    Ok(Cell::Row(Row { k, n, value, limit, err }))
                }
                Err(e @ Error::VanishingFactor { .. }) if args.skip_degenerate => {
                    Ok(Cell::Skipped(format!("skipping k={k} N={n}: {e}")))
                }
                Err(e) => Err(CliError::Domain(format!("k={k} N={n}: {e}"))),
            }
        })
        .collect();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "N", "ik_over_n", "limit", "abs_err", "ik_over_n_exact", "limit_exact", "abs_err_exact"])?;
    for row in rows {
        let r = match row? {
            Cell::Row(r) => r,
            Cell::Skipped(note) => {
                eprintln!("{note}");
                continue;
            }
        };
        let d = |x: &Rational| to_decimal(x, DECIMAL_DIGITS);
        w.write_record([
            r.k.to_string(),
            r.n.to_string(),
            d(&r.value),
            d(&r.limit),
            d(&r.err),
            exact(&r.value),
            exact(&r.limit),
            exact(&r.err),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    emit(out, &String::from_utf8(bytes).expect("csv is utf-8"))?;
    Ok(())
}

pub fn verify(args: &VerifyArgs, out: Option<&Path>) -> CliResult<()> {
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::Oracles => vec![Suite::Oracles],
        SuiteArg::Limits => vec![Suite::Limits],
        SuiteArg::Conjecture => vec![Suite::Conjecture],
    };
    let checks: Vec<Check> = suites.into_iter().flat_map(verify::checks).collect();
    let results: Vec<_> = checks.par_iter().map(Check::run).collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    let suite_name = value_name(args.suite);
    let text = if args.json {
        let report = json!({
            "command": "verify",
            "suite": suite_name,
            "passed": results.len() - failed,
            "failed": failed,
            "checks": results.iter().map(|r| json!({
                "suite": r.suite.name(),
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
            })).collect::<Vec<_>>(),
        });
        serde_json::to_string_pretty(&report).expect("report serializes")
    } else {
        let color = out.is_none() && use_color();
        let mut lines: Vec<String> = results
            .iter()
            .map(|r| {
                let tag = if r.passed { paint("PASS", "32", color) } else { paint("FAIL", "31", color) };
                format!("{tag} [{}] {}: {}", r.suite, r.name, r.detail)
            })
            .collect();
        lines.push(format!("{} passed, {failed} failed", results.len() - failed));
        lines.join("\n")
    };
    emit(out, &text)?;
    if failed > 0 {
        return Err(CliError::Verification(format!("{failed} check(s) failed")));
    }
    Ok(())
}

pub fn mc(args: &McArgs, out: Option<&Path>) -> CliResult<()> {
    for (name, v) in [("a", &args.a), ("b", &args.b)] {
        if !v.is_positive() {
            return Err(Error::NonPositive { name, value: exact(v) }.into());
        }
    }
    let cfg = ChainConfig {
        seed: args.seed,
        burn_in: args.burn_in,
        thinning: args.thinning,
        step_width: args.step_width,
        samples: args.samples,
    };
    let est = mc_sample_pk(args.k, args.n as usize, to_f64(&args.a), to_f64(&args.b), &cfg)?;
    let reference = ik_closed(i64::from(args.k), &args.a, &args.b, i64::from(args.n))?;
    let z = (est.mean - to_f64(&reference)) / est.std_error;
    if let Some(w) = &est.warning {
        eprintln!("warning: {w}");
    }
    let inputs: BTreeMap<&str, String> = [
        ("k", args.k.to_string()),
        ("n", args.n.to_string()),
        ("a", exact(&args.a)),
        ("b", exact(&args.b)),
        ("seed", args.seed.to_string()),
        ("samples", args.samples.to_string()),
        ("burn_in", args.burn_in.to_string()),
        ("thinning", args.thinning.to_string()),
        ("step_width", args.step_width.to_string()),
    ]
    .into_iter()
    .collect();
    let mut record = OutputRecord::new("mc", &reference, "exact reference from the hook-sum closed form; estimate from a ChaCha20 Metropolis chain");
    for (k, v) in inputs {
        record = record.input(k, v);
    }
    let record = record
        .extra("estimate", est.mean)
        .extra("std_error", est.std_error)
        .extra("z_score", z)
        .extra("acceptance_rate", est.acceptance_rate)
        .extra("warning", est.warning.clone().map_or(Value::Null, Value::String));
    emit(out, &record.to_json())?;
    Ok(())
}
