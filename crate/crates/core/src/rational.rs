//! Arbitrary-precision rationals and their text renderings.
//!
//! `Rational` is always stored reduced with a positive denominator, so
//! structural equality is numeric equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`; panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"-0.125"` / `"3e-2"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let err = || Error::Parse(text.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Ok(Rational::from_integer(n));
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{whole}{frac}");
    let mut value = Rational::from_integer(all.parse::<BigInt>().ok()?);
    let shift = exponent - frac.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= pow(&ten, shift as u32);
    } else {
        value /= pow(&ten, (-shift) as u32);
    }
    Some(if negative { -value } else { value })
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Integer power allowing negative exponents; panics on `0^-n`.
pub fn powi(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        pow(base, exp as u32)
    } else {
        pow(&base.recip(), (-exp) as u32)
    }
}

/// Exact `"p/q"` form; integers keep the `/1` suffix.
pub fn to_exact_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Returns the value as `i64` when it is an integer that fits.
pub fn to_i64_exact(r: &Rational) -> Option<i64> {
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Decimal rendering with `sig` significant digits, rounded half-to-even.
///
/// Uses fixed notation for magnitudes in `[1e-6, 1e12)` and scientific
/// notation otherwise.
pub fn to_decimal(r: &Rational, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let abs = r.abs();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= |r| < 10^(e+1)
    let mut e = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    let ten_r = Rational::from_integer(ten.clone());
    while powi(&ten_r, e) > abs {
        e -= 1;
    }
    while powi(&ten_r, e + 1) <= abs {
        e += 1;
    }

    let scaled = &abs * powi(&ten_r, sig as i64 - 1 - e);
    let mut digits = round_half_even(&scaled);
    if digits == num_traits::pow(ten.clone(), sig) {
        digits /= &ten;
        e += 1;
    }
    let digits = digits.to_string();
    let sign = if negative { "-" } else { "" };

    if (-6..12).contains(&e) {
        let body = if e >= 0 {
            let int_len = (e + 1) as usize;
            if int_len >= digits.len() {
                format!("{}{}", digits, "0".repeat(int_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
        };
        format!("{sign}{}", trim_fraction(&body))
    } else {
        let mantissa = if digits.len() > 1 {
            trim_fraction(&format!("{}.{}", &digits[..1], &digits[1..]))
        } else {
            digits
        };
        format!("{sign}{mantissa}e{e}")
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn round_half_even(x: &Rational) -> BigInt {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    let twice: BigInt = &r * 2u32;
    match twice.cmp(x.denom()) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    }
}
