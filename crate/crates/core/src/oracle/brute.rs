use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::oracle::monomial::MonomialPoly;
use crate::rational::{from_bigint, int, to_exact_string, Rational};

/// Largest variable count accepted by the brute-force oracle.
pub const BRUTE_MAX_VARIABLES: usize = 5;

static VANDERMONDE_SQ: [OnceLock<MonomialPoly>; BRUTE_MAX_VARIABLES + 1] =
    [const { OnceLock::new() }; BRUTE_MAX_VARIABLES + 1];

fn vandermonde_sq(n: usize) -> &'static MonomialPoly {
    VANDERMONDE_SQ[n].get_or_init(|| {
        let v = MonomialPoly::vandermonde(n);
        v.mul(&v)
    })
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NonPositive { name: "n", value: "0".into() });
    }
    if n > BRUTE_MAX_VARIABLES {
        return Err(Error::TooManyVariables { n, max: BRUTE_MAX_VARIABLES });
    }
    Ok(())
}

/// Applies `x^m ↦ ∏_i w(m_i)` term by term.
fn apply_functional(p: &MonomialPoly, w: &mut impl FnMut(u32) -> Rational) -> Rational {
    let mut total = Rational::zero();
    for (e, c) in p.terms() {
        let mut t = c.clone();
        for &m in e {
            t *= w(m);
        }
        total += t;
    }
    total
}

/// `⟨f⟩ / ⟨1⟩` over the joint density `∏(x_i-x_j)^2 ∏ x^{a-1} (1-x)^{b-1}`,
/// with each monomial replaced by its normalized Beta moment
/// `∏_{j<m} (a+j)/(a+b+j)`.
pub fn brute_average(f: &MonomialPoly, n: usize, a: &Rational, b: &Rational) -> Result<Rational> {
    check_n(n)?;
    if f.nvars() != n {
        return Err(Error::OutOfRange {
            what: "f",
            detail: format!("polynomial in {} variables, expected {n}", f.nvars()),
        });
    }
    for (name, v) in [("a", a), ("b", b)] {
        if !v.is_positive() {
            return Err(Error::NonPositive { name, value: to_exact_string(v) });
        }
    }
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut cache: Vec<Rational> = vec![Rational::one()];
    let mut moment = |m: u32| {
        while cache.len() <= m as usize {
            let j = int(cache.len() as i64 - 1);
            let next = cache.last().unwrap() * (a + &j) / (a + b + &j);
            cache.push(next);
        }
        cache[m as usize].clone()
    };
    let vsq = vandermonde_sq(n);
    let den = apply_functional(vsq, &mut moment);
    let num = apply_functional(&vsq.mul(f), &mut moment);
    Ok(num / den)
}

/// Unnormalized `∫_{[0,1]^n} ∏(x_i-x_j)^2 ∏ x^{a-1}(1-x)^{b-1} dx` for
/// positive integers `a`, `b`, via `B(m+a, b)` per variable.
pub fn selberg_brute(n: usize, a: i64, b: i64) -> Result<Rational> {
    check_n(n)?;
    for (name, v) in [("a", a), ("b", b)] {
        if v < 1 {
            return Err(Error::NonPositive { name, value: v.to_string() });
        }
    }
    let fact = |m: i64| from_bigint(factorial(m as u64));
    let mut beta = |m: u32| {
        let m = i64::from(m);
        fact(m + a - 1) * fact(b - 1) / fact(m + a + b - 1)
    };
    Ok(apply_functional(vandermonde_sq(n), &mut beta))
}
