use num_traits::Zero;

use crate::combinat::{factorial, pochhammer};
use crate::error::{Error, Result};
use crate::rational::{from_bigint, int, to_exact_string, to_i64_exact, Rational};

/// Integer exponents `A = a - 1`, `B = b - 1` and matrix size `N` of the
/// one-point density `x^A (1-x)^B Σ_j c_j [P_j^{(A,B)}(1-2x)]^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralParams {
    a_exp: i64,
    b_exp: i64,
    n: i64,
}

impl SpectralParams {
    pub fn new(a_exp: i64, b_exp: i64, n: i64) -> Result<Self> {
        if a_exp < 0 {
            return Err(Error::OutOfRange { what: "A", detail: format!("need A >= 0, got {a_exp}") });
        }
        if b_exp < 0 {
            return Err(Error::OutOfRange { what: "B", detail: format!("need B >= 0, got {b_exp}") });
        }
        if n < 1 {
            return Err(Error::NonPositive { name: "N", value: n.to_string() });
        }
        Ok(Self { a_exp, b_exp, n })
    }

    /// From the ensemble parameters `a`, `b`, which must be positive integers.
    pub fn from_ab(a: &Rational, b: &Rational, n: i64) -> Result<Self> {
        let as_int = |name: &'static str, v: &Rational| {
            to_i64_exact(v).ok_or_else(|| Error::NonInteger { name, value: to_exact_string(v) })
        };
        Self::new(as_int("a", a)? - 1, as_int("b", b)? - 1, n)
    }

    pub fn a_exp(&self) -> i64 {
        self.a_exp
    }

    pub fn b_exp(&self) -> i64 {
        self.b_exp
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

fn gamma(m: i64) -> Rational {
    debug_assert!(m >= 1);
    from_bigint(factorial((m - 1) as u64))
}

fn fact(m: i64) -> Rational {
    from_bigint(factorial(m as u64))
}

fn poch(x: i64, n: i64) -> Rational {
    pochhammer(&int(x), n as usize)
}

/// `∫ x^k ρ_N(x; A, B) dx` from the triple nested sum over `j`, `m`, `ℓ`.
/// `k = 0` gives the normalization `N`.
pub fn density_ik(k: i64, sp: &SpectralParams) -> Result<Rational> {
    if k < 0 {
        return Err(Error::OutOfRange { what: "k", detail: format!("need k >= 0, got {k}") });
    }
    let (a, b) = (sp.a_exp, sp.b_exp);
    let mut total = Rational::zero();
    for j in 0..sp.n {
        let c = int(2 * j + a + b + 1) * gamma(j + 1) * gamma(j + a + b + 1) / (gamma(j + a + 1) * gamma(j + b + 1));
        let mut inner = Rational::zero();
        for m in 0..=j {
            let d = poch(-j, m) * poch(a + b + j + 1, m) * poch(a + m + 1, j - m) / fact(m);
            let f = gamma(a + j + 1) * gamma(a + k + m + 1) * gamma(b + 1)
                / (fact(j) * gamma(a + 1) * gamma(a + b + k + m + 2));
            let mut g_sum = Rational::zero();
            for l in 0..=j {
                g_sum += poch(-j, l) * poch(j + a + b + 1, l) * poch(a + k + m + 1, l)
                    / (fact(l) * poch(a + 1, l) * poch(a + b + k + m + 2, l));
            }
            inner += d * f * g_sum;
        }
        total += c / fact(j) * inner;
    }
    Ok(total)
}
