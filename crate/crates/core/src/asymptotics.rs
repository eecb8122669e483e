//! Closed-form limits of `I_k / N` as `N → ∞` with `a = a1 N + a0`,
//! `b = b1 N + b0`. Only the slopes `a1`, `b1` enter.
//!
//! [`ik_limit`] is the reference formula. [`ik_limit_expanded`] and
//! [`ik_limit_l1l2`] are independent rewritings kept for cross-checking, and
//! the special cases below must agree with it under their substitutions.

use std::fmt;

use num_traits::{One, Zero};

use crate::combinat::{choose, gimel_int};
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{from_bigint, int, pow, Rational};
use crate::schur_moments::ScalingParams;

/// A request for `lim I_k / N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitQuery {
    k: i64,
    params: ScalingParams,
}

impl LimitQuery {
    pub fn new(k: i64, params: ScalingParams) -> Result<Self> {
        check_k(k)?;
        params.check_nondegenerate()?;
        Ok(Self { k, params })
    }

    pub fn from_slopes(k: i64, a1: Rational, b1: Rational) -> Result<Self> {
        Self::new(k, ScalingParams::slopes(a1, b1))
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn params(&self) -> &ScalingParams {
        &self.params
    }
}

fn check_k(k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::OutOfRange { what: "k", detail: format!("need k >= 1, got {k}") });
    }
    Ok(())
}

fn c(n: i64, k: i64) -> Rational {
    from_bigint(choose(n, k))
}

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(1+a1) / (k s^k) Σ_j (-1)^j r^j C(j+k-1, j) Σ_i (1+a1)^i C(k, i+j+1) C(k, i)`
/// with `s = 2 + a1 + b1` and `r = (1 + a1) / s`.
pub fn ik_limit(q: &LimitQuery) -> Rational {
    let k = q.k;
    let u = &q.params.a1 + int(1);
    let s = q.params.slope_sum();
    let r = &u / &s;
    let mut outer = Rational::zero();
    for j in 0..k {
        let mut inner = Rational::zero();
        for i in 0..k - j {
            inner += pow(&u, i as u32) * c(k, i + j + 1) * c(k, i);
        }
        outer += sign(j) * pow(&r, j as u32) * c(j + k - 1, j) * inner;
    }
    u / (int(k) * pow(&s, k as u32)) * outer
}

/// Convenience wrapper over [`ik_limit`] taking the slopes directly.
pub fn ik_limit_slopes(k: i64, a1: &Rational, b1: &Rational) -> Result<Rational> {
    Ok(ik_limit(&LimitQuery::from_slopes(k, a1.clone(), b1.clone())?))
}

/// Expanded rewriting of [`ik_limit`]:
///
/// `(1+a1)/s^k [ (1+a1)^{k-1} + Σ_{i≤k-2} (1+a1)^i/(k-i-1) C(k,i) Σ_j (-r)^j C(j+k-1, i+j+1) C(k-i-1, j) ]`.
pub fn ik_limit_expanded(q: &LimitQuery) -> Rational {
    let k = q.k;
    let u = &q.params.a1 + int(1);
    let s = q.params.slope_sum();
    let r = &u / &s;
    let mut bracket = pow(&u, (k - 1) as u32);
    for i in 0..=k - 2 {
        let mut inner = Rational::zero();
        for j in 0..=k - 1 - i {
            inner += sign(j) * pow(&r, j as u32) * c(j + k - 1, i + j + 1) * c(k - i - 1, j);
        }
        bracket += pow(&u, i as u32) / int(k - i - 1) * c(k, i) * inner;
    }
    u / pow(&s, k as u32) * bracket
}

/// Sign/index conventions for the `(ℓ1, ℓ2)` form of the limit.
///
/// The printed form carries `(-1)^j` in a sum over `i ≥ 1`; its
/// inverse-binomial-transform restatement implies `(-1)^{j-i}` over `i ≥ 0`.
/// Neither reproduces [`ik_limit`]; the rewriting that does has `(-1)^i`
/// over `i ≥ 0`, which is the default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum L1L2Reading {
    /// `Σ_{i=0}^{j} (-1)^i C(j, i) C(i+k-1, j-1) ℓ2^i`.
    #[default]
    Corrected,
    /// `Σ_{i=1}^{j} (-1)^j C(j, i) C(i+k-1, j-1) ℓ2^i`, as printed.
    Literal,
    /// `B_j^{-1}[(C(i+k-1, j-1) ℓ2^i)_i]`, i.e. `(-1)^{j-i}` over `i ≥ 0`.
    BinomialTransform,
}

impl fmt::Display for L1L2Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Corrected => "corrected",
            Self::Literal => "literal",
            Self::BinomialTransform => "binomial-transform",
        })
    }
}

/// `(ℓ1, ℓ2)` with `a1 = ℓ1 - 1`, `b1 = 1/ℓ2 - ℓ1 - 1`.
pub fn l1l2_from_slopes(a1: &Rational, b1: &Rational) -> Result<(Rational, Rational)> {
    let s = int(2) + a1 + b1;
    if s.is_zero() {
        return Err(Error::DegenerateScaling);
    }
    Ok((a1 + int(1), s.recip()))
}

/// Inverse of [`l1l2_from_slopes`].
pub fn slopes_from_l1l2(l1: &Rational, l2: &Rational) -> Result<(Rational, Rational)> {
    if l2.is_zero() {
        return Err(Error::OutOfRange { what: "l2", detail: "l2 must be nonzero".into() });
    }
    Ok((l1 - int(1), l2.recip() - l1 - int(1)))
}

/// `ℓ1 ℓ2^k (1 + Σ_{j=1}^{k-1} ℓ1^j / j · C(k, j+1) · inner_j)`, with
/// `inner_j` set by [`L1L2Reading::Corrected`].
pub fn ik_limit_l1l2(k: i64, l1: &Rational, l2: &Rational) -> Result<Rational> {
    ik_limit_l1l2_with(k, l1, l2, L1L2Reading::Corrected)
}

pub fn ik_limit_l1l2_with(k: i64, l1: &Rational, l2: &Rational, reading: L1L2Reading) -> Result<Rational> {
    check_k(k)?;
    if l2.is_zero() {
        return Err(Error::OutOfRange { what: "l2", detail: "l2 must be nonzero".into() });
    }
    let mut bracket = Rational::one();
    for j in 1..k {
        let mut inner = Rational::zero();
        let start = if reading == L1L2Reading::Literal { 1 } else { 0 };
        for i in start..=j {
            let sgn = match reading {
                L1L2Reading::Corrected => sign(i),
                L1L2Reading::Literal => sign(j),
                L1L2Reading::BinomialTransform => sign(j - i),
            };
            inner += sgn * c(j, i) * c(i + k - 1, j - 1) * pow(l2, i as u32);
        }
        bracket += pow(l1, j as u32) / int(j) * c(k, j + 1) * inner;
    }
    Ok(l1 * pow(l2, k as u32) * bracket)
}

/// Limits `0` (for `a1 = -1`, `b1 ≠ -1`) and `1` (for `b1 = -1`, `a1 ≠ -1`);
/// `None` when neither branch applies.
pub fn limit_special_zero_one(k: i64, a1: &Rational, b1: &Rational) -> Option<Rational> {
    let minus_one = -Rational::one();
    if k < 1 {
        return None;
    }
    if *a1 == minus_one && *b1 != minus_one {
        Some(Rational::zero())
    } else if *b1 == minus_one && *a1 != minus_one {
        Some(Rational::one())
    } else {
        None
    }
}

/// `C(2k, k) / 4^k`, the `a1 = b1 = 0` limit.
pub fn limit_central_binomial(k: i64) -> Result<Rational> {
    check_k(k)?;
    Ok(c(2 * k, k) / pow(&int(4), k as u32))
}

fn check_l(l: &Rational) -> Result<()> {
    if (l + int(1)).is_zero() {
        return Err(Error::OutOfRange { what: "l", detail: "l = -1 makes 1 + l vanish".into() });
    }
    Ok(())
}

/// Numerator `Σ_{i<k} ((k-i)/k) C(2k, i) ℓ^i` of the `a1 = 0` limit, whose
/// denominator is `(1 + ℓ)^{2k-1}`.
pub fn catalan_numerator(k: i64) -> Result<UniPoly> {
    check_k(k)?;
    Ok(UniPoly::new((0..k).map(|i| int(k - i) / int(k) * c(2 * k, i)).collect()))
}

/// `a1 = 0`, `b1 = ℓ - 1`.
pub fn limit_catalan(k: i64, l: &Rational) -> Result<Rational> {
    check_l(l)?;
    Ok(catalan_numerator(k)?.eval(l) / pow(&(l + int(1)), (2 * k - 1) as u32))
}

/// Numerator `ℓ Σ_{i ≤ 2(k-1)} C(k-1, ⌈i/2⌉) C(k-1, ⌊i/2⌋) ℓ^i` of the
/// `b1 = 0` limit, over `(1 + ℓ)^{2k-1}`.
pub fn dyck_numerator(k: i64) -> Result<UniPoly> {
    check_k(k)?;
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend((0..=2 * (k - 1)).map(|i| from_bigint(gimel_int(k - 1, i))));
    Ok(UniPoly::new(coeffs))
}

/// `b1 = 0`, `a1 = ℓ - 1`, in peak-counting form.
pub fn limit_dyck(k: i64, l: &Rational) -> Result<Rational> {
    check_l(l)?;
    Ok(dyck_numerator(k)?.eval(l) / pow(&(l + int(1)), (2 * k - 1) as u32))
}

/// The same `b1 = 0` limit as an alternating sum,
/// `(ℓ+1) Σ_{i=1}^{k} (-1)^{i-1}/i C(k-1, i-1) C(2(i-1), i-1) (ℓ/(1+ℓ)^2)^i`.
pub fn limit_dyck_novaes(k: i64, l: &Rational) -> Result<Rational> {
    check_k(k)?;
    check_l(l)?;
    let t = l / pow(&(l + int(1)), 2);
    let mut sum = Rational::zero();
    for i in 1..=k {
        sum += sign(i - 1) / int(i) * c(k - 1, i - 1) * c(2 * (i - 1), i - 1) * pow(&t, i as u32);
    }
    Ok((l + int(1)) * sum)
}

/// Named specializations of the slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    /// `a1 = -1`: limit 0.
    ZeroBranch,
    /// `b1 = -1`: limit 1.
    OneBranch,
    /// `a1 = b1 = 0`.
    CentralBinomial,
    /// `a1 = 0`, `b1 = ℓ - 1`.
    Catalan { l: Rational },
    /// `b1 = 0`, `a1 = ℓ - 1`.
    Dyck { l: Rational },
}

impl SpecialCase {
    pub fn name(&self) -> &'static str {
        match self {
            Self::ZeroBranch => "a1=-1",
            Self::OneBranch => "b1=-1",
            Self::CentralBinomial => "central-binomial",
            Self::Catalan { .. } => "catalan",
            Self::Dyck { .. } => "dyck",
        }
    }

    pub fn evaluate(&self, k: i64) -> Result<Rational> {
        match self {
            Self::ZeroBranch => Ok(Rational::zero()),
            Self::OneBranch => Ok(Rational::one()),
            Self::CentralBinomial => limit_central_binomial(k),
            Self::Catalan { l } => limit_catalan(k, l),
            Self::Dyck { l } => limit_dyck(k, l),
        }
    }
}

/// Every special case covering `(a1, b1)`, most specific first.
pub fn special_cases(a1: &Rational, b1: &Rational) -> Vec<SpecialCase> {
    let minus_one = -Rational::one();
    let mut out = Vec::new();
    if *a1 == minus_one && *b1 != minus_one {
        out.push(SpecialCase::ZeroBranch);
    }
    if *b1 == minus_one && *a1 != minus_one {
        out.push(SpecialCase::OneBranch);
    }
    if a1.is_zero() && b1.is_zero() {
        out.push(SpecialCase::CentralBinomial);
    }
    if a1.is_zero() && *b1 != int(-2) {
        out.push(SpecialCase::Catalan { l: b1 + int(1) });
    }
    if b1.is_zero() && *a1 != int(-2) {
        out.push(SpecialCase::Dyck { l: a1 + int(1) });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn q(k: i64, a1: Rational, b1: Rational) -> LimitQuery {
        LimitQuery::from_slopes(k, a1, b1).unwrap()
    }

    #[test]
    fn ik_limit_examples() {
        for (a1, b1) in [(int(0), int(0)), (rat(1, 2), rat(3, 7)), (int(5), int(-1))] {
            let expected = (&a1 + int(1)) / (int(2) + &a1 + &b1);
            assert_eq!(ik_limit(&q(1, a1, b1)), expected);
        }
        assert_eq!(ik_limit(&q(2, int(0), int(0))), rat(3, 8));
        for k in 1..6 {
            assert_eq!(ik_limit(&q(k, int(-1), int(0))), int(0));
        }
    }

    #[test]
    fn degenerate_query_rejected() {
        assert_eq!(LimitQuery::from_slopes(2, int(-1), int(-1)), Err(Error::DegenerateScaling));
        assert!(LimitQuery::from_slopes(0, int(0), int(0)).is_err());
    }

    #[test]
    fn expanded_form_matches() {
        for k in 1..8 {
            for (a1, b1) in [(int(0), int(0)), (int(1), int(0)), (rat(1, 2), rat(1, 3)), (int(3), int(5))] {
                let qq = q(k, a1, b1);
                assert_eq!(ik_limit_expanded(&qq), ik_limit(&qq));
            }
        }
    }

    #[test]
    fn l1l2_examples() {
        assert_eq!(ik_limit_l1l2(2, &int(1), &rat(1, 2)).unwrap(), rat(3, 8));
        for k in 1..8 {
            // b1 = -1 ⇔ ℓ1 ℓ2 = 1
            for l1 in [int(1), int(2), rat(1, 3)] {
                assert_eq!(ik_limit_l1l2(k, &l1, &l1.recip()).unwrap(), int(1));
            }
        }
        let (l1, l2) = (rat(3, 5), rat(2, 7));
        assert_eq!(ik_limit_l1l2(1, &l1, &l2).unwrap(), &l1 * &l2);
        assert!(ik_limit_l1l2(2, &l1, &int(0)).is_err());
    }

    #[test]
    fn only_corrected_reading_matches_reference() {
        let (l1, l2) = l1l2_from_slopes(&int(0), &int(0)).unwrap();
        let reference = rat(3, 8);
        assert_eq!(ik_limit_l1l2_with(2, &l1, &l2, L1L2Reading::Corrected).unwrap(), reference);
        assert_ne!(ik_limit_l1l2_with(2, &l1, &l2, L1L2Reading::Literal).unwrap(), reference);
        assert_ne!(ik_limit_l1l2_with(2, &l1, &l2, L1L2Reading::BinomialTransform).unwrap(), reference);
    }

    #[test]
    fn slope_round_trip() {
        let (a1, b1) = (rat(2, 3), rat(-1, 5));
        let (l1, l2) = l1l2_from_slopes(&a1, &b1).unwrap();
        assert_eq!(slopes_from_l1l2(&l1, &l2).unwrap(), (a1, b1));
    }

    #[test]
    fn zero_one_branches() {
        assert_eq!(limit_special_zero_one(5, &int(-1), &int(0)), Some(int(0)));
        assert_eq!(limit_special_zero_one(3, &int(0), &int(-1)), Some(int(1)));
        assert_eq!(limit_special_zero_one(2, &int(0), &int(0)), None);
        assert_eq!(limit_special_zero_one(2, &int(1), &int(-1)), Some(int(1)));
        assert_eq!(limit_special_zero_one(2, &int(-1), &int(-1)), None);
    }

    #[test]
    fn central_binomial_values() {
        assert_eq!(limit_central_binomial(1).unwrap(), rat(1, 2));
        assert_eq!(limit_central_binomial(2).unwrap(), rat(3, 8));
        assert_eq!(limit_central_binomial(3).unwrap(), rat(5, 16));
        assert!(limit_central_binomial(0).is_err());
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(limit_catalan(2, &int(1)).unwrap(), rat(3, 8));
        for l in [int(1), rat(2, 9), int(7)] {
            assert_eq!(limit_catalan(1, &l).unwrap(), (&l + int(1)).recip());
        }
        assert_eq!(limit_catalan(3, &int(0)).unwrap(), int(1));
        assert!(limit_catalan(2, &int(-1)).is_err());
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(limit_dyck(2, &int(1)).unwrap(), rat(3, 8));
        assert_eq!(limit_dyck_novaes(2, &int(1)).unwrap(), rat(3, 8));
        for l in [int(1), rat(2, 9), int(7)] {
            assert_eq!(limit_dyck(1, &l).unwrap(), &l / (&l + int(1)));
        }
        assert!(limit_dyck(2, &int(-1)).is_err());
    }

    #[test]
    fn special_case_detection() {
        let names: Vec<_> = special_cases(&int(0), &int(0)).iter().map(|s| s.name()).collect();
        assert_eq!(names, ["central-binomial", "catalan", "dyck"]);
        let names: Vec<_> = special_cases(&int(0), &int(-1)).iter().map(|s| s.name()).collect();
        assert_eq!(names, ["b1=-1", "catalan"]);
        assert!(special_cases(&int(1), &int(1)).is_empty());
        for (a1, b1) in [(int(0), int(0)), (int(0), int(-1)), (int(-1), int(0)), (int(3), int(0)), (int(0), rat(2, 3))] {
            for sc in special_cases(&a1, &b1) {
                for k in 1..6 {
                    assert_eq!(sc.evaluate(k).unwrap(), ik_limit(&q(k, a1.clone(), b1.clone())), "{} k={k}", sc.name());
                }
            }
        }
    }
}
