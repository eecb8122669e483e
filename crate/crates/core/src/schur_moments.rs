//! Finite-N averages over the unitary Jacobi measure
//! `∏_{i<j} (x_i - x_j)^2 ∏_i x_i^{a-1} (1 - x_i)^{b-1}` on `[0, 1]^N`.
//!
//! Every average here is normalized by `⟨1⟩`, so the `1/N!` prefactor of the
//! ensemble average cancels. The exception is [`selberg_value`], which is the
//! raw integral, i.e. `N! ⟨1⟩`.
//!
//! The finite-N values are rational functions of `(a, b)`; they coincide with
//! ensemble averages for `a, b > 0` and are returned as that rational
//! continuation elsewhere, so only vanishing denominators are rejected.

use num_traits::{One, Zero};

use crate::combinat::{choose, factorial};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::UniPoly;
use crate::ratfunc::RationalFunction;
use crate::rational::{from_bigint, int, pow, Rational};

/// Linear laws `a(N) = a1 N + a0`, `b(N) = b1 N + b0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingParams {
    pub a1: Rational,
    pub a0: Rational,
    pub b1: Rational,
    pub b0: Rational,
}

impl ScalingParams {
    pub fn new(a1: Rational, a0: Rational, b1: Rational, b0: Rational) -> Self {
        Self { a1, a0, b1, b0 }
    }

    /// `N`-independent parameters.
    pub fn fixed(a: Rational, b: Rational) -> Self {
        Self::new(Rational::zero(), a, Rational::zero(), b)
    }

    /// Slopes only, with `a0 = b0 = 1`.
    pub fn slopes(a1: Rational, b1: Rational) -> Self {
        Self::new(a1, Rational::one(), b1, Rational::one())
    }

    pub fn a_at(&self, n: &Rational) -> Rational {
        &self.a1 * n + &self.a0
    }

    pub fn b_at(&self, n: &Rational) -> Rational {
        &self.b1 * n + &self.b0
    }

    /// `2 + a1 + b1`, the growth rate of `a + b + 2N`.
    pub fn slope_sum(&self) -> Rational {
        int(2) + &self.a1 + &self.b1
    }

    pub fn check_nondegenerate(&self) -> Result<()> {
        if self.slope_sum().is_zero() {
            Err(Error::DegenerateScaling)
        } else {
            Ok(())
        }
    }
}

fn check_positive_int(name: &'static str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::NonPositive { name, value: v.to_string() });
    }
    Ok(())
}

/// `Γ(m)` for a positive integer `m`.
fn gamma_int(m: i64) -> Rational {
    from_bigint(factorial((m - 1) as u64))
}

/// The Selberg integral `S_N(a, b, β)` at positive integer parameters, where
/// every Gamma value is a factorial.
pub fn selberg_value(n: i64, a: i64, b: i64, beta: i64) -> Result<Rational> {
    check_positive_int("n", n)?;
    check_positive_int("a", a)?;
    check_positive_int("b", b)?;
    check_positive_int("beta", beta)?;
    let mut acc = Rational::one();
    for j in 0..n {
        acc *= gamma_int(a + j * beta) * gamma_int(b + j * beta) * gamma_int(1 + (j + 1) * beta);
        acc /= gamma_int(a + b + (n + j - 1) * beta) * gamma_int(1 + beta);
    }
    Ok(acc)
}

/// Same as [`selberg_value`] but accepts rationals and rejects non-integers.
pub fn selberg_value_rational(n: i64, a: &Rational, b: &Rational, beta: &Rational) -> Result<Rational> {
    let as_int = |name: &'static str, v: &Rational| {
        crate::rational::to_i64_exact(v).ok_or_else(|| Error::NonInteger {
            name,
            value: crate::rational::to_exact_string(v),
        })
    };
    selberg_value(n, as_int("a", a)?, as_int("b", b)?, as_int("beta", beta)?)
}

/// The combinatorial part `∏_{i<j≤ℓ} (λ_i - λ_j + j - i)/(j - i)`.
fn vandermonde_ratio(lambda: &Partition) -> Rational {
    let l = lambda.length();
    let mut acc = Rational::one();
    for i in 0..l {
        for j in i + 1..l {
            let diff = lambda.part(i) as i64 - lambda.part(j) as i64 + (j - i) as i64;
            acc *= int(diff) / int((j - i) as i64);
        }
    }
    acc
}

/// `⟨s_λ⟩ / ⟨1⟩` at fixed `(a, b, N)` from the finite product
///
/// `∏_i [ ∏_{j>i} (λ_i-λ_j+j-i)/(j-i) · ∏_{j<λ_i} (j+N-i+1)(a+N-i+j) / ((ℓ+j-i+1)(a+b+2N-i+j-1)) ]`.
///
/// For `n < ℓ(λ)` the Schur polynomial vanishes identically in `n`
/// variables and the result is zero.
pub fn schur_average(lambda: &Partition, a: &Rational, b: &Rational, n: i64) -> Result<Rational> {
    check_positive_int("n", n)?;
    let l = lambda.length();
    if (n as usize) < l {
        return Ok(Rational::zero());
    }
    let nn = int(n);
    let mut acc = vandermonde_ratio(lambda);
    for i in 1..=l as i64 {
        let part = lambda.part(i as usize - 1) as i64;
        for j in 0..part {
            let den = a + b + int(2) * &nn + int(j - i - 1);
            if den.is_zero() {
                return Err(Error::VanishingFactor {
                    factor: format!("a + b + 2N - i + j - 1 at i={i}, j={j}"),
                });
            }
            let num = int(j - i + 1 + n) * (a + &nn + int(j - i));
            acc *= num / (den * int(l as i64 + j - i + 1));
        }
    }
    Ok(acc)
}

/// `⟨s_λ⟩ / ⟨1⟩` as a reduced rational function of `N` with `a`, `b` linear
/// in `N`. Valid for every `N >= n_min`, which must be at least `ℓ(λ)`.
pub fn schur_average_rf(lambda: &Partition, params: &ScalingParams, n_min: i64) -> Result<RationalFunction> {
    let l = lambda.length() as i64;
    if n_min < l.max(1) {
        return Err(Error::OutOfRange {
            what: "n_min",
            detail: format!("need n_min >= max(1, ℓ(λ)) = {}, got {n_min}", l.max(1)),
        });
    }
    let mut num = UniPoly::constant(vandermonde_ratio(lambda));
    let mut den = UniPoly::one();
    let a_slope = &params.a1 + int(1);
    let s = params.slope_sum();
    let ab0 = &params.a0 + &params.b0;
    for i in 1..=l {
        let part = lambda.part(i as usize - 1) as i64;
        for j in 0..part {
            // (N + j - i + 1)(a + N - i + j)
            num = &num * &UniPoly::linear(int(1), int(j - i + 1));
            num = &num * &UniPoly::linear(a_slope.clone(), &params.a0 + int(j - i));
            // (ℓ + j - i + 1)(a + b + 2N - i + j - 1)
            let factor = UniPoly::linear(s.clone(), &ab0 + int(j - i - 1));
            if factor.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            den = &den * &factor.scale(&int(l + j - i + 1));
        }
    }
    RationalFunction::new(num, den)
}

/// `lim ⟨s_λ⟩ / (N^{|λ|} ⟨1⟩)` under the linear scaling.
pub fn schur_limit(lambda: &Partition, params: &ScalingParams) -> Result<Rational> {
    params.check_nondegenerate()?;
    let ratio = (&params.a1 + int(1)) / params.slope_sum();
    let l = lambda.length() as i64;
    let mut acc = pow(&ratio, lambda.weight() as u32) * vandermonde_ratio(lambda);
    for i in 1..=l {
        for j in 0..lambda.part(i as usize - 1) as i64 {
            let d = l + j - i + 1;
            assert!(d > 0, "factor ℓ(λ)+j-i+1 vanished at i={i}, j={j}");
            acc /= int(d);
        }
    }
    Ok(acc)
}

fn check_k(k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::OutOfRange { what: "k", detail: format!("need k >= 1, got {k}") });
    }
    Ok(())
}

/// `I_k = ⟨p_k⟩/⟨1⟩` from the alternating hook sum
///
/// `I_k = (1/k!) Σ_i (-1)^i C(k-1, i) ∏_{j=-i}^{k-i-1} (N+j)(a+N+j-1)/(a+b+2N+j-2)`.
///
/// Hooks with more rows than `N` vanish and are skipped.
pub fn ik_closed(k: i64, a: &Rational, b: &Rational, n: i64) -> Result<Rational> {
    check_k(k)?;
    check_positive_int("n", n)?;
    let nn = int(n);
    let mut sum = Rational::zero();
    for i in 0..k.min(n) {
        let mut term = from_bigint(choose(k - 1, i));
        for j in -i..k - i {
            let den = a + b + int(2) * &nn + int(j - 2);
            if den.is_zero() {
                return Err(Error::VanishingFactor { factor: format!("a + b + 2N + j - 2 at j={j}") });
            }
            term *= int(n + j) * (a + &nn + int(j - 1)) / den;
        }
        if i % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    Ok(sum / from_bigint(factorial(k as u64)))
}

/// `I_k` as `Σ_i (-1)^i ⟨s_{[(k-i), 1^i]}⟩ / ⟨1⟩`.
pub fn ik_via_schur(k: i64, a: &Rational, b: &Rational, n: i64) -> Result<Rational> {
    check_k(k)?;
    let mut sum = Rational::zero();
    for i in 0..k as usize {
        let v = schur_average(&Partition::hook(k as usize, i), a, b, n)?;
        if i % 2 == 1 {
            sum -= v;
        } else {
            sum += v;
        }
    }
    Ok(sum)
}

/// `D_j(N) = a(N) + b(N) + 2N + j - 2`.
fn d_factor(params: &ScalingParams, j: i64) -> UniPoly {
    UniPoly::linear(params.slope_sum(), &params.a0 + &params.b0 + int(j - 2))
}

/// The numerator `𝒩_k(N)` with `I_k / N = 𝒩_k(N) / (k! N ∏_{j=1-k}^{k-1} D_j(N))`,
/// assembled term by term before any cancellation. Its degree is `2k`.
pub fn ik_numerator_unreduced(k: i64, params: &ScalingParams) -> Result<UniPoly> {
    check_k(k)?;
    let a_slope = &params.a1 + int(1);
    let mut total = UniPoly::zero();
    for i in 0..k {
        let mut term = UniPoly::constant(from_bigint(choose(k - 1, i)));
        for j in 1 - k..=-i - 1 {
            term = &term * &d_factor(params, j);
        }
        for j in -i..=k - 1 - i {
            term = &term * &UniPoly::linear(int(1), int(j));
            term = &term * &UniPoly::linear(a_slope.clone(), &params.a0 + int(j - 1));
        }
        for j in k - i..=k - 1 {
            term = &term * &d_factor(params, j);
        }
        total = if i % 2 == 1 { &total - &term } else { &total + &term };
    }
    Ok(total)
}

/// The denominator `k! N ∏_{j=1-k}^{k-1} D_j(N)` matching [`ik_numerator_unreduced`].
pub fn ik_denominator_unreduced(k: i64, params: &ScalingParams) -> Result<UniPoly> {
    check_k(k)?;
    let mut den = UniPoly::monomial(1, from_bigint(factorial(k as u64)));
    for j in 1 - k..=k - 1 {
        den = &den * &d_factor(params, j);
    }
    Ok(den)
}

/// `I_k / N` as a reduced rational function of `N`.
pub fn ik_rf(k: i64, params: &ScalingParams) -> Result<RationalFunction> {
    params.check_nondegenerate()?;
    RationalFunction::new(ik_numerator_unreduced(k, params)?, ik_denominator_unreduced(k, params)?)
}

/// Default weight cap for [`plambda_limit`].
pub const DEFAULT_WEIGHT_CAP: usize = 12;

/// `⟨p_λ⟩ / ⟨1⟩` as a reduced rational function of `N` via the Schur
/// expansion of `p_λ`.
pub fn plambda_average_rf(lambda: &Partition, params: &ScalingParams, weight_cap: usize) -> Result<RationalFunction> {
    let expansion = crate::mn::mn_expand_capped(lambda, weight_cap)?;
    let n_min = lambda.weight().max(1) as i64;
    let mut total = RationalFunction::zero();
    for (mu, c) in expansion {
        let rf = schur_average_rf(&mu, params, n_min)?;
        total = total.add(&rf.scale(&c));
    }
    Ok(total)
}

/// `lim ⟨p_λ⟩ / (N^{ℓ(λ)} ⟨1⟩)`, computed by exact cancellation in the
/// rational function of `N`.
pub fn plambda_limit(lambda: &Partition, params: &ScalingParams) -> Result<Rational> {
    plambda_limit_capped(lambda, params, DEFAULT_WEIGHT_CAP)
}

pub fn plambda_limit_capped(lambda: &Partition, params: &ScalingParams, weight_cap: usize) -> Result<Rational> {
    params.check_nondegenerate()?;
    if lambda.is_empty() {
        return Err(Error::InvalidPartition("p_λ needs a nonempty partition".into()));
    }
    let avg = plambda_average_rf(lambda, params, weight_cap)?;
    avg.div_x_pow(lambda.length()).limit_at_infinity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn selberg_examples() {
        assert_eq!(selberg_value(1, 1, 1, 1).unwrap(), int(1));
        assert_eq!(selberg_value(2, 1, 1, 1).unwrap(), rat(1, 6));
        assert_eq!(selberg_value(1, 2, 1, 1).unwrap(), rat(1, 2));
        assert!(selberg_value(0, 1, 1, 1).is_err());
        assert!(selberg_value_rational(1, &rat(1, 2), &int(1), &int(1)).is_err());
    }

    #[test]
    fn schur_average_examples() {
        let one = int(1);
        assert_eq!(schur_average(&part(&[2]), &one, &one, 1).unwrap(), rat(1, 3));
        assert_eq!(schur_average(&part(&[1]), &one, &one, 2).unwrap(), int(1));
        assert_eq!(schur_average(&Partition::empty(), &rat(7, 3), &rat(2, 5), 4).unwrap(), int(1));
        assert_eq!(schur_average(&part(&[1, 1]), &one, &one, 1).unwrap(), int(0));
    }

    #[test]
    fn schur_average_reports_vanishing_factor() {
        // a + b + 2N - i + j - 1 = 0 at N=1, i=1, j=0 when a + b = 0
        let err = schur_average(&part(&[1]), &int(1), &int(-1), 1).unwrap_err();
        assert!(matches!(err, Error::VanishingFactor { .. }), "{err}");
    }

    #[test]
    fn schur_average_rf_examples() {
        let fixed = ScalingParams::fixed(int(1), int(1));
        let rf = schur_average_rf(&part(&[1]), &fixed, 1).unwrap();
        assert_eq!(rf, RationalFunction::from_poly(UniPoly::new(vec![int(0), rat(1, 2)])));
        assert_eq!(rf.eval(&int(2)).unwrap(), int(1));
        assert_eq!(schur_average_rf(&Partition::empty(), &fixed, 1).unwrap(), RationalFunction::one());
        let rf2 = schur_average_rf(&part(&[2]), &fixed, 1).unwrap();
        assert_eq!(rf2.eval(&int(1)).unwrap(), rat(1, 3));
        assert!(schur_average_rf(&part(&[1, 1]), &fixed, 1).is_err());
    }

    #[test]
    fn schur_average_rf_degenerate_denominator() {
        // slope 2 + a1 + b1 = 0 and a0 + b0 - i + j - 1 = 0 at i=1, j=0
        let p = ScalingParams::new(int(-1), int(1), int(-1), int(1));
        assert_eq!(schur_average_rf(&part(&[1]), &p, 1), Err(Error::ZeroDenominator));
    }

    #[test]
    fn schur_limit_examples() {
        let p = ScalingParams::slopes(int(0), int(0));
        assert_eq!(schur_limit(&part(&[1]), &p).unwrap(), rat(1, 2));
        assert_eq!(schur_limit(&part(&[2]), &p).unwrap(), rat(1, 8));
        assert_eq!(schur_limit(&part(&[1, 1]), &p).unwrap(), rat(1, 8));
        assert_eq!(
            schur_limit(&part(&[1]), &ScalingParams::slopes(int(-1), int(-1))),
            Err(Error::DegenerateScaling)
        );
    }

    #[test]
    fn ik_closed_examples() {
        let one = int(1);
        assert_eq!(ik_closed(1, &one, &one, 1).unwrap(), rat(1, 2));
        assert_eq!(ik_closed(2, &one, &one, 1).unwrap(), rat(1, 3));
        assert_eq!(ik_closed(1, &one, &one, 2).unwrap(), int(1));
        assert!(ik_closed(0, &one, &one, 1).is_err());
        assert!(ik_closed(1, &one, &one, 0).is_err());
    }

    #[test]
    fn ik_closed_single_variable_is_beta_moment() {
        for k in 1..8 {
            for (a, b) in [(1, 1), (2, 3), (5, 1)] {
                let expected = (0..k).fold(Rational::one(), |acc, j| acc * int(a + j) / int(a + b + j));
                assert_eq!(ik_closed(k, &int(a), &int(b), 1).unwrap(), expected);
            }
        }
    }

    #[test]
    fn ik_closed_vanishing_factor() {
        // k=1, N=1: a + b + 2 - 2 = 0
        let err = ik_closed(1, &int(2), &int(-2), 1).unwrap_err();
        assert!(matches!(err, Error::VanishingFactor { .. }));
    }

    #[test]
    fn ik_via_schur_examples() {
        let one = int(1);
        assert_eq!(ik_via_schur(2, &one, &one, 1).unwrap(), rat(1, 3));
        assert_eq!(
            ik_via_schur(1, &rat(3, 2), &rat(5, 7), 3).unwrap(),
            schur_average(&part(&[1]), &rat(3, 2), &rat(5, 7), 3).unwrap()
        );
        assert_eq!(ik_via_schur(3, &one, &one, 2).unwrap(), ik_closed(3, &one, &one, 2).unwrap());
    }

    #[test]
    fn ik_rf_examples() {
        let p = ScalingParams::slopes(int(0), int(0));
        assert_eq!(ik_rf(1, &p).unwrap(), RationalFunction::constant(rat(1, 2)));

        let (a1, a0, b1, b0) = (rat(2, 3), rat(5, 4), rat(1, 7), rat(3, 2));
        let q = ScalingParams::new(a1.clone(), a0.clone(), b1.clone(), b0.clone());
        let expected = RationalFunction::new(
            UniPoly::linear(&a1 + int(1), &a0 - int(1)),
            UniPoly::linear(&a1 + &b1 + int(2), &a0 + &b0 - int(2)),
        )
        .unwrap();
        assert_eq!(ik_rf(1, &q).unwrap(), expected);

        assert_eq!(ik_rf(2, &p).unwrap().eval(&int(1)).unwrap(), rat(1, 3));
        assert_eq!(ik_rf(2, &ScalingParams::slopes(int(-1), int(-1))), Err(Error::DegenerateScaling));
    }

    #[test]
    fn numerator_degree_is_2k() {
        for k in 1..=6 {
            let p = ScalingParams::new(rat(1, 2), rat(3, 5), rat(1, 3), rat(7, 4));
            assert_eq!(ik_numerator_unreduced(k, &p).unwrap().degree(), Some(2 * k as usize));
            assert_eq!(ik_denominator_unreduced(k, &p).unwrap().degree(), Some(2 * k as usize));
        }
    }

    #[test]
    fn plambda_limit_examples() {
        let p = ScalingParams::slopes(int(0), int(0));
        assert_eq!(plambda_limit(&part(&[1, 1]), &p).unwrap(), rat(1, 4));
        assert_eq!(plambda_limit(&part(&[2, 1]), &p).unwrap(), rat(3, 16));
        for k in 1..=4 {
            assert_eq!(
                plambda_limit(&part(&[k]), &p).unwrap(),
                ik_rf(k as i64, &p).unwrap().limit_at_infinity().unwrap()
            );
        }
        assert!(plambda_limit(&Partition::empty(), &p).is_err());
        assert_eq!(
            plambda_limit_capped(&part(&[3, 2]), &p, 4),
            Err(Error::WeightCap { weight: 5, cap: 4 })
        );
    }
}
