//! Named invariant checks grouped into suites.
//!
//! Each [`Check`] is self-contained and independent of the others, so callers
//! may run them in any order or in parallel.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::asymptotics::{
    ik_limit, ik_limit_expanded, ik_limit_l1l2, ik_limit_l1l2_with, l1l2_from_slopes, limit_catalan,
    limit_central_binomial, limit_dyck, limit_dyck_novaes, L1L2Reading, LimitQuery,
};
use crate::combinat::{
    choose, divided_difference_coeffs, gimel, inverse_binomial_transform, inverse_binomial_transform_values,
    oriented_product, p_poly, stirling2, t_transform,
};
use crate::error::Error;
use crate::oracle::{brute_average, density_ik, selberg_brute, MonomialPoly, SpectralParams};
use crate::partition::Partition;
use crate::poly::{PolySequence, UniPoly};
use crate::rational::{from_bigint, int, pow, rat, to_exact_string, Rational};
use crate::schur_moments::{
    ik_closed, ik_numerator_unreduced, ik_rf, ik_via_schur, plambda_limit, schur_average, selberg_value,
    ScalingParams,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    Oracles,
    Limits,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Identities, Suite::Oracles, Suite::Limits, Suite::Conjecture];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Oracles => "oracles",
            Suite::Limits => "limits",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

/// `Ok(detail)` on success, `Err(reason)` on failure.
pub type Outcome = std::result::Result<String, String>;

pub struct Check {
    pub suite: Suite,
    pub name: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Check {
    fn new(suite: Suite, name: impl Into<String>, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Self { suite, name: name.into(), run: Box::new(run) }
    }

    pub fn run(&self) -> CheckResult {
        let outcome = (self.run)();
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        CheckResult { suite: self.suite, name: self.name.clone(), passed, detail }
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("suite", &self.suite).field("name", &self.name).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// All checks of one suite, in a fixed order.
pub fn checks(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Identities => identity_checks(),
        Suite::Oracles => oracle_checks(),
        Suite::Limits => limit_checks(),
        Suite::Conjecture => conjecture_checks(),
    }
}

pub fn all_checks() -> Vec<Check> {
    Suite::ALL.into_iter().flat_map(checks).collect()
}

/// Looks up a single check by name across all suites.
pub fn find_check(name: &str) -> Option<Check> {
    all_checks().into_iter().find(|c| c.name == name)
}

/// Runs sequentially; see [`Check::run`] for parallel use.
pub fn run_suite(suite: Suite) -> Vec<CheckResult> {
    checks(suite).iter().map(Check::run).collect()
}

fn eq(lhs: &Rational, rhs: &Rational, ctx: impl FnOnce() -> String) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {} != {}", ctx(), to_exact_string(lhs), to_exact_string(rhs)))
    }
}

fn lib<T>(r: crate::error::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn c(n: i64, k: i64) -> Rational {
    from_bigint(choose(n, k))
}

fn count(n: usize, what: &str) -> Outcome {
    Ok(format!("{n} {what}"))
}

// ---------------------------------------------------------------- identities

fn identity_checks() -> Vec<Check> {
    let s = Suite::Identities;
    vec![
        Check::new(s, "stirling-transform", stirling_transform),
        Check::new(s, "diff-stirl", diff_stirl),
        Check::new(s, "diff-shift", diff_shift),
        Check::new(s, "oriented-product-lemma", oriented_product_lemma),
        Check::new(s, "lead-coeff", lead_coeff),
        Check::new(s, "leading-t", leading_t),
        Check::new(s, "coeff-beta", coeff_beta),
        Check::new(s, "bibident1", bibident1),
        Check::new(s, "bibident2", bibident2),
        Check::new(s, "bintranslem3", bintranslem3),
        Check::new(s, "eq1-a0-b0", eq1_a0_b0),
        Check::new(s, "gimel-three-terms", gimel_three_terms),
        Check::new(s, "hook-sum", hook_sum),
        Check::new(s, "numerator-degree", numerator_degree),
        Check::new(s, "numerator-transform", numerator_transform),
    ]
}

/// `B_k^{-1}[(i^p)_i] = k! S(p, k)` for `k ≤ p ≤ 8`.
pub fn stirling_transform() -> Outcome {
    let mut n = 0;
    for p in 0..=8i64 {
        for k in 0..=p {
            let values: Vec<Rational> = (0..=k).map(|i| pow(&int(i), p as u32)).collect();
            let lhs = lib(inverse_binomial_transform_values(&values, k as usize))?;
            let rhs = from_bigint(crate::combinat::factorial(k as u64)) * lib(stirling2(p, k))?;
            eq(&lhs, &rhs, || format!("p={p} k={k}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

fn random_poly(rng: &mut ChaCha20Rng, degree: usize) -> UniPoly {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-9..=9);
    }
    coeffs.push(rat(lead, rng.gen_range(1..=5)));
    UniPoly::new(coeffs)
}

fn newton_coeffs(f: &UniPoly, nodes: usize) -> Result<Vec<Rational>, String> {
    let points: Vec<(Rational, Rational)> = (0..nodes as i64).map(|i| (int(i), f.eval(&int(i)))).collect();
    lib(divided_difference_coeffs(&points))
}

/// `B_k^{-1}[(F(i))_i] = k! F[0, …, k]` for seeded random `F` of degree `≤ 6`.
pub fn diff_stirl() -> Outcome {
    let mut rng = ChaCha20Rng::seed_from_u64(0x5eed);
    let mut n = 0;
    for p in 0..=6usize {
        for _ in 0..4 {
            let f = random_poly(&mut rng, p);
            let newton = newton_coeffs(&f, p + 1)?;
            for (k, coeff) in newton.iter().enumerate().take(p + 1) {
                let seq = lib(PolySequence::from_constants((0..=k as i64).map(|i| f.eval(&int(i)))))?;
                let lhs = lib(inverse_binomial_transform(&seq, k))?;
                let rhs = UniPoly::constant(from_bigint(crate::combinat::factorial(k as u64)) * coeff);
                if lhs != rhs {
                    return Err(format!("F={f} k={k}: {lhs} != {rhs}"));
                }
                n += 1;
            }
        }
    }
    count(n, "cases")
}

/// `y^p[0, …, k+1] = (y+1)^{p-1}[0, …, k]` for `1 ≤ k+1 ≤ p ≤ 7`.
pub fn diff_shift() -> Outcome {
    let mut n = 0;
    for p in 1..=7usize {
        let lhs_poly = UniPoly::monomial(p, Rational::one());
        let rhs_poly = UniPoly::from_ints(&[1, 1]).pow(p as u32 - 1);
        for k in 0..p {
            let lhs = newton_coeffs(&lhs_poly, k + 2)?;
            let rhs = newton_coeffs(&rhs_poly, k + 1)?;
            eq(&lhs[k + 1], &rhs[k], || format!("p={p} k={k}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

/// `∏_{i=a+1}^{N} (b+i)/(b+c+i) = ∏_{i=1}^{c} (a+b+i)/(b+N+i)` for `N ≥ a + c`.
pub fn oriented_product_lemma() -> Outcome {
    let mut n = 0;
    for b in [int(0), rat(1, 2), rat(7, 3), int(5)] {
        for a in 0..=4i64 {
            for cc in 0..=4i64 {
                for big_n in a + cc..=a + cc + 4 {
                    let lhs = oriented_product(a + 1, big_n, |i| (&b + int(i)) / (&b + int(cc + i)));
                    let rhs = oriented_product(1, cc, |i| (&b + int(a + i)) / (&b + int(big_n + i)));
                    eq(&lhs, &rhs, || format!("a={a} b={b} c={cc} N={big_n}"))?;
                    n += 1;
                }
            }
        }
    }
    count(n, "cases")
}

const AB_GRID: [(i64, i64, i64, i64); 4] = [(1, 2, 3, 1), (0, 1, -2, 1), (-5, 3, 7, 4), (2, 1, 2, 1)];

fn ab_grid() -> impl Iterator<Item = (Rational, Rational)> {
    AB_GRID.into_iter().map(|(an, ad, bn, bd)| (rat(an, ad), rat(bn, bd)))
}

/// `B_{k-p}^{-1}[P_p^k, …, P_k^k] = ∏_{i<p}(x+b-i) ∏_{i<k-p}(b-a-p-i)`.
pub fn lead_coeff() -> Outcome {
    let mut n = 0;
    for (a, b) in ab_grid() {
        for k in 0..=6usize {
            for p in 0..=k {
                let seq = lib(PolySequence::new(
                    (p..=k).map(|i| p_poly(i, k, &a, &b)).collect::<crate::error::Result<Vec<_>>>().map_err(|e| e.to_string())?,
                ))?;
                let lhs = lib(inverse_binomial_transform(&seq, k - p))?;
                let scalar = (0..(k - p) as i64).fold(Rational::one(), |acc, i| acc * (&b - &a - int(p as i64 + i)));
                let rhs = UniPoly::product_of_linear((0..p as i64).map(|i| (int(1), &b - int(i)))).scale(&scalar);
                if lhs != rhs {
                    return Err(format!("a={a} b={b} k={k} p={p}: {lhs} != {rhs}"));
                }
                n += 1;
            }
        }
    }
    count(n, "cases")
}

/// `[x^p] T̃_k[(i^p)_i] = (-1)^k k!/(k-p)! ∏_{i<k-p}(b-a-p-i)` for `p ≤ k`,
/// and degree below `p` otherwise.
pub fn leading_t() -> Outcome {
    let mut n = 0;
    for (a, b) in ab_grid() {
        for k in 0..=6usize {
            for p in 0..=8usize {
                let seq = lib(PolySequence::from_constants((0..=k as i64).map(|i| pow(&int(i), p as u32))))?;
                let t = lib(t_transform(&seq, k, &a, &b))?;
                if p <= k {
                    let mut expected = from_bigint(crate::combinat::factorial(k as u64))
                        / from_bigint(crate::combinat::factorial((k - p) as u64));
                    for i in 0..(k - p) as i64 {
                        expected *= &b - &a - int(p as i64 + i);
                    }
                    if k % 2 == 1 {
                        expected = -expected;
                    }
                    eq(&t.coeff(p), &expected, || format!("a={a} b={b} k={k} p={p}"))?;
                } else if t.degree().is_some_and(|d| d >= p) {
                    return Err(format!("a={a} b={b} k={k} p={p}: degree {:?} not below p", t.degree()));
                }
                n += 1;
            }
        }
    }
    count(n, "cases")
}

fn coeff_beta_sequence(k: usize, p: usize, alpha: (&Rational, &Rational), beta: (&Rational, &Rational)) -> crate::error::Result<PolySequence> {
    PolySequence::from_fn(k + 1, |i| {
        let i = int(i as i64);
        UniPoly::product_of_linear((0..p as i64).flat_map(|j| {
            [
                (alpha.0.clone(), int(j) - &i + beta.0),
                (alpha.1.clone(), int(j) - &i + beta.1),
            ]
        }))
    })
}

/// The `x^{2p}` coefficient of `T̃_k` on `∏_j (α1 x + j - i + β1)(α2 x + j - i + β2)`
/// is independent of `β1`, `β2` and equals
/// `Σ_j k!/(k-j)! Σ_i C(p,i) C(p,2p-j-i) α1^i α2^{2p-i-j} ∏_{t<k-j}(a-b+j+t)`.
pub fn coeff_beta() -> Outcome {
    let alphas = [(rat(2, 3), rat(5, 7)), (int(3), rat(-1, 4)), (int(1), int(1))];
    let betas = [(int(0), int(0)), (rat(3, 2), rat(-7, 3)), (int(4), int(-1))];
    let mut n = 0;
    for (a, b) in ab_grid() {
        for (al1, al2) in &alphas {
            for k in 0..=4usize {
                for p in 0..=k {
                    let mut formula = Rational::zero();
                    for j in 0..=k as i64 {
                        let mut inner = Rational::zero();
                        for i in 0..=p as i64 {
                            let e = 2 * p as i64 - j - i;
                            if e < 0 {
                                continue;
                            }
                            inner += c(p as i64, i) * c(p as i64, e) * pow(al1, i as u32) * pow(al2, e as u32);
                        }
                        let mut prod = from_bigint(crate::combinat::factorial(k as u64))
                            / from_bigint(crate::combinat::factorial((k as i64 - j) as u64));
                        for t in 0..k as i64 - j {
                            prod *= &a - &b + int(j + t);
                        }
                        formula += prod * inner;
                    }
                    for (b1, b2) in &betas {
                        let seq = lib(coeff_beta_sequence(k, p, (al1, al2), (b1, b2)))?;
                        let t = lib(t_transform(&seq, k, &a, &b))?;
                        eq(&t.coeff(2 * p), &formula, || {
                            format!("a={a} b={b} alpha=({al1},{al2}) beta=({b1},{b2}) k={k} p={p}")
                        })?;
                        n += 1;
                    }
                }
            }
        }
    }
    count(n, "cases")
}

/// `Σ_j (-1)^j C(a,j) C(c+j, b+j) = (-1)^a C(c, a+b)`.
pub fn bibident1() -> Outcome {
    let mut n = 0;
    for a in 0..=10i64 {
        for b in 0..=10i64 {
            for cc in 0..=10i64 {
                let mut lhs = Rational::zero();
                for j in 0..=a {
                    let t = c(a, j) * c(cc + j, b + j);
                    if j % 2 == 1 {
                        lhs -= t;
                    } else {
                        lhs += t;
                    }
                }
                let mut rhs = c(cc, a + b);
                if a % 2 == 1 {
                    rhs = -rhs;
                }
                eq(&lhs, &rhs, || format!("a={a} b={b} c={cc}"))?;
                n += 1;
            }
        }
    }
    count(n, "cases")
}

/// `Σ_j (-2)^{-j} C(n-m+j, j) C(2n, n+m+j) = 2^{m-n} C(n,m) C(2n,n) / C(2m,m)`.
pub fn bibident2() -> Outcome {
    let mut count_ = 0;
    let minus_half = rat(-1, 2);
    for nn in 0..=10i64 {
        for m in 0..=nn {
            let mut lhs = Rational::zero();
            for j in 0..=nn - m {
                lhs += pow(&minus_half, j as u32) * c(nn - m + j, j) * c(2 * nn, nn + m + j);
            }
            let rhs = pow(&rat(1, 2), (nn - m) as u32) * c(nn, m) * c(2 * nn, nn) / c(2 * m, m);
            eq(&lhs, &rhs, || format!("n={nn} m={m}"))?;
            count_ += 1;
        }
    }
    count(count_, "cases")
}

/// `B_m^{-1}[(1/((p+i)(p+i+1)))_i] = (-1)^m (m+1)! / ∏_{i=0}^{m+1} (p+i)`.
pub fn bintranslem3() -> Outcome {
    let mut n = 0;
    for p in 1..=6i64 {
        for m in 0..=5i64 {
            let values: Vec<Rational> = (0..=m).map(|i| (int(p + i) * int(p + i + 1)).recip()).collect();
            let lhs = lib(inverse_binomial_transform_values(&values, m as usize))?;
            let mut rhs = from_bigint(crate::combinat::factorial((m + 1) as u64));
            for i in 0..=m + 1 {
                rhs /= int(p + i);
            }
            if m % 2 == 1 {
                rhs = -rhs;
            }
            eq(&lhs, &rhs, || format!("p={p} m={m}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

/// `Σ_i C(k, i+j+1) C(k, i) = C(2k, k+j+1)`.
pub fn eq1_a0_b0() -> Outcome {
    let mut n = 0;
    for k in 1..=12i64 {
        for j in 0..k {
            let lhs = (0..=k).fold(Rational::zero(), |acc, i| acc + c(k, i + j + 1) * c(k, i));
            eq(&lhs, &c(2 * k, k + j + 1), || format!("k={k} j={j}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

/// `-(2k+1-i)(2k-i) ℷ_{k,i} + (2+2i-2k) ℷ_{k,i+1} + (i+3)(i+2) ℷ_{k,i+2} = 0`.
pub fn gimel_three_terms() -> Outcome {
    let mut n = 0;
    for k in 1..=10i64 {
        for i in 0..=2 * k - 2 {
            let g = |j| lib(gimel(k, j));
            let lhs = -int((2 * k + 1 - i) * (2 * k - i)) * g(i)? + int(2 + 2 * i - 2 * k) * g(i + 1)?
                + int((i + 3) * (i + 2)) * g(i + 2)?;
            eq(&lhs, &Rational::zero(), || format!("k={k} i={i}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

/// The hook expansion of `p_k` against the closed alternating sum.
pub fn hook_sum() -> Outcome {
    let mut n = 0;
    for (a, b) in [(int(1), int(1)), (rat(3, 2), int(2)), (int(4), rat(1, 3))] {
        for big_n in 1..=6 {
            for k in 1..=6 {
                let lhs = lib(ik_via_schur(k, &a, &b, big_n))?;
                let rhs = lib(ik_closed(k, &a, &b, big_n))?;
                eq(&lhs, &rhs, || format!("k={k} N={big_n} a={a} b={b}"))?;
                n += 1;
            }
        }
    }
    count(n, "cases")
}

pub const DEGREE_GRID: [(i64, i64, i64, i64); 4] = [(0, 1, 0, 1), (1, 1, 0, 1), (0, 1, 1, 1), (1, 2, 1, 3)];

pub fn degree_grid() -> impl Iterator<Item = (Rational, Rational)> {
    DEGREE_GRID.into_iter().map(|(an, ad, bn, bd)| (rat(an, ad), rat(bn, bd)))
}

/// The unreduced numerator has degree exactly `2k`.
pub fn numerator_degree() -> Outcome {
    let mut n = 0;
    for (a1, b1) in degree_grid() {
        for k in 1..=8 {
            let params = ScalingParams::slopes(a1.clone(), b1.clone());
            let deg = lib(ik_numerator_unreduced(k, &params))?.degree();
            if deg != Some(2 * k as usize) {
                return Err(format!("k={k} a1={a1} b1={b1}: degree {deg:?}"));
            }
            n += 1;
        }
    }
    count(n, "cases")
}

/// `𝒩_k(N) = T̃_{k-1}^{a0+b0-1-k, a0+b0+k-3}[(Q_k(x, i))_i]` at `x = sN`, with
/// `Q_k(x, y) = ∏_{j<k} (x/s + j - y)((1+a1)x/s + a0 + j - 1 - y)`.
pub fn numerator_transform() -> Outcome {
    let grid = [
        ScalingParams::new(int(0), int(1), int(0), int(1)),
        ScalingParams::new(int(1), int(2), int(0), int(1)),
        ScalingParams::new(rat(1, 2), int(3), rat(1, 3), rat(2, 5)),
        ScalingParams::new(int(2), rat(-1, 2), int(1), int(3)),
    ];
    let mut n = 0;
    for params in grid {
        let s = params.slope_sum();
        let u = (&params.a1 + int(1)) / &s;
        for k in 1..=5i64 {
            let seq = lib(PolySequence::from_fn(k as usize, |i| {
                let y = int(i as i64);
                UniPoly::product_of_linear((0..k).flat_map(|j| {
                    [(s.recip(), int(j) - &y), (u.clone(), &params.a0 + int(j - 1) - &y)]
                }))
            }))?;
            let shift = &params.a0 + &params.b0;
            let t = lib(t_transform(&seq, (k - 1) as usize, &(&shift - int(1 + k)), &(&shift + int(k - 3))))?;
            let lhs = t.scale_arg(&s);
            let rhs = lib(ik_numerator_unreduced(k, &params))?;
            if lhs != rhs {
                return Err(format!("k={k} params={params:?}: {lhs} != {rhs}"));
            }
            n += 1;
        }
    }
    count(n, "cases")
}

// ------------------------------------------------------------------- oracles

fn oracle_checks() -> Vec<Check> {
    let s = Suite::Oracles;
    vec![
        Check::new(s, "oracle-triangle", oracle_triangle),
        Check::new(s, "density-single-level", density_single_level),
        Check::new(s, "density-normalization", density_normalization),
        Check::new(s, "brute-schur", brute_schur),
        Check::new(s, "selberg-normalization", selberg_normalization),
    ]
}

/// `ik_closed = brute_average(p_k) = density_ik` for `n, k ≤ 4`, integer `a, b ≤ 4`.
pub fn oracle_triangle() -> Outcome {
    let mut n = 0;
    for a in 1..=4i64 {
        for b in 1..=4i64 {
            let (ar, br) = (int(a), int(b));
            for big_n in 1..=4usize {
                let sp = lib(SpectralParams::new(a - 1, b - 1, big_n as i64))?;
                for k in 1..=4i64 {
                    let closed = lib(ik_closed(k, &ar, &br, big_n as i64))?;
                    let brute = lib(brute_average(&MonomialPoly::power_sum(big_n, k as u32), big_n, &ar, &br))?;
                    let dens = lib(density_ik(k, &sp))?;
                    let ctx = || format!("k={k} N={big_n} a={a} b={b}");
                    eq(&closed, &brute, || format!("closed vs brute, {}", ctx()))?;
                    eq(&closed, &dens, || format!("closed vs density, {}", ctx()))?;
                    n += 1;
                }
            }
        }
    }
    count(n, "cases")
}

/// At `N = 1` the density sum reduces to `∏_{j<k} (a+j)/(a+b+j)`.
pub fn density_single_level() -> Outcome {
    let mut n = 0;
    for a_exp in 0..=3i64 {
        for b_exp in 0..=3i64 {
            let sp = lib(SpectralParams::new(a_exp, b_exp, 1))?;
            let (a, b) = (int(a_exp + 1), int(b_exp + 1));
            for k in 0..=6i64 {
                let expected = (0..k).fold(Rational::one(), |acc, j| acc * (&a + int(j)) / (&a + &b + int(j)));
                eq(&lib(density_ik(k, &sp))?, &expected, || format!("k={k} A={a_exp} B={b_exp}"))?;
                n += 1;
            }
        }
    }
    count(n, "cases")
}

/// `∫ ρ_N = N`.
pub fn density_normalization() -> Outcome {
    let mut n = 0;
    for big_n in 1..=5 {
        for (a_exp, b_exp) in [(0, 0), (2, 1), (0, 3)] {
            let sp = lib(SpectralParams::new(a_exp, b_exp, big_n))?;
            eq(&lib(density_ik(0, &sp))?, &int(big_n), || format!("N={big_n} A={a_exp} B={b_exp}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

/// Brute-force Schur averages against the product formula, `|λ| ≤ 4`, `n ≤ 3`.
pub fn brute_schur() -> Outcome {
    let mut n = 0;
    for (a, b) in [(int(1), int(1)), (rat(3, 2), int(2)), (int(3), rat(5, 2))] {
        for big_n in 1..=3usize {
            for w in 1..=4 {
                for lambda in Partition::all_of_weight(w) {
                    let f = MonomialPoly::schur(big_n, &lambda);
                    let brute = lib(brute_average(&f, big_n, &a, &b))?;
                    let closed = lib(schur_average(&lambda, &a, &b, big_n as i64))?;
                    eq(&brute, &closed, || format!("λ={lambda} N={big_n} a={a} b={b}"))?;
                    n += 1;
                }
            }
        }
    }
    count(n, "cases")
}

/// Brute-force unnormalized Selberg integral at `β = 1`.
pub fn selberg_normalization() -> Outcome {
    let mut n = 0;
    for big_n in 1..=4usize {
        for a in 1..=4 {
            for b in 1..=4 {
                let lhs = lib(selberg_brute(big_n, a, b))?;
                let rhs = lib(selberg_value(big_n as i64, a, b, 1))?;
                eq(&lhs, &rhs, || format!("N={big_n} a={a} b={b}"))?;
                n += 1;
            }
        }
    }
    count(n, "cases")
}

// -------------------------------------------------------------------- limits

fn limit_checks() -> Vec<Check> {
    let s = Suite::Limits;
    vec![
        Check::new(s, "central-binomial", central_binomial),
        Check::new(s, "zero-one-branches", zero_one_branches),
        Check::new(s, "catalan-specialization", catalan_specialization),
        Check::new(s, "dyck-specialization", dyck_specialization),
        Check::new(s, "limit-forms-agree", limit_forms_agree),
        Check::new(s, "uncorrected-readings-differ", uncorrected_readings_differ),
        Check::new(s, "rational-function-limit", rational_function_limit),
        Check::new(s, "rational-function-values", rational_function_values),
        Check::new(s, "convergence-rate", convergence_rate),
    ]
}

fn limit_at(k: i64, a1: &Rational, b1: &Rational) -> Result<Rational, String> {
    Ok(ik_limit(&lib(LimitQuery::from_slopes(k, a1.clone(), b1.clone()))?))
}

/// `a1 = b1 = 0` gives `C(2k, k) / 4^k`, `k ≤ 12`.
pub fn central_binomial() -> Outcome {
    for k in 1..=12i64 {
        let expected = c(2 * k, k) / pow(&int(4), k as u32);
        eq(&limit_at(k, &int(0), &int(0))?, &expected, || format!("k={k}"))?;
        eq(&lib(limit_central_binomial(k))?, &expected, || format!("k={k} evaluator"))?;
    }
    count(12, "values of k")
}

/// Limit 0 on `a1 = -1` and 1 on `b1 = -1`.
pub fn zero_one_branches() -> Outcome {
    let mut n = 0;
    for k in 1..=8 {
        for b1 in [int(0), int(1), rat(1, 2)] {
            eq(&limit_at(k, &int(-1), &b1)?, &int(0), || format!("k={k} a1=-1 b1={b1}"))?;
            n += 1;
        }
        for a1 in [int(0), int(2), rat(1, 3)] {
            eq(&limit_at(k, &a1, &int(-1))?, &int(1), || format!("k={k} a1={a1} b1=-1"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

pub fn ell_grid() -> [Rational; 5] {
    [int(1), rat(1, 2), int(2), rat(3, 5), int(7)]
}

/// The `a1 = 0`, `b1 = ℓ - 1` form.
pub fn catalan_specialization() -> Outcome {
    let mut n = 0;
    for l in ell_grid() {
        for k in 1..=8 {
            let lhs = lib(limit_catalan(k, &l))?;
            eq(&lhs, &limit_at(k, &int(0), &(&l - int(1)))?, || format!("k={k} l={l}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

/// The `b1 = 0`, `a1 = ℓ - 1` form, in both peak-counting and alternating shapes.
pub fn dyck_specialization() -> Outcome {
    let mut n = 0;
    for l in ell_grid() {
        for k in 1..=8 {
            let lhs = lib(limit_dyck(k, &l))?;
            eq(&lhs, &limit_at(k, &(&l - int(1)), &int(0))?, || format!("k={k} l={l}"))?;
            eq(&lhs, &lib(limit_dyck_novaes(k, &l))?, || format!("alternating form, k={k} l={l}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

fn slope_grid() -> Vec<(Rational, Rational)> {
    let vals = [int(0), int(1), rat(1, 2), rat(-1, 3), int(3), int(-1)];
    let mut out = Vec::new();
    for a1 in &vals {
        for b1 in &vals {
            if (int(2) + a1 + b1).is_zero() {
                continue;
            }
            out.push((a1.clone(), b1.clone()));
        }
    }
    out
}

/// The expanded and `(ℓ1, ℓ2)` forms agree with the reference formula.
pub fn limit_forms_agree() -> Outcome {
    let mut n = 0;
    for (a1, b1) in slope_grid() {
        for k in 1..=8 {
            let q = lib(LimitQuery::from_slopes(k, a1.clone(), b1.clone()))?;
            let reference = ik_limit(&q);
            eq(&ik_limit_expanded(&q), &reference, || format!("expanded k={k} a1={a1} b1={b1}"))?;
            let (l1, l2) = lib(l1l2_from_slopes(&a1, &b1))?;
            eq(&lib(ik_limit_l1l2(k, &l1, &l2))?, &reference, || format!("l1l2 k={k} a1={a1} b1={b1}"))?;
            n += 1;
        }
    }
    count(n, "cases")
}

/// The printed sign conventions for the `(ℓ1, ℓ2)` form do not reproduce the
/// reference; this records that they differ on the grid.
pub fn uncorrected_readings_differ() -> Outcome {
    let mut report = Vec::new();
    for reading in [L1L2Reading::Literal, L1L2Reading::BinomialTransform] {
        let mut mismatches = 0;
        let mut total = 0;
        for (a1, b1) in slope_grid() {
            let (l1, l2) = lib(l1l2_from_slopes(&a1, &b1))?;
            for k in 2..=6 {
                let q = lib(LimitQuery::from_slopes(k, a1.clone(), b1.clone()))?;
                if lib(ik_limit_l1l2_with(k, &l1, &l2, reading))? != ik_limit(&q) {
                    mismatches += 1;
                }
                total += 1;
            }
        }
        if mismatches == 0 {
            return Err(format!("{reading} reading unexpectedly matches everywhere"));
        }
        report.push(format!("{reading}: {mismatches}/{total} mismatches"));
    }
    Ok(report.join("; "))
}

/// The limit of the exact rational function `I_k / N` equals the closed form.
pub fn rational_function_limit() -> Outcome {
    let mut n = 0;
    for (a1, b1) in slope_grid() {
        for (a0, b0) in [(int(1), int(1)), (rat(5, 2), int(3))] {
            let params = ScalingParams::new(a1.clone(), a0, b1.clone(), b0);
            for k in 1..=6 {
                let rf = lib(ik_rf(k, &params))?;
                eq(&lib(rf.limit_at_infinity())?, &limit_at(k, &a1, &b1)?, || format!("k={k} {params:?}"))?;
                n += 1;
            }
        }
    }
    count(n, "cases")
}

/// The reduced rational function evaluated at integer `N` reproduces `I_k / N`.
pub fn rational_function_values() -> Outcome {
    let mut n = 0;
    for params in [
        ScalingParams::new(int(0), int(1), int(0), int(1)),
        ScalingParams::new(int(1), int(2), rat(1, 2), int(1)),
        ScalingParams::new(int(2), rat(1, 3), int(0), int(4)),
    ] {
        for k in 1..=5 {
            let rf = lib(ik_rf(k, &params))?;
            for big_n in 1..=10i64 {
                let nn = int(big_n);
                let closed = lib(ik_closed(k, &params.a_at(&nn), &params.b_at(&nn), big_n))? / &nn;
                eq(&lib(rf.eval(&nn))?, &closed, || format!("k={k} N={big_n} {params:?}"))?;
                n += 1;
            }
        }
    }
    count(n, "cases")
}

/// `e(N) = |I_k(N)/N - limit|` at `a = a0`, `b = b0` (zero slopes).
pub fn convergence_error(k: i64, n: i64, a0: &Rational, b0: &Rational) -> Result<Rational, String> {
    let value = lib(ik_closed(k, a0, b0, n))? / int(n);
    Ok((value - limit_at(k, &int(0), &int(0))?).abs())
}

/// `e(N)/e(2N)` for `N = 100, 200` and `k ∈ {2, 3}`.
pub fn convergence_ratios(a0: &Rational, b0: &Rational) -> Result<Vec<(i64, Rational)>, String> {
    let mut out = Vec::new();
    for k in [2, 3] {
        let e: Vec<Rational> =
            [100, 200, 400].into_iter().map(|n| convergence_error(k, n, a0, b0)).collect::<Result<_, _>>()?;
        for w in e.windows(2) {
            if w[1].is_zero() {
                return Err(format!("k={k}: error vanished"));
            }
            out.push((k, &w[0] / &w[1]));
        }
    }
    Ok(out)
}

/// Halving rate of the error. With `a0 = 2`, `b0 = 1` the `1/N` term is
/// present and `e(N)/e(2N) ∈ [1.6, 2.4]`. With `a0 = b0 = 1` that term
/// cancels; there `e(N) = 1/(8(4N^2-1))` for `k = 2` and the ratios lie in
/// `[3.2, 4.8]`.
pub fn convergence_rate() -> Outcome {
    let mut report = Vec::new();
    for ((a0, b0), (lo, hi)) in [((2, 1), (rat(8, 5), rat(12, 5))), ((1, 1), (rat(16, 5), rat(24, 5)))] {
        for (k, r) in convergence_ratios(&int(a0), &int(b0))? {
            let shown = crate::rational::to_decimal(&r, 6);
            if r < lo || r > hi {
                return Err(format!("a0={a0} b0={b0} k={k}: ratio {shown} outside [{lo}, {hi}]"));
            }
            report.push(format!("a0={a0},b0={b0},k={k}: {shown}"));
        }
    }
    for n in [100, 200, 400] {
        let expected = (int(8) * (int(4) * int(n) * int(n) - int(1))).recip();
        eq(&convergence_error(2, n, &int(1), &int(1))?, &expected, || format!("exact error at N={n}"))?;
    }
    Ok(report.join("; "))
}

// ---------------------------------------------------------------- conjecture

pub const CONJECTURE_PARTITIONS: [&[usize]; 4] = [&[1, 1], &[2, 1], &[2, 2], &[3, 1]];
pub const CONJECTURE_SCALINGS: [(i64, i64, i64, i64); 3] = [(0, 0, 1, 1), (1, 0, 1, 1), (0, 1, 1, 1)];

/// One comparison `lim ⟨p_λ⟩/N^{ℓ(λ)} = ∏_i lim I_{λ_i}/N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductComparison {
    pub lambda: Partition,
    pub params: ScalingParams,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl ProductComparison {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn compare_product(lambda: &Partition, params: &ScalingParams) -> crate::error::Result<ProductComparison> {
    let lhs = plambda_limit(lambda, params)?;
    let mut rhs = Rational::one();
    for &part in lambda.parts() {
        rhs *= ik_limit(&LimitQuery::new(part as i64, params.clone())?);
    }
    Ok(ProductComparison { lambda: lambda.clone(), params: params.clone(), lhs, rhs })
}

fn conjecture_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for parts in CONJECTURE_PARTITIONS {
        let lambda = Partition::new(parts.to_vec()).expect("valid partition");
        for (a1, b1, a0, b0) in CONJECTURE_SCALINGS {
            let params = ScalingParams::new(int(a1), int(a0), int(b1), int(b0));
            let name = format!("product-limit {lambda} a1={a1} b1={b1}");
            let lambda = lambda.clone();
            out.push(Check::new(Suite::Conjecture, name, move || {
                let cmp = lib(compare_product(&lambda, &params))?;
                let detail = format!("lhs={} rhs={}", to_exact_string(&cmp.lhs), to_exact_string(&cmp.rhs));
                if cmp.holds() {
                    Ok(detail)
                } else {
                    Err(format!("mismatch: {detail}"))
                }
            }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse_and_are_nonempty() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert!(!checks(s).is_empty());
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<String> = all_checks().into_iter().map(|c| c.name).collect();
        let before = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), before);
    }

    #[test]
    fn cheap_checks_pass() {
        for name in ["bibident1", "bibident2", "bintranslem3", "eq1-a0-b0", "gimel-three-terms", "central-binomial"] {
            let r = find_check(name).unwrap().run();
            assert!(r.passed, "{name}: {}", r.detail);
        }
    }

    #[test]
    fn failing_comparison_is_reported() {
        let e = eq(&int(1), &int(2), || "ctx".into()).unwrap_err();
        assert_eq!(e, "ctx: 1/1 != 2/1");
    }
}
