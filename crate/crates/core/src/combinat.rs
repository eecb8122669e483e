//! Exact combinatorial kernel: binomials, Stirling numbers, the inverse
//! binomial transform, Newton divided differences, the `P_i^k` polynomials,
//! the twisted transform `T_k^{a,b}`, and the integer triangles that show up
//! in the special-case limits.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{PolySequence, UniPoly};
use crate::rational::{from_bigint, int, Rational};

fn out_of_range(what: &'static str, detail: String) -> Error {
    Error::OutOfRange { what, detail }
}

/// `C(n, k)` as a big integer; zero unless `0 <= k <= n`.
pub fn choose(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Rising factorial `(x)_n = x (x+1) … (x+n-1)`.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..n {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// Binomial coefficient with the out-of-range convention `C(n, k) = 0` for
/// `k < 0` or `k > n`. Negative `n` is rejected.
pub fn binomial(n: i64, k: i64) -> Result<Rational> {
    if n < 0 {
        return Err(out_of_range("n", format!("binomial needs n >= 0, got {n}")));
    }
    Ok(from_bigint(choose(n, k)))
}

/// Stirling number of the second kind `S(p, k)` via
/// `S(p, k) = k S(p-1, k) + S(p-1, k-1)`.
pub fn stirling2(p: i64, k: i64) -> Result<Rational> {
    if p < 0 || k < 0 {
        return Err(out_of_range("stirling2", format!("need p, k >= 0, got ({p}, {k})")));
    }
    if k > p {
        return Ok(Rational::zero());
    }
    let (p, k) = (p as usize, k as usize);
    // row[j] = S(n, j) for the current n
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for n in 1..=p {
        for j in (1..=k.min(n)).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    Ok(from_bigint(row[k].clone()))
}

/// `B_k^{-1}[f] = Σ_{i=0}^{k} (-1)^{k-i} C(k, i) f_i(x)`.
pub fn inverse_binomial_transform(seq: &PolySequence, k: usize) -> Result<UniPoly> {
    if k >= seq.len() {
        return Err(out_of_range(
            "k",
            format!("order {k} needs at least {} entries, sequence has {}", k + 1, seq.len()),
        ));
    }
    let mut acc = UniPoly::zero();
    for (i, f) in seq.entries()[..=k].iter().enumerate() {
        let mut c = from_bigint(choose(k as i64, i as i64));
        if (k - i) % 2 == 1 {
            c = -c;
        }
        acc = &acc + &f.scale(&c);
    }
    Ok(acc)
}

/// Scalar form of [`inverse_binomial_transform`] on the first `k + 1` values.
pub fn inverse_binomial_transform_values(values: &[Rational], k: usize) -> Result<Rational> {
    let seq = PolySequence::from_constants(values.iter().cloned())?;
    Ok(inverse_binomial_transform(&seq, k)?.coeff(0))
}

/// Newton coefficients `c_j = f[y_0, …, y_j]` from the divided-difference
/// table, so that `f(y) = Σ_j c_j (y - y_0)…(y - y_{j-1})`.
///
/// Nodes are used in the given order.
pub fn divided_difference_coeffs(points: &[(Rational, Rational)]) -> Result<Vec<Rational>> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::RepeatedAbscissa(xi.clone()));
        }
    }
    let mut column: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut coeffs = Vec::with_capacity(points.len());
    for level in 0..points.len() {
        coeffs.push(column[0].clone());
        column = (0..column.len() - 1)
            .map(|i| (&column[i + 1] - &column[i]) / (&points[i + level + 1].0 - &points[i].0))
            .collect();
    }
    Ok(coeffs)
}

/// Evaluates the Newton form produced by [`divided_difference_coeffs`].
pub fn newton_eval(nodes: &[Rational], coeffs: &[Rational], y: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for j in (0..coeffs.len()).rev() {
        acc = acc * (y - &nodes[j]) + &coeffs[j];
    }
    acc
}

/// `P_i^k(x; a, b) = ∏_{j=0}^{k-i-1} (x + j + a) · ∏_{j=0}^{i-1} (x - j + b)`.
pub fn p_poly(i: usize, k: usize, a: &Rational, b: &Rational) -> Result<UniPoly> {
    if i > k {
        return Err(out_of_range("i", format!("P_i^k needs 0 <= i <= k, got i={i}, k={k}")));
    }
    let rising = (0..k - i).map(|j| (Rational::one(), a + int(j as i64)));
    let falling = (0..i).map(|j| (Rational::one(), b - int(j as i64)));
    Ok(UniPoly::product_of_linear(rising.chain(falling)))
}

/// `T_k^{a,b}[(a_i)] = (-1)^k B_k^{-1}[(P_i^k(x; a, b) a_i(x))_i]`.
pub fn t_transform(seq: &PolySequence, k: usize, a: &Rational, b: &Rational) -> Result<UniPoly> {
    if k >= seq.len() {
        return Err(out_of_range(
            "k",
            format!("order {k} needs at least {} entries, sequence has {}", k + 1, seq.len()),
        ));
    }
    let weighted = (0..=k)
        .map(|i| Ok(&p_poly(i, k, a, b)? * &seq.entries()[i]))
        .collect::<Result<Vec<_>>>()?;
    let out = inverse_binomial_transform(&PolySequence::new(weighted)?, k)?;
    Ok(if k % 2 == 1 { -&out } else { out })
}

/// Catalan triangle entry `((k - i) / k) C(2k, i)`.
pub fn catalan_triangle(k: i64, i: i64) -> Result<Rational> {
    if k < 1 || i < 0 || i >= k {
        return Err(out_of_range(
            "catalan_triangle",
            format!("need 1 <= k and 0 <= i <= k-1, got ({k}, {i})"),
        ));
    }
    Ok(int(k - i) / int(k) * from_bigint(choose(2 * k, i)))
}

/// `C(k, ⌈i/2⌉) C(k, ⌊i/2⌋)`, the peak-counting triangle of the `b1 = 0` limit.
pub fn gimel(k: i64, i: i64) -> Result<Rational> {
    if k < 1 || i < 0 || i > 2 * k {
        return Err(out_of_range("gimel", format!("need k >= 1 and 0 <= i <= 2k, got ({k}, {i})")));
    }
    Ok(from_bigint(gimel_int(k, i)))
}

pub(crate) fn gimel_int(k: i64, i: i64) -> BigInt {
    choose(k, (i + 1) / 2) * choose(k, i / 2)
}

/// Product over an oriented integer range.
///
/// `lo <= hi` is the ordinary product. For `lo > hi` the range is read as
/// the inverse of the complementary product, `∏_{i=hi+1}^{lo-1} f(i)^{-1}`,
/// which keeps `∏_{lo}^{hi} = G(hi) / G(lo - 1)` for the running product
/// `G`. In particular `lo = hi + 1` is the empty product.
pub fn oriented_product(lo: i64, hi: i64, mut f: impl FnMut(i64) -> Rational) -> Rational {
    if lo <= hi {
        (lo..=hi).fold(Rational::one(), |acc, i| acc * f(i))
    } else {
        (hi + 1..lo).fold(Rational::one(), |acc, i| acc / f(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    /// Alternating-sum formula for `S(p, k)`, kept as an oracle.
    fn stirling2_alternating(p: u32, k: i64) -> Rational {
        let mut acc = BigInt::zero();
        for i in 0..=k {
            let term = choose(k, i) * num_traits::pow(BigInt::from(i), p as usize);
            if (k - i) % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        from_bigint(acc) / from_bigint(factorial(k as u64))
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        assert_eq!(binomial(5, 0).unwrap(), int(1));
        assert_eq!(binomial(3, 5).unwrap(), int(0));
        assert_eq!(binomial(3, -1).unwrap(), int(0));
        assert!(binomial(-1, 0).is_err());
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(3, 2).unwrap(), int(3));
        assert_eq!(stirling2(4, 2).unwrap(), int(7));
        for p in 0..10 {
            assert_eq!(stirling2(p, p).unwrap(), int(1));
        }
        assert_eq!(stirling2(0, 0).unwrap(), int(1));
        assert_eq!(stirling2(3, 0).unwrap(), int(0));
        assert_eq!(stirling2(2, 5).unwrap(), int(0));
        assert!(stirling2(-1, 0).is_err());
    }

    #[test]
    fn stirling_matches_alternating_sum() {
        for p in 0..12u32 {
            for k in 0..=p as i64 {
                assert_eq!(stirling2(p as i64, k).unwrap(), stirling2_alternating(p, k));
            }
        }
    }

    #[test]
    fn inverse_binomial_transform_examples() {
        let seq = PolySequence::from_constants([rat(1, 2), rat(1, 6)]).unwrap();
        assert_eq!(inverse_binomial_transform(&seq, 1).unwrap(), UniPoly::constant(rat(-1, 3)));

        let cubes = PolySequence::from_constants([int(0), int(1), int(8)]).unwrap();
        let v = inverse_binomial_transform(&cubes, 2).unwrap();
        assert_eq!(v, UniPoly::constant(int(6)));
        assert_eq!(v.coeff(0), int(2) * stirling2(3, 2).unwrap());

        let single = PolySequence::new(vec![UniPoly::from_ints(&[1, 2, 3])]).unwrap();
        assert_eq!(inverse_binomial_transform(&single, 0).unwrap(), UniPoly::from_ints(&[1, 2, 3]));

        assert!(inverse_binomial_transform(&single, 1).is_err());
    }

    fn nodes_values(f: impl Fn(i64) -> i64, n: i64) -> Vec<(Rational, Rational)> {
        (0..n).map(|y| (int(y), int(f(y)))).collect()
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(
            divided_difference_coeffs(&nodes_values(|y| y * y, 3)).unwrap(),
            vec![int(0), int(1), int(1)]
        );
        assert_eq!(
            divided_difference_coeffs(&[(rat(1, 3), int(7)), (int(5), int(7))]).unwrap(),
            vec![int(7), int(0)]
        );
        let cubic = divided_difference_coeffs(&nodes_values(|y| y * y * y, 4)).unwrap();
        assert_eq!(cubic, vec![int(0), int(1), int(3), int(1)]);
        assert_eq!(cubic[2], stirling2(3, 2).unwrap());
    }

    #[test]
    fn repeated_abscissa_rejected() {
        let pts = [(int(1), int(0)), (int(2), int(1)), (int(1), int(3))];
        assert_eq!(divided_difference_coeffs(&pts), Err(Error::RepeatedAbscissa(int(1))));
    }

    #[test]
    fn p_poly_examples() {
        let (a, b) = (rat(2, 3), rat(-5, 7));
        assert_eq!(p_poly(0, 1, &a, &b).unwrap(), UniPoly::linear(int(1), a.clone()));
        assert_eq!(p_poly(1, 1, &a, &b).unwrap(), UniPoly::linear(int(1), b.clone()));
        assert_eq!(
            p_poly(1, 2, &a, &b).unwrap(),
            &UniPoly::linear(int(1), a.clone()) * &UniPoly::linear(int(1), b.clone())
        );
        assert_eq!(p_poly(0, 0, &a, &b).unwrap(), UniPoly::one());
        assert!(p_poly(3, 2, &a, &b).is_err());
    }

    #[test]
    fn t_transform_examples() {
        let (a, b) = (rat(3, 2), rat(-1, 4));
        let ids = PolySequence::from_constants([int(0), int(1)]).unwrap();
        assert_eq!(t_transform(&ids, 1, &a, &b).unwrap(), UniPoly::linear(int(-1), -&b));

        let ones = PolySequence::from_constants([int(1), int(1)]).unwrap();
        assert_eq!(t_transform(&ones, 1, &a, &b).unwrap(), UniPoly::constant(-(&b - &a)));

        let one = PolySequence::from_constants([int(1)]).unwrap();
        assert_eq!(t_transform(&one, 0, &a, &b).unwrap(), UniPoly::one());
        assert!(t_transform(&one, 1, &a, &b).is_err());
    }

    #[test]
    fn catalan_triangle_examples() {
        assert_eq!(catalan_triangle(3, 0).unwrap(), int(1));
        assert_eq!(catalan_triangle(3, 1).unwrap(), int(4));
        assert_eq!(catalan_triangle(3, 2).unwrap(), int(5));
        assert!(catalan_triangle(3, 3).is_err());
        assert!(catalan_triangle(0, 0).is_err());
        for k in 1..15 {
            for i in 0..k {
                assert!(crate::rational::is_integer(&catalan_triangle(k, i).unwrap()));
            }
        }
    }

    #[test]
    fn gimel_examples() {
        for k in 1..8 {
            assert_eq!(gimel(k, 0).unwrap(), int(1));
            assert_eq!(gimel(k, 1).unwrap(), int(k));
        }
        assert_eq!(gimel(2, 2).unwrap(), int(4));
        assert!(gimel(2, 5).is_err());
        assert!(gimel(0, 0).is_err());
    }

    #[test]
    fn gimel_matches_alternating_sum() {
        // Σ_j (-1)^j C(k, j) C(2(k-j), i-j) C(2j, j)/(j+1), from expanding the
        // alternating form of the b1 = 0 limit
        for k in 1..9i64 {
            for i in 0..=2 * k {
                let mut acc = Rational::zero();
                for j in 0..=k {
                    let t = from_bigint(choose(k, j) * choose(2 * (k - j), i - j) * choose(2 * j, j)) / int(j + 1);
                    acc += if j % 2 == 0 { t } else { -t };
                }
                assert_eq!(acc, gimel(k, i).unwrap(), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn oriented_product_conventions() {
        let f = |i: i64| int(i);
        assert_eq!(oriented_product(2, 4, f), int(24));
        assert_eq!(oriented_product(3, 2, f), int(1));
        assert_eq!(oriented_product(5, 2, f), rat(1, 12));
        // G(hi)/G(lo-1) with G the running product from 1
        let g = |n: i64| oriented_product(1, n, f);
        assert_eq!(oriented_product(5, 2, f), g(2) / g(4));
    }

    proptest! {
        #[test]
        fn newton_form_interpolates(vals in prop::collection::vec(-50i64..50, 1..8)) {
            let pts: Vec<_> = vals.iter().enumerate().map(|(i, &v)| (int(i as i64), int(v))).collect();
            let c = divided_difference_coeffs(&pts).unwrap();
            let nodes: Vec<_> = pts.iter().map(|p| p.0.clone()).collect();
            for (x, y) in &pts {
                prop_assert_eq!(&newton_eval(&nodes, &c, x), y);
            }
        }
    }
}
