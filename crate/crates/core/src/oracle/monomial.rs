use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{int, Rational};

/// Sparse polynomial in a fixed number of variables, keyed by exponent
/// vector. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// `x_i` (zero-based).
    pub fn variable(nvars: usize, i: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::OutOfRange { what: "variable", detail: format!("index {i} with {nvars} variables") });
        }
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        Ok(p)
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::OutOfRange {
                    what: "exponent vector",
                    detail: format!("length {} with {nvars} variables", e.len()),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `p_k = Σ x_i^k`.
    pub fn power_sum(nvars: usize, k: u32) -> Self {
        let mut p = Self::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            p.add_term(e, Rational::one());
        }
        p
    }

    /// `s_λ(x_1, …, x_n)` as a sum over semistandard tableaux.
    pub fn schur(nvars: usize, lambda: &Partition) -> Self {
        let mut p = Self::zero(nvars);
        if lambda.length() > nvars {
            return p;
        }
        let shape = lambda.parts().to_vec();
        let cells: Vec<(usize, usize)> =
            shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
        let mut filling = vec![vec![0usize; 0]; shape.len()];
        for (r, &len) in shape.iter().enumerate() {
            filling[r] = vec![0; len];
        }
        fill_tableaux(&cells, 0, nvars, &mut filling, &mut |t| {
            let mut e = vec![0u32; nvars];
            for row in t {
                for &v in row {
                    e[v] += 1;
                }
            }
            p.add_term(e, Rational::one());
        });
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Invariance under every adjacent transposition of the variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            (0..self.nvars.saturating_sub(1)).all(|i| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }

    /// `∏_{i<j} (x_i - x_j)` from the Leibniz expansion of `det(x_i^{j})`.
    pub fn vandermonde(nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        let mut perm: Vec<usize> = (0..nvars).collect();
        permutations(&mut perm, 0, &mut |p, sign| {
            // det has x_i^{p(i)}; ∏_{i<j}(x_i - x_j) = (-1)^{n(n-1)/2} det(x_i^{j})
            let e = p.iter().map(|&v| v as u32).collect();
            out.add_term(e, int(sign));
        });
        if (nvars * nvars.saturating_sub(1) / 2) % 2 == 1 {
            out = out.scale(&int(-1));
        }
        out
    }
}

impl fmt::Display for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{p}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// Heap-free recursive permutation walk reporting each permutation with its sign.
fn permutations(p: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize], i64)) {
    fn go(p: &mut Vec<usize>, start: usize, sign: i64, visit: &mut impl FnMut(&[usize], i64)) {
        if start == p.len() {
            visit(p, sign);
            return;
        }
        for i in start..p.len() {
            p.swap(start, i);
            go(p, start + 1, if i == start { sign } else { -sign }, visit);
            p.swap(start, i);
        }
    }
    go(p, start, 1, visit);
}

/// Fills cells in row-major order with weakly increasing rows and strictly
/// increasing columns, values in `0..nvars`.
fn fill_tableaux(
    cells: &[(usize, usize)],
    idx: usize,
    nvars: usize,
    t: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    if idx == cells.len() {
        visit(t);
        return;
    }
    let (r, c) = cells[idx];
    let lo_row = if c > 0 { t[r][c - 1] } else { 0 };
    let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 0 };
    for v in lo_row.max(lo_col)..nvars {
        t[r][c] = v;
        fill_tableaux(cells, idx + 1, nvars, t, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vandermonde_two_and_three() {
        let v2 = MonomialPoly::vandermonde(2);
        assert_eq!(v2, MonomialPoly::from_terms(2, [(vec![1, 0], int(1)), (vec![0, 1], int(-1))]).unwrap());
        let v3 = MonomialPoly::vandermonde(3);
        assert_eq!(v3.len(), 6);
        // leading term x1^2 x2 from (x1-x2)(x1-x3)(x2-x3)
        assert_eq!(v3.coeff(&[2, 1, 0]), int(1));
        assert!(!v3.is_symmetric());
        assert!(v3.mul(&v3).is_symmetric());
    }

    #[test]
    fn schur_small_cases() {
        let h = MonomialPoly::schur(3, &Partition::new(vec![2]).unwrap());
        // h_2 in three variables has six monomials
        assert_eq!(h.len(), 6);
        let e = MonomialPoly::schur(3, &Partition::new(vec![1, 1]).unwrap());
        assert_eq!(e.len(), 3);
        let s21 = MonomialPoly::schur(3, &Partition::new(vec![2, 1]).unwrap());
        assert_eq!(s21.coeff(&[1, 1, 1]), int(2));
        assert!(s21.is_symmetric());
        assert!(MonomialPoly::schur(1, &Partition::new(vec![1, 1]).unwrap()).is_empty());
    }

    #[test]
    fn p2_is_h2_minus_e2() {
        let n = 3;
        let h2 = MonomialPoly::schur(n, &Partition::new(vec![2]).unwrap());
        let e2 = MonomialPoly::schur(n, &Partition::new(vec![1, 1]).unwrap());
        assert_eq!(h2.add(&e2.scale(&int(-1))), MonomialPoly::power_sum(n, 2));
    }

    #[test]
    fn from_terms_merges_and_validates() {
        let p = MonomialPoly::from_terms(2, [(vec![1, 0], int(1)), (vec![1, 0], int(-1))]).unwrap();
        assert!(p.is_empty());
        assert!(MonomialPoly::from_terms(2, [(vec![1], int(1))]).is_err());
        assert!(MonomialPoly::variable(2, 2).is_err());
    }
}
