//! Schur-basis expansion of power-sum products by the Murnaghan–Nakayama rule.
//!
//! Partitions are handled through beta-sets: adding a border strip of size
//! `r` moves one bead from `β` to `β + r`, with sign `(-1)` to the number of
//! beads jumped over.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{from_bigint, Rational};
use crate::schur_moments::DEFAULT_WEIGHT_CAP;

/// All `(ν, ±1)` with `ν / μ` a border strip of size `r`.
fn add_border_strips(mu: &Partition, r: usize) -> Vec<(Partition, i32)> {
    let len = mu.length() + r;
    let beads: BTreeSet<usize> = (0..len).map(|i| mu.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for &b in &beads {
        let target = b + r;
        if beads.contains(&target) {
            continue;
        }
        let jumped = beads.range(b + 1..target).count();
        let mut moved: Vec<usize> = beads.iter().copied().filter(|&x| x != b).collect();
        moved.push(target);
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = moved.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
        out.push((Partition::from_unsorted(parts), if jumped.is_multiple_of(2) { 1 } else { -1 }));
    }
    out
}

/// `p_λ = Σ_μ c_μ s_μ`, sorted by `μ` in decreasing lexicographic order.
pub fn mn_expand(lambda: &Partition) -> Result<Vec<(Partition, Rational)>> {
    mn_expand_capped(lambda, DEFAULT_WEIGHT_CAP)
}

/// [`mn_expand`] with an explicit bound on `|λ|`.
pub fn mn_expand_capped(lambda: &Partition, weight_cap: usize) -> Result<Vec<(Partition, Rational)>> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition("power-sum product needs a nonempty partition".into()));
    }
    if lambda.weight() > weight_cap {
        return Err(Error::WeightCap { weight: lambda.weight(), cap: weight_cap });
    }
    let mut current: BTreeMap<Partition, BigInt> = BTreeMap::new();
    current.insert(Partition::empty(), BigInt::from(1));
    for &r in lambda.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (mu, c) in &current {
            for (nu, sign) in add_border_strips(mu, r) {
                *next.entry(nu).or_insert_with(BigInt::zero) += c * sign;
            }
        }
        next.retain(|_, c| !c.is_zero());
        current = next;
    }
    Ok(current.into_iter().rev().map(|(p, c)| (p, from_bigint(c))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_expansions() {
        assert_eq!(
            mn_expand(&part(&[2])).unwrap(),
            vec![(part(&[2]), int(1)), (part(&[1, 1]), int(-1))]
        );
        assert_eq!(mn_expand(&part(&[1])).unwrap(), vec![(part(&[1]), int(1))]);
        assert_eq!(
            mn_expand(&part(&[1, 1])).unwrap(),
            vec![(part(&[2]), int(1)), (part(&[1, 1]), int(1))]
        );
    }

    #[test]
    fn single_row_gives_signed_hooks() {
        for k in 1..=8 {
            let expected: Vec<_> = (0..k)
                .map(|i| (Partition::hook(k, i), int(if i % 2 == 0 { 1 } else { -1 })))
                .collect();
            assert_eq!(mn_expand(&part(&[k])).unwrap(), expected);
        }
    }

    #[test]
    fn p1_power_gives_standard_tableaux_counts() {
        // p_1^n = Σ f^λ s_λ and Σ (f^λ)^2 = n!
        for n in 1..=7usize {
            let exp = mn_expand(&Partition::new(vec![1; n]).unwrap()).unwrap();
            let sum_sq: Rational = exp.iter().map(|(_, c)| c * c).sum();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(sum_sq, int(fact));
            assert_eq!(exp.len(), Partition::all_of_weight(n).len());
        }
    }

    #[test]
    fn cap_and_empty() {
        assert_eq!(
            mn_expand_capped(&part(&[5, 4]), 8),
            Err(Error::WeightCap { weight: 9, cap: 8 })
        );
        assert!(mn_expand(&Partition::empty()).is_err());
    }
}
