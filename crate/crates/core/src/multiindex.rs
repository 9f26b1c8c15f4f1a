//! Exponent vectors for sparse multivariate monomials.
//!
//! A [`MultiIndex`] is a fixed-length vector of non-negative exponents. The
//! total order used everywhere is ascending lexicographic on the exponent
//! list read left to right, so for degree 2 in two variables:
//! `(0,2) < (1,1) < (2,0)`. All monomial orderings and Plücker sign
//! conventions in the crate derive from this single choice.

use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial; derives its lexicographic order from the
/// underlying `Vec` ordering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    /// The zero vector (constant monomial) over `len` variables.
    pub fn zero(len: usize) -> Self {
        MultiIndex(vec![0; len])
    }

    /// `e * unit(i)`: a single variable raised to `e`.
    pub fn single(len: usize, var: usize, e: u32) -> Self {
        let mut exps = vec![0; len];
        exps[var] = e;
        MultiIndex(exps)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|I|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Product of monomials: componentwise sum of exponents.
    pub fn mul(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when divisible.
    pub fn checked_quotient(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if self.divides(other) {
            Some(MultiIndex(
                other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when no variable occurs in both monomials.
    pub fn coprime(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drops coordinate `var`; the exponent there must be zero.
    pub fn remove_var(&self, var: usize) -> MultiIndex {
        debug_assert_eq!(self.0[var], 0);
        let mut exps = self.0.clone();
        exps.remove(var);
        MultiIndex(exps)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All exponent vectors of length `len` with total degree exactly `total`,
/// in ascending lexicographic order.
pub fn compositions(len: usize, total: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut current = vec![0u32; len];
    fill_compositions(&mut out, &mut current, 0, total);
    out
}

fn fill_compositions(out: &mut Vec<MultiIndex>, current: &mut Vec<u32>, pos: usize, left: u32) {
    if pos + 1 == current.len() {
        current[pos] = left;
        out.push(MultiIndex(current.clone()));
        return;
    }
    for e in 0..=left {
        current[pos] = e;
        fill_compositions(out, current, pos + 1, left - e);
    }
    current[pos] = 0;
}

/// All exponent vectors of length `len` with total degree at most `max_total`,
/// in ascending (degree-grouped) lexicographic generation order.
pub fn compositions_up_to(len: usize, max_total: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for d in 0..=max_total {
        out.extend(compositions(len, d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(17, 0), BigInt::from(1));
        assert_eq!(binomial(7, 6), BigInt::from(7));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn compositions_are_lex_sorted() {
        let list = compositions(2, 2);
        let expect: Vec<MultiIndex> = vec![
            MultiIndex::new(vec![0, 2]),
            MultiIndex::new(vec![1, 1]),
            MultiIndex::new(vec![2, 0]),
        ];
        assert_eq!(list, expect);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn composition_count_matches_binomial() {
        // #{|I| = d in m parts} = C(m-1+d, d)
        for m in 1..=4usize {
            for d in 0..=5u32 {
                let want = binomial((m as u64 - 1) + d as u64, d as u64);
                assert_eq!(BigInt::from(compositions(m, d).len()), want);
            }
        }
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = MultiIndex::new(vec![1, 0, 2]);
        let b = MultiIndex::new(vec![2, 1, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.checked_quotient(&b), Some(MultiIndex::new(vec![1, 1, 0])));
        assert!(!b.divides(&a));
        assert!(b.checked_quotient(&a).is_none());
    }
}
