//! Truncated univariate power series (jets) over exact rationals.
//!
//! A jet of order `k` stores the coefficients of `1, t, ..., t^k`.
//! Truncation is the semantics: every operation silently discards all terms
//! of degree above the order.

use num::bigint::BigInt;
use num::One;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet {
    coeffs: Vec<Rational>,
}

impl Jet {
    /// Builds a jet from coefficients `c0..=ck`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least the constant term");
        Jet { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Jet::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Jet {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        let mut j = Jet::zero(order);
        j.coeffs[0] = c;
        j
    }

    /// The identity jet `t`.
    pub fn t(order: usize) -> Self {
        let mut j = Jet::zero(order);
        if order >= 1 {
            j.coeffs[1] = Rational::one();
        }
        j
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Jet {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Rational::zero());
        Jet { coeffs }
    }

    fn common_order(&self, other: &Jet) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Jet) -> Jet {
        let k = self.common_order(other);
        Jet {
            coeffs: (0..=k)
                .map(|i| self.coefficient(i) + other.coefficient(i))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        let k = self.common_order(other);
        Jet {
            coeffs: (0..=k)
                .map(|i| self.coefficient(i) - other.coefficient(i))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &Jet) -> Jet {
        let k = self.common_order(other);
        let mut coeffs = vec![Rational::zero(); k + 1];
        for i in 0..=k {
            let a = self.coefficient(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(k - i) {
                let b = other.coefficient(j);
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(&a * &b);
            }
        }
        Jet { coeffs }
    }

    pub fn pow(&self, e: u32) -> Jet {
        // A positive-valuation jet raised past the order is identically zero.
        if self.constant_term().is_zero() && e as usize > self.order() {
            return Jet::zero(self.order());
        }
        let mut out = Jet::constant(self.order(), Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Composition `self ∘ inner`; requires `inner(0) = 0` so the result is
    /// a well-defined jet.
    pub fn compose(&self, inner: &Jet) -> Result<Jet> {
        if !inner.constant_term().is_zero() {
            return Err(Error::InvalidArgument(
                "composition requires the inner jet to vanish at 0".into(),
            ));
        }
        let k = self.common_order(inner);
        // Horner evaluation in the truncated ring.
        let mut acc = Jet::constant(k, self.coefficient(self.order()));
        for i in (0..self.order()).rev() {
            acc = acc.mul(&inner.truncate(k));
            acc.coeffs[0] = &acc.coeffs[0] + &self.coefficient(i);
        }
        Ok(acc)
    }

    /// Entry `i` is the `i`-th derivative at `t = 0`, i.e. `i! * c_i`.
    pub fn derivative_column(&self) -> Vec<Rational> {
        let mut factorial = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i > 0 {
                    factorial *= BigInt::from(i);
                }
                c * &Rational::from_bigint(factorial.clone())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_column_scales_by_factorials() {
        let j = Jet::from_ints(&[1, 1, 1]);
        let col = j.derivative_column();
        assert_eq!(
            col,
            vec![
                Rational::from_int(1),
                Rational::from_int(1),
                Rational::from_int(2)
            ]
        );

        let j2 = Jet::from_ints(&[0, 0, 1]);
        assert_eq!(j2.derivative_column()[2], Rational::from_int(2));
    }

    #[test]
    fn truncation_kills_high_order_terms() {
        // t^3 truncated to order 2 is the zero jet.
        let t = Jet::t(3);
        let cube = t.pow(3).truncate(2);
        assert!(cube.is_zero());
        assert_eq!(cube.derivative_column(), vec![Rational::zero(); 3]);
    }

    #[test]
    fn multiplication_truncates() {
        // (t + t^2)^2 at order 2 keeps only t^2.
        let j = Jet::from_ints(&[0, 1, 1]);
        let sq = j.mul(&j);
        assert_eq!(sq, Jet::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn compose_requires_vanishing_inner() {
        let outer = Jet::from_ints(&[1, 2, 3]);
        let bad = Jet::from_ints(&[1, 1, 0]);
        assert!(outer.compose(&bad).is_err());
    }

    #[test]
    fn compose_matches_hand_expansion() {
        // (t + t^2) ∘ (t + t^2) = t + 2t^2 + ... truncated at order 2.
        let f = Jet::from_ints(&[0, 1, 1]);
        let g = f.compose(&f).unwrap();
        assert_eq!(g, Jet::from_ints(&[0, 1, 2]));
    }
}
