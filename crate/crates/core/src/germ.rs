//! Curve germs through the origin and their composition with polynomials.
//!
//! A [`CurveGerm`] models the `k`-jet of a holomorphic curve `ν` with
//! `ν(0) = 0`: an `n`-tuple of jets of common order whose constant terms all
//! vanish. The chart convention throughout the crate puts the base point at
//! the origin.

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveGerm {
    components: Vec<Jet>,
}

impl CurveGerm {
    pub fn new(components: Vec<Jet>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument(
                "a curve germ needs at least one component".into(),
            ));
        }
        let order = components[0].order();
        for (i, c) in components.iter().enumerate() {
            if c.order() != order {
                return Err(Error::DimensionMismatch(format!(
                    "component {i} has order {} but component 0 has order {order}",
                    c.order()
                )));
            }
            if !c.constant_term().is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "component {i} does not vanish at t = 0"
                )));
            }
        }
        Ok(CurveGerm { components })
    }

    /// Convenience constructor from integer coefficient rows; each row lists
    /// the coefficients of `t, t^2, ..., t^k` for one component.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let components = rows
            .iter()
            .map(|row| {
                let mut coeffs = Vec::with_capacity(row.len() + 1);
                coeffs.push(Rational::zero());
                coeffs.extend(row.iter().map(|&c| Rational::from_int(c)));
                Jet::from_coeffs(coeffs)
            })
            .collect();
        CurveGerm::new(components)
    }

    pub fn ambient_dim(&self) -> usize {
        self.components.len()
    }

    pub fn order(&self) -> usize {
        self.components[0].order()
    }

    pub fn component(&self, i: usize) -> &Jet {
        &self.components[i]
    }

    pub fn components(&self) -> &[Jet] {
        &self.components
    }

    /// A germ is regular when `ν'(0) ≠ 0`, i.e. some component has a nonzero
    /// linear coefficient.
    pub fn is_regular(&self) -> bool {
        self.components.iter().any(|c| !c.coefficient(1).is_zero())
    }

    /// Componentwise composition `ν ∘ φ`, truncated to the common order.
    /// `φ` must vanish at the origin.
    pub fn reparameterize(&self, phi: &Jet) -> Result<CurveGerm> {
        if !phi.constant_term().is_zero() {
            return Err(Error::InvalidArgument(
                "reparameterization must fix the origin (φ(0) = 0)".into(),
            ));
        }
        let components = self
            .components
            .iter()
            .map(|c| c.compose(phi))
            .collect::<Result<Vec<_>>>()?;
        CurveGerm::new(components)
    }
}

/// The `k`-jet of `t ↦ f(ν(t))`, computed exactly and truncated at the germ
/// order. The variable count of `f` must match the ambient dimension of `ν`.
pub fn compose_germ(f: &Poly, nu: &CurveGerm) -> Result<Jet> {
    if f.nvars() != nu.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "polynomial in {} variables composed with a germ in dimension {}",
            f.nvars(),
            nu.ambient_dim()
        )));
    }
    let order = nu.order();
    let mut acc = Jet::zero(order);
    for (index, coeff) in f.terms() {
        // Each component vanishes at 0, so a monomial of total degree above
        // the jet order contributes nothing.
        if index.degree() as usize > order {
            continue;
        }
        let mut term = Jet::constant(order, coeff.clone());
        for (var, &e) in index.exponents().iter().enumerate() {
            if e > 0 {
                term = term.mul(&nu.component(var).pow(e));
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}
