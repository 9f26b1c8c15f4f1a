//! Exact-arithmetic toolkit for jet differentials and effective degree
//! bounds.
//!
//! The crate provides, entirely over arbitrary-precision rationals:
//!
//! - sparse multivariate polynomials, truncated jets, and curve germs
//!   ([`poly`], [`jet`], [`germ`]);
//! - the Wronskian operator evaluated on jets of curves, with executable
//!   checks of its vanishing, multilinearity, common-factor, and
//!   reparameterization-weight identities ([`wronskian`]);
//! - Plücker coordinates of monomial-span pencils in a Grassmannian and
//!   degree verification for the associated rational curves ([`grassmann`]);
//! - a desk-scale Buchberger engine and local intersection multiplicities
//!   via standard-monomial counts ([`groebner`], [`intersect`]);
//! - closed-form effective degree bounds with integer feasibility witnesses
//!   and condition predicates ([`bounds`]);
//! - machine-readable run reports for the `jetbounds` CLI ([`report`]).
//!
//! No floating point is used anywhere. Coefficients are rationals rather
//! than complex numbers: every identity the crate checks is polynomial in
//! the coefficients, so exact verification over the rationals certifies the
//! complex-coefficient statement.

pub mod bounds;
pub mod error;
pub mod germ;
pub mod grassmann;
pub mod groebner;
pub mod intersect;
pub mod interval;
pub mod jet;
pub mod multiindex;
pub mod poly;
pub mod random;
pub mod rational;
pub mod report;
pub mod runner;
pub mod wronskian;

pub use error::{Error, Result};
pub use germ::{compose_germ, CurveGerm};
pub use jet::Jet;
pub use multiindex::{binomial, MultiIndex};
pub use poly::Poly;
pub use rational::Rational;
