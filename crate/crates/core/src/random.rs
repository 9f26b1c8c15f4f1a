//! Deterministic seeded generators for test inputs.
//!
//! Randomness is never ambient: callers pass a seed, and every trial draws
//! from its own stream keyed by `(seed, trial index)`, so trial results are
//! reproducible and independent of execution order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::germ::CurveGerm;
use crate::jet::Jet;
use crate::multiindex::compositions_up_to;
use crate::poly::Poly;
use crate::rational::Rational;

/// Constraint on generated polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyConstraint {
    /// No restriction on the support.
    None,
    /// Every monomial has total degree at least `q`, i.e. the polynomial
    /// lies in the `q`-th power of the maximal ideal at the origin.
    InMaximalPower(u32),
}

/// RNG for one trial of a suite: same `(seed, trial)` always yields the same
/// stream.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn small_nonzero_coeff<R: Rng>(rng: &mut R) -> Rational {
    let mut c = 0i64;
    while c == 0 {
        c = rng.random_range(-4..=4);
    }
    Rational::from_int(c)
}

/// Deterministic random polynomial in `nvars` variables of degree at most
/// `max_degree`, never identically zero. With `InMaximalPower(q)` every
/// monomial has degree at least `q`.
pub fn random_poly(
    nvars: usize,
    max_degree: u32,
    seed: u64,
    constraint: PolyConstraint,
) -> Result<Poly> {
    let mut rng = trial_rng(seed, 0);
    random_poly_with(&mut rng, nvars, max_degree, constraint)
}

/// As [`random_poly`] but drawing from a caller-supplied generator.
pub fn random_poly_with<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_degree: u32,
    constraint: PolyConstraint,
) -> Result<Poly> {
    let min_degree = match constraint {
        PolyConstraint::None => 0,
        PolyConstraint::InMaximalPower(q) => q,
    };
    if min_degree > max_degree {
        return Err(Error::UnsatisfiableConstraint(format!(
            "vanishing order {min_degree} cannot hold under degree bound {max_degree}"
        )));
    }
    let candidates: Vec<_> = compositions_up_to(nvars, max_degree)
        .into_iter()
        .filter(|i| i.degree() >= min_degree)
        .collect();
    let mut poly = Poly::zero(nvars);
    for index in &candidates {
        if rng.random_bool(0.5) {
            poly = poly.add(&Poly::monomial(
                nvars,
                index.clone(),
                small_nonzero_coeff(rng),
            ));
        }
    }
    if poly.is_zero() {
        let pick = rng.random_range(0..candidates.len());
        poly = Poly::monomial(nvars, candidates[pick].clone(), small_nonzero_coeff(rng));
    }
    Ok(poly)
}

/// Deterministic random germ of order `k` in dimension `n`. With `regular`
/// set, some component is guaranteed a nonzero linear coefficient.
pub fn random_germ_with<R: Rng>(rng: &mut R, n: usize, k: usize, regular: bool) -> CurveGerm {
    let mut components = Vec::with_capacity(n);
    for _ in 0..n {
        let mut coeffs = vec![Rational::zero()];
        for _ in 0..k {
            coeffs.push(Rational::from_int(rng.random_range(-4..=4)));
        }
        components.push(Jet::from_coeffs(coeffs));
    }
    let mut germ = CurveGerm::new(components).expect("constructed with zero constant terms");
    if regular && !germ.is_regular() && k >= 1 {
        let which = rng.random_range(0..n);
        let mut components = germ.components().to_vec();
        let mut coeffs = components[which].coefficients().to_vec();
        coeffs[1] = small_nonzero_coeff(rng);
        components[which] = Jet::from_coeffs(coeffs);
        germ = CurveGerm::new(components).expect("still vanishes at the origin");
    }
    germ
}

/// Random reparameterization jet `φ` with `φ(0) = 0`; with `unit` set,
/// `φ'(0)` is forced nonzero.
pub fn random_reparam_with<R: Rng>(rng: &mut R, k: usize, unit: bool) -> Jet {
    let mut coeffs = vec![Rational::zero()];
    for i in 0..k {
        if i == 0 && unit {
            coeffs.push(small_nonzero_coeff(rng));
        } else {
            coeffs.push(Rational::from_int(rng.random_range(-4..=4)));
        }
    }
    Jet::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_poly() {
        let a = random_poly(2, 4, 99, PolyConstraint::None).unwrap();
        let b = random_poly(2, 4, 99, PolyConstraint::None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn maximal_power_constraint_forces_degree() {
        for seed in 0..20 {
            let p = random_poly(2, 4, seed, PolyConstraint::InMaximalPower(3)).unwrap();
            assert!(p.vanishes_to_order(3));
            assert!(!p.is_zero());
        }
    }

    #[test]
    fn unsatisfiable_constraint_is_an_error() {
        assert!(random_poly(2, 2, 0, PolyConstraint::InMaximalPower(3)).is_err());
    }

    #[test]
    fn trial_streams_are_independent_of_order() {
        let mut r10 = trial_rng(7, 1);
        let first: u64 = r10.random();
        let mut r0 = trial_rng(7, 0);
        let _: u64 = r0.random();
        let mut r1 = trial_rng(7, 1);
        let again: u64 = r1.random();
        assert_eq!(first, again);
    }

    #[test]
    fn regular_germs_are_regular() {
        for trial in 0..50 {
            let mut rng = trial_rng(3, trial);
            let germ = random_germ_with(&mut rng, 3, 4, true);
            assert!(germ.is_regular());
        }
    }
}
