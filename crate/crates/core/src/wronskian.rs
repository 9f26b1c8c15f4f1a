//! The Wronskian operator evaluated on jets of curves.
//!
//! For germs `f_0, ..., f_k` and a curve germ `ν` through the origin,
//! `W(f_0,...,f_k)(ν)` is the determinant of the `(k+1) x (k+1)` matrix
//! whose `(i, j)` entry is the `i`-th derivative of `f_j ∘ ν` at `t = 0`.
//! Everything here is exact; a value is zero only when it is identically
//! zero as a rational number.
//!
//! The module also packages executable checks of the operator's defining
//! identities: vanishing when `f_0` lies in the `(k+1)`-st power of the
//! maximal ideal, alternation and multilinearity, extraction of a common
//! factor `g(0)^{k+1}`, the reparameterization weight `φ'(0)^{k(k+1)/2}`,
//! and the zero-locus stabilization scan used by the CLI.

use itertools::Itertools;
use rand::Rng;

use crate::error::{Error, Result};
use crate::germ::{compose_germ, CurveGerm};
use crate::jet::Jet;
use crate::multiindex::{binomial, compositions_up_to, MultiIndex};
use crate::poly::Poly;
use crate::random::{
    random_germ_with, random_poly_with, random_reparam_with, trial_rng, PolyConstraint,
};
use crate::rational::Rational;

/// Default cap on the number of monomial subsets a span test may visit.
pub const DEFAULT_SUBSET_CAP: usize = 1_000_000;

/// An exact Wronskian evaluation together with its jet order and weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WronskianValue {
    value: Rational,
    jet_order: usize,
}

impl WronskianValue {
    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn jet_order(&self) -> usize {
        self.jet_order
    }

    /// The reparameterization weight `k(k+1)/2`.
    pub fn weight(&self) -> u64 {
        let k = self.jet_order as u64;
        k * (k + 1) / 2
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

/// The derivative matrix behind the Wronskian: entry `(i, j)` is
/// `d^i (f_j ∘ ν) / dt^i` at `t = 0`.
pub fn wronskian_matrix(fs: &[Poly], nu: &CurveGerm) -> Result<Vec<Vec<Rational>>> {
    if fs.is_empty() {
        return Err(Error::InvalidArgument("empty germ tuple".into()));
    }
    let k = fs.len() - 1;
    if nu.order() < k {
        return Err(Error::DimensionMismatch(format!(
            "germ order {} is below the tuple order {k}",
            nu.order()
        )));
    }
    let mut columns = Vec::with_capacity(fs.len());
    for f in fs {
        let jet = compose_germ(f, nu)?.truncate(k);
        columns.push(jet.derivative_column());
    }
    Ok((0..=k)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect())
}

/// Exact determinant by fraction-preserving Gaussian elimination.
fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut sign_negative = false;
    let mut det = Rational::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Rational::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            sign_negative = !sign_negative;
        }
        let pivot = m[col][col].clone();
        det = det * &pivot;
        let pivot_tail: Vec<Rational> = m[col][col..].to_vec();
        for row in m.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot;
            for (entry, pivot_entry) in row[col..].iter_mut().zip(&pivot_tail) {
                *entry = &*entry - &(&factor * pivot_entry);
            }
        }
    }
    if sign_negative {
        -det
    } else {
        det
    }
}

/// `W(f_0,...,f_k)` evaluated on `ν`, computed exactly.
pub fn wronskian_value(fs: &[Poly], nu: &CurveGerm) -> Result<WronskianValue> {
    let matrix = wronskian_matrix(fs, nu)?;
    Ok(WronskianValue {
        value: determinant(matrix),
        jet_order: fs.len() - 1,
    })
}

/// Pointwise evaluation of the span of all Wronskians of degree-`delta`
/// germ tuples on one jet.
#[derive(Clone, Debug)]
pub struct SpanZeroReport {
    pub jet: CurveGerm,
    /// Whether `ν'(0) ≠ 0`; the zero-locus identification is stated for
    /// regular jets, so reports carry the tag.
    pub regular: bool,
    pub all_vanish: bool,
    /// Monomial subsets with a nonzero Wronskian; empty iff `all_vanish`.
    pub witnesses: Vec<Vec<MultiIndex>>,
}

/// Evaluates the Wronskian on every `(k+1)`-subset of the monomial basis of
/// polynomials of degree at most `delta` in `n` variables. Alternation and
/// multilinearity reduce the pointwise evaluation of the whole span to these
/// subsets.
pub fn span_zero_test(
    n: usize,
    k: usize,
    delta: u32,
    nu: &CurveGerm,
    subset_cap: usize,
) -> Result<SpanZeroReport> {
    if nu.ambient_dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "jet has dimension {}, expected {n}",
            nu.ambient_dim()
        )));
    }
    if nu.order() < k {
        return Err(Error::DimensionMismatch(format!(
            "germ order {} is below the requested jet order {k}",
            nu.order()
        )));
    }
    let basis = compositions_up_to(n, delta);
    let subsets = binomial(basis.len() as u64, (k + 1) as u64);
    if subsets > num::BigInt::from(subset_cap) {
        return Err(Error::ScaleGuard(format!(
            "{subsets} monomial subsets exceed the cap of {subset_cap}"
        )));
    }
    let monomials: Vec<Poly> = basis
        .iter()
        .map(|i| Poly::monomial(n, i.clone(), Rational::one()))
        .collect();
    let mut witnesses = Vec::new();
    for combo in (0..monomials.len()).combinations(k + 1) {
        let tuple: Vec<Poly> = combo.iter().map(|&i| monomials[i].clone()).collect();
        let w = wronskian_value(&tuple, nu)?;
        if !w.is_zero() {
            witnesses.push(combo.iter().map(|&i| basis[i].clone()).collect());
        }
    }
    Ok(SpanZeroReport {
        jet: nu.clone(),
        regular: nu.is_regular(),
        all_vanish: witnesses.is_empty(),
        witnesses,
    })
}

/// `W(g·f_0,...,g·f_k)(ν) = g(0)^{k+1} · W(f_0,...,f_k)(ν)`, checked
/// exactly.
pub fn check_common_factor(g: &Poly, fs: &[Poly], nu: &CurveGerm) -> Result<bool> {
    let scaled: Vec<Poly> = fs.iter().map(|f| g.mul(f)).collect();
    let left = wronskian_value(&scaled, nu)?;
    let right = wronskian_value(fs, nu)?;
    let g0 = g.eval(&vec![Rational::zero(); g.nvars()]);
    let factor = g0.pow(fs.len() as u32);
    Ok(left.value() == &(&factor * right.value()))
}

/// `W(f)(ν∘φ) = φ'(0)^{k(k+1)/2} · W(f)(ν)` for any `φ` with `φ(0) = 0`,
/// checked exactly.
pub fn check_reparameterization_weight(fs: &[Poly], nu: &CurveGerm, phi: &Jet) -> Result<bool> {
    let left = wronskian_value(fs, &nu.reparameterize(phi)?)?;
    let right = wronskian_value(fs, nu)?;
    let weight = right.weight();
    let factor =
        phi.coefficient(1).pow(u32::try_from(weight).map_err(|_| {
            Error::ScaleGuard(format!("weight {weight} exceeds the exponent range"))
        })?);
    Ok(left.value() == &(&factor * right.value()))
}

/// Outcome of a randomized identity suite; the suite passes when no trial
/// failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub trials: u64,
    pub failures: u64,
}

impl SuiteOutcome {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

fn random_tuple<R: rand::Rng>(rng: &mut R, n: usize, k: usize, delta: u32) -> Result<Vec<Poly>> {
    (0..=k)
        .map(|_| random_poly_with(rng, n, delta, PolyConstraint::None))
        .collect()
}

/// Vanishing of the Wronskian whenever `f_0` vanishes to order `k+1` at the
/// origin, over random tuples and random regular germs.
pub fn vanishing_suite(n: usize, k: usize, trials: u64, seed: u64) -> Result<SuiteOutcome> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidArgument(
            "vanishing suite needs n >= 1 and k >= 1".into(),
        ));
    }
    let mut failures = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let f0 = random_poly_with(
            &mut rng,
            n,
            (k + 2) as u32,
            PolyConstraint::InMaximalPower((k + 1) as u32),
        )?;
        let mut fs = vec![f0];
        fs.extend(random_tuple(&mut rng, n, k - 1, (k + 1) as u32)?);
        let nu = random_germ_with(&mut rng, n, k, true);
        if !wronskian_value(&fs, &nu)?.is_zero() {
            failures += 1;
        }
    }
    Ok(SuiteOutcome { trials, failures })
}

/// Per-property failure counts for the alternation/multilinearity suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultilinearOutcome {
    pub trials: u64,
    /// Swapping two slots must negate the value.
    pub swap_failures: u64,
    /// Replacing one slot by `a·f + g` must split as `a·W(..f..) + W(..g..)`.
    pub scale_add_failures: u64,
    /// A linearly dependent tuple must evaluate to zero.
    pub dependent_failures: u64,
}

impl MultilinearOutcome {
    pub fn pass(&self) -> bool {
        self.swap_failures == 0 && self.scale_add_failures == 0 && self.dependent_failures == 0
    }
}

/// Randomized alternation and multilinearity checks, all exact.
pub fn alternating_multilinear_suite(
    n: usize,
    k: usize,
    delta: u32,
    trials: u64,
    seed: u64,
) -> Result<MultilinearOutcome> {
    if trials < 1 {
        return Err(Error::InvalidArgument("at least one trial".into()));
    }
    let mut out = MultilinearOutcome {
        trials,
        swap_failures: 0,
        scale_add_failures: 0,
        dependent_failures: 0,
    };
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let fs = random_tuple(&mut rng, n, k, delta)?;
        let nu = random_germ_with(&mut rng, n, k, true);
        let base = wronskian_value(&fs, &nu)?;

        // (a) alternation under a transposition
        let i = rng.random_range(0..=k);
        let mut j = rng.random_range(0..=k);
        while j == i {
            j = rng.random_range(0..=k);
        }
        let mut swapped = fs.clone();
        swapped.swap(i, j);
        if wronskian_value(&swapped, &nu)?.value() != &-base.value() {
            out.swap_failures += 1;
        }

        // (b) linearity in one slot: f_i -> a·f_i + g
        let a = Rational::from_int(rng.random_range(-4..=4));
        let g = random_poly_with(&mut rng, n, delta, PolyConstraint::None)?;
        let mut scaled = fs.clone();
        scaled[i] = fs[i].scale(&a).add(&g);
        let mut with_g = fs.clone();
        with_g[i] = g;
        let lhs = wronskian_value(&scaled, &nu)?;
        let rhs = &(&a * base.value()) + wronskian_value(&with_g, &nu)?.value();
        if lhs.value() != &rhs {
            out.scale_add_failures += 1;
        }

        // (c) a dependent tuple vanishes: overwrite slot j with a combination
        // of the others
        let mut dependent = fs.clone();
        let mut combo = Poly::zero(n);
        for (slot, f) in fs.iter().enumerate() {
            if slot != j {
                combo = combo.add(&f.scale(&Rational::from_int(rng.random_range(-3..=3))));
            }
        }
        dependent[j] = combo;
        if !wronskian_value(&dependent, &nu)?.is_zero() {
            out.dependent_failures += 1;
        }
    }
    Ok(out)
}

/// Randomized common-factor identity checks.
pub fn common_factor_suite(
    n: usize,
    k: usize,
    delta: u32,
    trials: u64,
    seed: u64,
) -> Result<SuiteOutcome> {
    let mut failures = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let fs = random_tuple(&mut rng, n, k, delta)?;
        let g = random_poly_with(&mut rng, n, delta, PolyConstraint::None)?;
        let nu = random_germ_with(&mut rng, n, k, true);
        if !check_common_factor(&g, &fs, &nu)? {
            failures += 1;
        }
    }
    Ok(SuiteOutcome { trials, failures })
}

/// Randomized reparameterization-weight checks; `φ` ranges over jets with
/// `φ(0) = 0`, including singular ones.
pub fn reparam_weight_suite(
    n: usize,
    k: usize,
    delta: u32,
    trials: u64,
    seed: u64,
) -> Result<SuiteOutcome> {
    let mut failures = 0;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let fs = random_tuple(&mut rng, n, k, delta)?;
        let nu = random_germ_with(&mut rng, n, k, true);
        let phi = random_reparam_with(&mut rng, k, false);
        if !check_reparameterization_weight(&fs, &nu, &phi)? {
            failures += 1;
        }
    }
    Ok(SuiteOutcome { trials, failures })
}

/// One grid point of a stabilization scan.
#[derive(Clone, Debug)]
pub struct StabilizationRecord {
    pub linear: Rational,
    pub quadratic: Rational,
    pub all_vanish: bool,
    /// Expected verdict: the span vanishes exactly when `ν'(0) = 0`.
    pub expected: bool,
}

/// Scan of the span zero-locus over the one-dimensional order-2 jets
/// `ν = a1·t + a2·t²` on an integer grid, for each requested degree bound.
/// The locus must be `{a1 = 0}`, independent of the degree bound.
#[derive(Clone, Debug)]
pub struct StabilizationReport {
    pub delta: u32,
    pub jets_tested: u64,
    pub mismatches: Vec<StabilizationRecord>,
}

impl StabilizationReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn stabilization_scan(
    delta: u32,
    grid_radius: i64,
    subset_cap: usize,
) -> Result<StabilizationReport> {
    let mut jets_tested = 0;
    let mut mismatches = Vec::new();
    for a1 in -grid_radius..=grid_radius {
        for a2 in -grid_radius..=grid_radius {
            let nu = CurveGerm::from_rows(&[vec![a1, a2]])?;
            let report = span_zero_test(1, 2, delta, &nu, subset_cap)?;
            jets_tested += 1;
            let expected = a1 == 0;
            if report.all_vanish != expected {
                mismatches.push(StabilizationRecord {
                    linear: Rational::from_int(a1),
                    quadratic: Rational::from_int(a2),
                    all_vanish: report.all_vanish,
                    expected,
                });
            }
        }
    }
    Ok(StabilizationReport {
        delta,
        jets_tested,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiindex::MultiIndex;

    fn z_power(n: usize, var: usize, e: u32) -> Poly {
        Poly::monomial(n, MultiIndex::single(n, var, e), Rational::one())
    }

    /// Independent oracle: Laplace cofactor expansion along the first row.
    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Rational::zero();
        for (j, entry) in m[0].iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = entry * &cofactor_det(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn identity_tuple_has_unit_wronskian() {
        // (1, z) on ν = t at order 1.
        let fs = vec![Poly::one(1), Poly::variable(1, 0)];
        let nu = CurveGerm::from_rows(&[vec![1]]).unwrap();
        let w = wronskian_value(&fs, &nu).unwrap();
        assert_eq!(w.value(), &Rational::one());
        assert_eq!(w.weight(), 1);
    }

    #[test]
    fn order_two_wronskian_matches_hand_expansion() {
        // W(1, z, z^2) on ν = a1 t + a2 t^2 equals 2 a1^3.
        for (a1, a2) in [(1i64, 0i64), (2, 5), (-3, 7)] {
            let fs = vec![Poly::one(1), Poly::variable(1, 0), z_power(1, 0, 2)];
            let nu = CurveGerm::from_rows(&[vec![a1, a2]]).unwrap();
            let w = wronskian_value(&fs, &nu).unwrap();
            let expect = Rational::from_int(2 * a1 * a1 * a1);
            assert_eq!(w.value(), &expect);
        }
    }

    #[test]
    fn gaussian_determinant_agrees_with_cofactor_oracle() {
        for trial in 0..60 {
            let mut rng = trial_rng(11, trial);
            let n = 1 + (trial as usize % 4);
            let m: Vec<Vec<Rational>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Rational::from_int(rng.random_range(-5..=5)))
                        .collect()
                })
                .collect();
            assert_eq!(determinant(m.clone()), cofactor_det(&m));
        }
    }

    #[test]
    fn vanishing_for_high_order_first_slot() {
        // f0 = z^{k+1} forces W = 0 for any tuple and germ.
        let fs = vec![z_power(1, 0, 3), Poly::one(1), Poly::variable(1, 0)];
        let nu = CurveGerm::from_rows(&[vec![2, -1, 3]]).unwrap();
        assert!(wronskian_value(&fs, &nu).unwrap().is_zero());
    }

    #[test]
    fn vanishing_at_order_one() {
        // k = 1: f0 = z^2 kills the pair Wronskian on any germ.
        for row in [vec![1], vec![3], vec![-2]] {
            let fs = vec![z_power(1, 0, 2), Poly::variable(1, 0)];
            let nu = CurveGerm::from_rows(&[row]).unwrap();
            assert!(wronskian_value(&fs, &nu).unwrap().is_zero());
        }
    }

    #[test]
    fn order_exactly_k_is_a_negative_control() {
        // f0 = z^k does not force vanishing: W(z^2, 1, z) on ν = t is
        // nonzero (the cofactor oracle gives 2).
        let fs = vec![z_power(1, 0, 2), Poly::one(1), Poly::variable(1, 0)];
        let nu = CurveGerm::from_rows(&[vec![1, 0]]).unwrap();
        let matrix = wronskian_matrix(&fs, &nu).unwrap();
        let oracle = cofactor_det(&matrix);
        assert_eq!(oracle, Rational::from_int(2));
        assert_eq!(wronskian_value(&fs, &nu).unwrap().value(), &oracle);
    }

    #[test]
    fn swap_flips_sign() {
        let fs = vec![Poly::variable(1, 0), Poly::one(1)];
        let nu = CurveGerm::from_rows(&[vec![1]]).unwrap();
        let w = wronskian_value(&fs, &nu).unwrap();
        assert_eq!(w.value(), &Rational::from_int(-1));
    }

    #[test]
    fn repeated_entry_vanishes() {
        let fs = vec![Poly::variable(1, 0), Poly::variable(1, 0), z_power(1, 0, 2)];
        let nu = CurveGerm::from_rows(&[vec![1, 1]]).unwrap();
        assert!(wronskian_value(&fs, &nu).unwrap().is_zero());
    }

    #[test]
    fn scaling_one_slot_scales_the_value() {
        let fs = vec![Poly::one(1), Poly::variable(1, 0)];
        let scaled = vec![fs[0].scale(&Rational::from_int(3)), fs[1].clone()];
        let nu = CurveGerm::from_rows(&[vec![1]]).unwrap();
        let w = wronskian_value(&fs, &nu).unwrap();
        let w3 = wronskian_value(&scaled, &nu).unwrap();
        assert_eq!(w3.value(), &(&Rational::from_int(3) * w.value()));
    }

    #[test]
    fn common_factor_hand_example() {
        // g = 1 + z, f = (1, z), ν = t: both sides equal 1.
        let g = Poly::one(1).add(&Poly::variable(1, 0));
        let fs = vec![Poly::one(1), Poly::variable(1, 0)];
        let nu = CurveGerm::from_rows(&[vec![1]]).unwrap();
        assert!(check_common_factor(&g, &fs, &nu).unwrap());

        let scaled: Vec<Poly> = fs.iter().map(|f| g.mul(f)).collect();
        let left = wronskian_value(&scaled, &nu).unwrap();
        assert_eq!(left.value(), &Rational::one());
    }

    #[test]
    fn common_factor_vanishing_at_origin_kills_both_sides() {
        let g = Poly::variable(1, 0);
        let fs = vec![Poly::one(1), Poly::variable(1, 0)];
        let nu = CurveGerm::from_rows(&[vec![1]]).unwrap();
        assert!(check_common_factor(&g, &fs, &nu).unwrap());
        let scaled: Vec<Poly> = fs.iter().map(|f| g.mul(f)).collect();
        assert!(wronskian_value(&scaled, &nu).unwrap().is_zero());
    }

    #[test]
    fn reparameterization_weight_hand_examples() {
        // k = 1, φ = 2t: factor 2^1.
        let fs = vec![Poly::one(1), Poly::variable(1, 0)];
        let nu = CurveGerm::from_rows(&[vec![1]]).unwrap();
        let phi = Jet::from_ints(&[0, 2]);
        assert!(check_reparameterization_weight(&fs, &nu, &phi).unwrap());
        let left = wronskian_value(&fs, &nu.reparameterize(&phi).unwrap()).unwrap();
        assert_eq!(left.value(), &Rational::from_int(2));

        // k = 2, φ = t + t^2: factor 1.
        let fs = vec![Poly::one(1), Poly::variable(1, 0), z_power(1, 0, 2)];
        let nu = CurveGerm::from_rows(&[vec![1, 1]]).unwrap();
        let phi = Jet::from_ints(&[0, 1, 1]);
        assert!(check_reparameterization_weight(&fs, &nu, &phi).unwrap());
        let left = wronskian_value(&fs, &nu.reparameterize(&phi).unwrap()).unwrap();
        let right = wronskian_value(&fs, &nu).unwrap();
        assert_eq!(left.value(), right.value());
    }

    #[test]
    fn span_zero_on_regular_and_singular_jets() {
        // ν = t: the subset {1, z, z^2} evaluates to 2.
        let regular = CurveGerm::from_rows(&[vec![1, 0]]).unwrap();
        let report = span_zero_test(1, 2, 2, &regular, DEFAULT_SUBSET_CAP).unwrap();
        assert!(!report.all_vanish);
        assert!(report.regular);

        // ν = t^2: the first-derivative row vanishes identically.
        let singular = CurveGerm::from_rows(&[vec![0, 1]]).unwrap();
        for delta in [2, 4] {
            let report = span_zero_test(1, 2, delta, &singular, DEFAULT_SUBSET_CAP).unwrap();
            assert!(report.all_vanish, "delta = {delta}");
            assert!(report.witnesses.is_empty());
        }
    }

    #[test]
    fn span_zero_cap_is_enforced() {
        let nu = CurveGerm::from_rows(&[vec![1, 0]]).unwrap();
        let err = span_zero_test(1, 2, 2, &nu, 0).unwrap_err();
        assert!(matches!(err, Error::ScaleGuard(_)));
    }

    #[test]
    fn suites_pass_on_small_samples() {
        assert!(vanishing_suite(2, 3, 25, 7).unwrap().pass());
        assert!(alternating_multilinear_suite(2, 2, 3, 25, 7)
            .unwrap()
            .pass());
        assert!(common_factor_suite(2, 2, 3, 25, 7).unwrap().pass());
        assert!(reparam_weight_suite(1, 3, 3, 25, 7).unwrap().pass());
    }
}
