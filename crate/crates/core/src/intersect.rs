//! Local intersection multiplicities of zero-dimensional systems.
//!
//! The multiplicity at a point is the length of the local ring there,
//! computed as a quotient-ring dimension after translating the point to the
//! origin and eliminating generators that are linear in some variable. The
//! elimination is an isomorphism of local rings, and a nilpotency check on
//! the remaining variables certifies that the origin is the only solution
//! left, so the standard-monomial count is exactly the local multiplicity.
//!
//! On top of the generic machinery the module builds the fiber systems of
//! the pencil curves from [`crate::grassmann`] intersected with a coordinate
//! hyperplane, in affine charts, and verifies their closed-form
//! multiplicities `δ^{N-1}` (single Grassmannian) and
//! `(∏ δ_j^{k+1}) / δ_i` (product of Grassmannians).

use num::bigint::BigInt;
use num::One;

use crate::error::{Error, Result};
use crate::groebner::{
    groebner_basis_with, normal_form, quotient_dimension_with, standard_monomials, GroebnerCaps,
    MonomialOrder, PolySystem,
};
use crate::multiindex::MultiIndex;
use crate::poly::Poly;
use crate::rational::Rational;

/// Multiplicity of a system at one of its solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityResult {
    pub point: Vec<Rational>,
    pub multiplicity: usize,
    /// Count of standard monomials retained for audit; always equals the
    /// multiplicity.
    pub standard_monomials: usize,
}

/// Finds a generator of the shape `c·x_v + h` with `c` a nonzero constant
/// and `h` free of `x_v`; returns `(generator index, v, replacement -h/c)`.
fn find_linear_pivot(gens: &[Poly], nvars: usize) -> Option<(usize, usize, Poly)> {
    for (gi, g) in gens.iter().enumerate() {
        for v in 0..nvars {
            let linear = MultiIndex::single(nvars, v, 1);
            let c = g.coefficient(&linear);
            if c.is_zero() {
                continue;
            }
            // every other term must avoid x_v
            let pure = g.terms().all(|(i, _)| i == &linear || i.exponent(v) == 0);
            if !pure {
                continue;
            }
            let h = g.sub(&Poly::monomial(nvars, linear, c.clone()));
            let replacement = h.scale(&(&-Rational::one() / &c));
            return Some((gi, v, replacement));
        }
    }
    None
}

/// Local intersection multiplicity of `sys` at `point`.
///
/// The point must solve every generator exactly. After translation and
/// linear elimination the remaining system must be zero-dimensional with the
/// origin as its only solution; otherwise the computation errors out rather
/// than returning a misleading count.
pub fn local_multiplicity(sys: &PolySystem, point: &[Rational]) -> Result<MultiplicityResult> {
    local_multiplicity_with(sys, point, &GroebnerCaps::default())
}

pub fn local_multiplicity_with(
    sys: &PolySystem,
    point: &[Rational],
    caps: &GroebnerCaps,
) -> Result<MultiplicityResult> {
    if point.len() != sys.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "point has {} coordinates for {} variables",
            point.len(),
            sys.nvars()
        )));
    }
    for g in sys.generators() {
        let v = g.eval(point);
        if !v.is_zero() {
            return Err(Error::PointNotSolution(
                g.display_with(sys.vars()),
                v.to_string(),
            ));
        }
    }

    // translate the point to the origin
    let mut gens: Vec<Poly> = sys
        .generators()
        .iter()
        .map(|g| g.shift(point))
        .filter(|g| !g.is_zero())
        .collect();
    let nvars = sys.nvars();
    let mut eliminated = vec![false; nvars];

    // substitute away generators linear in some variable; each step is a
    // local coordinate change fixing the origin
    while let Some((gi, v, replacement)) = find_linear_pivot(&gens, nvars) {
        gens.remove(gi);
        gens = gens
            .iter()
            .map(|g| g.substitute_var(v, &replacement))
            .filter(|g| !g.is_zero())
            .collect();
        eliminated[v] = true;
        debug_assert!(gens.iter().all(|g| g.constant_term().is_zero()));
    }

    // drop eliminated coordinates
    let mut remaining_vars: Vec<String> = Vec::new();
    for (v, name) in sys.vars().iter().enumerate() {
        if !eliminated[v] {
            remaining_vars.push(name.clone());
        }
    }
    for v in (0..nvars).rev() {
        if eliminated[v] {
            gens = gens
                .iter()
                .map(|g| g.drop_var(v))
                .collect::<Result<Vec<_>>>()?;
        }
    }

    if remaining_vars.is_empty() {
        // all variables pinned by linear relations: a transverse point
        return Ok(MultiplicityResult {
            point: point.to_vec(),
            multiplicity: 1,
            standard_monomials: 1,
        });
    }
    if gens.is_empty() {
        return Err(Error::OriginNotIsolated(format!(
            "no relations left on {} free variable(s)",
            remaining_vars.len()
        )));
    }

    let local = PolySystem::new(remaining_vars, gens)?;
    let order = MonomialOrder::DegRevLex;
    let gb = groebner_basis_with(&local, order, caps)?;
    let standard = standard_monomials(&gb, order)?;
    let dim = standard.len();

    // Certify the origin is the only solution: each remaining variable must
    // be nilpotent in the quotient, and nilpotency index is at most its
    // dimension.
    for v in 0..local.nvars() {
        let power = Poly::monomial(
            local.nvars(),
            MultiIndex::single(local.nvars(), v, u32::try_from(dim).unwrap_or(u32::MAX)),
            Rational::one(),
        );
        if !normal_form(&power, gb.generators(), order).is_zero() {
            return Err(Error::OriginNotIsolated(format!(
                "variable `{}` is not nilpotent modulo the reduced system",
                local.vars()[v]
            )));
        }
    }

    Ok(MultiplicityResult {
        point: point.to_vec(),
        multiplicity: dim,
        standard_monomials: dim,
    })
}

fn zpow(nvars: usize, var: usize, e: u32) -> Poly {
    Poly::monomial(nvars, MultiIndex::single(nvars, var, e), Rational::one())
}

fn sign_point(delta: u32) -> Rational {
    // (-1)^{δ+1}
    if delta.is_multiple_of(2) {
        Rational::from_int(-1)
    } else {
        Rational::one()
    }
}

/// Fiber system of the degree-1 pencil curve against the hyperplane
/// `z_0 + z_N = 0`, in the affine chart `z_0 = 1`, `t_0 = 1`.
///
/// Variables `(z_1, ..., z_N, t_1)`; generators
/// `z_1^δ, ..., z_{N-1}^δ, z_N^δ + t_1, 1 + z_N`. The expected intersection
/// point is `z = (0, ..., 0, -1)`, `t_1 = (-1)^{δ+1}`.
pub fn pencil_intersection_system(
    ambient: usize,
    delta: u32,
) -> Result<(PolySystem, Vec<Rational>)> {
    if ambient < 2 || delta < 1 {
        return Err(Error::InvalidArgument(
            "the pencil system needs ambient dimension >= 2 and degree >= 1".into(),
        ));
    }
    let nvars = ambient + 1; // z_1..z_N and t_1
    let t = nvars - 1;
    let zn = ambient - 1;
    let mut gens: Vec<Poly> = (0..ambient - 1).map(|i| zpow(nvars, i, delta)).collect();
    gens.push(zpow(nvars, zn, delta).add(&Poly::variable(nvars, t)));
    gens.push(Poly::one(nvars).add(&Poly::variable(nvars, zn)));
    let mut vars: Vec<String> = (1..=ambient).map(|i| format!("z{i}")).collect();
    vars.push("t1".into());
    let mut point = vec![Rational::zero(); nvars];
    point[zn] = Rational::from_int(-1);
    point[t] = sign_point(delta);
    Ok((PolySystem::new(vars, gens)?, point))
}

/// The same fiber in the opposite pencil chart `t_1 = 1`, used to check that
/// the multiplicity does not depend on the chart.
pub fn pencil_intersection_system_alt_chart(
    ambient: usize,
    delta: u32,
) -> Result<(PolySystem, Vec<Rational>)> {
    if ambient < 2 || delta < 1 {
        return Err(Error::InvalidArgument(
            "the pencil system needs ambient dimension >= 2 and degree >= 1".into(),
        ));
    }
    let nvars = ambient + 1;
    let t = nvars - 1;
    let zn = ambient - 1;
    let mut gens: Vec<Poly> = (0..ambient - 1).map(|i| zpow(nvars, i, delta)).collect();
    // t_0 · z_N^δ + 1
    gens.push(
        zpow(nvars, zn, delta)
            .mul(&Poly::variable(nvars, t))
            .add(&Poly::one(nvars)),
    );
    gens.push(Poly::one(nvars).add(&Poly::variable(nvars, zn)));
    let mut vars: Vec<String> = (1..=ambient).map(|i| format!("z{i}")).collect();
    vars.push("t0".into());
    let mut point = vec![Rational::zero(); nvars];
    point[zn] = Rational::from_int(-1);
    point[t] = sign_point(delta);
    Ok((PolySystem::new(vars, gens)?, point))
}

/// One verified multiplicity computation, ready for reporting.
#[derive(Clone, Debug)]
pub struct MultiplicityCheck {
    pub system: PolySystem,
    pub point: Vec<Rational>,
    pub expected: BigInt,
    pub got: BigInt,
    /// The elimination/nilpotency route certified the point is the unique
    /// solution of the system.
    pub unique_point_certified: bool,
}

impl MultiplicityCheck {
    pub fn pass(&self) -> bool {
        self.expected == self.got
    }
}

/// Builds the pencil fiber system and verifies the multiplicity `δ^{N-1}` at
/// the expected unique intersection point.
pub fn verify_pencil_multiplicity(ambient: usize, delta: u32) -> Result<MultiplicityCheck> {
    verify_pencil_multiplicity_with(ambient, delta, &GroebnerCaps::default())
}

pub fn verify_pencil_multiplicity_with(
    ambient: usize,
    delta: u32,
    caps: &GroebnerCaps,
) -> Result<MultiplicityCheck> {
    if ambient > 4 || delta > 6 {
        return Err(Error::ScaleGuard(format!(
            "pencil verification is capped at ambient dimension 4 and degree 6 \
             (requested {ambient}, {delta})"
        )));
    }
    let (sys, point) = pencil_intersection_system(ambient, delta)?;
    let result = local_multiplicity_with(&sys, &point, caps)?;
    let expected = BigInt::from(delta).pow(ambient as u32 - 1);
    Ok(MultiplicityCheck {
        system: sys,
        point,
        expected,
        got: BigInt::from(result.multiplicity),
        unique_point_certified: true,
    })
}

/// Closed-form product multiplicity `(∏_j δ_j^{k+1}) / δ_i`.
pub fn expected_product_multiplicity(k: usize, deltas: &[u32], pencil_factor: usize) -> BigInt {
    let mut acc = BigInt::one();
    for &d in deltas {
        acc *= BigInt::from(d).pow(k as u32 + 1);
    }
    acc / BigInt::from(deltas[pencil_factor - 1])
}

/// Fiber system of the product-Grassmannian curve `C_i` against the
/// hyperplane `z_0 + z_i = 0`, in the chart `z_0 = 1` with the pencil's
/// first coordinate set to 1.
///
/// With `c` factors and `k+1` monomials per factor, `N = c(k+1)`; variables
/// are `(z_1, ..., z_N, t2)`. Factor `j ≠ i` contributes
/// `z_{ac+j}^{δ_j}` for `a = 0..=k`; factor `i` contributes the slots
/// `a = 1..=k` plus the pencil equation `z_i^{δ_i} + t2`, and the divisor
/// adds `1 + z_i`.
pub fn product_intersection_system(
    factors: usize,
    k: usize,
    deltas: &[u32],
    pencil_factor: usize,
) -> Result<(PolySystem, Vec<Rational>)> {
    if deltas.len() != factors {
        return Err(Error::DimensionMismatch(format!(
            "{} degree entries for {factors} factors",
            deltas.len()
        )));
    }
    if pencil_factor < 1 || pencil_factor > factors {
        return Err(Error::InvalidArgument(format!(
            "pencil factor {pencil_factor} out of range 1..={factors}"
        )));
    }
    if deltas.iter().any(|&d| d < 1) {
        return Err(Error::InvalidArgument("degrees must be positive".into()));
    }
    let ambient = factors * (k + 1);
    let nvars = ambient + 1; // z_1..z_N and t2
    let t = nvars - 1;
    let mut gens = Vec::new();
    for j in 1..=factors {
        let delta = deltas[j - 1];
        for a in 0..=k {
            let slot = a * factors + j; // 1-based z index
            let var = slot - 1;
            if j == pencil_factor && a == 0 {
                gens.push(zpow(nvars, var, delta).add(&Poly::variable(nvars, t)));
            } else {
                gens.push(zpow(nvars, var, delta));
            }
        }
    }
    let pencil_var = pencil_factor - 1;
    gens.push(Poly::one(nvars).add(&Poly::variable(nvars, pencil_var)));
    let mut vars: Vec<String> = (1..=ambient).map(|i| format!("z{i}")).collect();
    vars.push("t2".into());
    let mut point = vec![Rational::zero(); nvars];
    point[pencil_var] = Rational::from_int(-1);
    point[t] = sign_point(deltas[pencil_factor - 1]);
    Ok((PolySystem::new(vars, gens)?, point))
}

/// Builds the product fiber system and verifies the multiplicity
/// `(∏ δ_j^{k+1}) / δ_i` at the expected unique intersection point.
pub fn verify_product_multiplicity(
    factors: usize,
    k: usize,
    deltas: &[u32],
    pencil_factor: usize,
) -> Result<MultiplicityCheck> {
    let ambient = factors * (k + 1);
    let caps = GroebnerCaps {
        max_vars: (ambient + 1).max(GroebnerCaps::default().max_vars),
        ..GroebnerCaps::default()
    };
    verify_product_multiplicity_with(factors, k, deltas, pencil_factor, &caps)
}

pub fn verify_product_multiplicity_with(
    factors: usize,
    k: usize,
    deltas: &[u32],
    pencil_factor: usize,
    caps: &GroebnerCaps,
) -> Result<MultiplicityCheck> {
    let ambient = factors * (k + 1);
    if ambient > 5 {
        return Err(Error::ScaleGuard(format!(
            "product verification is capped at ambient dimension 5 (requested {ambient})"
        )));
    }
    let (sys, point) = product_intersection_system(factors, k, deltas, pencil_factor)?;
    let result = local_multiplicity_with(&sys, &point, caps)?;
    Ok(MultiplicityCheck {
        system: sys,
        point,
        expected: expected_product_multiplicity(k, deltas, pencil_factor),
        got: BigInt::from(result.multiplicity),
        unique_point_certified: true,
    })
}

/// Convenience wrapper used by tests and the CLI: quotient dimension of a
/// pure monomial system `{x_1^{a_1}, ..., x_r^{a_r}}`, which must equal the
/// product of the exponents.
pub fn monomial_quotient_dimension(exponents: &[u32]) -> Result<usize> {
    let nvars = exponents.len();
    let gens = exponents
        .iter()
        .enumerate()
        .map(|(v, &e)| zpow(nvars, v, e))
        .collect();
    let sys = PolySystem::with_default_names(nvars, gens)?;
    quotient_dimension_with(&sys, &GroebnerCaps::default())
}
