//! Plücker coordinates of monomial spans and monomial pencils.
//!
//! The monomial basis of degree-`delta` forms is indexed by multi-indices in
//! ascending lexicographic order, and a basis of the exterior power is given
//! by strictly increasing tuples of multi-indices. The curves considered
//! here wedge `k` fixed monomials with a pencil `t0·z^A + t1·z^B`, so their
//! Plücker image has at most two nonzero coordinates, each a linear form in
//! `(t0, t1)`; all signs are computed from the sorting permutation, never
//! assumed.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::multiindex::{binomial, compositions, MultiIndex};
use crate::rational::Rational;

/// Default cap on enumerated multi-indices.
pub const DEFAULT_INDEX_CAP: usize = 1_000_000;

/// All exponent vectors of length `ambient + 1` and total degree `delta`,
/// strictly increasing in lexicographic order. `ambient` is the projective
/// dimension, so the list has `C(ambient + delta, delta)` entries.
pub fn enumerate_multiindices(ambient: usize, delta: u32, cap: usize) -> Result<Vec<MultiIndex>> {
    let count = binomial((ambient as u64) + delta as u64, delta as u64);
    if count > BigInt::from(cap) {
        return Err(Error::ScaleGuard(format!(
            "{count} multi-indices exceed the cap of {cap}"
        )));
    }
    Ok(compositions(ambient + 1, delta))
}

/// Number of degree-`delta` multi-indices supported on `support` fixed
/// coordinates: `C(support - 1 + delta, delta)`.
pub fn count_supported(support: u64, delta: u64) -> BigInt {
    assert!(support >= 1, "support needs at least one coordinate");
    binomial(support - 1 + delta, delta)
}

/// A linear form `t0_coeff · t0 + t1_coeff · t1` on the pencil parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub t0: Rational,
    pub t1: Rational,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm {
            t0: Rational::zero(),
            t1: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t0.is_zero() && self.t1.is_zero()
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm {
            t0: &self.t0 + &other.t0,
            t1: &self.t1 + &other.t1,
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.t0.is_zero(), self.t1.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}*t0", self.t0),
            (true, false) => write!(f, "{}*t1", self.t1),
            (false, false) => write!(f, "{}*t0 + {}*t1", self.t0, self.t1),
        }
    }
}

/// Plücker coordinates of a pencil curve: a map from strictly increasing
/// `(k+1)`-tuples of multi-indices to linear forms in `(t0, t1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerVector {
    k: usize,
    coords: BTreeMap<Vec<MultiIndex>, LinearForm>,
}

impl PlueckerVector {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Vec<MultiIndex>, &LinearForm)> {
        self.coords.iter()
    }

    pub fn num_nonzero(&self) -> usize {
        self.coords.len()
    }

    fn insert(&mut self, key: Vec<MultiIndex>, form: LinearForm) {
        debug_assert!(key.windows(2).all(|w| w[0] < w[1]));
        let entry = self.coords.entry(key).or_insert_with(LinearForm::zero);
        *entry = entry.add(&form);
        if entry.is_zero() {
            // re-fetch to remove; avoid holding the borrow
        }
        self.coords.retain(|_, v| !v.is_zero());
    }
}

/// Sorts the tuple and returns the permutation sign; `None` when two entries
/// coincide (the wedge vanishes).
pub fn sort_with_sign(mut tuple: Vec<MultiIndex>) -> Option<(Vec<MultiIndex>, i8)> {
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if tuple.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((tuple, sign))
    }
}

/// A rational curve in the Grassmannian spanned by `k` fixed monomials and
/// one monomial pencil `t0·z^A + t1·z^B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    fixed: Vec<MultiIndex>,
    pencil: (MultiIndex, MultiIndex),
}

impl CurveSpec {
    pub fn new(fixed: Vec<MultiIndex>, pencil: (MultiIndex, MultiIndex)) -> Result<Self> {
        let (a, b) = &pencil;
        let len = a.len();
        if b.len() != len || fixed.iter().any(|f| f.len() != len) {
            return Err(Error::DimensionMismatch(
                "all multi-indices must share one ambient length".into(),
            ));
        }
        if a == b {
            return Err(Error::InvalidArgument(
                "pencil endpoints must be distinct monomials".into(),
            ));
        }
        for (i, f) in fixed.iter().enumerate() {
            if f == a || f == b {
                return Err(Error::InvalidArgument(format!(
                    "fixed monomial {i} coincides with a pencil endpoint"
                )));
            }
            if fixed[..i].contains(f) {
                return Err(Error::InvalidArgument(format!(
                    "fixed monomial {i} is repeated"
                )));
            }
        }
        Ok(CurveSpec { fixed, pencil })
    }

    pub fn fixed(&self) -> &[MultiIndex] {
        &self.fixed
    }

    pub fn pencil(&self) -> (&MultiIndex, &MultiIndex) {
        (&self.pencil.0, &self.pencil.1)
    }

    /// `k + 1` is the number of wedged vectors.
    pub fn k(&self) -> usize {
        self.fixed.len()
    }
}

/// Expands `z^{F_1} ∧ ... ∧ z^{F_k} ∧ (t0·z^A + t1·z^B)` in the sorted
/// Plücker basis. The result has at most two nonzero coordinates, one
/// carrying `t0` and one carrying `t1`, with signs given by the sorting
/// permutations.
pub fn pluecker_of_curve(spec: &CurveSpec) -> PlueckerVector {
    let mut v = PlueckerVector {
        k: spec.k(),
        coords: BTreeMap::new(),
    };
    let (a, b) = spec.pencil();
    for (endpoint, is_t0) in [(a, true), (b, false)] {
        let mut tuple = spec.fixed().to_vec();
        tuple.push(endpoint.clone());
        if let Some((sorted, sign)) = sort_with_sign(tuple) {
            let coeff = Rational::from_int(sign as i64);
            let form = if is_t0 {
                LinearForm {
                    t0: coeff,
                    t1: Rational::zero(),
                }
            } else {
                LinearForm {
                    t0: Rational::zero(),
                    t1: coeff,
                }
            };
            v.insert(sorted, form);
        }
    }
    v
}

/// True exactly when the vector has two nonzero coordinates, one a nonzero
/// multiple of `t0` alone and the other of `t1` alone; then
/// `[t0, t1] ↦ v` is a linear embedding of the projective line and the
/// curve has degree 1 under the Plücker line bundle.
pub fn verify_degree_one(v: &PlueckerVector) -> bool {
    if v.num_nonzero() != 2 {
        return false;
    }
    let forms: Vec<&LinearForm> = v.coords().map(|(_, f)| f).collect();
    let pure_t0 = |f: &LinearForm| !f.t0.is_zero() && f.t1.is_zero();
    let pure_t1 = |f: &LinearForm| f.t0.is_zero() && !f.t1.is_zero();
    (pure_t0(forms[0]) && pure_t1(forms[1])) || (pure_t1(forms[0]) && pure_t0(forms[1]))
}

/// The standard degree-1 pencil in the Grassmannian of `(k+1)`-planes of
/// degree-`delta` forms on projective `ambient`-space with `k + 1 = ambient`:
/// fixed monomials `z_1^δ, ..., z_{N-1}^δ` and pencil `t0·z_N^δ + t1·z_0^δ`.
pub fn coordinate_pencil_spec(ambient: usize, delta: u32) -> Result<CurveSpec> {
    if ambient < 1 {
        return Err(Error::InvalidArgument(
            "ambient projective dimension must be at least 1".into(),
        ));
    }
    let len = ambient + 1;
    let fixed = (1..ambient)
        .map(|i| MultiIndex::single(len, i, delta))
        .collect();
    let a = MultiIndex::single(len, ambient, delta);
    let b = MultiIndex::single(len, 0, delta);
    CurveSpec::new(fixed, (a, b))
}

/// Per-factor degrees of the product-Grassmannian curve whose factor
/// `pencil_factor` carries the pencil `t0·z_i^{δ_i} + t1·z_0^{δ_i}` and
/// whose other factors are constant monomial spans. Constant factors have
/// degree 0; the pencil factor is verified to have degree 1, so pairing with
/// a product line bundle of multidegree `a` gives `a[pencil_factor]`.
pub fn product_curve_degrees(
    factors: usize,
    k: usize,
    deltas: &[u32],
    pencil_factor: usize,
) -> Result<Vec<u32>> {
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
    let ambient = factors * (k + 1);
    let len = ambient + 1;
    let mut degrees = Vec::with_capacity(factors);
    for j in 1..=factors {
        let delta = deltas[j - 1];
        // slots of factor j: z_{a·c + j} for a = 0..=k
        let slots: Vec<usize> = (0..=k).map(|a| a * factors + j).collect();
        if j == pencil_factor {
            let fixed = slots[1..]
                .iter()
                .map(|&s| MultiIndex::single(len, s, delta))
                .collect();
            let a = MultiIndex::single(len, slots[0], delta);
            let b = MultiIndex::single(len, 0, delta);
            let spec = CurveSpec::new(fixed, (a, b))?;
            if !verify_degree_one(&pluecker_of_curve(&spec)) {
                return Err(Error::InvalidArgument(
                    "pencil factor failed the degree-1 verification".into(),
                ));
            }
            degrees.push(1);
        } else {
            // distinct coordinate monomials wedge to a single basis vector,
            // a constant map of degree 0
            debug_assert!(
                slots
                    .iter()
                    .collect::<std::collections::BTreeSet<_>>()
                    .len()
                    == slots.len()
            );
            degrees.push(0);
        }
    }
    Ok(degrees)
}

/// Pairing of a multidegree with per-factor curve degrees.
pub fn line_bundle_degree(multidegree: &[i64], degrees: &[u32]) -> i64 {
    multidegree
        .iter()
        .zip(degrees)
        .map(|(a, d)| a * (*d as i64))
        .sum()
}
