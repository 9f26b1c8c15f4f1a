//! Closed-form effective degree bounds, feasibility conditions, and integer
//! witness searches.
//!
//! Two bound families are computed exactly as big integers:
//!
//! - hypersurface hyperbolicity in dimension `n`:
//!   `d0 = n^{n+1} (n+1)^{n+2} (n^3 + 2n^2 + 2n - 1) + n^3 + 3n^2 + 3n`,
//!   with witnesses `d = n(n+1)(r+n) + ε`;
//! - ample cotangent bundles of complete intersections in projective
//!   `N`-space: `d0 = 4 c0 (2N-1)^{2c0+1} + 6N - 3` with
//!   `c0 = ⌊(N+1)/2⌋` and witnesses `d_p = δ_p (r+1) + ε_p`.
//!
//! A witness search returns parameters only after re-checking every
//! inequality from scratch, independent of the search path. The bounds are
//! sufficient, not minimal: a witness may exist below `d0`, and reports never
//! claim otherwise.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::{ln_interval, ln_interval_of, RationalInterval};
use crate::multiindex::binomial;
use crate::rational::Rational;

/// `d0` for hyperbolicity of generic degree-`d` hypersurfaces in dimension
/// `n >= 2`.
pub fn kobayashi_degree_bound(n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "the hypersurface bound needs n >= 2, got {n}"
        )));
    }
    let nb = BigInt::from(n);
    let np1 = BigInt::from(n + 1);
    let head = nb.pow(n + 1) * np1.pow(n + 2) * (&nb * &nb * &nb + 2 * &nb * &nb + 2 * &nb - 1);
    let tail = &nb * &nb * &nb + 3 * &nb * &nb + 3 * &nb;
    Ok(head + tail)
}

/// `d0` for ample cotangent bundles of complete intersections in projective
/// `N`-space, `N >= 2`.
pub fn debarre_degree_bound(big_n: u32) -> Result<BigInt> {
    if big_n < 2 {
        return Err(Error::InvalidArgument(format!(
            "the complete-intersection bound needs N >= 2, got {big_n}"
        )));
    }
    let c0 = big_n.div_ceil(2);
    let base = BigInt::from(2 * big_n - 1);
    Ok(4 * BigInt::from(c0) * base.pow(2 * c0 + 1) + 6 * BigInt::from(big_n) - 3)
}

/// Stabilization exponent of the Wronskian ideal chain: 1 when the bundle
/// generates `k`-jets, and `k` when it is merely very ample.
pub fn m_infinity(k: u32, generates_k_jets: bool) -> Result<u32> {
    if k < 1 {
        return Err(Error::InvalidArgument(
            "jet order must be at least 1".into(),
        ));
    }
    Ok(if generates_k_jets { 1 } else { k })
}

/// Jet-generation condition: `(k+1)·n < C(N-n+δ, δ)` and `ε >= m∞`.
pub fn condition_star(
    n: u32,
    big_n: u32,
    k: u32,
    delta: u64,
    epsilon: &BigInt,
    m_inf: &BigInt,
) -> bool {
    let top = big_n as i64 - n as i64 + delta as i64;
    let supported = if top < 0 {
        BigInt::zero()
    } else {
        binomial(top as u64, delta)
    };
    BigInt::from((k as u64 + 1) * n as u64) < supported && epsilon >= m_inf
}

/// Negative-twist condition: `m (k+1) (ε + kδ) < r`, strictly.
pub fn condition_lozenge(m: &BigInt, k: u32, epsilon: &BigInt, delta: u64, r: &BigInt) -> bool {
    &(m * BigInt::from(k as u64 + 1) * (epsilon + BigInt::from(k as u64 * delta))) < r
}

/// Degree floor for the fixed family: `δ >= n²`.
pub fn condition_spade(delta: u64, n: u32) -> bool {
    delta >= (n as u64) * (n as u64)
}

/// Fiber-dimension condition: `δ + 1 > n + (n-1)k`.
pub fn condition_codim(delta: u64, n: u32, k: u32) -> bool {
    delta + 1 > n as u64 + (n as u64 - 1) * k as u64
}

/// Witness parameters for the hypersurface bound with the fixed family
/// `N = n+1`, `k = n`, `δ = n(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KobayashiParams {
    pub n: u32,
    pub big_n: u32,
    pub k: u32,
    pub delta: u64,
    pub epsilon: BigInt,
    pub r: BigInt,
    /// Base-locus exponent `δ^{N-1}`.
    pub base_locus_exponent: BigInt,
    pub d: BigInt,
}

impl KobayashiParams {
    /// Re-checks the decomposition and all four conditions from the raw
    /// inequalities, with no reuse of search state.
    pub fn condition_verdicts(&self) -> BTreeMap<&'static str, bool> {
        let mut out = BTreeMap::new();
        let nb = BigInt::from(self.n);
        let decomposition = {
            let lhs =
                BigInt::from(self.n as u64 * (self.n as u64 + 1)) * (&self.r + &nb) + &self.epsilon;
            lhs == self.d
        };
        let m_inf = BigInt::from(self.k); // very ample only, so m∞ = k
        out.insert("decomposition", decomposition);
        out.insert(
            "star",
            condition_star(
                self.n,
                self.big_n,
                self.k,
                self.delta,
                &self.epsilon,
                &m_inf,
            ),
        );
        out.insert(
            "lozenge",
            condition_lozenge(
                &self.base_locus_exponent,
                self.k,
                &self.epsilon,
                self.delta,
                &self.r,
            ),
        );
        out.insert("spade", condition_spade(self.delta, self.n));
        out.insert("codim", condition_codim(self.delta, self.n, self.k));
        out
    }

    pub fn verify(&self) -> bool {
        self.condition_verdicts().values().all(|&v| v)
    }
}

/// Searches the decomposition `d = n(n+1)(r+n) + ε` with `ε >= n`,
/// `ε ≡ d (mod n(n+1))`, and `r` above the negative-twist bound. Returns the
/// smallest viable `ε`; absence is a value, not an error.
pub fn kobayashi_witness(n: u32, d: &BigInt) -> Result<Option<KobayashiParams>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "witness search needs n >= 2, got {n}"
        )));
    }
    if d < &BigInt::one() {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let base_u = n as u64 * (n as u64 + 1);
    let base = BigInt::from(base_u);
    let delta = base_u;
    let k = n;
    let big_n = n + 1;
    let m = base.pow(n); // δ^{N-1} with N-1 = n
    let nb = BigInt::from(n);
    if d < &nb {
        return Ok(None);
    }
    let mut epsilon = &nb + (d - &nb).mod_floor(&base);
    while &epsilon <= d {
        let r = (d - &epsilon) / &base - &nb;
        if !r.is_positive() {
            break;
        }
        let bound = &m * BigInt::from(k as u64 + 1) * (&epsilon + BigInt::from(k as u64 * delta));
        if r <= bound {
            // r shrinks and the bound grows as ε increases, so no larger ε
            // can succeed either
            break;
        }
        let params = KobayashiParams {
            n,
            big_n,
            k,
            delta,
            epsilon: epsilon.clone(),
            r,
            base_locus_exponent: m.clone(),
            d: d.clone(),
        };
        if params.verify() {
            return Ok(Some(params));
        }
        epsilon += &base;
    }
    Ok(None)
}

/// Per-factor intersection exponents `b_i = (∏_j δ_j²) / δ_i` for the
/// cotangent setting (two-dimensional spans per factor).
pub fn b_vector(deltas: &[u64]) -> Vec<BigInt> {
    let product: BigInt = deltas.iter().map(|&d| BigInt::from(d).pow(2)).product();
    deltas.iter().map(|&d| &product / BigInt::from(d)).collect()
}

/// Nefness margin condition: `2 Σ_p (ε_p + δ_p) b_p < r`, strictly.
pub fn condition_heart(epsilons: &[BigInt], deltas: &[u64], b: &[BigInt], r: &BigInt) -> bool {
    &heart_bound(epsilons, deltas, b) < r
}

/// The left side of the nefness margin: `2 Σ_p (ε_p + δ_p) b_p`.
pub fn heart_bound(epsilons: &[BigInt], deltas: &[u64], b: &[BigInt]) -> BigInt {
    let sum: BigInt = epsilons
        .iter()
        .zip(deltas)
        .zip(b)
        .map(|((e, &dl), bp)| (e + BigInt::from(dl)) * bp)
        .sum();
    2 * sum
}

/// Expanded form of the same margin used by the closed-form corollary:
/// `2c ∏ δ_i² + 2 Σ_i ε_i (∏_j δ_j²)/δ_i`.
pub fn corollary_r_bound(epsilons: &[BigInt], deltas: &[u64]) -> BigInt {
    let c = deltas.len();
    let product: BigInt = deltas.iter().map(|&d| BigInt::from(d).pow(2)).product();
    let sum: BigInt = epsilons
        .iter()
        .zip(deltas)
        .map(|(e, &d)| e * &product / BigInt::from(d))
        .sum();
    2 * BigInt::from(c as u64) * product + 2 * sum
}

/// Exceptional-locus avoidance: `min δ_i + 1 > 2N - 1`.
pub fn condition_diamond(deltas: &[u64], big_n: u32) -> bool {
    match deltas.iter().min() {
        Some(&m) => m + 1 > 2 * big_n as u64 - 1,
        None => false,
    }
}

/// Witness parameters for the complete-intersection bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DebarreParams {
    pub big_n: u32,
    pub c: usize,
    pub c0: u32,
    pub deltas: Vec<u64>,
    pub epsilons: Vec<BigInt>,
    pub r: BigInt,
    pub degrees: Vec<BigInt>,
    pub b: Vec<BigInt>,
    /// Nefness margin `q = r - 2 Σ (ε_p + δ_p) b_p`; positive exactly when
    /// the margin condition holds.
    pub q: BigInt,
}

impl DebarreParams {
    pub fn condition_verdicts(&self) -> BTreeMap<&'static str, bool> {
        let mut out = BTreeMap::new();
        let r1 = &self.r + BigInt::one();
        let decomposition = self
            .degrees
            .iter()
            .zip(&self.deltas)
            .zip(&self.epsilons)
            .all(|((d, &dl), e)| &(BigInt::from(dl) * &r1 + e) == d)
            && self.epsilons.iter().all(|e| e >= &BigInt::one())
            && self
                .deltas
                .iter()
                .all(|&dl| dl >= 2 * self.big_n as u64 - 1);
        out.insert("decomposition", decomposition);
        out.insert(
            "heart",
            condition_heart(&self.epsilons, &self.deltas, &self.b, &self.r),
        );
        out.insert("diamond", condition_diamond(&self.deltas, self.big_n));
        out.insert(
            "margin",
            self.q == &self.r - heart_bound(&self.epsilons, &self.deltas, &self.b)
                && self.q.is_positive(),
        );
        out
    }

    pub fn verify(&self) -> bool {
        self.condition_verdicts().values().all(|&v| v)
    }
}

/// Search strategy knobs for [`debarre_witness`].
#[derive(Clone, Copy, Debug)]
pub struct DebarreSearchOptions {
    /// Also try uniform `δ` above the minimum `2N-1` (off by default; the
    /// closed-form bound uses `δ = 2N-1`).
    pub search_delta_above_min: bool,
    /// How far above `2N-1` to sweep when enabled.
    pub delta_margin: u64,
}

impl Default for DebarreSearchOptions {
    fn default() -> Self {
        DebarreSearchOptions {
            search_delta_above_min: false,
            delta_margin: 8,
        }
    }
}

/// Searches a shared `r` and per-factor `ε_p` with
/// `d_p = δ_p (r+1) + ε_p`, uniform `δ_p = 2N-1` (or a sweep above it on
/// request). `ε_p` is kept in `[1, δ_p]` when possible and widened to
/// `ε_p >= 1` otherwise; for fixed `δ` the largest admissible `r` is the
/// only candidate that can satisfy the strictly antitone margin condition.
pub fn debarre_witness(
    big_n: u32,
    c: usize,
    degrees: &[BigInt],
    options: &DebarreSearchOptions,
) -> Result<Option<DebarreParams>> {
    if big_n < 2 {
        return Err(Error::InvalidArgument(format!(
            "witness search needs N >= 2, got {big_n}"
        )));
    }
    if c < 1 {
        return Err(Error::InvalidArgument(
            "at least one hypersurface factor".into(),
        ));
    }
    if degrees.len() != c {
        return Err(Error::DimensionMismatch(format!(
            "{} degrees for {c} factors",
            degrees.len()
        )));
    }
    if degrees.iter().any(|d| d < &BigInt::one()) {
        return Err(Error::InvalidArgument("degrees must be positive".into()));
    }
    let c0 = big_n.div_ceil(2);
    let delta_min = 2 * big_n as u64 - 1;
    let delta_max = if options.search_delta_above_min {
        delta_min + options.delta_margin
    } else {
        delta_min
    };
    for delta in delta_min..=delta_max {
        let db = BigInt::from(delta);
        // largest r+1 keeping every ε_p >= 1
        let r1 = degrees
            .iter()
            .map(|d| (d - BigInt::one()) / &db)
            .min()
            .expect("c >= 1");
        let r = &r1 - BigInt::one();
        if !r.is_positive() {
            continue;
        }
        let epsilons: Vec<BigInt> = degrees.iter().map(|d| d - &db * &r1).collect();
        let deltas = vec![delta; c];
        let b = b_vector(&deltas);
        let q = &r - heart_bound(&epsilons, &deltas, &b);
        let params = DebarreParams {
            big_n,
            c,
            c0,
            deltas,
            epsilons,
            r,
            degrees: degrees.to_vec(),
            b,
            q,
        };
        if params.verify() {
            return Ok(Some(params));
        }
    }
    Ok(None)
}

/// A floor certified by an enclosing rational interval.
#[derive(Clone, Debug)]
pub struct CertifiedFloor {
    pub floor: BigInt,
    pub interval: RationalInterval,
}

/// Previously published lower bounds for the hypersurface problem, exact
/// where the formula is an integer and floor-certified otherwise.
#[derive(Clone, Debug)]
pub struct PriorBounds {
    /// `2^{(n-1)^5}`.
    pub two_power: BigInt,
    /// `⌊(n^4 / 3) · (n · ln(n · ln(24 n)))^n⌋` with the natural logarithm,
    /// enclosed by exact interval arithmetic.
    pub log_power: CertifiedFloor,
    /// `(5n)^2 · n^n`.
    pub five_n_power: BigInt,
}

/// Evaluates the three prior bounds for `n >= 2`. The logarithmic formula is
/// computed with certified rational intervals refined until the width drops
/// below `1/1000` and the floor is unambiguous.
pub fn prior_bounds(n: u32) -> Result<PriorBounds> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "prior bounds need n >= 2, got {n}"
        )));
    }
    if n > 24 {
        return Err(Error::ScaleGuard(format!(
            "prior bounds are evaluated exactly only up to n = 24, got {n}"
        )));
    }
    let e5 = (n as u64 - 1).pow(5);
    let two_power = BigInt::one() << usize::try_from(e5).expect("guarded exponent");
    let five_n_power = BigInt::from(5 * n as u64).pow(2) * BigInt::from(n).pow(n);

    let width_target = Rational::from_integers(1, 1000);
    let mut log_power = None;
    let rounds = [24usize, 48, 96, 192, 384];
    for (round, &terms) in rounds.iter().enumerate() {
        let ln24n = ln_interval(&Rational::from_int(24 * n as i64), terms)?;
        let inner = ln24n.scale(&Rational::from_int(n as i64)); // n·ln(24n)
        let outer = ln_interval_of(&inner, terms)?; // ln(n·ln(24n))
        let value = outer
            .scale(&Rational::from_int(n as i64))
            .pow(n)
            .scale(&Rational::new(BigInt::from(n).pow(4), BigInt::from(3)))
            .round_outward(1_000_000_000);
        if value.width() <= width_target {
            if let Some(floor) = value.floor_certified() {
                log_power = Some(CertifiedFloor {
                    floor,
                    interval: value,
                });
                break;
            }
        }
        if round + 1 == rounds.len() {
            return Err(Error::PrecisionCap(rounds.len()));
        }
    }
    Ok(PriorBounds {
        two_power,
        log_power: log_power.expect("set before leaving the loop"),
        five_n_power,
    })
}

/// A bound value with per-condition verdicts and an optional verified
/// witness; a witness is attached only when every verdict is true.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub value: BigInt,
    pub conditions: BTreeMap<&'static str, bool>,
    pub witness: Option<WitnessParams>,
}

#[derive(Clone, Debug)]
pub enum WitnessParams {
    Kobayashi(KobayashiParams),
    Debarre(DebarreParams),
}

/// Bound value plus witness search outcome for the hypersurface problem.
pub fn kobayashi_witness_report(n: u32, d: &BigInt) -> Result<BoundReport> {
    let value = kobayashi_degree_bound(n)?;
    let witness = kobayashi_witness(n, d)?;
    let conditions = witness
        .as_ref()
        .map(KobayashiParams::condition_verdicts)
        .unwrap_or_default();
    Ok(BoundReport {
        value,
        conditions,
        witness: witness.map(WitnessParams::Kobayashi),
    })
}

/// Bound value plus witness search outcome for the complete-intersection
/// problem.
pub fn debarre_witness_report(
    big_n: u32,
    c: usize,
    degrees: &[BigInt],
    options: &DebarreSearchOptions,
) -> Result<BoundReport> {
    let value = debarre_degree_bound(big_n)?;
    let witness = debarre_witness(big_n, c, degrees, options)?;
    let conditions = witness
        .as_ref()
        .map(DebarreParams::condition_verdicts)
        .unwrap_or_default();
    Ok(BoundReport {
        value,
        conditions,
        witness: witness.map(WitnessParams::Debarre),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypersurface_bound_values() {
        // independent evaluation: 8·81·19 + 26 and 81·1024·50 + 63
        assert_eq!(
            kobayashi_degree_bound(2).unwrap(),
            BigInt::from(8 * 81 * 19 + 26)
        );
        assert_eq!(
            kobayashi_degree_bound(3).unwrap(),
            BigInt::from(81i64 * 1024 * 50 + 63)
        );
        assert!(kobayashi_degree_bound(1).is_err());
    }

    #[test]
    fn complete_intersection_bound_values() {
        assert_eq!(debarre_degree_bound(2).unwrap(), BigInt::from(4 * 27 + 9));
        assert_eq!(
            debarre_degree_bound(3).unwrap(),
            BigInt::from(8 * 3125 + 15)
        );
        assert_eq!(
            debarre_degree_bound(4).unwrap(),
            BigInt::from(8i64 * 16807 + 21)
        );
        assert!(debarre_degree_bound(1).is_err());
    }

    #[test]
    fn stabilization_exponent() {
        assert_eq!(m_infinity(5, true).unwrap(), 1);
        assert_eq!(m_infinity(5, false).unwrap(), 5);
        assert_eq!(m_infinity(1, false).unwrap(), 1);
        assert!(m_infinity(0, true).is_err());
    }

    #[test]
    fn star_condition_cases() {
        let two = BigInt::from(2);
        // n=2, N=3, k=2, δ=6: 6 < C(7,6) = 7 and ε = 2 >= 2
        assert!(condition_star(2, 3, 2, 6, &two, &two));
        // δ = 1 fails the count inequality: C(2,1) = 2
        assert!(!condition_star(2, 3, 2, 1, &two, &two));
        // ε below m∞
        assert!(!condition_star(2, 3, 2, 6, &BigInt::one(), &two));
    }

    #[test]
    fn strictness_of_the_twist_condition() {
        let m = BigInt::from(36);
        let eps = BigInt::from(2);
        let lhs = &m * BigInt::from(3) * (&eps + BigInt::from(12));
        assert!(!condition_lozenge(&m, 2, &eps, 6, &lhs));
        assert!(condition_lozenge(&m, 2, &eps, 6, &(lhs + 1)));
    }

    #[test]
    fn fixed_family_conditions() {
        assert!(condition_spade(6, 2));
        assert!(!condition_spade(3, 2));
        assert!(condition_codim(6, 2, 2)); // 7 > 4
        assert!(!condition_codim(3, 2, 2)); // 4 > 4 fails
    }

    #[test]
    fn witness_at_the_bound_for_n2() {
        let d = kobayashi_degree_bound(2).unwrap();
        let w = kobayashi_witness(2, &d).unwrap().expect("witness at d0");
        assert_eq!(w.epsilon, BigInt::from(2));
        assert_eq!(w.r, BigInt::from(2054));
        assert!(w.verify());
        // decomposition check by hand: 6·(2054+2) + 2 = 12338
        assert_eq!(BigInt::from(6 * 2056 + 2), d);
        // and the twist bound: 2054 > 108·14 = 1512
        assert!(w.r > BigInt::from(1512));
    }

    #[test]
    fn witness_absent_for_small_degree() {
        assert!(kobayashi_witness(2, &BigInt::from(100)).unwrap().is_none());
        assert!(kobayashi_witness(2, &BigInt::from(1)).unwrap().is_none());
    }

    #[test]
    fn witness_exists_below_the_printed_bound() {
        // the bound is sufficient, not minimal
        let d = BigInt::from(12337);
        assert!(kobayashi_witness(2, &d).unwrap().is_some());
    }

    #[test]
    fn b_vector_and_margin_identity() {
        // both margin forms agree: c = 2, δ = (2,3), ε = (1,1)
        let deltas = [2u64, 3];
        let eps = [BigInt::one(), BigInt::one()];
        let b = b_vector(&deltas);
        assert_eq!(b, vec![BigInt::from(18), BigInt::from(12)]);
        let lhs = heart_bound(&eps, &deltas, &b);
        assert_eq!(lhs, corollary_r_bound(&eps, &deltas));
        // hand value: 2(1+2)·18 + 2(1+3)·12 = 204
        assert_eq!(lhs, BigInt::from(204));
    }

    #[test]
    fn diamond_condition_boundary() {
        assert!(condition_diamond(&[3], 2)); // 4 > 3
        assert!(!condition_diamond(&[4, 9], 3)); // 5 > 5 fails
    }

    #[test]
    fn single_factor_witness_example() {
        let w = debarre_witness(2, 1, &[BigInt::from(117)], &DebarreSearchOptions::default())
            .unwrap()
            .expect("witness at 117");
        assert_eq!(w.deltas, vec![3]);
        assert_eq!(w.epsilons, vec![BigInt::from(3)]);
        assert_eq!(w.r, BigInt::from(37));
        assert!(w.verify());
        // hand check: 3·38 + 3 = 117 and 37 > 2·9 + 2·3·3 = 36
        assert_eq!(BigInt::from(3 * 38 + 3), BigInt::from(117));

        assert!(
            debarre_witness(2, 1, &[BigInt::from(30)], &DebarreSearchOptions::default())
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn uniform_witness_at_the_bound() {
        for big_n in [2u32, 3] {
            let c0 = big_n.div_ceil(2) as usize;
            let d = debarre_degree_bound(big_n).unwrap();
            let degrees = vec![d; c0];
            let w = debarre_witness(big_n, c0, &degrees, &DebarreSearchOptions::default())
                .unwrap()
                .unwrap_or_else(|| panic!("witness at the bound for N = {big_n}"));
            assert!(w.deltas.iter().all(|&dl| dl == 2 * big_n as u64 - 1));
            assert!(w.verify());
        }
    }

    #[test]
    fn prior_bound_integers() {
        let p2 = prior_bounds(2).unwrap();
        assert_eq!(p2.two_power, BigInt::from(2));
        assert_eq!(p2.five_n_power, BigInt::from(400));

        let p3 = prior_bounds(3).unwrap();
        assert_eq!(p3.two_power, BigInt::from(4294967296u64));
        assert_eq!(p3.five_n_power, BigInt::from(225 * 27));
    }

    #[test]
    fn log_prior_bound_is_certified_and_close_to_float() {
        for n in [2u32, 3, 4] {
            let p = prior_bounds(n).unwrap();
            let iv = &p.log_power.interval;
            assert!(iv.width() <= Rational::from_integers(1, 1000));
            // float oracle
            let nf = n as f64;
            let value = nf.powi(4) / 3.0 * (nf * (nf * (24.0 * nf).ln()).ln()).powf(nf);
            let mid = {
                let f = |r: &Rational| r.to_f64_approx().unwrap();
                (f(iv.lo()) + f(iv.hi())) / 2.0
            };
            assert!(
                (mid - value).abs() < 1e-6 * value.max(1.0),
                "n = {n}: certified {mid} vs float {value}"
            );
            assert_eq!(p.log_power.floor, BigInt::from(value.floor() as i64));
        }
    }

    #[test]
    fn bound_monotonicity() {
        for n in 2..12u32 {
            assert!(kobayashi_degree_bound(n).unwrap() < kobayashi_degree_bound(n + 1).unwrap());
            assert!(debarre_degree_bound(n).unwrap() < debarre_degree_bound(n + 1).unwrap());
        }
    }

    #[test]
    fn witness_reports_attach_only_verified_witnesses() {
        let report = kobayashi_witness_report(2, &BigInt::from(12338)).unwrap();
        assert!(report.witness.is_some());
        assert!(report.conditions.values().all(|&v| v));

        let absent = kobayashi_witness_report(2, &BigInt::from(100)).unwrap();
        assert!(absent.witness.is_none());
        assert!(absent.conditions.is_empty());
    }
}
