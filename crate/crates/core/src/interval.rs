//! Rational interval arithmetic with a certified natural logarithm.
//!
//! Used to evaluate the one prior-bound formula that is not an integer
//! expression. Endpoints are exact rationals; `ln` is enclosed by a partial
//! sum of `2·atanh(y)` with an explicit rational tail bound, so an interval
//! is a proof that the true value lies inside it.

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "inverted interval");
        RationalInterval { lo, hi }
    }

    pub fn point(r: Rational) -> Self {
        RationalInterval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &RationalInterval) -> RationalInterval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().cloned().expect("nonempty");
        let hi = candidates.iter().max().cloned().expect("nonempty");
        RationalInterval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> RationalInterval {
        if c.is_negative() {
            RationalInterval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            RationalInterval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    pub fn pow(&self, e: u32) -> RationalInterval {
        let mut out = RationalInterval::point(Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    /// The common floor of both endpoints, when they agree.
    pub fn floor_certified(&self) -> Option<BigInt> {
        let lo = self.lo.floor();
        let hi = self.hi.floor();
        if lo == hi {
            Some(lo)
        } else {
            None
        }
    }

    /// Widens to the enclosing interval with denominators dividing `scale`,
    /// trading a sliver of width for short exact endpoint strings. The
    /// result still contains the original interval, so it remains a valid
    /// certificate.
    pub fn round_outward(&self, scale: u64) -> RationalInterval {
        let s = Rational::from_bigint(BigInt::from(scale));
        let lo = Rational::new((&self.lo * &s).floor(), BigInt::from(scale));
        let hi_scaled = &self.hi * &s;
        let hi_ceil = -((-hi_scaled).floor());
        let hi = Rational::new(hi_ceil, BigInt::from(scale));
        RationalInterval::new(lo, hi)
    }
}

/// Enclosure of `2·atanh(y)` for `0 <= y < 1` by `terms` series terms plus a
/// tail bound.
fn atanh_twice(y: &Rational, terms: usize) -> RationalInterval {
    debug_assert!(!y.is_negative());
    let y2 = y * y;
    let mut partial = Rational::zero();
    let mut ypow = y.clone(); // y^{2j+1}
    for j in 0..terms {
        let denom = Rational::from_int((2 * j + 1) as i64);
        partial = partial + &ypow / &denom;
        ypow = &ypow * &y2;
    }
    let two = Rational::from_int(2);
    let lo = &two * &partial;
    // tail: 2 * y^{2T+1} / ((2T+1) * (1 - y^2))
    let tail_denom = Rational::from_int((2 * terms + 1) as i64) * (Rational::one() - y2);
    let tail = &two * &(&ypow / &tail_denom);
    RationalInterval::new(lo.clone(), lo + tail)
}

/// Enclosure of `ln 2 = 2·atanh(1/3)`.
fn ln_two(terms: usize) -> RationalInterval {
    atanh_twice(&Rational::from_integers(1, 3), terms)
}

/// Certified enclosure of `ln x` for a positive rational `x`.
///
/// Reduces `x = m · 2^e` with `m` in `[1, 2)`, then uses
/// `ln m = 2·atanh((m-1)/(m+1))` with `(m-1)/(m+1) <= 1/3`.
pub fn ln_interval(x: &Rational, terms: usize) -> Result<RationalInterval> {
    if x.is_zero() || x.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "ln requires a positive argument, got {x}"
        )));
    }
    let two = Rational::from_int(2);
    let mut e: i64 = 0;
    let mut m = x.clone();
    while m >= two {
        m = m / two.clone();
        e += 1;
    }
    while m < Rational::one() {
        m = m * two.clone();
        e -= 1;
    }
    let y = (&m - &Rational::one()) / (&m + &Rational::one());
    let ln_m = atanh_twice(&y, terms);
    if e == 0 {
        return Ok(ln_m);
    }
    let scaled = ln_two(terms).scale(&Rational::from_int(e));
    Ok(scaled.add(&ln_m))
}

/// Monotone image of an interval with positive lower endpoint under `ln`.
pub fn ln_interval_of(iv: &RationalInterval, terms: usize) -> Result<RationalInterval> {
    let lo = ln_interval(iv.lo(), terms)?;
    let hi = ln_interval(iv.hi(), terms)?;
    Ok(RationalInterval::new(lo.lo().clone(), hi.hi().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(iv: &RationalInterval) -> f64 {
        let num = |r: &Rational| r.to_f64_approx().unwrap();
        (num(iv.lo()) + num(iv.hi())) / 2.0
    }

    #[test]
    fn ln_two_matches_float() {
        let iv = ln_two(24);
        assert!((approx(&iv) - std::f64::consts::LN_2).abs() < 1e-12);
        assert!(iv.width() < Rational::from_integers(1, 1_000_000_000));
    }

    #[test]
    fn ln_of_various_rationals_matches_float() {
        for (num, den) in [(48i64, 1i64), (7, 2), (1, 5), (1000, 7)] {
            let x = Rational::from_integers(num, den);
            let iv = ln_interval(&x, 32).unwrap();
            let expect = ((num as f64) / (den as f64)).ln();
            assert!(
                (approx(&iv) - expect).abs() < 1e-10,
                "ln({num}/{den}): got {} want {expect}",
                approx(&iv)
            );
            assert!(iv.lo() <= iv.hi());
        }
    }

    #[test]
    fn ln_rejects_nonpositive() {
        assert!(ln_interval(&Rational::zero(), 8).is_err());
        assert!(ln_interval(&Rational::from_int(-3), 8).is_err());
    }

    #[test]
    fn interval_products_respect_signs() {
        let a = RationalInterval::new(Rational::from_int(-2), Rational::from_int(3));
        let b = RationalInterval::new(Rational::from_int(-5), Rational::from_int(1));
        let p = a.mul(&b);
        assert_eq!(p.lo(), &Rational::from_int(-15));
        assert_eq!(p.hi(), &Rational::from_int(10));
    }

    #[test]
    fn outward_rounding_encloses_and_shortens() {
        let iv = RationalInterval::new(
            Rational::from_integers(1_234_567_891, 999_999_937),
            Rational::from_integers(1_234_567_892, 999_999_937),
        );
        let rounded = iv.round_outward(1000);
        assert!(rounded.lo() <= iv.lo());
        assert!(rounded.hi() >= iv.hi());
        assert!(rounded.width() <= iv.width() + Rational::from_integers(2, 1000));
        assert!(rounded.lo().denominator() <= &BigInt::from(1000));
    }

    #[test]
    fn floor_certification() {
        let tight = RationalInterval::new(
            Rational::from_integers(89_001, 1000),
            Rational::from_integers(89_900, 1000),
        );
        assert_eq!(tight.floor_certified(), Some(BigInt::from(89)));
        let straddling = RationalInterval::new(
            Rational::from_integers(89_900, 1000),
            Rational::from_integers(90_100, 1000),
        );
        assert_eq!(straddling.floor_certified(), None);
    }
}
