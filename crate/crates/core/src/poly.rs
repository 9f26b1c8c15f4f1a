//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`MultiIndex`], so a polynomial is
//! always in canonical form: zero coefficients are never stored and equality
//! is map equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(MultiIndex::zero(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    /// The single variable `z_var`.
    pub fn variable(nvars: usize, var: usize) -> Self {
        Poly::monomial(nvars, MultiIndex::single(nvars, var, 1), Rational::one())
    }

    pub fn monomial(nvars: usize, index: MultiIndex, coeff: Rational) -> Self {
        assert_eq!(index.len(), nvars, "exponent vector length mismatch");
        let mut p = Poly::zero(nvars);
        p.add_term(index, coeff);
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (index, coeff) in terms {
            assert_eq!(index.len(), nvars, "exponent vector length mismatch");
            p.add_term(index, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &MultiIndex) -> Rational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&MultiIndex::zero(self.nvars))
    }

    /// Max total degree over stored terms; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// True when every monomial has total degree at least `q`, i.e. the
    /// polynomial vanishes to order `q` at the origin.
    pub fn vanishes_to_order(&self, q: u32) -> bool {
        self.terms.keys().all(|i| i.degree() >= q)
    }

    fn add_term(&mut self, index: MultiIndex, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(index);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (i, c) in self.terms() {
            out.terms.insert(i.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out.add_term(i.mul(j), a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (i, a) in self.terms() {
            out.terms.insert(i.clone(), a * c);
        }
        out
    }

    /// Multiplies by the single term `coeff * z^index`.
    pub fn mul_term(&self, index: &MultiIndex, coeff: &Rational) -> Poly {
        if coeff.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (i, a) in self.terms() {
            out.terms.insert(i.mul(index), a * coeff);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point length mismatch");
        let mut acc = Rational::zero();
        for (i, c) in self.terms() {
            let mut term = c.clone();
            for (var, &e) in i.exponents().iter().enumerate() {
                if e > 0 {
                    term = term * point[var].pow(e);
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitutes `subs[v]` for variable `v`. Every substituted polynomial
    /// must share the output variable count.
    pub fn substitute(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.nvars, "one substitution per variable");
        let out_vars = subs.first().map_or(self.nvars, Poly::nvars);
        let mut acc = Poly::zero(out_vars);
        for (i, c) in self.terms() {
            let mut term = Poly::constant(out_vars, c.clone());
            for (var, &e) in i.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&subs[var].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Translates the origin to `point`: substitutes `z_v -> z_v + point[v]`.
    pub fn shift(&self, point: &[Rational]) -> Poly {
        assert_eq!(point.len(), self.nvars);
        let subs: Vec<Poly> = (0..self.nvars)
            .map(|v| {
                Poly::variable(self.nvars, v).add(&Poly::constant(self.nvars, point[v].clone()))
            })
            .collect();
        self.substitute(&subs)
    }

    /// Replaces variable `var` by `value`, keeping the variable count.
    pub fn substitute_var(&self, var: usize, value: &Poly) -> Poly {
        assert_eq!(value.nvars(), self.nvars);
        let subs: Vec<Poly> = (0..self.nvars)
            .map(|v| {
                if v == var {
                    value.clone()
                } else {
                    Poly::variable(self.nvars, v)
                }
            })
            .collect();
        self.substitute(&subs)
    }

    /// True when variable `var` occurs in some term.
    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|i| i.exponent(var) > 0)
    }

    /// Drops an unused variable coordinate, shrinking `nvars` by one.
    pub fn drop_var(&self, var: usize) -> Result<Poly> {
        if self.uses_var(var) {
            return Err(Error::InvalidArgument(format!(
                "variable {var} still occurs; cannot drop it"
            )));
        }
        let mut out = Poly::zero(self.nvars - 1);
        for (i, c) in self.terms() {
            out.terms.insert(i.remove_var(var), c.clone());
        }
        Ok(out)
    }

    /// Renders with the given variable names (falls back to `z0, z1, ...`).
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.terms().rev() {
            let mut factors = Vec::new();
            for (var, &e) in i.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = names.get(var).cloned().unwrap_or_else(|| format!("z{var}"));
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            let body = factors.join("*");
            let part = if body.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                body
            } else if (-c).is_one() {
                format!("-{body}")
            } else {
                format!("{c}*{body}")
            };
            parts.push(part);
        }
        let mut out = String::new();
        for (idx, p) in parts.iter().enumerate() {
            if idx == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}
