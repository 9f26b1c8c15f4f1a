//! Desk-scale Buchberger engine over exact rationals.
//!
//! The engine computes reduced Gröbner bases for small zero-dimensional
//! systems (hard caps on variable count and generator degree) and counts
//! standard monomials of the quotient ring. Coefficient arithmetic is exact
//! rational throughout; there are no modular shortcuts.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;
use crate::poly::Poly;
use crate::rational::Rational;

/// Monomial order used for leading terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic with `z0 > z1 > ...`; used for elimination.
    Lex,
    /// Graded reverse lexicographic; the default working order.
    DegRevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        // smaller exponent in the last differing slot wins
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Size guards for the engine.
#[derive(Clone, Copy, Debug)]
pub struct GroebnerCaps {
    pub max_vars: usize,
    pub max_degree: u32,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps {
            max_vars: 6,
            max_degree: 12,
        }
    }
}

/// A polynomial system with named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    vars: Vec<String>,
    generators: Vec<Poly>,
}

impl PolySystem {
    /// Builds a system; zero generators are dropped, and every generator
    /// must use exactly the declared variables.
    pub fn new(vars: Vec<String>, generators: Vec<Poly>) -> Result<Self> {
        let nvars = vars.len();
        let generators: Vec<Poly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "generator over {} variables in a system declaring {nvars}",
                    g.nvars()
                )));
            }
        }
        Ok(PolySystem { vars, generators })
    }

    pub fn with_default_names(nvars: usize, generators: Vec<Poly>) -> Result<Self> {
        let vars = (0..nvars).map(|i| format!("z{}", i + 1)).collect();
        PolySystem::new(vars, generators)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn display_generators(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.display_with(&self.vars))
            .collect()
    }
}

fn leading_term(p: &Poly, order: MonomialOrder) -> (MultiIndex, Rational) {
    debug_assert!(!p.is_zero());
    let (i, c) = p
        .terms()
        .max_by(|(a, _), (b, _)| order.cmp(a, b))
        .expect("nonzero polynomial");
    (i.clone(), c.clone())
}

/// Fully reduces `p` against `basis`: no term of the result is divisible by
/// any basis leading term.
pub fn normal_form(p: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let leads: Vec<(MultiIndex, Rational)> = basis.iter().map(|b| leading_term(b, order)).collect();
    let mut remainder = Poly::zero(p.nvars());
    let mut work = p.clone();
    while !work.is_zero() {
        let (lt, lc) = leading_term(&work, order);
        let mut reduced = false;
        for (b, (bl, bc)) in basis.iter().zip(&leads) {
            if let Some(q) = bl.checked_quotient(&lt) {
                let factor = &lc / bc;
                work = work.sub(&b.mul_term(&q, &factor));
                reduced = true;
                break;
            }
        }
        if !reduced {
            let head = Poly::monomial(p.nvars(), lt.clone(), lc.clone());
            remainder = remainder.add(&head);
            work = work.sub(&head);
        }
    }
    remainder
}

fn s_polynomial(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (fl, fc) = leading_term(f, order);
    let (gl, gc) = leading_term(g, order);
    let lcm = fl.lcm(&gl);
    let fq = fl.checked_quotient(&lcm).expect("lcm divisible by lt");
    let gq = gl.checked_quotient(&lcm).expect("lcm divisible by lt");
    let one = Rational::one();
    f.mul_term(&fq, &(&one / &fc))
        .sub(&g.mul_term(&gq, &(&one / &gc)))
}

fn check_caps(sys: &PolySystem, caps: &GroebnerCaps) -> Result<()> {
    if sys.nvars() > caps.max_vars {
        return Err(Error::ScaleGuard(format!(
            "{} variables exceed the cap of {}",
            sys.nvars(),
            caps.max_vars
        )));
    }
    for g in sys.generators() {
        let d = g.degree().unwrap_or(0);
        if d > caps.max_degree {
            return Err(Error::ScaleGuard(format!(
                "generator degree {d} exceeds the cap of {}",
                caps.max_degree
            )));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by the system, under the
/// given order. The result is canonical: monic generators, fully
/// inter-reduced, sorted by leading monomial, so recomputation returns an
/// equal system.
pub fn groebner_basis(sys: &PolySystem, order: MonomialOrder) -> Result<PolySystem> {
    groebner_basis_with(sys, order, &GroebnerCaps::default())
}

pub fn groebner_basis_with(
    sys: &PolySystem,
    order: MonomialOrder,
    caps: &GroebnerCaps,
) -> Result<PolySystem> {
    if sys.generators().is_empty() {
        return Err(Error::EmptySystem);
    }
    check_caps(sys, caps)?;

    let mut basis: Vec<Poly> = sys.generators().to_vec();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (li, _) = leading_term(&basis[i], order);
        let (lj, _) = leading_term(&basis[j], order);
        // coprime leading monomials never yield a new element
        if li.coprime(&lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let new_index = basis.len();
            for idx in 0..new_index {
                pairs.push((idx, new_index));
            }
            basis.push(r);
        }
    }

    // minimal basis: drop generators whose leading term another one divides
    let leads: Vec<MultiIndex> = basis.iter().map(|b| leading_term(b, order).0).collect();
    let mut keep: Vec<Poly> = Vec::new();
    for (idx, b) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(other, l)| {
            other != idx && l.divides(&leads[idx]) && (l != &leads[idx] || other < idx)
        });
        if !redundant {
            keep.push(b.clone());
        }
    }

    // inter-reduce and normalize to monic
    let mut reduced: Vec<Poly> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Poly> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = normal_form(&keep[i], &others, order);
        if !r.is_zero() {
            let (_, lc) = leading_term(&r, order);
            reduced.push(r.scale(&(&Rational::one() / &lc)));
        }
    }
    reduced.sort_by(|a, b| {
        let (la, _) = leading_term(a, order);
        let (lb, _) = leading_term(b, order);
        order.cmp(&la, &lb)
    });
    PolySystem::new(sys.vars().to_vec(), reduced)
}

/// Leading pure-power exponents per variable; errors when a variable lacks
/// one, which is the zero-dimensionality criterion.
fn pure_power_bounds(gb: &PolySystem, order: MonomialOrder) -> Result<Vec<u32>> {
    let nvars = gb.nvars();
    let leads: Vec<MultiIndex> = gb
        .generators()
        .iter()
        .map(|b| leading_term(b, order).0)
        .collect();
    let mut bounds = vec![None; nvars];
    for l in &leads {
        let support = l.support();
        if support.len() == 1 {
            let v = support[0];
            let e = l.exponent(v);
            bounds[v] = Some(bounds[v].map_or(e, |cur: u32| cur.min(e)));
        }
    }
    bounds
        .into_iter()
        .enumerate()
        .map(|(v, b)| {
            b.ok_or_else(|| {
                Error::NotZeroDimensional(format!(
                    "no pure power of `{}` among the leading terms",
                    gb.vars()[v]
                ))
            })
        })
        .collect()
}

/// Standard monomials of the quotient ring: monomials divisible by no
/// leading term of the reduced basis.
pub fn standard_monomials(gb: &PolySystem, order: MonomialOrder) -> Result<Vec<MultiIndex>> {
    let bounds = pure_power_bounds(gb, order)?;
    let leads: Vec<MultiIndex> = gb
        .generators()
        .iter()
        .map(|b| leading_term(b, order).0)
        .collect();
    let mut out = Vec::new();
    let mut current = vec![0u32; gb.nvars()];
    enumerate_box(&bounds, &mut current, 0, &mut |exps| {
        let m = MultiIndex::new(exps.to_vec());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
    });
    out.sort();
    Ok(out)
}

fn enumerate_box(
    bounds: &[u32],
    current: &mut Vec<u32>,
    pos: usize,
    visit: &mut impl FnMut(&[u32]),
) {
    if pos == bounds.len() {
        visit(current);
        return;
    }
    for e in 0..bounds[pos] {
        current[pos] = e;
        enumerate_box(bounds, current, pos + 1, visit);
    }
    current[pos] = 0;
}

/// Dimension of the quotient ring as a rational vector space; equals the
/// total intersection multiplicity over all solutions of a
/// zero-dimensional system.
pub fn quotient_dimension(sys: &PolySystem) -> Result<usize> {
    quotient_dimension_with(sys, &GroebnerCaps::default())
}

pub fn quotient_dimension_with(sys: &PolySystem, caps: &GroebnerCaps) -> Result<usize> {
    if sys.nvars() == 0 {
        return Ok(1);
    }
    let gb = groebner_basis_with(sys, MonomialOrder::DegRevLex, caps)?;
    Ok(standard_monomials(&gb, MonomialOrder::DegRevLex)?.len())
}
