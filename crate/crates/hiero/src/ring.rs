//! Multivariate polynomial rings over Q with named, possibly replicated variables.
//!
//! A `Ring` fixes the variable set once; every `Monomial` and `Polynomial` is a
//! dense exponent/term vector over that set and is only meaningful together with
//! its ring. Variables carry a base name, a copy index (copy 1 is the original,
//! higher copies are introduced by polarization) and optional grid metadata used
//! for rendering.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type VarId = usize;

/// Display position of a variable: pane selects the matrix (0 unless the
/// fixture uses several), row and col are 1-based within the pane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridCell {
    pub pane: u32,
    pub row: u32,
    pub col: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub id: VarId,
    pub base_name: String,
    /// 1 for an original variable, k >= 2 for the k-th polarization copy.
    pub copy_index: u32,
    pub grid: Option<GridCell>,
}

impl Variable {
    /// Full name: the base name for copy 1, `base~k` for copy k >= 2.
    pub fn name(&self) -> String {
        if self.copy_index == 1 {
            self.base_name.clone()
        } else {
            format!("{}~{}", self.base_name, self.copy_index)
        }
    }
}

#[derive(Debug)]
struct RingInner {
    vars: Vec<Variable>,
    by_name: HashMap<String, VarId>,
}

/// Immutable variable context, cheap to clone and share.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }
}
impl Eq for Ring {}

impl Ring {
    /// Ring on the given variables. Ids are assigned 0.. in order; duplicate
    /// full names are rejected by the parser and builders, not here.
    pub fn new(descriptors: Vec<(String, u32, Option<GridCell>)>) -> Ring {
        let mut vars = Vec::with_capacity(descriptors.len());
        let mut by_name = HashMap::new();
        for (id, (base_name, copy_index, grid)) in descriptors.into_iter().enumerate() {
            assert!(copy_index >= 1, "copy indices start at 1");
            let v = Variable { id, base_name, copy_index, grid };
            by_name.insert(v.name(), id);
            vars.push(v);
        }
        Ring(Arc::new(RingInner { vars, by_name }))
    }

    /// Ring of plain variables (all copy 1, no grid).
    pub fn simple(names: &[&str]) -> Ring {
        Ring::new(names.iter().map(|n| (n.to_string(), 1, None)).collect())
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.0.vars
    }

    pub fn var(&self, id: VarId) -> &Variable {
        &self.0.vars[id]
    }

    pub fn name(&self, id: VarId) -> String {
        self.0.vars[id].name()
    }

    pub fn var_by_name(&self, name: &str) -> Option<VarId> {
        self.0.by_name.get(name).copied()
    }
}

/// Z^d-grading: one weight vector per variable.
///
/// Positivity (every variable has a nonzero weight with nonnegative entries)
/// is enforced at construction so downstream code can rely on finite graded
/// pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    dim: usize,
    weights: Vec<Vec<i64>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GradingError {
    #[error("variable {0} has a nonpositive weight (needs nonnegative entries, not all zero)")]
    NonPositiveGrading(String),
    #[error("weight for variable {0} has {1} entries, grading dimension is {2}")]
    DimensionMismatch(String, usize, usize),
}

impl Grading {
    pub fn new(ring: &Ring, dim: usize, weights: Vec<Vec<i64>>) -> Result<Grading, GradingError> {
        assert_eq!(weights.len(), ring.num_vars());
        for (id, w) in weights.iter().enumerate() {
            if w.len() != dim {
                return Err(GradingError::DimensionMismatch(ring.name(id), w.len(), dim));
            }
            if w.iter().any(|&e| e < 0) || w.iter().all(|&e| e == 0) {
                return Err(GradingError::NonPositiveGrading(ring.name(id)));
            }
        }
        Ok(Grading { dim, weights })
    }

    /// Z-grading with every variable of weight 1.
    pub fn standard(ring: &Ring) -> Grading {
        Grading { dim: 1, weights: vec![vec![1]; ring.num_vars()] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_standard(&self) -> bool {
        self.dim == 1 && self.weights.iter().all(|w| w[0] == 1)
    }

    pub fn weight_of_var(&self, id: VarId) -> &[i64] {
        &self.weights[id]
    }

    pub fn weight_of_monomial(&self, m: &Monomial) -> Vec<i64> {
        let mut acc = vec![0i64; self.dim];
        for (id, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                for (a, &w) in acc.iter_mut().zip(&self.weights[id]) {
                    *a += w * e as i64;
                }
            }
        }
        acc
    }

    /// Whether all variables have the same total weight (sum of entries).
    pub fn equal_total_degrees(&self) -> bool {
        let mut totals = self.weights.iter().map(|w| w.iter().sum::<i64>());
        match totals.next() {
            None => true,
            Some(first) => totals.all(|t| t == first),
        }
    }
}

/// Dense exponent vector; the zero monomial is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial { exps: vec![0; n] }
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn var(n: usize, id: VarId) -> Monomial {
        let mut exps = vec![0; n];
        exps[id] = 1;
        Monomial { exps }
    }

    pub fn from_pairs(n: usize, pairs: &[(VarId, u32)]) -> Monomial {
        let mut exps = vec![0; n];
        for &(id, e) in pairs {
            exps[id] += e;
        }
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, id: VarId) -> u32 {
        self.exps[id]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Ids of variables with positive exponent, ascending.
    pub fn support(&self) -> Vec<VarId> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// self / other, or None when other does not divide self.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Structural key: total degree first, then exponents by variable id.
    /// Fixes a canonical term order-independent ordering for storage.
    pub fn structural_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ring }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (id, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.name(id))?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

pub type Coeff = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// Polynomial with exact rational coefficients.
///
/// Canonical form: no zero coefficients, no repeated monomials, terms sorted
/// descending under the structural monomial order. Operations that depend on a
/// term order re-sort on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    /// Collects like terms, drops zeros, sorts structurally descending.
    pub fn from_terms(terms: Vec<Term>) -> Polynomial {
        let mut terms = terms;
        terms.sort_by(|a, b| b.mono.structural_cmp(&a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if let Some(last) = out.last() {
            if last.coeff.is_zero() {
                out.pop();
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { terms: out }
    }

    pub fn constant(n: usize, c: Coeff) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![Term { coeff: c, mono: Monomial::one(n) }] }
        }
    }

    pub fn monomial(mono: Monomial) -> Polynomial {
        Polynomial { terms: vec![Term { coeff: Coeff::one(), mono }] }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant polynomial, i.e. a unit.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Polynomial::from_terms(terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|t| Term { coeff: -t.coeff.clone(), mono: t.mono.clone() }));
        Polynomial::from_terms(terms)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: -t.coeff.clone(), mono: t.mono.clone() })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term { coeff: &a.coeff * &b.coeff, mono: a.mono.mul(&b.mono) });
            }
        }
        Polynomial::from_terms(terms)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.mul(m) })
                .collect(),
        }
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, ord: &TermOrder) -> Option<&Term> {
        self.terms
            .iter()
            .max_by(|a, b| ord.compare(&a.mono, &b.mono))
    }

    /// Terms sorted descending under the given order.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<Term> {
        let mut ts = self.terms.clone();
        ts.sort_by(|a, b| ord.compare(&b.mono, &a.mono));
        ts
    }

    pub fn display<'a>(&'a self, ring: &'a Ring, ord: Option<&'a TermOrder>) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, ring, ord }
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    ring: &'a Ring,
    ord: Option<&'a TermOrder>,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let terms = match self.ord {
            Some(ord) => self.poly.sorted_terms(ord),
            None => self.poly.terms.clone(),
        };
        for (i, t) in terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() && !t.mono.is_one() {
                write!(f, "{}", t.mono.display(self.ring))?;
            } else if t.mono.is_one() {
                write!(f, "{}", abs)?;
            } else {
                write!(f, "{}*{}", abs, t.mono.display(self.ring))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GRevLex,
}

/// Monomial order determined by a kind and a reading order on the variables
/// (position 0 is the greatest variable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub kind: OrderKind,
    reading: Vec<VarId>,
}

impl TermOrder {
    /// `reading` must be a permutation of 0..n.
    pub fn new(kind: OrderKind, reading: Vec<VarId>) -> TermOrder {
        let n = reading.len();
        let mut seen = vec![false; n];
        for &id in &reading {
            assert!(id < n && !seen[id], "reading order must be a permutation of the variable ids");
            seen[id] = true;
        }
        TermOrder { kind, reading }
    }

    pub fn lex(reading: Vec<VarId>) -> TermOrder {
        TermOrder::new(OrderKind::Lex, reading)
    }

    pub fn grevlex(reading: Vec<VarId>) -> TermOrder {
        TermOrder::new(OrderKind::GRevLex, reading)
    }

    pub fn reading(&self) -> &[VarId] {
        &self.reading
    }

    pub fn num_vars(&self) -> usize {
        self.reading.len()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), self.reading.len());
        debug_assert_eq!(b.num_vars(), self.reading.len());
        match self.kind {
            OrderKind::Lex => {
                for &id in &self.reading {
                    let (ea, eb) = (a.exp(id), b.exp(id));
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
                Ordering::Equal
            }
            OrderKind::GRevLex => {
                let (da, db) = (a.total_degree(), b.total_degree());
                if da != db {
                    return da.cmp(&db);
                }
                // Walk from the least variable backwards; the monomial with
                // the smaller exponent at the first difference is greater.
                for &id in self.reading.iter().rev() {
                    let (ea, eb) = (a.exp(id), b.exp(id));
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                }
                Ordering::Equal
            }
        }
    }
}
