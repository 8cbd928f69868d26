//! K-polynomials of monomial quotients, multidegrees, and degrees.
//!
//! Three routes to the same Laurent polynomial: the inclusion-exclusion sum
//! over generator subsets (Taylor complex), a colon-ideal splitting recursion
//! with memoization, and, for squarefree ideals, the face sum over the
//! Stanley-Reisner complex. Degrees and multidegrees come from substituting
//! t -> 1 - t and extracting the lowest-degree part, all exactly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

use crate::groebner::hilbert_function;
use crate::monomial::{minimalize, MonomialIdeal};
use crate::ring::{Grading, Monomial};
use crate::stanley_reisner::sr_facets;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum KpolyError {
    #[error("too many generators for the Taylor sum; use kpoly_split")]
    TooManyGenerators,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("operation requires the standard grading")]
    NotStandardGrading,
}

/// Laurent polynomial in d variables with integer coefficients, stored as
/// exponent vector -> coefficient. Exponents may be negative; no zero
/// coefficients are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    dim: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> LaurentPoly {
        LaurentPoly { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> LaurentPoly {
        LaurentPoly::term(dim, vec![0; dim], BigInt::one())
    }

    pub fn term(dim: usize, exps: Vec<i64>, coeff: BigInt) -> LaurentPoly {
        assert_eq!(exps.len(), dim);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i64>, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.dim, other.dim);
        let mut out = LaurentPoly::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    /// Homogeneous part of minimal total degree.
    pub fn lowest_part(&self) -> LaurentPoly {
        let min = self
            .terms
            .keys()
            .map(|e| e.iter().sum::<i64>())
            .min();
        match min {
            None => LaurentPoly::zero(self.dim),
            Some(m) => LaurentPoly {
                dim: self.dim,
                terms: self
                    .terms
                    .iter()
                    .filter(|(e, _)| e.iter().sum::<i64>() == m)
                    .map(|(e, c)| (e.clone(), c.clone()))
                    .collect(),
            },
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by_key(|e| (e.iter().sum::<i64>(), (*e).clone()));
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            if is_const {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                let mut first = true;
                for (idx, &exp) in e.iter().enumerate() {
                    if exp == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if self.dim == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t{}", idx + 1)?;
                    }
                    if exp != 1 {
                        write!(f, "^{}", exp)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn weight_exps(g: &Grading, m: &Monomial) -> Vec<i64> {
    g.weight_of_monomial(m)
}

/// K-polynomial by the Taylor complex: alternating sum of t^{w(lcm S)} over
/// generator subsets S.
pub fn kpoly_taylor(j: &MonomialIdeal, g: &Grading) -> Result<LaurentPoly, KpolyError> {
    let gens = j.gens();
    if gens.len() > 20 {
        return Err(KpolyError::TooManyGenerators);
    }
    let n = j.ring().num_vars();
    let mut out = LaurentPoly::zero(g.dim());
    let mut stack_lcm = vec![Monomial::one(n)];
    taylor_rec(gens, g, 0, &mut stack_lcm, 1, &mut out);
    Ok(out)
}

fn taylor_rec(
    gens: &[Monomial],
    g: &Grading,
    idx: usize,
    lcms: &mut Vec<Monomial>,
    sign: i32,
    out: &mut LaurentPoly,
) {
    if idx == gens.len() {
        let w = weight_exps(g, lcms.last().unwrap());
        out.add_term(w, &BigInt::from(sign));
        return;
    }
    taylor_rec(gens, g, idx + 1, lcms, sign, out);
    let next = lcms.last().unwrap().lcm(&gens[idx]);
    lcms.push(next);
    taylor_rec(gens, g, idx + 1, lcms, -sign, out);
    lcms.pop();
}

/// K-polynomial by the splitting recursion
/// K(<gens, m>) = K(<gens>) - t^{w(m)} K(<gens> : m), with variable-disjoint
/// generator blocks multiplied together and results memoized per call.
pub fn kpoly_split(j: &MonomialIdeal, g: &Grading) -> LaurentPoly {
    let mut memo: HashMap<Vec<Vec<u32>>, LaurentPoly> = HashMap::new();
    split_rec(j.gens(), g, &mut memo)
}

fn split_rec(
    gens: &[Monomial],
    g: &Grading,
    memo: &mut HashMap<Vec<Vec<u32>>, LaurentPoly>,
) -> LaurentPoly {
    match gens.len() {
        0 => return LaurentPoly::one(g.dim()),
        1 => {
            let w = weight_exps(g, &gens[0]);
            return LaurentPoly::one(g.dim()).sub(&LaurentPoly::term(g.dim(), w, BigInt::one()));
        }
        _ => {}
    }
    let key: Vec<Vec<u32>> = gens.iter().map(|m| m.exps().to_vec()).collect();
    if let Some(k) = memo.get(&key) {
        return k.clone();
    }

    let result = match disjoint_blocks(gens) {
        Some(blocks) => {
            let mut acc = LaurentPoly::one(g.dim());
            for block in blocks {
                let part = split_rec(&block, g, memo);
                acc = acc.mul(&part);
            }
            acc
        }
        None => {
            // pivot: a generator of maximal degree, the last such in order
            let pivot_idx = {
                let max_deg = gens.iter().map(|m| m.total_degree()).max().unwrap();
                gens.iter().rposition(|m| m.total_degree() == max_deg).unwrap()
            };
            let pivot = gens[pivot_idx].clone();
            let rest: Vec<Monomial> = gens
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != pivot_idx)
                .map(|(_, m)| m.clone())
                .collect();
            let colon: Vec<Monomial> = minimalize(
                rest.iter()
                    .map(|m| m.try_div(&m.gcd(&pivot)).unwrap())
                    .collect(),
            );
            let k_rest = split_rec(&rest, g, memo);
            let k_colon = if colon.iter().any(|m| m.is_one()) {
                // pivot already inside <rest>: cannot happen for minimal gens
                LaurentPoly::zero(g.dim())
            } else {
                split_rec(&colon, g, memo)
            };
            let w = weight_exps(g, &pivot);
            let shift = LaurentPoly::term(g.dim(), w, BigInt::one());
            k_rest.sub(&shift.mul(&k_colon))
        }
    };
    memo.insert(key, result.clone());
    result
}

/// Splits generators into >= 2 variable-disjoint blocks, or None when the
/// support graph is connected. Blocks keep the original generator order.
fn disjoint_blocks(gens: &[Monomial]) -> Option<Vec<Vec<Monomial>>> {
    let mut comp: Vec<usize> = (0..gens.len()).collect();
    fn find(comp: &mut Vec<usize>, i: usize) -> usize {
        if comp[i] != i {
            let r = find(comp, comp[i]);
            comp[i] = r;
        }
        comp[i]
    }
    let n = gens[0].num_vars();
    let mut var_owner: Vec<Option<usize>> = vec![None; n];
    for (i, m) in gens.iter().enumerate() {
        for v in m.support() {
            match var_owner[v] {
                None => var_owner[v] = Some(i),
                Some(o) => {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, o));
                    if a != b {
                        comp[a] = b;
                    }
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    for i in 0..gens.len() {
        let root = find(&mut comp, i);
        blocks.entry(root).or_default().push(gens[i].clone());
    }
    if blocks.len() >= 2 {
        Some(blocks.into_values().collect())
    } else {
        None
    }
}

/// K-polynomial of a squarefree ideal by the face sum
/// sum over faces sigma of prod_{i in sigma} t^{w_i} prod_{j not in sigma} (1 - t^{w_j}).
/// Faces sharing a weight profile are grouped so the inner product is
/// expanded once per group.
pub fn kpoly_faces(j: &MonomialIdeal, g: &Grading) -> Result<LaurentPoly, KpolyError> {
    if !j.is_squarefree() {
        return Err(KpolyError::NotSquarefree);
    }
    if j.is_zero() {
        return Ok(LaurentPoly::one(g.dim()));
    }
    let n = j.ring().num_vars();
    assert!(n <= 128, "face enumeration uses 128-bit vertex masks");
    let complex = sr_facets(j).expect("squarefree checked above");

    // all faces, as bitmasks, from the facets
    let mut faces: std::collections::HashSet<u128> = std::collections::HashSet::new();
    for facet in complex.facets() {
        let verts: Vec<usize> = facet.clone();
        let mut subset_stack: Vec<(usize, u128)> = vec![(0, 0)];
        while let Some((idx, mask)) = subset_stack.pop() {
            if idx == verts.len() {
                faces.insert(mask);
            } else {
                subset_stack.push((idx + 1, mask));
                subset_stack.push((idx + 1, mask | (1u128 << verts[idx])));
            }
        }
    }

    // group faces by the multiset of their member weights
    let weight_of: Vec<Vec<i64>> = (0..n).map(|v| g.weight_of_var(v).to_vec()).collect();
    let mut groups: HashMap<Vec<Vec<i64>>, u64> = HashMap::new();
    for &mask in &faces {
        let mut ws: Vec<Vec<i64>> = (0..n)
            .filter(|&v| mask & (1u128 << v) != 0)
            .map(|v| weight_of[v].clone())
            .collect();
        ws.sort();
        *groups.entry(ws).or_insert(0) += 1;
    }

    // total weight multiset, for complements
    let mut all_ws: Vec<Vec<i64>> = weight_of.clone();
    all_ws.sort();

    let mut keys: Vec<Vec<Vec<i64>>> = groups.keys().cloned().collect();
    keys.sort();
    let mut out = LaurentPoly::zero(g.dim());
    for key in keys {
        let count = groups[&key];
        let face_weight: Vec<i64> = key.iter().fold(vec![0i64; g.dim()], |mut acc, w| {
            for (a, b) in acc.iter_mut().zip(w) {
                *a += b;
            }
            acc
        });
        // complement multiset = all weights minus the face's multiset
        let mut complement = all_ws.clone();
        for w in &key {
            let pos = complement.iter().position(|x| x == w).unwrap();
            complement.remove(pos);
        }
        let mut distinct: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for w in complement {
            *distinct.entry(w).or_insert(0) += 1;
        }
        let mut prod = LaurentPoly::term(g.dim(), face_weight, BigInt::from(count));
        for (w, mult) in distinct {
            prod = prod.mul(&binomial_power(g.dim(), &w, mult));
        }
        out = out.add(&prod);
    }
    Ok(out)
}

/// (1 - t^w)^m expanded by the binomial theorem.
fn binomial_power(dim: usize, w: &[i64], m: u64) -> LaurentPoly {
    let mut out = LaurentPoly::zero(dim);
    for k in 0..=m {
        let c = if k % 2 == 0 {
            binomial(m, k)
        } else {
            -binomial(m, k)
        };
        let e: Vec<i64> = w.iter().map(|&x| x * k as i64).collect();
        out.add_term(e, &c);
    }
    out
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k.min(n));
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Substitute t_i -> 1 - t_i exactly. Exponents must be nonnegative.
pub fn substitute_one_minus_t(k: &LaurentPoly) -> LaurentPoly {
    let dim = k.dim();
    let mut out = LaurentPoly::zero(dim);
    for (e, c) in k.terms() {
        assert!(e.iter().all(|&x| x >= 0), "substitution needs nonnegative exponents");
        let mut prod = LaurentPoly::term(dim, vec![0; dim], c.clone());
        for (i, &a) in e.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut unit = vec![0i64; dim];
            unit[i] = 1;
            prod = prod.mul(&binomial_power(dim, &unit, a as u64));
        }
        out = out.add(&prod);
    }
    out
}

/// Multidegree: the lowest-total-degree part of K(1 - t).
pub fn multidegree(k: &LaurentPoly, _g: &Grading) -> LaurentPoly {
    substitute_one_minus_t(k).lowest_part()
}

/// Degree under the standard grading: the coefficient of the lowest-degree
/// term of K(1 - t). Positive for proper nonzero ideals; the zero Laurent
/// polynomial (unit ideal) has no degree and panics.
pub fn degree(k: &LaurentPoly) -> Result<u64, KpolyError> {
    if k.dim() != 1 {
        return Err(KpolyError::NotStandardGrading);
    }
    let low = substitute_one_minus_t(k).lowest_part();
    let c = low
        .terms()
        .values()
        .next()
        .expect("degree of the unit ideal is undefined");
    Ok(c.to_u64().expect("degree does not fit in u64"))
}

/// Expands K/(1-t)^N as a power series to degree dmax and compares with the
/// direct standard-monomial count for J.
pub fn hilbert_series_check(j: &MonomialIdeal, k: &LaurentPoly, dmax: u32) -> bool {
    if k.dim() != 1 {
        return false;
    }
    let n = j.ring().num_vars() as u64;
    let hf = hilbert_function(j, dmax);
    for d in 0..=dmax as i64 {
        // coefficient of t^d in K * sum_m C(N-1+m, m) t^m
        let mut coeff = BigInt::zero();
        for (e, c) in k.terms() {
            let a = e[0];
            if a <= d {
                let m = (d - a) as u64;
                coeff += c * binomial(n - 1 + m, m);
            }
        }
        if coeff != BigInt::from(hf[d as usize]) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mono(ring: &Ring, vars: &[(&str, u32)]) -> Monomial {
        let pairs: Vec<(crate::ring::VarId, u32)> = vars
            .iter()
            .map(|(n, e)| (ring.var_by_name(n).unwrap(), *e))
            .collect();
        Monomial::from_pairs(ring.num_vars(), &pairs)
    }

    fn t_poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut out = LaurentPoly::zero(1);
        for &(e, c) in pairs {
            out.add_term(vec![e], &BigInt::from(c));
        }
        out
    }

    #[test]
    fn taylor_trivial_cases() {
        let r = Ring::simple(&["x1", "x2"]);
        let g = Grading::standard(&r);
        let p = MonomialIdeal::new(r.clone(), vec![mono(&r, &[("x1", 1)])]).unwrap();
        assert_eq!(kpoly_taylor(&p, &g).unwrap(), t_poly(&[(0, 1), (1, -1)]));
        let q = MonomialIdeal::new(r.clone(), vec![mono(&r, &[("x1", 1), ("x2", 1)])]).unwrap();
        assert_eq!(kpoly_taylor(&q, &g).unwrap(), t_poly(&[(0, 1), (2, -1)]));
        let z = MonomialIdeal::zero(r.clone());
        assert_eq!(kpoly_taylor(&z, &g).unwrap(), t_poly(&[(0, 1)]));
        assert_eq!(kpoly_split(&z, &g), t_poly(&[(0, 1)]));
    }

    #[test]
    fn taylor_generator_guard() {
        let names: Vec<String> = (0..21).map(|i| format!("x{}", i)).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let r = Ring::simple(&refs);
        let g = Grading::standard(&r);
        let gens = (0..21).map(|i| Monomial::var(21, i)).collect();
        let j = MonomialIdeal::new(r.clone(), gens).unwrap();
        assert_eq!(kpoly_taylor(&j, &g), Err(KpolyError::TooManyGenerators));
        // the splitting recursion handles it: (1-t)^21
        let k = kpoly_split(&j, &g);
        assert_eq!(k.coeff(&[0]), BigInt::one());
        assert_eq!(k.coeff(&[1]), BigInt::from(-21));
        assert_eq!(k.coeff(&[21]), BigInt::from(-1));
    }

    #[test]
    fn faces_trivial_cases() {
        let r = Ring::simple(&["x1", "x2"]);
        let g = Grading::standard(&r);
        let q = MonomialIdeal::new(r.clone(), vec![mono(&r, &[("x1", 1), ("x2", 1)])]).unwrap();
        assert_eq!(kpoly_faces(&q, &g).unwrap(), t_poly(&[(0, 1), (2, -1)]));
        let z = MonomialIdeal::zero(r.clone());
        assert_eq!(kpoly_faces(&z, &g).unwrap(), t_poly(&[(0, 1)]));
        let nsq = MonomialIdeal::new(r.clone(), vec![mono(&r, &[("x1", 2)])]).unwrap();
        assert_eq!(kpoly_faces(&nsq, &g), Err(KpolyError::NotSquarefree));
    }

    #[test]
    fn polarization_invariance_single_instance() {
        // <x1^3 x2, x2^2> and its polarization have the same K-polynomial
        let r = Ring::simple(&["x1", "x2"]);
        let g = Grading::standard(&r);
        let j = MonomialIdeal::new(
            r.clone(),
            vec![mono(&r, &[("x1", 3), ("x2", 1)]), mono(&r, &[("x2", 2)])],
        )
        .unwrap();
        let p = j.polarize(&g);
        let k1 = kpoly_taylor(&j, &g).unwrap();
        let k2 = kpoly_taylor(&p.ideal, &p.grading).unwrap();
        assert_eq!(k1, k2);
        assert_eq!(kpoly_split(&j, &g), k1);
        assert_eq!(kpoly_faces(&p.ideal, &p.grading).unwrap(), k1);
    }

    fn random_ideal(rng: &mut ChaCha8Rng, r: &Ring, max_gens: usize, max_exp: u32) -> MonomialIdeal {
        let n = r.num_vars();
        let ngens = rng.gen_range(1..=max_gens);
        let gens: Vec<Monomial> = (0..ngens)
            .map(|_| {
                loop {
                    let exps: Vec<u32> = (0..n)
                        .map(|_| if rng.gen_bool(0.5) { rng.gen_range(0..=max_exp) } else { 0 })
                        .collect();
                    if exps.iter().any(|&e| e > 0) {
                        return Monomial::from_exps(exps);
                    }
                }
            })
            .collect();
        MonomialIdeal::new(r.clone(), gens).unwrap()
    }

    #[test]
    fn split_agrees_with_taylor_on_random_ideals() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..500 {
            let nvars = rng.gen_range(1..=6);
            let names: Vec<String> = (0..nvars).map(|i| format!("x{}", i)).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let r = Ring::simple(&refs);
            let g = Grading::standard(&r);
            let j = random_ideal(&mut rng, &r, 8, 3);
            let kt = kpoly_taylor(&j, &g).unwrap();
            let ks = kpoly_split(&j, &g);
            assert_eq!(kt, ks, "trial {}: {:?}", trial, j.gens());
        }
    }

    #[test]
    fn multidegree_examples() {
        // K = 1 - t  ->  t
        let g1 = Grading::standard(&Ring::simple(&["x"]));
        assert_eq!(multidegree(&t_poly(&[(0, 1), (1, -1)]), &g1), t_poly(&[(1, 1)]));
        // two coordinate lines in the plane, bigraded: K = 1 - t1 t2
        let r = Ring::simple(&["x", "y"]);
        let g2 = Grading::new(&r, 2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let mut k = LaurentPoly::zero(2);
        k.add_term(vec![0, 0], &BigInt::one());
        k.add_term(vec![1, 1], &BigInt::from(-1));
        let md = multidegree(&k, &g2);
        let mut expect = LaurentPoly::zero(2);
        expect.add_term(vec![1, 0], &BigInt::one());
        expect.add_term(vec![0, 1], &BigInt::one());
        assert_eq!(md, expect);
    }

    #[test]
    fn degree_examples() {
        // two points <x1 x2>: K = 1 - t^2, degree 2
        assert_eq!(degree(&t_poly(&[(0, 1), (2, -1)])).unwrap(), 2);
        assert_eq!(degree(&t_poly(&[(0, 1), (1, -1)])).unwrap(), 1);
        let mut k2 = LaurentPoly::zero(2);
        k2.add_term(vec![0, 0], &BigInt::one());
        assert_eq!(degree(&k2), Err(KpolyError::NotStandardGrading));
    }

    #[test]
    fn hilbert_series_matches_oracle() {
        let r = Ring::simple(&["x1", "x2"]);
        let g = Grading::standard(&r);
        let j = MonomialIdeal::new(r.clone(), vec![mono(&r, &[("x1", 1)])]).unwrap();
        let k = kpoly_taylor(&j, &g).unwrap();
        assert!(hilbert_series_check(&j, &k, 8));
        // and a wrong K fails
        assert!(!hilbert_series_check(&j, &t_poly(&[(0, 1)]), 8));
    }

    #[test]
    fn faces_agrees_on_random_squarefree_ideals() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let nvars = rng.gen_range(1..=6);
            let names: Vec<String> = (0..nvars).map(|i| format!("x{}", i)).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let r = Ring::simple(&refs);
            let g = Grading::standard(&r);
            let j = random_ideal(&mut rng, &r, 5, 1);
            let kf = kpoly_faces(&j, &g).unwrap();
            let ks = kpoly_split(&j, &g);
            assert_eq!(kf, ks);
        }
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(format!("{}", t_poly(&[(0, 1), (2, -3), (4, 1)])), "1 - 3*t^2 + t^4");
        assert_eq!(format!("{}", LaurentPoly::zero(1)), "0");
    }
}
