//! Buchberger's algorithm, normal forms, initial ideals.
//!
//! The working representation inside `buchberger` is a primitive integer
//! polynomial with terms sorted descending under the active order; reductions
//! are pseudo-divisions (scale by the leading coefficient quotient, subtract),
//! so no rational arithmetic happens until the final monic normalization.
//! Pair management is the Gebauer-Moeller update: the product criterion plus
//! both chain eliminations, applied when a new element enters the basis.
//! Pair selection is the normal strategy, minimal lcm degree first.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::monomial::{MonomialIdeal, MonomialIdealError};
use crate::ring::{Coeff, Grading, Monomial, Polynomial, Ring, Term, TermOrder};

/// Ideal of a polynomial ring, given by an arbitrary finite generating set.
/// Zero generators are dropped at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Reduced Groebner basis: monic, interreduced, sorted by leading monomial
/// descending. Unique for a given ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_term(&self.order).unwrap().mono.clone())
            .collect()
    }

    pub fn contains_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_unit_constant())
    }
}

/// Every generator homogeneous for the grading.
pub fn is_homogeneous(ideal: &Ideal, g: &Grading) -> bool {
    ideal.gens().iter().all(|p| {
        let mut weights = p.terms().iter().map(|t| g.weight_of_monomial(&t.mono));
        match weights.next() {
            None => true,
            Some(first) => weights.all(|w| w == first),
        }
    })
}

// ---------------------------------------------------------------------------
// integer working form

/// Terms sorted descending under the active order; coefficients are integers
/// with no common factor and the leading coefficient positive.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(BigInt, Monomial)>,
}

impl IPoly {
    fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_polynomial(p: &Polynomial, ord: &TermOrder) -> IPoly {
        let mut denom_lcm = BigInt::one();
        for t in p.terms() {
            denom_lcm = denom_lcm.lcm(t.coeff.denom());
        }
        let mut terms: Vec<(BigInt, Monomial)> = p
            .terms()
            .iter()
            .map(|t| {
                let c = t.coeff.numer() * (&denom_lcm / t.coeff.denom());
                (c, t.mono.clone())
            })
            .collect();
        terms.sort_by(|a, b| ord.compare(&b.1, &a.1));
        let mut out = IPoly { terms };
        out.normalize_content();
        out
    }

    fn to_monic_polynomial(&self) -> Polynomial {
        let lc = Coeff::from(self.lc().clone());
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(c, m)| Term { coeff: Coeff::from(c.clone()) / lc.clone(), mono: m.clone() })
                .collect(),
        )
    }

    /// Divide out the content and make the leading coefficient positive.
    fn normalize_content(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (c, _) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].0.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (c, _) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }
}

/// a - (ca/d) * m * b  where d and the shift are chosen by the caller;
/// concretely computes scale_a * a - scale_b * (m * b), merging sorted term
/// lists. Both inputs descending under ord; result descending.
fn combine(
    ord: &TermOrder,
    a: &[(BigInt, Monomial)],
    scale_a: &BigInt,
    b: &[(BigInt, Monomial)],
    scale_b: &BigInt,
    shift_b: &Monomial,
) -> Vec<(BigInt, Monomial)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let mb = b[j].1.mul(shift_b);
        match ord.compare(&a[i].1, &mb) {
            std::cmp::Ordering::Greater => {
                out.push((&a[i].0 * scale_a, a[i].1.clone()));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((&b[j].0 * scale_b, mb));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &a[i].0 * scale_a + &b[j].0 * scale_b;
                if !c.is_zero() {
                    out.push((c, mb));
                }
                i += 1;
                j += 1;
            }
        }
    }
    while i < a.len() {
        out.push((&a[i].0 * scale_a, a[i].1.clone()));
        i += 1;
    }
    while j < b.len() {
        out.push((&b[j].0 * scale_b, b[j].1.mul(shift_b)));
        j += 1;
    }
    out
}

/// Full pseudo-reduction of f by the basis; divisor search in basis order.
/// The result is a primitive representative of the normal form class.
fn reduce_ipoly(ord: &TermOrder, f: IPoly, basis: &[IPoly]) -> IPoly {
    let mut done: Vec<(BigInt, Monomial)> = Vec::new();
    let mut work = f.terms;
    'outer: while let Some((c, m)) = work.first().cloned() {
        for g in basis {
            if g.lm().divides(&m) {
                let shift = m.try_div(g.lm()).unwrap();
                let d = c.gcd(g.lc());
                let scale = g.lc() / &d; // positive by invariant
                let factor = -(&c / &d);
                if !scale.is_one() {
                    for (cc, _) in &mut done {
                        *cc = &*cc * &scale;
                    }
                }
                work = combine(ord, &work, &scale, &g.terms, &factor, &shift);
                debug_assert!(work.first().map_or(true, |(_, wm)| ord.compare(wm, &m) == std::cmp::Ordering::Less));
                continue 'outer;
            }
        }
        done.push((c, m));
        work.remove(0);
    }
    let mut out = IPoly { terms: done };
    out.normalize_content();
    out
}

fn s_poly(ord: &TermOrder, f: &IPoly, g: &IPoly, lcm: &Monomial) -> IPoly {
    let d = f.lc().gcd(g.lc());
    let (sf, sg) = (g.lc() / &d, -(f.lc() / &d));
    let shift_f = lcm.try_div(f.lm()).unwrap();
    let shifted: Vec<(BigInt, Monomial)> = f
        .terms
        .iter()
        .map(|(c, m)| (c.clone(), m.mul(&shift_f)))
        .collect();
    let shift_g = lcm.try_div(g.lm()).unwrap();
    let terms = combine(ord, &shifted, &sf, &g.terms, &sg, &shift_g);
    let mut out = IPoly { terms };
    out.normalize_content();
    out
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

/// Gebauer-Moeller pair update for a new basis element at index t.
fn update_pairs(basis: &[IPoly], pairs: &mut Vec<Pair>, t: usize) {
    let lm_t = basis[t].lm().clone();
    let candidates: Vec<Pair> = (0..t)
        .map(|i| {
            let lcm = basis[i].lm().lcm(&lm_t);
            let degree = lcm.total_degree();
            Pair { i, j: t, lcm, degree }
        })
        .collect();

    // keep a candidate if its leading monomials are coprime (marked for
    // removal below) or no other candidate's lcm divides its lcm
    let mut kept: Vec<Pair> = Vec::new();
    let mut remaining = candidates;
    while let Some(p) = remaining.first().cloned() {
        remaining.remove(0);
        let coprime = basis[p.i].lm().is_coprime_with(&lm_t);
        let dominated = remaining
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }

    // old pairs strictly refined by the new element drop out
    pairs.retain(|p| {
        !(lm_t.divides(&p.lcm)
            && basis[p.i].lm().lcm(&lm_t) != p.lcm
            && basis[p.j].lm().lcm(&lm_t) != p.lcm)
    });

    // the product criterion removes the coprime survivors for good
    pairs.extend(
        kept.into_iter()
            .filter(|p| !basis[p.i].lm().is_coprime_with(&lm_t)),
    );
}

/// Reduced Groebner basis by Buchberger's algorithm.
pub fn buchberger(ideal: &Ideal, ord: &TermOrder) -> GroebnerBasis {
    assert_eq!(ord.num_vars(), ideal.ring().num_vars());
    let mut basis: Vec<IPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in ideal.gens() {
        let p = reduce_ipoly(ord, IPoly::from_polynomial(g, ord), &basis);
        if !p.is_zero() {
            basis.push(p);
            update_pairs(&basis, &mut pairs, basis.len() - 1);
        }
    }

    while !pairs.is_empty() {
        // normal strategy: minimal lcm degree, ties broken structurally
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.degree
                    .cmp(&b.degree)
                    .then_with(|| a.lcm.cmp(&b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = s_poly(ord, &basis[pair.i], &basis[pair.j], &pair.lcm);
        let r = reduce_ipoly(ord, s, &basis);
        if !r.is_zero() {
            basis.push(r);
            update_pairs(&basis, &mut pairs, basis.len() - 1);
        }
    }

    // minimalize: leading monomials form an antichain
    let mut order_of: Vec<usize> = (0..basis.len()).collect();
    order_of.sort_by(|&a, &b| ord.compare(basis[a].lm(), basis[b].lm()));
    let mut minimal: Vec<IPoly> = Vec::new();
    for idx in order_of {
        if !minimal.iter().any(|g| g.lm().divides(basis[idx].lm())) {
            minimal.push(basis[idx].clone());
        }
    }

    // interreduce tails; ascending leading monomials make one pass final
    for i in 0..minimal.len() {
        let mut others: Vec<IPoly> = Vec::with_capacity(minimal.len() - 1);
        others.extend_from_slice(&minimal[..i]);
        others.extend_from_slice(&minimal[i + 1..]);
        minimal[i] = reduce_ipoly(ord, minimal[i].clone(), &others);
    }

    let mut elements: Vec<Polynomial> = minimal.iter().map(IPoly::to_monic_polynomial).collect();
    elements.sort_by(|a, b| {
        ord.compare(
            &b.leading_term(ord).unwrap().mono,
            &a.leading_term(ord).unwrap().mono,
        )
    });
    GroebnerBasis { order: ord.clone(), elements }
}

/// Exact normal form of f modulo the reducers, divisors tried in list order.
/// f minus the result lies in the ideal generated by the reducers.
pub fn normal_form(f: &Polynomial, reducers: &[Polynomial], ord: &TermOrder) -> Polynomial {
    let leads: Vec<(Monomial, Coeff, Vec<Term>)> = reducers
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let ts = g.sorted_terms(ord);
            (ts[0].mono.clone(), ts[0].coeff.clone(), ts)
        })
        .collect();
    let mut done: Vec<Term> = Vec::new();
    let mut work = f.sorted_terms(ord);
    'outer: while let Some(t) = work.first().cloned() {
        for (lm, lc, gterms) in &leads {
            if lm.divides(&t.mono) {
                let shift = t.mono.try_div(lm).unwrap();
                let factor = &t.coeff / lc;
                // work -= factor * shift * g
                let mut sub: Vec<Term> = gterms
                    .iter()
                    .map(|gt| Term { coeff: &gt.coeff * &factor, mono: gt.mono.mul(&shift) })
                    .collect();
                let mut merged: Vec<Term> = Vec::with_capacity(work.len() + sub.len());
                let (mut i, mut j) = (0, 0);
                while i < work.len() && j < sub.len() {
                    match ord.compare(&work[i].mono, &sub[j].mono) {
                        std::cmp::Ordering::Greater => {
                            merged.push(work[i].clone());
                            i += 1;
                        }
                        std::cmp::Ordering::Less => {
                            merged.push(Term { coeff: -sub[j].coeff.clone(), mono: sub[j].mono.clone() });
                            j += 1;
                        }
                        std::cmp::Ordering::Equal => {
                            let c = &work[i].coeff - &sub[j].coeff;
                            if !c.is_zero() {
                                merged.push(Term { coeff: c, mono: work[i].mono.clone() });
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
                merged.extend_from_slice(&work[i..]);
                for t in sub.drain(j..) {
                    merged.push(Term { coeff: -t.coeff, mono: t.mono });
                }
                work = merged;
                continue 'outer;
            }
        }
        done.push(t);
        work.remove(0);
    }
    Polynomial::from_terms(done)
}

/// Minimal generators of the initial ideal: the leading monomials of the
/// reduced Groebner basis.
pub fn initial_ideal(ideal: &Ideal, ord: &TermOrder) -> Result<MonomialIdeal, MonomialIdealError> {
    let gb = buchberger(ideal, ord);
    MonomialIdeal::new(ideal.ring().clone(), gb.leading_monomials())
}

/// Hilbert function of R/J under the standard grading, degrees 0..=dmax,
/// by direct count of standard monomials.
pub fn hilbert_function(j: &MonomialIdeal, dmax: u32) -> Vec<u64> {
    let n = j.ring().num_vars();
    let mut counts = vec![0u64; dmax as usize + 1];
    let mut exps = vec![0u32; n];
    count_standard(j, &mut exps, 0, 0, dmax, &mut counts);
    counts
}

fn count_standard(
    j: &MonomialIdeal,
    exps: &mut Vec<u32>,
    var: usize,
    degree: u32,
    dmax: u32,
    counts: &mut Vec<u64>,
) {
    if var == exps.len() {
        let m = Monomial::from_exps(exps.clone());
        if !j.contains(&m) {
            counts[degree as usize] += 1;
        }
        return;
    }
    for e in 0..=(dmax - degree) {
        exps[var] = e;
        count_standard(j, exps, var + 1, degree + e, dmax, counts);
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(n: i64) -> Coeff {
        Coeff::from(BigInt::from(n))
    }

    fn mono(ring: &Ring, vars: &[(&str, u32)]) -> Monomial {
        let pairs: Vec<(crate::ring::VarId, u32)> = vars
            .iter()
            .map(|(n, e)| (ring.var_by_name(n).unwrap(), *e))
            .collect();
        Monomial::from_pairs(ring.num_vars(), &pairs)
    }

    fn poly(ring: &Ring, terms: &[(i64, &[(&str, u32)])]) -> Polynomial {
        Polynomial::from_terms(
            terms
                .iter()
                .map(|(c, vs)| Term { coeff: big(*c), mono: mono(ring, vs) })
                .collect(),
        )
    }

    #[test]
    fn normal_form_uses_list_order() {
        let r = Ring::simple(&["x", "y", "z", "w"]);
        let ord = TermOrder::lex(vec![0, 1, 2, 3]);
        let f = poly(&r, &[(1, &[("x", 1), ("y", 1)])]);
        let r1 = poly(&r, &[(1, &[("x", 1), ("y", 1)]), (-1, &[("z", 1)])]);
        let r2 = poly(&r, &[(1, &[("x", 1), ("y", 1)]), (-1, &[("w", 1)])]);
        assert_eq!(normal_form(&f, &[r1.clone(), r2.clone()], &ord), poly(&r, &[(1, &[("z", 1)])]));
        assert_eq!(normal_form(&f, &[r2, r1], &ord), poly(&r, &[(1, &[("w", 1)])]));
    }

    #[test]
    fn normal_form_exactness() {
        let r = Ring::simple(&["x", "y"]);
        let ord = TermOrder::lex(vec![0, 1]);
        // 3x^2 reduced by 2x - y: rational coefficients appear
        let f = poly(&r, &[(3, &[("x", 2)])]);
        let g = poly(&r, &[(2, &[("x", 1)]), (-1, &[("y", 1)])]);
        let nf = normal_form(&f, &[g], &ord);
        let expect = Polynomial::from_terms(vec![Term {
            coeff: Coeff::new(BigInt::from(3), BigInt::from(4)),
            mono: mono(&r, &[("y", 2)]),
        }]);
        assert_eq!(nf, expect);
    }

    #[test]
    fn linear_chain() {
        let r = Ring::simple(&["x", "y", "z"]);
        let ord = TermOrder::lex(vec![0, 1, 2]);
        let i = Ideal::new(
            r.clone(),
            vec![
                poly(&r, &[(1, &[("x", 1)]), (-1, &[("y", 1)])]),
                poly(&r, &[(1, &[("y", 1)]), (-1, &[("z", 1)])]),
            ],
        );
        let gb = buchberger(&i, &ord);
        let want = vec![
            poly(&r, &[(1, &[("x", 1)]), (-1, &[("z", 1)])]),
            poly(&r, &[(1, &[("y", 1)]), (-1, &[("z", 1)])]),
        ];
        assert_eq!(gb.elements(), &want[..]);
    }

    #[test]
    fn twisted_cubic_lex() {
        let r = Ring::simple(&["x", "y", "z"]);
        let ord = TermOrder::lex(vec![0, 1, 2]);
        let i = Ideal::new(
            r.clone(),
            vec![
                poly(&r, &[(1, &[("x", 2)]), (-1, &[("y", 1)])]),
                poly(&r, &[(1, &[("x", 3)]), (-1, &[("z", 1)])]),
            ],
        );
        let gb = buchberger(&i, &ord);
        let want = vec![
            poly(&r, &[(1, &[("x", 2)]), (-1, &[("y", 1)])]),
            poly(&r, &[(1, &[("x", 1), ("y", 1)]), (-1, &[("z", 1)])]),
            poly(&r, &[(1, &[("x", 1), ("z", 1)]), (-1, &[("y", 2)])]),
            poly(&r, &[(1, &[("y", 3)]), (-1, &[("z", 2)])]),
        ];
        assert_eq!(gb.elements(), &want[..]);
    }

    #[test]
    fn generator_permutation_gives_same_reduced_basis() {
        let r = Ring::simple(&["x", "y", "z"]);
        let ord = TermOrder::grevlex(vec![0, 1, 2]);
        let gens = vec![
            poly(&r, &[(1, &[("x", 2)]), (1, &[("y", 1), ("z", 1)])]),
            poly(&r, &[(2, &[("x", 1), ("y", 1)]), (-3, &[("z", 2)])]),
            poly(&r, &[(1, &[("y", 2)]), (1, &[("x", 1), ("z", 1)])]),
        ];
        let gb1 = buchberger(&Ideal::new(r.clone(), gens.clone()), &ord);
        let mut rev = gens.clone();
        rev.reverse();
        let gb2 = buchberger(&Ideal::new(r.clone(), rev), &ord);
        assert_eq!(gb1.elements(), gb2.elements());
    }

    fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, max_terms: usize) -> Polynomial {
        let nterms = rng.gen_range(1..=max_terms);
        let terms = (0..nterms)
            .map(|_| {
                let mut exps = vec![0u32; n];
                let deg = rng.gen_range(0..=max_deg);
                for _ in 0..deg {
                    exps[rng.gen_range(0..n)] += 1;
                }
                let c = loop {
                    let c = rng.gen_range(-3i64..=3);
                    if c != 0 {
                        break c;
                    }
                };
                Term { coeff: big(c), mono: Monomial::from_exps(exps) }
            })
            .collect();
        Polynomial::from_terms(terms)
    }

    #[test]
    fn buchberger_criterion_holds_post_hoc() {
        // every S-polynomial of the output reduces to zero, and normal forms
        // modulo the basis are idempotent
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let r = Ring::simple(&["x", "y", "z"]);
        for trial in 0..30 {
            let ord = if trial % 2 == 0 {
                TermOrder::lex(vec![0, 1, 2])
            } else {
                TermOrder::grevlex(vec![2, 1, 0])
            };
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
                .map(|_| random_poly(&mut rng, 3, 2, 3))
                .collect();
            let gb = buchberger(&Ideal::new(r.clone(), gens), &ord);
            let elems = gb.elements();
            for a in 0..elems.len() {
                for b in (a + 1)..elems.len() {
                    let la = &elems[a].leading_term(&ord).unwrap().mono;
                    let lb = &elems[b].leading_term(&ord).unwrap().mono;
                    let lcm = la.lcm(lb);
                    let sa = elems[a].mul_monomial(&lcm.try_div(la).unwrap());
                    let sb = elems[b].mul_monomial(&lcm.try_div(lb).unwrap());
                    let s = sa.sub(&sb);
                    assert!(normal_form(&s, elems, &ord).is_zero());
                }
            }
            let p = random_poly(&mut rng, 3, 3, 4);
            let nf = normal_form(&p, elems, &ord);
            assert_eq!(normal_form(&nf, elems, &ord), nf);
            assert!(normal_form(&p.sub(&nf), elems, &ord).is_zero());
        }
    }

    #[test]
    fn unit_ideal_detected() {
        let r = Ring::simple(&["x"]);
        let ord = TermOrder::lex(vec![0]);
        let i = Ideal::new(
            r.clone(),
            vec![poly(&r, &[(1, &[("x", 1)])]), poly(&r, &[(1, &[("x", 1)]), (1, &[])])],
        );
        let gb = buchberger(&i, &ord);
        assert!(gb.contains_unit());
        assert_eq!(initial_ideal(&i, &ord), Err(MonomialIdealError::ContainsUnit));
    }

    #[test]
    fn initial_ideal_zero_and_principal() {
        let r = Ring::simple(&["x", "y"]);
        let ord = TermOrder::lex(vec![0, 1]);
        let z = Ideal::new(r.clone(), vec![]);
        assert!(initial_ideal(&z, &ord).unwrap().is_zero());
        let p = Ideal::new(r.clone(), vec![poly(&r, &[(2, &[("x", 1)]), (5, &[("y", 1)])])]);
        let j = initial_ideal(&p, &ord).unwrap();
        assert_eq!(j.gens(), &[mono(&r, &[("x", 1)])]);
    }

    #[test]
    fn hilbert_function_counts() {
        let r = Ring::simple(&["x", "y"]);
        let zero = MonomialIdeal::zero(r.clone());
        assert_eq!(hilbert_function(&zero, 3), vec![1, 2, 3, 4]);
        let j = MonomialIdeal::new(r.clone(), vec![mono(&r, &[("x", 2)]), mono(&r, &[("x", 1), ("y", 1)])]).unwrap();
        assert_eq!(hilbert_function(&j, 4), vec![1, 2, 1, 1, 1]);
    }

    #[test]
    fn homogeneity_check() {
        let r = Ring::simple(&["x", "y"]);
        let g = Grading::standard(&r);
        let h = Ideal::new(r.clone(), vec![poly(&r, &[(1, &[("x", 2)]), (-1, &[("y", 2)])])]);
        assert!(is_homogeneous(&h, &g));
        let nh = Ideal::new(r.clone(), vec![poly(&r, &[(1, &[("x", 2)]), (-1, &[("y", 1)])])]);
        assert!(!is_homogeneous(&nh, &g));
        // inhomogeneous for the standard grading, homogeneous once x has weight 2
        let g2 = Grading::new(&r, 1, vec![vec![2], vec![1]]).unwrap();
        let m = Ideal::new(r.clone(), vec![poly(&r, &[(1, &[("x", 1)]), (-1, &[("y", 2)])])]);
        assert!(!is_homogeneous(&m, &g));
        assert!(is_homogeneous(&m, &g2));
    }
}
