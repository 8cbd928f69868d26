//! Minimal primes of squarefree monomial ideals and the Stanley-Reisner
//! correspondence.
//!
//! A squarefree monomial ideal is the intersection of the monomial primes
//! generated by its minimal vertex covers: the minimal primes are exactly the
//! minimal transversals of the hypergraph of generator supports. Facets of
//! the Stanley-Reisner complex are the complements of the minimal primes, and
//! the inverse direction recovers the ideal from the minimal non-faces.

use crate::monomial::MonomialIdeal;
use crate::ring::{Monomial, Ring, VarId};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SrError {
    #[error("ideal is not squarefree")]
    NotSquarefree,
}

/// Minimal prime of a squarefree monomial ideal: the set of variable ids it
/// is generated by, ascending.
pub type PrimeComponent = Vec<VarId>;

/// Simplicial complex on vertices 0..num_vertices given by its facets.
/// Facets are sorted vertex lists forming an antichain; the complex whose
/// only face is the empty set has the single facet []. The void complex
/// (no faces at all) is not representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by the given faces: keeps the maximal
    /// ones. At least one face is required (the empty face counts).
    pub fn new(num_vertices: usize, faces: Vec<Vec<usize>>) -> SimplicialComplex {
        assert!(!faces.is_empty(), "the void complex is not supported");
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                assert!(f.iter().all(|&v| v < num_vertices));
                f
            })
            .collect();
        faces.sort();
        faces.dedup();
        let maximal: Vec<Vec<usize>> = faces
            .iter()
            .filter(|f| {
                !faces
                    .iter()
                    .any(|g| g.len() > f.len() && is_subset(f, g))
            })
            .cloned()
            .collect();
        let mut facets = maximal;
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplex { num_vertices, facets }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.facets.iter().any(|g| is_subset(&f, g))
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// All minimal transversals (minimal hitting sets) of the hypergraph.
/// Branch and reduce: pick the smallest uncovered edge, branch on each of its
/// vertices; a final antichain filter removes non-minimal candidates.
pub fn minimal_transversals(num_vertices: usize, edges: &[Vec<usize>]) -> Vec<Vec<usize>> {
    // an edge containing another is hit whenever the smaller one is
    let mut edges: Vec<Vec<usize>> = edges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            e.sort_unstable();
            e.dedup();
            e
        })
        .collect();
    edges.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    edges.dedup();
    let edges: Vec<Vec<usize>> = edges
        .iter()
        .filter(|e| !edges.iter().any(|f| f.len() < e.len() && is_subset(f, e)))
        .cloned()
        .collect();

    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    branch(num_vertices, &edges, &mut chosen, &mut candidates);

    for c in &mut candidates {
        c.sort_unstable();
    }
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    candidates.dedup();
    let minimal: Vec<Vec<usize>> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.len() < c.len() && is_subset(d, c))
        })
        .cloned()
        .collect();
    minimal
}

fn branch(
    num_vertices: usize,
    edges: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let uncovered = edges
        .iter()
        .filter(|e| !e.iter().any(|v| chosen.contains(v)))
        .min_by_key(|e| e.len());
    match uncovered {
        None => out.push(chosen.clone()),
        Some(e) => {
            for &v in e {
                debug_assert!(v < num_vertices);
                chosen.push(v);
                branch(num_vertices, edges, chosen, out);
                chosen.pop();
            }
        }
    }
}

/// Minimal primes of a squarefree monomial ideal, each a sorted variable
/// list; sorted by (size, lex). The zero ideal has no components (empty
/// intersection convention).
pub fn minimal_primes(j: &MonomialIdeal) -> Result<Vec<PrimeComponent>, SrError> {
    if !j.is_squarefree() {
        return Err(SrError::NotSquarefree);
    }
    if j.is_zero() {
        return Ok(Vec::new());
    }
    let edges: Vec<Vec<usize>> = j.gens().iter().map(|g| g.support()).collect();
    Ok(minimal_transversals(j.ring().num_vars(), &edges))
}

/// Stanley-Reisner complex of a squarefree monomial ideal: facets are the
/// complements of the minimal primes; the zero ideal gives the full simplex.
pub fn sr_facets(j: &MonomialIdeal) -> Result<SimplicialComplex, SrError> {
    let n = j.ring().num_vars();
    let primes = minimal_primes(j)?;
    if primes.is_empty() {
        return Ok(SimplicialComplex::new(n, vec![(0..n).collect()]));
    }
    let facets: Vec<Vec<usize>> = primes
        .iter()
        .map(|p| (0..n).filter(|v| !p.contains(v)).collect())
        .collect();
    Ok(SimplicialComplex::new(n, facets))
}

/// Squarefree monomial ideal of a complex: generated by the minimal
/// non-faces, i.e. the minimal transversals of the facet complements.
pub fn ideal_from_facets(complex: &SimplicialComplex, ring: &Ring) -> MonomialIdeal {
    let n = complex.num_vertices();
    assert_eq!(ring.num_vars(), n);
    let co_facets: Vec<Vec<usize>> = complex
        .facets()
        .iter()
        .map(|f| (0..n).filter(|v| !f.contains(v)).collect())
        .collect();
    let non_faces = minimal_transversals(n, &co_facets);
    let gens: Vec<Monomial> = non_faces
        .iter()
        .map(|s| {
            let pairs: Vec<(VarId, u32)> = s.iter().map(|&v| (v, 1)).collect();
            Monomial::from_pairs(n, &pairs)
        })
        .collect();
    MonomialIdeal::new(ring.clone(), gens).expect("non-faces are nonempty sets")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;
    use itertools::Itertools;

    fn mono(ring: &Ring, vars: &[&str]) -> Monomial {
        let pairs: Vec<(VarId, u32)> = vars
            .iter()
            .map(|n| (ring.var_by_name(n).unwrap(), 1))
            .collect();
        Monomial::from_pairs(ring.num_vars(), &pairs)
    }

    #[test]
    fn edge_ideal_of_a_path() {
        // <xy, yz>: primes {y}, {x,z}
        let r = Ring::simple(&["x", "y", "z"]);
        let j = MonomialIdeal::new(r.clone(), vec![mono(&r, &["x", "y"]), mono(&r, &["y", "z"])]).unwrap();
        let primes = minimal_primes(&j).unwrap();
        assert_eq!(primes, vec![vec![1], vec![0, 2]]);
        let complex = sr_facets(&j).unwrap();
        assert_eq!(complex.facets(), &[vec![1], vec![0, 2]]);
        assert!(complex.is_face(&[0, 2]));
        assert!(!complex.is_face(&[0, 1]));
        assert!(complex.is_face(&[]));
        let back = ideal_from_facets(&complex, &r);
        assert_eq!(back, j);
    }

    #[test]
    fn not_squarefree_rejected() {
        let r = Ring::simple(&["x", "y"]);
        let j = MonomialIdeal::new(r.clone(), vec![Monomial::from_pairs(2, &[(0, 2)])]).unwrap();
        assert_eq!(minimal_primes(&j), Err(SrError::NotSquarefree));
        assert_eq!(sr_facets(&j), Err(SrError::NotSquarefree));
    }

    #[test]
    fn zero_ideal_full_simplex() {
        let r = Ring::simple(&["x", "y", "z"]);
        let j = MonomialIdeal::zero(r.clone());
        assert_eq!(minimal_primes(&j).unwrap(), Vec::<Vec<usize>>::new());
        let c = sr_facets(&j).unwrap();
        assert_eq!(c.facets(), &[vec![0, 1, 2]]);
        assert!(ideal_from_facets(&c, &r).is_zero());
    }

    #[test]
    fn empty_facet_complex() {
        // complex {∅} on two vertices: every vertex is a non-face
        let r = Ring::simple(&["x", "y"]);
        let c = SimplicialComplex::new(2, vec![vec![]]);
        let j = ideal_from_facets(&c, &r);
        assert_eq!(j.gens().len(), 2);
        let back = sr_facets(&j).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn variable_ideal() {
        let r = Ring::simple(&["x", "y"]);
        let j = MonomialIdeal::new(r.clone(), vec![mono(&r, &["x"])]).unwrap();
        assert_eq!(minimal_primes(&j).unwrap(), vec![vec![0]]);
        let c = sr_facets(&j).unwrap();
        assert_eq!(c.facets(), &[vec![1]]);
    }

    #[test]
    fn intersection_of_primes_recovers_ideal() {
        let r = Ring::simple(&["a", "b", "c", "d"]);
        let j = MonomialIdeal::new(
            r.clone(),
            vec![mono(&r, &["a", "b"]), mono(&r, &["b", "c"]), mono(&r, &["c", "d"])],
        )
        .unwrap();
        let primes = minimal_primes(&j).unwrap();
        let mut acc: Option<MonomialIdeal> = None;
        for p in &primes {
            let gens = p.iter().map(|&v| Monomial::var(4, v)).collect();
            let pi = MonomialIdeal::new(r.clone(), gens).unwrap();
            acc = Some(match acc {
                None => pi,
                Some(a) => a.intersect(&pi),
            });
        }
        assert_eq!(acc.unwrap(), j);
    }

    #[test]
    fn transversals_match_brute_force() {
        // every subset checked directly on a handful of small hypergraphs
        let cases: Vec<(usize, Vec<Vec<usize>>)> = vec![
            (4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]),
            (5, vec![vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![0, 4]]),
            (3, vec![vec![0], vec![0, 1], vec![1, 2]]),
            (6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]),
        ];
        for (n, edges) in cases {
            let got = minimal_transversals(n, &edges);
            let mut expect: Vec<Vec<usize>> = Vec::new();
            for size in 0..=n {
                for subset in (0..n).combinations(size) {
                    let hits = edges.iter().all(|e| e.iter().any(|v| subset.contains(v)));
                    if hits {
                        let has_smaller = expect.iter().any(|t| is_subset(t, &subset));
                        if !has_smaller {
                            expect.push(subset);
                        }
                    }
                }
            }
            expect.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            assert_eq!(got, expect, "hypergraph on {} vertices: {:?}", n, edges);
        }
    }

    #[test]
    fn facets_are_maximal_faces() {
        let c = SimplicialComplex::new(4, vec![vec![0, 1], vec![0], vec![1, 2], vec![2], vec![3]]);
        assert_eq!(c.facets(), &[vec![3], vec![0, 1], vec![1, 2]]);
    }

    // 6x6 grid of variables, one generator with a square; after polarizing
    // (copy x21~2 appended at the end of the ring) the decomposition is
    // equidimensional with these fifteen codimension-3 primes.
    #[test]
    fn polarized_grid_ideal_has_fifteen_primes() {
        use crate::ring::Grading;

        let names: Vec<String> = (1..=6u32)
            .flat_map(|i| (1..=6u32).map(move |j| format!("x{i}{j}")))
            .collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let r = Ring::simple(&refs);
        let m = |spec: &[(&str, u32)]| {
            let pairs: Vec<(VarId, u32)> = spec
                .iter()
                .map(|&(n, e)| (r.var_by_name(n).unwrap(), e))
                .collect();
            Monomial::from_pairs(r.num_vars(), &pairs)
        };
        let j = MonomialIdeal::new(
            r.clone(),
            vec![
                m(&[("x13", 1), ("x21", 2), ("x32", 1), ("x34", 1), ("x43", 1), ("x55", 1)]),
                m(&[("x12", 1), ("x23", 1), ("x31", 1), ("x34", 1), ("x43", 1), ("x55", 1)]),
                m(&[("x12", 1), ("x21", 1), ("x34", 1), ("x43", 1), ("x55", 1)]),
                m(&[("x12", 1), ("x21", 1), ("x33", 1)]),
                m(&[("x11", 1)]),
            ],
        )
        .unwrap();
        let p = j.polarize(&Grading::standard(&r));
        let pr = p.ideal.ring();
        let primes = minimal_primes(&p.ideal).unwrap();

        let expect_names: Vec<[&str; 3]> = vec![
            ["x11", "x12", "x13"],
            ["x11", "x12", "x21"],
            ["x11", "x12", "x21~2"],
            ["x11", "x12", "x32"],
            ["x11", "x12", "x34"],
            ["x11", "x12", "x43"],
            ["x11", "x12", "x55"],
            ["x11", "x21", "x23"],
            ["x11", "x21", "x31"],
            ["x11", "x21", "x34"],
            ["x11", "x21", "x43"],
            ["x11", "x21", "x55"],
            ["x11", "x33", "x34"],
            ["x11", "x33", "x43"],
            ["x11", "x33", "x55"],
        ];
        let mut expect: Vec<Vec<VarId>> = expect_names
            .iter()
            .map(|p| {
                let mut ids: Vec<VarId> =
                    p.iter().map(|n| pr.var_by_name(n).unwrap()).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        expect.sort();
        assert_eq!(primes.len(), 15);
        assert!(primes.iter().all(|p| p.len() == 3));
        assert_eq!(primes, expect);
    }
}
