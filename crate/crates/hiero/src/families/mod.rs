//! Ideal builders for the example families: determinantal ideals, matrix
//! Schubert varieties, the commuting variety, and a tangent-cone fixture,
//! plus the combinatorial enumerators and conjecture harnesses.

pub mod bpds;
pub mod checks;
pub mod pipe_dreams;

use num::bigint::BigInt;
use num::One;

use crate::groebner::Ideal;
use crate::ring::{Coeff, GridCell, Monomial, OrderKind, Polynomial, Ring, Term, TermOrder, VarId};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("no {0}x{0} minor of a {1}x{2} matrix")]
    BadDimensions(usize, usize, usize),
    #[error("not a permutation: {0}")]
    BadPermutation(String),
    #[error("n = {0} exceeds the enumeration guard (n <= {1})")]
    TooLarge(usize, usize),
}

/// A permutation of {1..n} in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Permutation, FamilyError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(FamilyError::BadPermutation(format!("{:?}", one_line)));
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    /// Accepts "2143" (digits) or "2,1,4,3" (comma-separated, any size).
    pub fn parse(s: &str) -> Result<Permutation, FamilyError> {
        let bad = || FamilyError::BadPermutation(s.to_string());
        let entries: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(entries)
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for x in 1..=n {
                if !used[x - 1] {
                    used[x - 1] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// w(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// Coxeter length: the inversion count.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &wi) in self.0.iter().enumerate() {
            inv[wi - 1] = i + 1;
        }
        Permutation(inv)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n() <= 9 {
            for &x in &self.0 {
                write!(f, "{}", x)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// r[i-1][j-1] = #{a <= i : w(a) <= j}.
pub fn rank_matrix(w: &Permutation) -> Vec<Vec<usize>> {
    let n = w.n();
    let mut r = vec![vec![0; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            r[i - 1][j - 1] = (1..=i).filter(|&a| w.apply(a) <= j).count();
        }
    }
    r
}

fn cell_name(i: usize, j: usize, wide: bool) -> String {
    if wide {
        format!("x{}_{}", i, j)
    } else {
        format!("x{}{}", i, j)
    }
}

/// Determinant of a square matrix of variables, expanded over permutations.
fn det_of(ring: &Ring, rows: &[usize], cols: &[usize], entry: &dyn Fn(usize, usize) -> VarId) -> Polynomial {
    let k = rows.len();
    let mut terms = Vec::new();
    let mut perm: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(
        k: usize,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        rows: &[usize],
        cols: &[usize],
        ring: &Ring,
        entry: &dyn Fn(usize, usize) -> VarId,
        terms: &mut Vec<Term>,
    ) {
        if perm.len() == k {
            let mut inv = 0;
            for a in 0..k {
                for b in a + 1..k {
                    if perm[a] > perm[b] {
                        inv += 1;
                    }
                }
            }
            let pairs: Vec<(VarId, u32)> = (0..k).map(|a| (entry(rows[a], cols[perm[a]]), 1)).collect();
            let sign = if inv % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            terms.push(Term {
                coeff: Coeff::from(sign),
                mono: Monomial::from_pairs(ring.num_vars(), &pairs),
            });
            return;
        }
        for c in 0..k {
            if !used[c] {
                used[c] = true;
                perm.push(c);
                rec(k, perm, used, rows, cols, ring, entry, terms);
                perm.pop();
                used[c] = false;
            }
        }
    }
    rec(k, &mut perm, &mut used, rows, cols, ring, entry, &mut terms);
    Polynomial::from_terms(terms)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// All k x k minors of a generic m x n matrix, or of a generic symmetric
/// n x n matrix (upper-triangular variables, x_ij = x_ji). Duplicate minors
/// of the symmetric case are emitted once.
pub fn generic_minor_ideal(m: usize, n: usize, k: usize, symmetric: bool) -> Result<Ideal, FamilyError> {
    if k == 0 || k > m.min(n) || (symmetric && m != n) {
        return Err(FamilyError::BadDimensions(k, m, n));
    }
    let wide = m > 9 || n > 9;
    let ring = if symmetric {
        let mut descr = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                descr.push((cell_name(i, j, wide), 1, Some(GridCell { pane: 0, row: i as u32, col: j as u32 })));
            }
        }
        Ring::new(descr)
    } else {
        let mut descr = Vec::new();
        for i in 1..=m {
            for j in 1..=n {
                descr.push((cell_name(i, j, wide), 1, Some(GridCell { pane: 0, row: i as u32, col: j as u32 })));
            }
        }
        Ring::new(descr)
    };
    let entry = |i: usize, j: usize| -> VarId {
        let (a, b) = if symmetric && i > j { (j, i) } else { (i, j) };
        ring.var_by_name(&cell_name(a, b, wide)).unwrap()
    };
    let mut gens: Vec<Polynomial> = Vec::new();
    for rows in subsets(m, k) {
        for cols in subsets(n, k) {
            let p = det_of(&ring, &rows, &cols, &entry);
            if !p.is_zero() && !gens.contains(&p) {
                gens.push(p);
            }
        }
    }
    Ok(Ideal::new(ring, gens))
}

/// Lex order reading an n x n grid of variables row by row, rows taken in
/// the order given by sigma, left to right within each row.
pub fn row_reading_lex(ring: &Ring, sigma: &Permutation) -> TermOrder {
    let n = sigma.n();
    let wide = n > 9;
    let mut reading = Vec::with_capacity(n * n);
    for r in 1..=n {
        let i = sigma.apply(r);
        for j in 1..=n {
            reading.push(ring.var_by_name(&cell_name(i, j, wide)).unwrap());
        }
    }
    TermOrder::new(OrderKind::Lex, reading)
}

/// The diagonal order: English reading of the grid.
pub fn diagonal_order(ring: &Ring, n: usize) -> TermOrder {
    row_reading_lex(ring, &Permutation::identity(n))
}

/// An antidiagonal order: rows read bottom to top, left to right within rows.
pub fn antidiagonal_order(ring: &Ring, n: usize) -> TermOrder {
    let rev = Permutation::new((1..=n).rev().collect()).unwrap();
    row_reading_lex(ring, &rev)
}

/// Fulton generators: for every (i,j), the (r_ij+1)-minors of the northwest
/// i x j submatrix. Conditions whose minor size exceeds the submatrix are
/// skipped; repeated minors are emitted once.
pub fn schubert_ideal(w: &Permutation) -> Ideal {
    let n = w.n();
    let wide = n > 9;
    let mut descr = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            descr.push((cell_name(i, j, wide), 1, Some(GridCell { pane: 0, row: i as u32, col: j as u32 })));
        }
    }
    let ring = Ring::new(descr);
    let entry = |i: usize, j: usize| -> VarId { ring.var_by_name(&cell_name(i, j, wide)).unwrap() };
    let r = rank_matrix(w);
    let mut seen: std::collections::HashSet<(Vec<usize>, Vec<usize>)> = std::collections::HashSet::new();
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let k = r[i - 1][j - 1] + 1;
            if k > i.min(j) {
                continue;
            }
            for rows in subsets(i, k) {
                for cols in subsets(j, k) {
                    if seen.insert((rows.clone(), cols.clone())) {
                        gens.push(det_of(&ring, &rows, &cols, &entry));
                    }
                }
            }
        }
    }
    Ideal::new(ring, gens)
}

/// Entries of AB - BA for generic n x n matrices A (pane 0) and B (pane 1),
/// in row-major order. For n = 1 this is the zero ideal.
pub fn commuting_ideal(n: usize) -> Ideal {
    let wide = n > 9;
    let mut descr = Vec::new();
    for (pane, letter) in [(0u32, 'a'), (1u32, 'b')] {
        for i in 1..=n {
            for j in 1..=n {
                let name = if wide { format!("{}{}_{}", letter, i, j) } else { format!("{}{}{}", letter, i, j) };
                descr.push((name, 1, Some(GridCell { pane, row: i as u32, col: j as u32 })));
            }
        }
    }
    let ring = Ring::new(descr);
    let a = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let b = |i: usize, j: usize| n * n + (i - 1) * n + (j - 1);
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut terms = Vec::new();
            for k in 1..=n {
                terms.push(Term {
                    coeff: Coeff::from(BigInt::one()),
                    mono: Monomial::from_pairs(ring.num_vars(), &[(a(i, k), 1), (b(k, j), 1)]),
                });
                terms.push(Term {
                    coeff: Coeff::from(-BigInt::one()),
                    mono: Monomial::from_pairs(ring.num_vars(), &[(b(i, k), 1), (a(k, j), 1)]),
                });
            }
            gens.push(Polynomial::from_terms(terms));
        }
    }
    Ideal::new(ring, gens)
}

/// Order for the commuting ideal: grevlex reading the A entries row by row,
/// then the B entries.
pub fn commuting_order(ring: &Ring) -> TermOrder {
    TermOrder::grevlex((0..ring.num_vars()).collect())
}

/// Tangent-cone fixture on the free entries of a 6 x 6 lower unipotent
/// matrix whose row i counts from the bottom: x_ij sits at display row 6-i,
/// column j. Returns the ideal together with the SE-NW order, which reads
/// columns right to left, each bottom to top.
pub fn kl_fixture() -> (Ideal, TermOrder) {
    let mut descr = Vec::new();
    for j in (1..=5).rev() {
        for i in 1..=(6 - j) {
            descr.push((
                format!("x{}{}", i, j),
                1,
                Some(GridCell { pane: 0, row: (6 - i) as u32, col: j as u32 }),
            ));
        }
    }
    let ring = Ring::new(descr);
    let v = |name: &str| ring.var_by_name(name).unwrap();
    let one = || Coeff::from(BigInt::one());
    let neg = || Coeff::from(-BigInt::one());
    let nv = ring.num_vars();
    let gens = vec![
        Polynomial::from_terms(vec![Term { coeff: one(), mono: Monomial::from_pairs(nv, &[(v("x21"), 1)]) }]),
        Polynomial::from_terms(vec![Term { coeff: one(), mono: Monomial::from_pairs(nv, &[(v("x11"), 1)]) }]),
        Polynomial::from_terms(vec![
            Term { coeff: one(), mono: Monomial::from_pairs(nv, &[(v("x13"), 1), (v("x22"), 1)]) },
            Term { coeff: neg(), mono: Monomial::from_pairs(nv, &[(v("x23"), 1), (v("x12"), 1)]) },
        ]),
        Polynomial::from_terms(vec![
            Term { coeff: one(), mono: Monomial::from_pairs(nv, &[(v("x14"), 1), (v("x31"), 1)]) },
            Term { coeff: one(), mono: Monomial::from_pairs(nv, &[(v("x13"), 1), (v("x41"), 1)]) },
            Term { coeff: one(), mono: Monomial::from_pairs(nv, &[(v("x12"), 1), (v("x51"), 1)]) },
        ]),
    ];
    let order = TermOrder::lex((0..nv).collect());
    (Ideal::new(ring, gens), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::is_homogeneous;
    use crate::ring::Grading;

    #[test]
    fn permutation_basics() {
        let w = Permutation::parse("2143").unwrap();
        assert_eq!(w.length(), 2);
        assert_eq!(w.inverse(), w);
        assert_eq!(w.to_string(), "2143");
        let big = Permutation::parse("10,2,3,4,5,6,7,8,9,1").unwrap();
        assert_eq!(big.length(), 17);
        assert!(Permutation::parse("1224").is_err());
        assert!(Permutation::parse("105").is_err());
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn rank_matrix_counts() {
        let id2 = Permutation::identity(2);
        assert_eq!(rank_matrix(&id2), vec![vec![1, 1], vec![1, 2]]);
        let w = Permutation::parse("2143").unwrap();
        let r = rank_matrix(&w);
        assert_eq!(r[0][0], 0);
        assert_eq!(r[2][2], 2);
        // entries weakly increase by at most 1 along rows and columns
        for w in Permutation::all(4) {
            let r = rank_matrix(&w);
            for i in 0..4 {
                for j in 0..4 {
                    if j > 0 {
                        assert!(r[i][j] == r[i][j - 1] || r[i][j] == r[i][j - 1] + 1);
                    }
                    if i > 0 {
                        assert!(r[i][j] == r[i - 1][j] || r[i][j] == r[i - 1][j] + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn minor_ideal_shapes() {
        let i = generic_minor_ideal(3, 3, 2, false).unwrap();
        assert_eq!(i.gens().len(), 9);
        for g in i.gens() {
            assert_eq!(g.terms().len(), 2);
        }
        let s = generic_minor_ideal(3, 3, 2, true).unwrap();
        assert_eq!(s.ring().num_vars(), 6);
        assert_eq!(s.gens().len(), 6);
        assert_eq!(generic_minor_ideal(2, 2, 3, false).unwrap_err(), FamilyError::BadDimensions(3, 2, 2));
    }

    #[test]
    fn schubert_2143_is_x11_and_det() {
        let w = Permutation::parse("2143").unwrap();
        let i = schubert_ideal(&w);
        assert_eq!(i.gens().len(), 2);
        assert_eq!(i.gens()[0].terms().len(), 1);
        assert_eq!(format!("{}", i.gens()[0].display(i.ring(), None)), "x11");
        assert_eq!(i.gens()[1].terms().len(), 6);
        let g = Grading::standard(i.ring());
        assert!(is_homogeneous(&i, &g));
    }

    #[test]
    fn schubert_id_is_zero() {
        let i = schubert_ideal(&Permutation::identity(3));
        assert!(i.is_zero());
    }

    #[test]
    fn schubert_214365_matches_three_dets() {
        let w = Permutation::parse("214365").unwrap();
        let i = schubert_ideal(&w);
        let sizes: Vec<usize> = i.gens().iter().map(|g| g.terms().len()).collect();
        assert_eq!(sizes, vec![1, 6, 120]);
    }

    #[test]
    fn commuting_trace_identity() {
        for n in 1..=3 {
            let i = commuting_ideal(n);
            if n == 1 {
                assert!(i.is_zero());
                continue;
            }
            assert_eq!(i.gens().len(), n * n);
            // raw generators, not minimalized: sum of the diagonal ones is 0
            let mut diag = Polynomial::zero();
            for k in 0..n {
                diag = diag.add(&i.gens()[k * n + k]);
            }
            assert!(diag.is_zero());
        }
    }

    #[test]
    fn commuting_two_displayed_generators() {
        let i = commuting_ideal(2);
        let r = i.ring();
        let nv = r.num_vars();
        let v = |name: &str| r.var_by_name(name).unwrap();
        let t = |c: i64, a: &str, b: &str| Term {
            coeff: Coeff::from(BigInt::from(c)),
            mono: Monomial::from_pairs(nv, &[(v(a), 1), (v(b), 1)]),
        };
        let expected = vec![
            Polynomial::from_terms(vec![t(-1, "a21", "b12"), t(1, "a12", "b21")]),
            Polynomial::from_terms(vec![t(-1, "a12", "b11"), t(1, "a11", "b12"), t(-1, "a22", "b12"), t(1, "a12", "b22")]),
            Polynomial::from_terms(vec![t(1, "a21", "b11"), t(-1, "a11", "b21"), t(1, "a22", "b21"), t(-1, "a21", "b22")]),
            Polynomial::from_terms(vec![t(1, "a21", "b12"), t(-1, "a12", "b21")]),
        ];
        assert_eq!(i.gens(), &expected[..]);
    }

    #[test]
    fn kl_fixture_shape() {
        let (i, ord) = kl_fixture();
        assert_eq!(i.ring().num_vars(), 15);
        assert_eq!(i.gens().len(), 4);
        let names: Vec<String> = ord.reading().iter().map(|&id| i.ring().name(id)).collect();
        assert_eq!(
            names,
            ["x15", "x14", "x24", "x13", "x23", "x33", "x12", "x22", "x32", "x42", "x11", "x21", "x31", "x41", "x51"]
        );
        assert_eq!(i.ring().var(i.ring().var_by_name("x51").unwrap()).grid, Some(GridCell { pane: 0, row: 1, col: 1 }));
    }

    #[test]
    fn reading_orders_pick_expected_diagonals() {
        let w = Permutation::parse("2143").unwrap();
        let i = schubert_ideal(&w);
        let det = &i.gens()[1];
        let diag = diagonal_order(i.ring(), 4);
        let anti = antidiagonal_order(i.ring(), 4);
        assert_eq!(format!("{}", det.leading_term(&diag).unwrap().mono.display(i.ring())), "x11*x22*x33");
        assert_eq!(format!("{}", det.leading_term(&anti).unwrap().mono.display(i.ring())), "x13*x22*x31");
    }
}
