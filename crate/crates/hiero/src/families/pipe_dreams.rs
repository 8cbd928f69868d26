//! Reduced pipe dreams, enumerated by brute force over cross placements in
//! the staircase region.

use itertools::Itertools;

use super::{FamilyError, Permutation};

/// Cross positions (row, col), 1-based, row + col <= n. Wires run from the
/// west edge (row i) to the top edge (column w(i)): a cross sends them
/// straight through, every other cell bumps west-to-north and south-to-east.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PipeDream {
    pub crosses: Vec<(u32, u32)>,
}

const MAX_N: usize = 7;

/// Permutation wired by the given cross set, if every pipe exits the top.
fn trace(n: usize, cross: &[Vec<bool>]) -> Option<Permutation> {
    let mut one_line = vec![0usize; n];
    for pipe in 1..=n {
        let mut r = pipe;
        let mut c = 1usize;
        let mut from_west = true;
        loop {
            if r == 0 {
                break;
            }
            if c > n {
                return None;
            }
            let is_cross = r <= n && c <= n && r + c <= n && cross[r][c];
            if is_cross {
                if from_west {
                    c += 1;
                } else {
                    r -= 1;
                }
            } else if from_west {
                r -= 1;
                from_west = false;
            } else {
                c += 1;
                from_west = true;
            }
        }
        one_line[pipe - 1] = c;
    }
    Permutation::new(one_line).ok()
}

/// All reduced pipe dreams for w: cross sets of size l(w) in the staircase
/// whose wiring produces w. Row-major deterministic order.
pub fn pipe_dreams(w: &Permutation) -> Result<Vec<PipeDream>, FamilyError> {
    let n = w.n();
    if n > MAX_N {
        return Err(FamilyError::TooLarge(n, MAX_N));
    }
    let mut cells = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i + j <= n {
                cells.push((i, j));
            }
        }
    }
    let l = w.length();
    let mut out = Vec::new();
    let mut grid = vec![vec![false; n + 1]; n + 1];
    for subset in cells.iter().combinations(l) {
        for &&(i, j) in &subset {
            grid[i][j] = true;
        }
        if trace(n, &grid).as_ref() == Some(w) {
            out.push(PipeDream {
                crosses: subset.iter().map(|&&(i, j)| (i as u32, j as u32)).collect(),
            });
        }
        for &&(i, j) in &subset {
            grid[i][j] = false;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_the_empty_dream() {
        let pds = pipe_dreams(&Permutation::identity(4)).unwrap();
        assert_eq!(pds.len(), 1);
        assert!(pds[0].crosses.is_empty());
    }

    #[test]
    fn counts_for_small_permutations() {
        let w = Permutation::parse("2143").unwrap();
        let pds = pipe_dreams(&w).unwrap();
        let sets: Vec<Vec<(u32, u32)>> = pds.iter().map(|p| p.crosses.clone()).collect();
        assert_eq!(sets, vec![vec![(1, 1), (1, 3)], vec![(1, 1), (2, 2)], vec![(1, 1), (3, 1)]]);
        let w = Permutation::parse("214365").unwrap();
        assert_eq!(pipe_dreams(&w).unwrap().len(), 15);
    }

    #[test]
    fn longest_element_has_one_dream() {
        // w0 fills the whole staircase
        let w = Permutation::parse("4321").unwrap();
        let pds = pipe_dreams(&w).unwrap();
        assert_eq!(pds.len(), 1);
        assert_eq!(pds[0].crosses.len(), 6);
    }

    #[test]
    fn counts_over_s3() {
        let counts: Vec<usize> = Permutation::all(3)
            .iter()
            .map(|w| pipe_dreams(w).unwrap().len())
            .collect();
        // lex order of one-line notation: 123, 132, 213, 231, 312, 321
        assert_eq!(counts, vec![1, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn guard_rejects_large_n() {
        let w = Permutation::identity(8);
        assert_eq!(pipe_dreams(&w).unwrap_err(), FamilyError::TooLarge(8, 7));
    }
}
