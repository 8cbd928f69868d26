//! Bumpless pipe dreams: the droop-move closure of the Rothe configuration.
//!
//! Pipes enter from the bottom of each column and leave through the right
//! edge; the pipe entering column j exits in row w^{-1}(j). Six tiles are
//! allowed; a droop takes the elbow at the northwest corner of a rectangle
//! and reroutes the pipe around the southeast corner, moving one blank tile.

use std::collections::{HashSet, VecDeque};

use super::{FamilyError, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Blank,
    /// West-east segment.
    Horiz,
    /// North-south segment.
    Vert,
    /// Two pipes passing straight through.
    Cross,
    /// Arms south and east: a pipe turns from northbound to eastbound.
    ElbowSE,
    /// Arms west and north: a pipe turns from eastbound to northbound.
    ElbowNW,
}

impl Tile {
    pub fn glyph(self) -> char {
        match self {
            Tile::Blank => '\u{00b7}',
            Tile::Horiz => '\u{2500}',
            Tile::Vert => '\u{2502}',
            Tile::Cross => '\u{253c}',
            Tile::ElbowSE => '\u{2514}',
            Tile::ElbowNW => '\u{2510}',
        }
    }

    fn has_horiz(self) -> bool {
        matches!(self, Tile::Horiz | Tile::Cross)
    }

    fn has_vert(self) -> bool {
        matches!(self, Tile::Vert | Tile::Cross)
    }

    fn is_elbow(self) -> bool {
        matches!(self, Tile::ElbowSE | Tile::ElbowNW)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BumplessPipeDream {
    /// tiles[i][j] is the cell in row i+1, column j+1.
    pub tiles: Vec<Vec<Tile>>,
    /// (row, col) of the blank tiles, sorted; its size is l(w).
    pub blank_support: Vec<(u32, u32)>,
}

impl BumplessPipeDream {
    fn from_tiles(tiles: Vec<Vec<Tile>>) -> BumplessPipeDream {
        let mut blank_support = Vec::new();
        for (i, row) in tiles.iter().enumerate() {
            for (j, &t) in row.iter().enumerate() {
                if t == Tile::Blank {
                    blank_support.push((i as u32 + 1, j as u32 + 1));
                }
            }
        }
        BumplessPipeDream { tiles, blank_support }
    }

    pub fn render(&self) -> String {
        self.tiles
            .iter()
            .map(|row| row.iter().map(|t| t.glyph()).collect::<String>())
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Exit row of the pipe entering at the bottom of each column.
    pub fn wiring(&self) -> Permutation {
        let n = self.tiles.len();
        let mut exit_row_of_col = vec![0usize; n];
        for j in 1..=n {
            let mut r = n;
            let mut c = j;
            // direction the pipe is moving
            let mut heading = 'N';
            loop {
                let t = self.tiles[r - 1][c - 1];
                heading = match (t, heading) {
                    (Tile::Vert, 'N') => 'N',
                    (Tile::Cross, h) => h,
                    (Tile::Horiz, 'E') => 'E',
                    (Tile::ElbowSE, 'N') => 'E',
                    (Tile::ElbowNW, 'E') => 'N',
                    _ => panic!("inconsistent tiling at ({}, {})", r, c),
                };
                match heading {
                    'N' => {
                        if r == 1 {
                            panic!("pipe escaped through the top edge");
                        }
                        r -= 1;
                    }
                    _ => {
                        if c == n {
                            break;
                        }
                        c += 1;
                    }
                }
            }
            exit_row_of_col[j - 1] = r;
        }
        // pipe in column j exits at row w^{-1}(j)
        Permutation::new(exit_row_of_col).unwrap().inverse()
    }
}

/// The Rothe configuration: an ElbowSE at every (i, w(i)), verticals below
/// it, horizontals to its right, crossings where those overlap, blanks on
/// the Rothe diagram.
pub fn rothe_bpd(w: &Permutation) -> BumplessPipeDream {
    let n = w.n();
    let winv = w.inverse();
    let mut tiles = vec![vec![Tile::Blank; n]; n];
    for i in 1..=n {
        for j in 1..=n {
            let below = i > winv.apply(j);
            let right = j > w.apply(i);
            tiles[i - 1][j - 1] = if j == w.apply(i) {
                Tile::ElbowSE
            } else if below && right {
                Tile::Cross
            } else if below {
                Tile::Vert
            } else if right {
                Tile::Horiz
            } else {
                Tile::Blank
            };
        }
    }
    BumplessPipeDream::from_tiles(tiles)
}

/// Droop rectangles: ElbowSE at the northwest corner (x1,y1), Blank at the
/// southeast corner (x2,y2), no other elbow inside the rectangle, pure Horiz
/// and Vert at the remaining corners, and the south row / east column free
/// of segments in the direction they will acquire.
fn droops(tiles: &[Vec<Tile>]) -> Vec<Vec<Vec<Tile>>> {
    let n = tiles.len();
    let mut out = Vec::new();
    for x1 in 0..n {
        for y1 in 0..n {
            if tiles[x1][y1] != Tile::ElbowSE {
                continue;
            }
            for x2 in x1 + 1..n {
                for y2 in y1 + 1..n {
                    if tiles[x2][y2] != Tile::Blank {
                        continue;
                    }
                    if tiles[x1][y2] != Tile::Horiz || tiles[x2][y1] != Tile::Vert {
                        continue;
                    }
                    let mut ok = true;
                    'scan: for x in x1..=x2 {
                        for y in y1..=y2 {
                            if (x, y) != (x1, y1) && tiles[x][y].is_elbow() {
                                ok = false;
                                break 'scan;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    if (y1 + 1..y2).any(|y| tiles[x2][y].has_horiz())
                        || (x1 + 1..x2).any(|x| tiles[x][y2].has_vert())
                    {
                        continue;
                    }
                    let mut next = tiles.to_vec();
                    next[x1][y1] = Tile::Blank;
                    next[x2][y2] = Tile::ElbowNW;
                    next[x1][y2] = Tile::ElbowSE;
                    next[x2][y1] = Tile::ElbowSE;
                    for y in y1 + 1..y2 {
                        next[x1][y] = match next[x1][y] {
                            Tile::Horiz => Tile::Blank,
                            Tile::Cross => Tile::Vert,
                            t => panic!("unexpected tile {:?} on the drooped row", t),
                        };
                        next[x2][y] = match next[x2][y] {
                            Tile::Blank => Tile::Horiz,
                            Tile::Vert => Tile::Cross,
                            t => panic!("unexpected tile {:?} on the landing row", t),
                        };
                    }
                    for x in x1 + 1..x2 {
                        next[x][y1] = match next[x][y1] {
                            Tile::Vert => Tile::Blank,
                            Tile::Cross => Tile::Horiz,
                            t => panic!("unexpected tile {:?} on the drooped column", t),
                        };
                        next[x][y2] = match next[x][y2] {
                            Tile::Blank => Tile::Vert,
                            Tile::Horiz => Tile::Cross,
                            t => panic!("unexpected tile {:?} on the landing column", t),
                        };
                    }
                    out.push(next);
                }
            }
        }
    }
    out
}

/// All reduced BPDs for w: breadth-first droop closure of the Rothe
/// configuration, sorted by blank support then tile grid.
pub fn bpds(w: &Permutation) -> Result<Vec<BumplessPipeDream>, FamilyError> {
    let n = w.n();
    if n > 7 {
        return Err(FamilyError::TooLarge(n, 7));
    }
    let start = rothe_bpd(w).tiles;
    let mut seen: HashSet<Vec<Vec<Tile>>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(tiles) = queue.pop_front() {
        for next in droops(&tiles) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<BumplessPipeDream> = seen.into_iter().map(BumplessPipeDream::from_tiles).collect();
    out.sort_by(|a, b| a.blank_support.cmp(&b.blank_support).then_with(|| a.tiles.cmp(&b.tiles)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::pipe_dreams::pipe_dreams;
    use super::*;

    /// Edge-consistency of a tiling plus its boundary conditions.
    fn consistent(tiles: &[Vec<Tile>]) -> bool {
        let n = tiles.len();
        let arms = |t: Tile| -> (bool, bool, bool, bool) {
            // (N, S, E, W)
            match t {
                Tile::Blank => (false, false, false, false),
                Tile::Horiz => (false, false, true, true),
                Tile::Vert => (true, true, false, false),
                Tile::Cross => (true, true, true, true),
                Tile::ElbowSE => (false, true, true, false),
                Tile::ElbowNW => (true, false, false, true),
            }
        };
        for i in 0..n {
            for j in 0..n {
                let (tn, ts, te, tw) = arms(tiles[i][j]);
                if i == 0 && tn {
                    return false;
                }
                if j == 0 && tw {
                    return false;
                }
                if i == n - 1 && !ts {
                    return false;
                }
                if j == n - 1 && !te {
                    return false;
                }
                if i + 1 < n && ts != arms(tiles[i + 1][j]).0 {
                    return false;
                }
                if j + 1 < n && te != arms(tiles[i][j + 1]).3 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn identity_has_only_rothe() {
        let w = Permutation::identity(4);
        let out = bpds(&w).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].blank_support.is_empty());
        assert!(consistent(&out[0].tiles));
        assert_eq!(out[0].wiring(), w);
    }

    #[test]
    fn rothe_blanks_are_the_diagram() {
        let w = Permutation::parse("2143").unwrap();
        let r = rothe_bpd(&w);
        assert_eq!(r.blank_support, vec![(1, 1), (3, 3)]);
        assert!(consistent(&r.tiles));
        assert_eq!(r.wiring(), w);
    }

    #[test]
    fn three_bpds_for_2143() {
        let w = Permutation::parse("2143").unwrap();
        let out = bpds(&w).unwrap();
        let supports: Vec<Vec<(u32, u32)>> = out.iter().map(|b| b.blank_support.clone()).collect();
        assert_eq!(supports, vec![vec![(1, 1), (1, 2)], vec![(1, 1), (2, 1)], vec![(1, 1), (3, 3)]]);
        for b in &out {
            assert!(consistent(&b.tiles));
            assert_eq!(b.wiring(), w);
        }
    }

    #[test]
    fn counts_match_pipe_dreams_on_s4() {
        for w in Permutation::all(4) {
            let nb = bpds(&w).unwrap();
            let np = pipe_dreams(&w).unwrap();
            assert_eq!(nb.len(), np.len(), "count mismatch for {}", w);
            for b in &nb {
                assert!(consistent(&b.tiles), "inconsistent tiling for {}", w);
                assert_eq!(b.wiring(), w, "wrong wiring for {}", w);
                assert_eq!(b.blank_support.len(), w.length());
            }
        }
    }

    #[test]
    fn guard_rejects_large_n() {
        assert_eq!(bpds(&Permutation::identity(8)).unwrap_err(), FamilyError::TooLarge(8, 7));
    }
}
