//! Built-in example ideals, each shipped two ways: as input-language text
//! embedded at compile time and as a construction through the family
//! builders. The tests assert that the two agree byte for byte.

use crate::families::{
    commuting_ideal, commuting_order, diagonal_order, generic_minor_ideal, kl_fixture,
    schubert_ideal, Permutation,
};
use crate::parse::{parse_ideal_file, ParsedFile};
use crate::ring::{Grading, Ring, TermOrder};

pub struct Fixture {
    pub id: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        id: "minors-3x3",
        summary: "2x2 minors of a generic 3x3 matrix, diagonal lex; degree 6",
        text: include_str!("../fixtures/minors-3x3.ideal"),
    },
    Fixture {
        id: "sym-minors-3x3",
        summary: "2x2 minors of a symmetric 3x3 matrix, grevlex; not equidimensional",
        text: include_str!("../fixtures/sym-minors-3x3.ideal"),
    },
    Fixture {
        id: "schubert-2143",
        summary: "Schubert determinantal ideal of 2143, diagonal lex, row grading",
        text: include_str!("../fixtures/schubert-2143.ideal"),
    },
    Fixture {
        id: "schubert-214365",
        summary: "Schubert determinantal ideal of 214365, diagonal lex; 15 components",
        text: include_str!("../fixtures/schubert-214365.ideal"),
    },
    Fixture {
        id: "commuting-2",
        summary: "commuting generic 2x2 matrices, grevlex; degree 3",
        text: include_str!("../fixtures/commuting-2.ideal"),
    },
    Fixture {
        id: "commuting-3",
        summary: "commuting generic 3x3 matrices, grevlex; not equidimensional",
        text: include_str!("../fixtures/commuting-3.ideal"),
    },
    Fixture {
        id: "tangent-cone-463512",
        summary: "Kazhdan-Lusztig tangent cone at 463512, southeast lex; multiplicity 4",
        text: include_str!("../fixtures/tangent-cone-463512.ideal"),
    },
];

pub fn fixture(id: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.id == id)
}

/// The embedded text, parsed.
pub fn parsed(id: &str) -> Option<ParsedFile> {
    fixture(id).map(|f| parse_ideal_file(f.text).expect("embedded fixture text parses"))
}

/// The same data built through the family constructors.
pub fn build(id: &str) -> Option<ParsedFile> {
    let file = match id {
        "minors-3x3" => {
            let ideal = generic_minor_ideal(3, 3, 2, false).unwrap();
            let ring = ideal.ring().clone();
            ParsedFile {
                grading: Grading::standard(&ring),
                order: diagonal_order(&ring, 3),
                ring,
                ideal,
            }
        }
        "sym-minors-3x3" => {
            let ideal = generic_minor_ideal(3, 3, 2, true).unwrap();
            let ring = ideal.ring().clone();
            ParsedFile {
                grading: Grading::standard(&ring),
                order: TermOrder::grevlex((0..ring.num_vars()).collect()),
                ring,
                ideal,
            }
        }
        "schubert-2143" => schubert_file(&Permutation::parse("2143").unwrap()),
        "schubert-214365" => schubert_file(&Permutation::parse("214365").unwrap()),
        "commuting-2" => commuting_file(2),
        "commuting-3" => commuting_file(3),
        "tangent-cone-463512" => {
            let (ideal, order) = kl_fixture();
            let ring = ideal.ring().clone();
            ParsedFile { grading: Grading::standard(&ring), order, ring, ideal }
        }
        _ => return None,
    };
    Some(file)
}

/// Schubert determinantal ideal of w with the diagonal term order and the
/// row grading, packaged like a parsed input file.
pub fn schubert_file(w: &Permutation) -> ParsedFile {
    let n = w.n();
    let ideal = schubert_ideal(w);
    let ring = ideal.ring().clone();
    ParsedFile {
        grading: row_grading(&ring, n),
        order: diagonal_order(&ring, n),
        ring,
        ideal,
    }
}

/// Weight of x_ij is the i-th coordinate vector, so the multidegree of a
/// matrix Schubert variety is its Schubert polynomial.
pub fn row_grading(ring: &Ring, n: usize) -> Grading {
    let weights = ring
        .vars()
        .iter()
        .map(|v| {
            let mut w = vec![0i64; n];
            w[v.grid.unwrap().row as usize - 1] = 1;
            w
        })
        .collect();
    Grading::new(ring, n, weights).unwrap()
}

/// Commuting-matrix ideal of two generic n by n matrices with its reverse
/// lexicographic order and the standard grading.
pub fn commuting_file(n: usize) -> ParsedFile {
    let ideal = commuting_ideal(n);
    let ring = ideal.ring().clone();
    ParsedFile {
        grading: Grading::standard(&ring),
        order: commuting_order(&ring),
        ring,
        ideal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::pretty_print;

    #[test]
    fn ids_resolve_both_ways() {
        for f in FIXTURES {
            assert!(fixture(f.id).is_some(), "{}", f.id);
            assert!(build(f.id).is_some(), "{}", f.id);
        }
        assert!(fixture("no-such-fixture").is_none());
        assert!(build("no-such-fixture").is_none());
        let mut ids: Vec<&str> = FIXTURES.iter().map(|f| f.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), FIXTURES.len());
    }

    #[test]
    fn embedded_text_agrees_with_builders() {
        for f in FIXTURES {
            let from_text = parsed(f.id).unwrap();
            let built = build(f.id).unwrap();
            assert_eq!(from_text.ring, built.ring, "{}", f.id);
            assert_eq!(from_text.order, built.order, "{}", f.id);
            assert_eq!(from_text.grading, built.grading, "{}", f.id);
            assert_eq!(from_text.ideal.gens(), built.ideal.gens(), "{}", f.id);
            // shipped text is the canonical form, so regeneration is a no-op
            assert_eq!(pretty_print(&built), f.text, "{}", f.id);
        }
    }

    #[test]
    #[ignore = "rewrites the fixture files in the source tree"]
    fn regenerate_fixture_files() {
        for f in FIXTURES {
            let built = build(f.id).unwrap();
            let path = format!("{}/fixtures/{}.ideal", env!("CARGO_MANIFEST_DIR"), f.id);
            std::fs::write(&path, pretty_print(&built)).unwrap();
        }
    }
}
