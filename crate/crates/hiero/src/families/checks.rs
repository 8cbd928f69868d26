//! Verification harnesses comparing tablets against the combinatorial
//! enumerations. Failures are reported, never thrown.

use serde::{Deserialize, Serialize};

use super::bpds::bpds;
use super::pipe_dreams::pipe_dreams;
use super::{antidiagonal_order, diagonal_order, schubert_ideal, Permutation};
use crate::ring::Grading;
use crate::tablet::{build_tablet, Tablet};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub conjecture: String,
    pub n: usize,
    pub permutation: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// Antidiagonal tablet vs pipe dreams (a proved identity).
    Km,
    /// Diagonal tablet vs bumpless pipe dreams, plus equidimensionality.
    Bpd,
    /// Equidimensionality of the diagonal initial ideal alone.
    Equidim,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Km => "km",
            CheckKind::Bpd => "bpd",
            CheckKind::Equidim => "equidim",
        }
    }
}

fn diagonal_tablet(w: &Permutation) -> Tablet {
    let ideal = schubert_ideal(w);
    let ord = diagonal_order(ideal.ring(), w.n());
    let g = Grading::standard(ideal.ring());
    build_tablet(&ideal, &ord, &g).expect("Fulton generators are homogeneous")
}

fn collapsed_supports(t: &Tablet) -> Vec<Vec<(u32, u32)>> {
    let mut sets: Vec<Vec<(u32, u32)>> = t
        .all_components
        .iter()
        .map(|h| h.support.iter().map(|c| (c.row, c.col)).collect())
        .collect();
    sets.sort();
    sets
}

fn multiset_diff(a: &[Vec<(u32, u32)>], b: &[Vec<(u32, u32)>]) -> (Vec<Vec<(u32, u32)>>, Vec<Vec<(u32, u32)>>) {
    let mut only_a = Vec::new();
    let mut rest: Vec<_> = b.to_vec();
    for x in a {
        if let Some(pos) = rest.iter().position(|y| y == x) {
            rest.remove(pos);
        } else {
            only_a.push(x.clone());
        }
    }
    (only_a, rest)
}

/// Tablet under an antidiagonal order against the pipe dreams: equal counts
/// and equal support multisets.
pub fn check_km(w: &Permutation) -> CheckReport {
    let n = w.n();
    assert!(n <= 5, "check_km is desk-scale only");
    let ideal = schubert_ideal(w);
    let ord = antidiagonal_order(ideal.ring(), n);
    let g = Grading::standard(ideal.ring());
    let t = build_tablet(&ideal, &ord, &g).expect("Fulton generators are homogeneous");
    let supports = collapsed_supports(&t);
    let mut cross_sets: Vec<Vec<(u32, u32)>> = pipe_dreams(w)
        .expect("guarded above")
        .iter()
        .map(|p| p.crosses.clone())
        .collect();
    cross_sets.sort();
    let counts_ok = t.all_components.len() == cross_sets.len() && t.equidimensional;
    let (only_t, only_p) = multiset_diff(&supports, &cross_sets);
    let pass = counts_ok && only_t.is_empty() && only_p.is_empty();
    let details = if pass {
        format!("tablet={} pipe_dreams={} supports=match", t.all_components.len(), cross_sets.len())
    } else {
        format!(
            "tablet={} pipe_dreams={} equidimensional={} only_tablet={:?} only_pipe_dreams={:?}",
            t.all_components.len(),
            cross_sets.len(),
            t.equidimensional,
            only_t,
            only_p
        )
    };
    CheckReport { conjecture: "km".into(), n, permutation: w.to_string(), pass, details }
}

/// Diagonal tablet against the bumpless pipe dreams: equidimensionality and
/// blank-support multiset equality.
pub fn check_bpd_conjecture(w: &Permutation) -> CheckReport {
    let n = w.n();
    assert!(n <= 5, "check_bpd_conjecture is desk-scale only");
    let t = diagonal_tablet(w);
    let supports = collapsed_supports(&t);
    let mut blank_sets: Vec<Vec<(u32, u32)>> = bpds(w)
        .expect("guarded above")
        .iter()
        .map(|b| b.blank_support.clone())
        .collect();
    blank_sets.sort();
    let (only_t, only_b) = multiset_diff(&supports, &blank_sets);
    let supports_match = t.all_components.len() == blank_sets.len() && only_t.is_empty() && only_b.is_empty();
    let pass = t.equidimensional && supports_match;
    let details = if pass {
        format!("equidimensional=true tablet={} bpds={} supports=match", t.all_components.len(), blank_sets.len())
    } else {
        format!(
            "equidimensional={} tablet={} bpds={} only_tablet={:?} only_bpds={:?}",
            t.equidimensional,
            t.all_components.len(),
            blank_sets.len(),
            only_t,
            only_b
        )
    };
    CheckReport { conjecture: "bpd".into(), n, permutation: w.to_string(), pass, details }
}

/// Equidimensionality of the diagonal initial ideal.
pub fn check_equidim(w: &Permutation) -> CheckReport {
    let n = w.n();
    assert!(n <= 5, "check_equidim is desk-scale only");
    let t = diagonal_tablet(w);
    let sizes: Vec<usize> = t.all_components.iter().map(|h| h.size()).collect();
    let details = if t.equidimensional {
        format!("components={} dimension_uniform=true", sizes.len())
    } else {
        format!("components={} sizes={:?}", sizes.len(), sizes)
    };
    CheckReport {
        conjecture: "equidim".into(),
        n,
        permutation: w.to_string(),
        pass: t.equidimensional,
        details,
    }
}

/// Cumulative sweep over S_1 .. S_upto in lex order.
pub fn run_checks(kind: CheckKind, upto: usize) -> Vec<CheckReport> {
    assert!(upto <= 5, "sweeps are desk-scale only");
    let mut out = Vec::new();
    for n in 1..=upto {
        for w in Permutation::all(n) {
            out.push(match kind {
                CheckKind::Km => check_km(&w),
                CheckKind::Bpd => check_bpd_conjecture(&w),
                CheckKind::Equidim => check_equidim(&w),
            });
        }
    }
    out
}
