//! Hieroglyph assembly, tablet filtering, rendering, and JSON export.
//!
//! The pipeline: initial ideal of a homogeneous ideal under a term order,
//! polarization to a squarefree monomial ideal, minimal primes, one
//! hieroglyph per prime. The tablet keeps the hieroglyphs of minimal size;
//! their count is the degree of the original projective scheme, and the
//! weighted count is its multidegree.

use num::bigint::BigInt;
use num::One;
use serde::{Deserialize, Serialize};

use crate::groebner::{initial_ideal, is_homogeneous, Ideal};
use crate::kpoly::LaurentPoly;
use crate::monomial::MonomialIdealError;
use crate::ring::{Grading, GridCell, Ring, TermOrder, VarId};
use crate::stanley_reisner::minimal_primes;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TabletError {
    #[error("generators are not homogeneous for the grading")]
    NotHomogeneous,
    #[error("ideal contains a unit")]
    ContainsUnit,
    #[error("variables have unequal total degrees")]
    UnequalTotalDegrees,
    #[error("variable {0} has no grid metadata")]
    MissingGridMetadata(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Glyph {
    /// Mark on an original variable (copy 1).
    Plus,
    /// Mark on a polarization copy (copy >= 2).
    CircledPlus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderMode {
    Ascii,
    Unicode,
}

/// One prime component of the decomposed initial ideal: the variables that
/// generate it (marks), their glyph classes, and the grid cells obtained by
/// collapsing copies onto their base variable's cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hieroglyph {
    pub marks: Vec<VarId>,
    pub glyphs: Vec<Glyph>,
    pub support: Vec<GridCell>,
}

impl Hieroglyph {
    fn from_prime(ring: &Ring, prime: &[VarId]) -> Hieroglyph {
        let marks = prime.to_vec();
        let glyphs = marks
            .iter()
            .map(|&id| {
                if ring.var(id).copy_index == 1 {
                    Glyph::Plus
                } else {
                    Glyph::CircledPlus
                }
            })
            .collect();
        let mut support: Vec<GridCell> = marks
            .iter()
            .filter_map(|&id| ring.var(id).grid)
            .collect();
        support.sort();
        support.dedup();
        Hieroglyph { marks, glyphs, support }
    }

    pub fn size(&self) -> usize {
        self.marks.len()
    }
}

/// Result of the full pipeline. `ring` is the polarized ring the marks live
/// in; `base_ring` and `order` describe the input.
#[derive(Clone, Debug)]
pub struct Tablet {
    pub ring: Ring,
    pub base_ring: Ring,
    pub order: TermOrder,
    /// Grading on the polarized ring (copies inherit weights).
    pub grading: Grading,
    /// Minimal-size hieroglyphs, sorted by (support, marks).
    pub hieroglyphs: Vec<Hieroglyph>,
    /// Full decomposition, sorted by (size, support, marks).
    pub all_components: Vec<Hieroglyph>,
    pub equidimensional: bool,
}

impl Tablet {
    pub fn size(&self) -> usize {
        self.hieroglyphs.len()
    }

    pub fn render(&self, mode: RenderMode) -> Result<String, TabletError> {
        let blocks: Result<Vec<String>, TabletError> = self
            .hieroglyphs
            .iter()
            .map(|h| render_hieroglyph(h, &self.ring, mode))
            .collect();
        Ok(blocks?.join("\n\n"))
    }
}

/// Initial ideal, polarization, decomposition, min-size filter.
pub fn build_tablet(ideal: &Ideal, ord: &TermOrder, g: &Grading) -> Result<Tablet, TabletError> {
    if !is_homogeneous(ideal, g) {
        return Err(TabletError::NotHomogeneous);
    }
    if ideal.gens().iter().any(|p| p.is_unit_constant()) {
        return Err(TabletError::ContainsUnit);
    }
    let j = match initial_ideal(ideal, ord) {
        Ok(j) => j,
        Err(MonomialIdealError::ContainsUnit) => return Err(TabletError::ContainsUnit),
        Err(MonomialIdealError::NothingToPolarize) => unreachable!(),
    };
    let polar = j.polarize(g);
    let ring = polar.ideal.ring().clone();

    let components: Vec<Hieroglyph> = if polar.ideal.is_zero() {
        // empty intersection: the whole space, one empty hieroglyph
        vec![Hieroglyph { marks: Vec::new(), glyphs: Vec::new(), support: Vec::new() }]
    } else {
        let primes = minimal_primes(&polar.ideal).expect("polarization is squarefree");
        primes
            .iter()
            .map(|p| Hieroglyph::from_prime(&ring, p))
            .collect()
    };

    let min_size = components.iter().map(Hieroglyph::size).min().unwrap();
    let equidimensional = components.iter().all(|h| h.size() == min_size);
    let mut all_components = components;
    all_components.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| a.support.cmp(&b.support))
            .then_with(|| a.marks.cmp(&b.marks))
    });
    let mut hieroglyphs: Vec<Hieroglyph> = all_components
        .iter()
        .filter(|h| h.size() == min_size)
        .cloned()
        .collect();
    hieroglyphs.sort_by(|a, b| a.support.cmp(&b.support).then_with(|| a.marks.cmp(&b.marks)));

    Ok(Tablet {
        ring,
        base_ring: ideal.ring().clone(),
        order: ord.clone(),
        grading: polar.grading,
        hieroglyphs,
        all_components,
        equidimensional,
    })
}

/// Tablet-side multidegree: sum over the tablet of the product of the mark
/// weights. Requires all variables to share one total degree.
pub fn tablet_multidegree(t: &Tablet) -> Result<LaurentPoly, TabletError> {
    if !t.grading.equal_total_degrees() {
        return Err(TabletError::UnequalTotalDegrees);
    }
    let d = t.grading.dim();
    let mut out = LaurentPoly::zero(d);
    for h in &t.hieroglyphs {
        let mut e = vec![0i64; d];
        for &id in &h.marks {
            for (a, &w) in e.iter_mut().zip(t.grading.weight_of_var(id)) {
                *a += w;
            }
        }
        out.add_term(e, &BigInt::one());
    }
    Ok(out)
}

/// Character grid for one hieroglyph. Cells carrying no variable at all
/// print as spaces; cells with variables print the glyph of the marks that
/// collapse there ('+' wins over the circled form), or a dot.
pub fn render_hieroglyph(h: &Hieroglyph, ring: &Ring, mode: RenderMode) -> Result<String, TabletError> {
    for &id in &h.marks {
        if ring.var(id).grid.is_none() {
            return Err(TabletError::MissingGridMetadata(ring.name(id)));
        }
    }
    let (plus, circled, dot) = match mode {
        RenderMode::Ascii => ('+', '@', '.'),
        RenderMode::Unicode => ('+', '\u{2295}', '\u{00b7}'),
    };

    let mut panes: Vec<u32> = ring.vars().iter().filter_map(|v| v.grid.map(|g| g.pane)).collect();
    panes.sort_unstable();
    panes.dedup();
    let dims: Vec<(u32, u32, u32)> = panes
        .iter()
        .map(|&p| {
            let mut rows = 0;
            let mut cols = 0;
            for v in ring.vars() {
                if let Some(g) = v.grid {
                    if g.pane == p {
                        rows = rows.max(g.row);
                        cols = cols.max(g.col);
                    }
                }
            }
            (p, rows, cols)
        })
        .collect();
    let max_rows = dims.iter().map(|&(_, r, _)| r).max().unwrap_or(0);

    let occupied = |pane: u32, row: u32, col: u32| {
        ring.vars()
            .iter()
            .any(|v| v.grid == Some(GridCell { pane, row, col }))
    };
    let glyph_at = |pane: u32, row: u32, col: u32| -> char {
        let cell = GridCell { pane, row, col };
        let mut best: Option<Glyph> = None;
        for (&id, &g) in h.marks.iter().zip(&h.glyphs) {
            if ring.var(id).grid == Some(cell) {
                if g == Glyph::Plus {
                    return plus;
                }
                best = Some(g);
            }
        }
        match best {
            Some(Glyph::CircledPlus) => circled,
            Some(Glyph::Plus) => plus,
            None => {
                if occupied(pane, row, col) {
                    dot
                } else {
                    ' '
                }
            }
        }
    };

    let mut lines = Vec::new();
    for row in 1..=max_rows {
        let mut line = String::new();
        for (i, &(pane, rows, cols)) in dims.iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            for col in 1..=cols {
                if row <= rows {
                    line.push(glyph_at(pane, row, col));
                } else {
                    line.push(' ');
                }
            }
        }
        lines.push(line.trim_end().to_string());
    }
    Ok(lines.join("\n"))
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct TabletJson {
    pub ring: Vec<VariableJson>,
    pub order: OrderJson,
    pub tablet_size: usize,
    pub equidimensional: bool,
    pub tablet: Vec<HieroglyphJson>,
    pub all_components: Vec<HieroglyphJson>,
    pub degree: usize,
    pub multidegree: Option<std::collections::BTreeMap<String, i64>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct VariableJson {
    pub base_name: String,
    pub copy_index: u32,
    pub pane: Option<u32>,
    pub row: Option<u32>,
    pub col: Option<u32>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct OrderJson {
    pub kind: String,
    pub reading: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct HieroglyphJson {
    pub marks: Vec<usize>,
    pub support: Vec<[u32; 3]>,
}

impl TabletJson {
    pub fn from_tablet(t: &Tablet) -> TabletJson {
        let hier = |h: &Hieroglyph| HieroglyphJson {
            marks: h.marks.clone(),
            support: h.support.iter().map(|c| [c.pane, c.row, c.col]).collect(),
        };
        let multidegree = tablet_multidegree(t).ok().map(|md| {
            md.terms()
                .iter()
                .map(|(e, c)| {
                    let key = e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                    let val = i64::try_from(c.clone()).expect("multidegree coefficient fits i64");
                    (key, val)
                })
                .collect()
        });
        TabletJson {
            ring: t
                .ring
                .vars()
                .iter()
                .map(|v| VariableJson {
                    base_name: v.base_name.clone(),
                    copy_index: v.copy_index,
                    pane: v.grid.map(|g| g.pane),
                    row: v.grid.map(|g| g.row),
                    col: v.grid.map(|g| g.col),
                })
                .collect(),
            order: OrderJson {
                kind: match t.order.kind {
                    crate::ring::OrderKind::Lex => "lex".to_string(),
                    crate::ring::OrderKind::GRevLex => "grevlex".to_string(),
                },
                reading: t.order.reading().iter().map(|&id| t.base_ring.name(id)).collect(),
            },
            tablet_size: t.hieroglyphs.len(),
            equidimensional: t.equidimensional,
            tablet: t.hieroglyphs.iter().map(hier).collect(),
            all_components: t.all_components.iter().map(hier).collect(),
            degree: t.hieroglyphs.len(),
            multidegree,
        }
    }
}

pub fn tablet_to_json(t: &Tablet) -> String {
    serde_json::to_string_pretty(&TabletJson::from_tablet(t)).expect("serialization cannot fail")
}

pub fn tablet_from_json(s: &str) -> Result<TabletJson, serde_json::Error> {
    serde_json::from_str(s)
}
