//! Python bindings for the hiero pipeline.
//!
//! The module mirrors the CLI: load an ideal file (text, builtin fixture, or
//! one of the generated families), then run the stages or the whole tablet
//! pipeline. K-polynomials cross the boundary as (exponent, coefficient)
//! pair lists; tablets as handles with renders and JSON export.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hiero::families::bpds::bpds;
use hiero::families::checks::{run_checks, CheckKind};
use hiero::families::pipe_dreams::pipe_dreams;
use hiero::families::Permutation;
use hiero::fixtures;
use hiero::groebner::{buchberger, initial_ideal};
use hiero::kpoly::{degree, kpoly_faces, kpoly_split, kpoly_taylor, LaurentPoly};
use hiero::parse::{parse_ideal_file, pretty_print, ParsedFile};
use hiero::ring::Grading;
use hiero::tablet::{build_tablet, tablet_multidegree, tablet_to_json, RenderMode, Tablet};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn kpoly_pairs(k: &LaurentPoly) -> Vec<(Vec<i64>, BigInt)> {
    k.terms().iter().map(|(e, c)| (e.clone(), c.clone())).collect()
}

/// An ideal with its ring, term order, and grading.
#[pyclass(frozen, name = "IdealFile")]
struct PyIdealFile {
    inner: ParsedFile,
}

#[pymethods]
impl PyIdealFile {
    /// Parse ideal-file text.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let inner = parse_ideal_file(text).map_err(value_err)?;
        Ok(PyIdealFile { inner })
    }

    /// Load a builtin fixture by id (see `builtins()`).
    #[staticmethod]
    fn builtin(id: &str) -> PyResult<Self> {
        let inner = fixtures::build(id)
            .ok_or_else(|| value_err(format!("unknown builtin {id:?}")))?;
        Ok(PyIdealFile { inner })
    }

    /// Schubert determinantal ideal of a permutation in one-line notation,
    /// with the diagonal term order and the row grading.
    #[staticmethod]
    fn schubert(w: &str) -> PyResult<Self> {
        let w = Permutation::parse(w).map_err(value_err)?;
        Ok(PyIdealFile { inner: fixtures::schubert_file(&w) })
    }

    /// Ideal of commuting generic n by n matrices, n at most 3.
    #[staticmethod]
    fn commuting(n: usize) -> PyResult<Self> {
        if n == 0 || n > 3 {
            return Err(value_err("n must be 1, 2, or 3"));
        }
        Ok(PyIdealFile { inner: fixtures::commuting_file(n) })
    }

    /// The file in canonical text form.
    fn text(&self) -> String {
        pretty_print(&self.inner)
    }

    fn variables(&self) -> Vec<String> {
        self.inner.ring.vars().iter().map(|v| v.name()).collect()
    }

    fn generators(&self) -> Vec<String> {
        let f = &self.inner;
        f.ideal
            .gens()
            .iter()
            .map(|p| p.display(&f.ring, Some(&f.order)).to_string())
            .collect()
    }

    fn groebner_basis(&self) -> Vec<String> {
        let f = &self.inner;
        buchberger(&f.ideal, &f.order)
            .elements()
            .iter()
            .map(|p| p.display(&f.ring, Some(&f.order)).to_string())
            .collect()
    }

    fn initial_ideal(&self) -> PyResult<Vec<String>> {
        let f = &self.inner;
        let j = initial_ideal(&f.ideal, &f.order).map_err(value_err)?;
        Ok(j.gens().iter().map(|m| m.display(&f.ring).to_string()).collect())
    }

    /// K-polynomial of the initial ideal under the file's grading, as
    /// (exponent vector, coefficient) pairs. Algorithms: "split" (default),
    /// "taylor", "faces".
    #[pyo3(signature = (algo = "split"))]
    fn kpoly(&self, algo: &str) -> PyResult<Vec<(Vec<i64>, BigInt)>> {
        let f = &self.inner;
        let j = initial_ideal(&f.ideal, &f.order).map_err(value_err)?;
        let k = match algo {
            "split" => kpoly_split(&j, &f.grading),
            "taylor" => kpoly_taylor(&j, &f.grading).map_err(value_err)?,
            "faces" => kpoly_faces(&j, &f.grading).map_err(value_err)?,
            other => return Err(value_err(format!("unknown algorithm {other:?}"))),
        };
        Ok(kpoly_pairs(&k))
    }

    /// Degree of the projective scheme, from the K-polynomial under the
    /// standard grading.
    fn degree(&self) -> PyResult<u64> {
        let f = &self.inner;
        let j = initial_ideal(&f.ideal, &f.order).map_err(value_err)?;
        let k = kpoly_split(&j, &Grading::standard(&f.ring));
        degree(&k).map_err(value_err)
    }

    /// Run the full pipeline: initial ideal, polarization, decomposition.
    fn tablet(&self) -> PyResult<PyTablet> {
        let f = &self.inner;
        let t = build_tablet(&f.ideal, &f.order, &f.grading).map_err(value_err)?;
        Ok(PyTablet { inner: t })
    }
}

/// Tablet of hieroglyphs: the minimal primes of the polarized initial
/// ideal, filtered to minimal size.
#[pyclass(frozen, name = "Tablet")]
struct PyTablet {
    inner: Tablet,
}

#[pymethods]
impl PyTablet {
    /// Number of hieroglyphs, which equals the degree.
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn equidimensional(&self) -> bool {
        self.inner.equidimensional
    }

    #[pyo3(signature = (unicode = false))]
    fn render(&self, unicode: bool) -> PyResult<String> {
        let mode = if unicode { RenderMode::Unicode } else { RenderMode::Ascii };
        self.inner.render(mode).map_err(value_err)
    }

    fn to_json(&self) -> String {
        tablet_to_json(&self.inner)
    }

    /// Mark variable names of each hieroglyph.
    fn marks(&self) -> Vec<Vec<String>> {
        let t = &self.inner;
        t.hieroglyphs
            .iter()
            .map(|h| h.marks.iter().map(|&id| t.ring.name(id)).collect())
            .collect()
    }

    /// Grid support of each hieroglyph as (pane, row, col) triples.
    fn supports(&self) -> Vec<Vec<(u32, u32, u32)>> {
        self.inner
            .hieroglyphs
            .iter()
            .map(|h| h.support.iter().map(|c| (c.pane, c.row, c.col)).collect())
            .collect()
    }

    /// Sizes of all components, tablet members or not.
    fn component_sizes(&self) -> Vec<usize> {
        self.inner.all_components.iter().map(|h| h.size()).collect()
    }

    /// Multidegree as (exponent vector, coefficient) pairs, or None when the
    /// variables have unequal total degrees.
    fn multidegree(&self) -> Option<Vec<(Vec<i64>, BigInt)>> {
        tablet_multidegree(&self.inner).ok().map(|k| kpoly_pairs(&k))
    }
}

/// Builtin fixture ids with one-line summaries.
#[pyfunction]
fn builtins() -> Vec<(String, String)> {
    fixtures::FIXTURES
        .iter()
        .map(|f| (f.id.to_string(), f.summary.to_string()))
        .collect()
}

/// Reduced pipe dreams of a permutation, each a list of crossing cells.
#[pyfunction]
#[pyo3(name = "pipe_dreams")]
fn py_pipe_dreams(w: &str) -> PyResult<Vec<Vec<(u32, u32)>>> {
    let w = Permutation::parse(w).map_err(value_err)?;
    let dreams = pipe_dreams(&w).map_err(value_err)?;
    Ok(dreams.into_iter().map(|pd| pd.crosses).collect())
}

/// Reduced bumpless pipe dreams of a permutation, rendered as tile grids.
#[pyfunction]
#[pyo3(name = "bpds")]
fn py_bpds(w: &str) -> PyResult<Vec<String>> {
    let w = Permutation::parse(w).map_err(value_err)?;
    let ds = bpds(&w).map_err(value_err)?;
    Ok(ds.iter().map(|b| b.render()).collect())
}

/// Run a conjecture check over all permutations of S_1 through S_upto;
/// kind is "km", "bpd", or "equidim". Returns the reports as JSON.
#[pyfunction]
fn check(kind: &str, upto: usize) -> PyResult<String> {
    let kind = match kind {
        "km" => CheckKind::Km,
        "bpd" => CheckKind::Bpd,
        "equidim" => CheckKind::Equidim,
        other => return Err(value_err(format!("unknown check {other:?}"))),
    };
    if upto == 0 || upto > 5 {
        return Err(value_err("upto must be between 1 and 5"));
    }
    let reports = run_checks(kind, upto);
    Ok(serde_json::to_string_pretty(&reports).expect("reports serialize"))
}

#[pymodule]
fn hiero_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdealFile>()?;
    m.add_class::<PyTablet>()?;
    m.add_function(wrap_pyfunction!(builtins, m)?)?;
    m.add_function(wrap_pyfunction!(py_pipe_dreams, m)?)?;
    m.add_function(wrap_pyfunction!(py_bpds, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
