//! Python bindings for the motzkin-humps library.
//!
//! Path words cross the boundary as strings over U/D/F, marked humps as
//! `(word, up_index)` pairs, tableaux as dicts with `row1`, `row2`, and
//! `column` lists, and all counts as Python ints (exact at any size). Domain
//! violations raise `ValueError`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use motzkin_humps::path::{ClassFlag, ClassPredicate};
use motzkin_humps::tables::{build_triangle, Backend, TriangleKind};
use motzkin_humps::tableaux::HookTableau;
use motzkin_humps::verify::{Identity, ALL_IDENTITIES};
use motzkin_humps::{bijections, formulas, humps, parse_path, tableaux, DEFAULT_ENUM_CAP};

fn value_err(e: motzkin_humps::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(s: &str) -> PyResult<motzkin_humps::PathWord> {
    parse_path(s).map_err(value_err)
}

fn marked(word_text: &str, hump: usize) -> PyResult<bijections::HumpedPath> {
    bijections::HumpedPath::new(word(word_text)?, hump).map_err(value_err)
}

fn cap_or_default(cap: Option<usize>) -> usize {
    cap.unwrap_or(DEFAULT_ENUM_CAP)
}

fn tableau_to_dict<'py>(py: Python<'py>, t: &HookTableau) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("row1", &t.row1)?;
    d.set_item("row2", &t.row2)?;
    d.set_item("column", &t.column)?;
    Ok(d)
}

fn tableau_from_dict(obj: &Bound<'_, PyAny>) -> PyResult<HookTableau> {
    let row1: Vec<u32> = obj.get_item("row1")?.extract()?;
    let row2: Vec<u32> = obj.get_item("row2")?.extract()?;
    let column: Vec<u32> = obj.get_item("column")?.extract()?;
    HookTableau::new(row1, row2, column).map_err(value_err)
}

/// Classification flags and end/min heights of a path word.
#[pyfunction]
fn classify<'py>(py: Python<'py>, word_text: &str) -> PyResult<Bound<'py, PyDict>> {
    let c = motzkin_humps::classify(&word(word_text)?);
    let d = PyDict::new(py);
    d.set_item("motzkin_path", c.motzkin_path)?;
    d.set_item("motzkin_prefix", c.motzkin_prefix)?;
    d.set_item("free_motzkin", c.free_motzkin)?;
    d.set_item("dyck_prefix", c.dyck_prefix)?;
    d.set_item("star_u", c.star_u)?;
    d.set_item("d_star", c.d_star)?;
    d.set_item("end_height", c.end_height)?;
    d.set_item("min_height", c.min_height)?;
    Ok(d)
}

/// Reverse the word and swap U with D (an involution).
#[pyfunction]
fn reverse_complement(word_text: &str) -> PyResult<String> {
    Ok(motzkin_humps::path::reverse_complement(&word(word_text)?).to_string())
}

/// All humps of a word, left to right, as dicts with `up_index`, `flat_run`,
/// `height`, and `peak`.
#[pyfunction]
fn find_humps<'py>(py: Python<'py>, word_text: &str) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for h in humps::find_humps(&word(word_text)?) {
        let d = PyDict::new(py);
        d.set_item("up_index", h.up_index)?;
        d.set_item("flat_run", h.flat_run)?;
        d.set_item("height", h.height)?;
        d.set_item("peak", h.is_peak())?;
        out.append(d)?;
    }
    Ok(out)
}

/// Words of order `n` filtered by class flags and exact height constraints.
#[pyfunction]
#[pyo3(signature = (n, *, motzkin_path=false, motzkin_prefix=false, free_motzkin=false,
                    dyck_prefix=false, star_u=false, d_star=false,
                    end_height=None, min_height=None, cap=None))]
#[allow(clippy::too_many_arguments)]
fn enumerate_words(
    n: usize,
    motzkin_path: bool,
    motzkin_prefix: bool,
    free_motzkin: bool,
    dyck_prefix: bool,
    star_u: bool,
    d_star: bool,
    end_height: Option<i64>,
    min_height: Option<i64>,
    cap: Option<usize>,
) -> PyResult<Vec<String>> {
    let mut pred = ClassPredicate::any();
    let wanted = [
        (motzkin_path, ClassFlag::MotzkinPath),
        (motzkin_prefix, ClassFlag::MotzkinPrefix),
        (free_motzkin, ClassFlag::FreeMotzkin),
        (dyck_prefix, ClassFlag::DyckPrefix),
        (star_u, ClassFlag::StarU),
        (d_star, ClassFlag::DStar),
    ];
    for (on, flag) in wanted {
        if on {
            pred = pred.and(flag);
        }
    }
    pred.end_height = end_height;
    pred.min_height = min_height;
    let words = motzkin_humps::path::enumerate_paths(n, pred, cap_or_default(cap))
        .map_err(value_err)?;
    Ok(words.map(|w| w.to_string()).collect())
}

/// The n-th Motzkin number.
#[pyfunction]
fn motzkin_number(n: i64) -> PyResult<BigInt> {
    motzkin_humps::path::mp_count(n, 0).map_err(value_err)
}

/// Motzkin prefixes of order n ending at height k, by recurrence.
#[pyfunction]
fn mp_count(n: i64, k: i64) -> PyResult<BigInt> {
    motzkin_humps::path::mp_count(n, k).map_err(value_err)
}

/// Free words of order n ending at height 0 (central trinomial coefficient).
#[pyfunction]
#[pyo3(signature = (n, cap=None))]
fn sm_count(n: usize, cap: Option<usize>) -> PyResult<BigInt> {
    humps::sm_count(n, cap_or_default(cap)).map_err(value_err)
}

/// Free words of order n ending at 0 with minimum exactly -k, last non-flat U.
#[pyfunction]
#[pyo3(signature = (n, k, cap=None))]
fn sm_k_count(n: usize, k: usize, cap: Option<usize>) -> PyResult<BigInt> {
    humps::sm_k_count(n, k, cap_or_default(cap)).map_err(value_err)
}

/// Standard hook tableaux of order n with row difference k, by enumeration.
#[pyfunction]
#[pyo3(signature = (n, k, cap=None))]
fn s_count(n: usize, k: usize, cap: Option<usize>) -> PyResult<BigInt> {
    tableaux::s_count(n, k, cap_or_default(cap)).map_err(value_err)
}

/// All standard hook tableaux of order n with row difference k.
#[pyfunction]
#[pyo3(signature = (n, k, cap=None))]
fn enumerate_tableaux<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    cap: Option<usize>,
) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for t in tableaux::enumerate_syt(n, k, cap_or_default(cap)).map_err(value_err)? {
        out.append(tableau_to_dict(py, &t)?)?;
    }
    Ok(out)
}

/// A counting triangle with exact integer entries.
#[pyclass(frozen, name = "Triangle", module = "motzkin_humps_py")]
struct PyTriangle {
    inner: motzkin_humps::Triangle,
}

#[pymethods]
impl PyTriangle {
    #[getter]
    fn n_min(&self) -> usize {
        self.inner.n_min()
    }

    #[getter]
    fn n_max(&self) -> usize {
        self.inner.n_max()
    }

    fn get(&self, n: usize, k: usize) -> PyResult<BigInt> {
        self.inner.get(n, k).cloned().map_err(value_err)
    }

    fn contains(&self, n: usize, k: usize) -> bool {
        self.inner.contains(n, k)
    }

    /// Rows as (n, k_min, values) triples.
    fn rows(&self) -> Vec<(usize, usize, Vec<BigInt>)> {
        self.inner
            .rows()
            .map(|(n, row)| (n, row.k_min, row.values.clone()))
            .collect()
    }

    fn csv(&self) -> String {
        self.inner.to_csv()
    }

    fn json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!("Triangle(rows {}..={})", self.inner.n_min(), self.inner.n_max())
    }
}

/// Build a counting triangle. `kind` is one of "hm", "pm", "s", "mp";
/// `backend` is one of "enum", "formula", "series".
#[pyfunction]
#[pyo3(signature = (kind, backend, n_max, cap=None))]
fn triangle(kind: &str, backend: &str, n_max: usize, cap: Option<usize>) -> PyResult<PyTriangle> {
    let kind: TriangleKind = kind.parse().map_err(value_err)?;
    let backend: Backend = backend.parse().map_err(value_err)?;
    let inner = build_triangle(kind, backend, n_max, cap_or_default(cap)).map_err(value_err)?;
    Ok(PyTriangle { inner })
}

#[pyfunction]
fn binom(a: i64, b: i64) -> BigInt {
    formulas::binom(a, b)
}

/// Closed form for the hump triangle entry (n, k).
#[pyfunction]
fn hm_formula(n: i64, k: i64) -> PyResult<BigInt> {
    formulas::hm_formula(n, k).map_err(value_err)
}

/// Closed form for the peak triangle entry (n, k).
#[pyfunction]
fn pm_formula(n: i64, k: i64) -> PyResult<BigInt> {
    formulas::pm_formula(n, k).map_err(value_err)
}

/// Closed form for the tableau count with row difference k at order n.
#[pyfunction]
fn s_formula(n: i64, k: i64) -> PyResult<BigInt> {
    formulas::s_formula(n, k).map_err(value_err)
}

/// Total hump count over all Motzkin paths of order n.
#[pyfunction]
fn hm_total_formula(n: i64) -> PyResult<BigInt> {
    formulas::hm_total_formula(n).map_err(value_err)
}

/// Dyck prefixes to (2n - m, m) ending with an up step (ballot count).
#[pyfunction]
fn dyck_prefix_end_u(n: i64, m: i64) -> PyResult<BigInt> {
    formulas::dyck_prefix_end_u(n, m).map_err(value_err)
}

/// Standard fillings of classical hooks of order n: 2**(n-1).
#[pyfunction]
fn s11(n: i64) -> PyResult<BigInt> {
    formulas::s11(n).map_err(value_err)
}

/// Marked hump to *U prefix ending at twice the hump height.
#[pyfunction]
fn psi(word_text: &str, hump: usize) -> PyResult<String> {
    Ok(bijections::psi_forward(&marked(word_text, hump)?).to_string())
}

#[pyfunction]
fn psi_inverse(word_text: &str) -> PyResult<(String, usize)> {
    let hp = bijections::psi_inverse(&word(word_text)?).map_err(value_err)?;
    Ok((hp.path().to_string(), hp.hump().up_index))
}

/// Marked hump to free word ending at 0 with minimum minus the hump height.
#[pyfunction]
fn psi_star(word_text: &str, hump: usize) -> PyResult<String> {
    Ok(bijections::psi_star_forward(&marked(word_text, hump)?).to_string())
}

#[pyfunction]
fn psi_star_inverse(word_text: &str) -> PyResult<(String, usize)> {
    let hp = bijections::psi_star_inverse(&word(word_text)?).map_err(value_err)?;
    Ok((hp.path().to_string(), hp.hump().up_index))
}

/// Drop the final up step and trailing flats of a *U prefix at even height.
#[pyfunction]
fn rho1(word_text: &str) -> PyResult<String> {
    Ok(bijections::rho1_forward(&word(word_text)?).map_err(value_err)?.to_string())
}

/// Inverse of `rho1`; needs the original order back.
#[pyfunction]
fn rho1_inverse(word_text: &str, n: usize) -> PyResult<String> {
    Ok(bijections::rho1_inverse(&word(word_text)?, n).map_err(value_err)?.to_string())
}

/// Send a prefix at even height to the matching *U prefix (possibly two up).
#[pyfunction]
fn rho2(word_text: &str) -> PyResult<String> {
    Ok(bijections::rho2_forward(&word(word_text)?).map_err(value_err)?.to_string())
}

/// Inverse of `rho2`; needs k with 2k the original end height.
#[pyfunction]
fn rho2_inverse(word_text: &str, k: usize) -> PyResult<String> {
    Ok(bijections::rho2_inverse(&word(word_text)?, k).map_err(value_err)?.to_string())
}

/// Read a hook tableau off as a D* prefix (row 1 -> U, row 2 -> D, column -> F).
#[pyfunction]
fn phi(tableau: &Bound<'_, PyAny>) -> PyResult<String> {
    Ok(bijections::phi_forward(&tableau_from_dict(tableau)?).map_err(value_err)?.to_string())
}

#[pyfunction]
fn phi_inverse<'py>(py: Python<'py>, word_text: &str) -> PyResult<Bound<'py, PyDict>> {
    let t = bijections::phi_inverse(&word(word_text)?).map_err(value_err)?;
    tableau_to_dict(py, &t)
}

/// Send a D* prefix to a *U prefix at positive even height.
#[pyfunction]
fn varphi(word_text: &str) -> PyResult<String> {
    Ok(bijections::varphi_forward(&word(word_text)?).map_err(value_err)?.to_string())
}

#[pyfunction]
fn varphi_inverse(word_text: &str) -> PyResult<String> {
    Ok(bijections::varphi_inverse(&word(word_text)?).map_err(value_err)?.to_string())
}

/// Full pipeline from a marked hump to a hook tableau.
#[pyfunction]
fn cap_phi<'py>(py: Python<'py>, word_text: &str, hump: usize) -> PyResult<Bound<'py, PyDict>> {
    let t = bijections::cap_phi_forward(&marked(word_text, hump)?).map_err(value_err)?;
    tableau_to_dict(py, &t)
}

#[pyfunction]
fn cap_phi_inverse(tableau: &Bound<'_, PyAny>) -> PyResult<(String, usize)> {
    let hp = bijections::cap_phi_inverse(&tableau_from_dict(tableau)?).map_err(value_err)?;
    Ok((hp.path().to_string(), hp.hump().up_index))
}

/// One application of the order-raising prefix map (CLI map "f").
#[pyfunction]
fn f_step(word_text: &str) -> PyResult<String> {
    Ok(bijections::f_forward(&word(word_text)?).map_err(value_err)?.to_string())
}

/// Inverse of `f_step`; needs the original order back.
#[pyfunction]
fn f_step_inverse(word_text: &str, n: usize) -> PyResult<String> {
    Ok(bijections::f_inverse(&word(word_text)?, n).map_err(value_err)?.to_string())
}

/// (-1) to the number of flats after the last up step.
#[pyfunction]
fn weight(word_text: &str) -> PyResult<i32> {
    bijections::weight(&word(word_text)?).map_err(value_err)
}

/// Move the last flat of a weight -1 *U prefix to the front.
#[pyfunction]
fn move_flat(word_text: &str) -> PyResult<String> {
    Ok(bijections::move_flat(&word(word_text)?).map_err(value_err)?.to_string())
}

#[pyfunction]
fn move_flat_inverse(word_text: &str) -> PyResult<String> {
    Ok(bijections::move_flat_inverse(&word(word_text)?).map_err(value_err)?.to_string())
}

/// The verifiable identities: name, description, and default range.
#[pyfunction]
fn identities<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for id in ALL_IDENTITIES {
        let d = PyDict::new(py);
        d.set_item("name", id.name())?;
        d.set_item("description", id.description())?;
        d.set_item("default_n_max", id.default_n_max())?;
        out.append(d)?;
    }
    Ok(out)
}

/// Verify one identity exhaustively up to `n_max` (default per identity).
/// Returns a report dict; `counterexample` is None when the identity holds.
#[pyfunction]
#[pyo3(signature = (identity, n_max=None, cap=None))]
fn verify<'py>(
    py: Python<'py>,
    identity: &str,
    n_max: Option<usize>,
    cap: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let identity: Identity = identity.parse().map_err(value_err)?;
    let report = motzkin_humps::verify::verify(
        identity,
        n_max.unwrap_or_else(|| identity.default_n_max()),
        cap_or_default(cap),
    )
    .map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("identity", report.identity.name())?;
    d.set_item("range", &report.range)?;
    d.set_item("cases", report.cases)?;
    d.set_item("pass", report.pass)?;
    match &report.counterexample {
        None => d.set_item("counterexample", py.None())?,
        Some(c) => {
            let ce = PyDict::new(py);
            ce.set_item("inputs", &c.inputs)?;
            ce.set_item("lhs", &c.lhs)?;
            ce.set_item("rhs", &c.rhs)?;
            d.set_item("counterexample", ce)?;
        }
    }
    Ok(d)
}

#[pymodule]
fn motzkin_humps_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DEFAULT_ENUM_CAP", DEFAULT_ENUM_CAP)?;
    m.add_class::<PyTriangle>()?;
    for f in [
        wrap_pyfunction!(classify, m)?,
        wrap_pyfunction!(reverse_complement, m)?,
        wrap_pyfunction!(find_humps, m)?,
        wrap_pyfunction!(enumerate_words, m)?,
        wrap_pyfunction!(motzkin_number, m)?,
        wrap_pyfunction!(mp_count, m)?,
        wrap_pyfunction!(sm_count, m)?,
        wrap_pyfunction!(sm_k_count, m)?,
        wrap_pyfunction!(s_count, m)?,
        wrap_pyfunction!(enumerate_tableaux, m)?,
        wrap_pyfunction!(triangle, m)?,
        wrap_pyfunction!(binom, m)?,
        wrap_pyfunction!(hm_formula, m)?,
        wrap_pyfunction!(pm_formula, m)?,
        wrap_pyfunction!(s_formula, m)?,
        wrap_pyfunction!(hm_total_formula, m)?,
        wrap_pyfunction!(dyck_prefix_end_u, m)?,
        wrap_pyfunction!(s11, m)?,
        wrap_pyfunction!(psi, m)?,
        wrap_pyfunction!(psi_inverse, m)?,
        wrap_pyfunction!(psi_star, m)?,
        wrap_pyfunction!(psi_star_inverse, m)?,
        wrap_pyfunction!(rho1, m)?,
        wrap_pyfunction!(rho1_inverse, m)?,
        wrap_pyfunction!(rho2, m)?,
        wrap_pyfunction!(rho2_inverse, m)?,
        wrap_pyfunction!(phi, m)?,
        wrap_pyfunction!(phi_inverse, m)?,
        wrap_pyfunction!(varphi, m)?,
        wrap_pyfunction!(varphi_inverse, m)?,
        wrap_pyfunction!(cap_phi, m)?,
        wrap_pyfunction!(cap_phi_inverse, m)?,
        wrap_pyfunction!(f_step, m)?,
        wrap_pyfunction!(f_step_inverse, m)?,
        wrap_pyfunction!(weight, m)?,
        wrap_pyfunction!(move_flat, m)?,
        wrap_pyfunction!(move_flat_inverse, m)?,
        wrap_pyfunction!(identities, m)?,
        wrap_pyfunction!(verify, m)?,
    ] {
        m.add_function(f)?;
    }
    Ok(())
}
