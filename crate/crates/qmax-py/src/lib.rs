//! Python bindings. Reports come back as plain dicts with the same layout as
//! the CLI's `--json` results.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;
use qmax::cli::prop_ids;
use qmax::corpus::CorpusConfig;
use qmax::report;
use qmax::ring::{parse_ideal, ExtSpec, RingSpec};
use qmax::suites::{run_suite, SuiteOptions};
use qmax::Error;
use serde_json::Value;

fn err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit(_) | Error::InternalInconsistency(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn build(spec: &str) -> PyResult<qmax::Ring> {
    RingSpec::parse(spec).and_then(|s| s.build()).map_err(err)
}

/// A finite commutative ring given by a spec such as "Z/12" or
/// "poly(Z/2, x^3)".
#[pyclass(frozen, module = "qmax_py")]
struct Ring {
    spec: String,
    ring: qmax::Ring,
}

#[pymethods]
impl Ring {
    #[new]
    fn new(spec: &str) -> PyResult<Ring> {
        Ok(Ring { spec: spec.to_string(), ring: build(spec)? })
    }

    #[getter]
    fn size(&self) -> usize {
        self.ring.size()
    }

    #[getter]
    fn spec(&self) -> &str {
        &self.spec
    }

    /// Index of a named generator such as "x".
    fn element(&self, name: &str) -> PyResult<usize> {
        self.ring.element_by_name(name).ok_or_else(|| PyValueError::new_err(format!("no element named {name:?}")))
    }

    /// Sorted members of the ideal generated by `gens`.
    fn ideal(&self, gens: &str) -> PyResult<Vec<usize>> {
        Ok(parse_ideal(&self.ring, gens).map_err(err)?.to_vec())
    }

    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &report::analyze_ring(&self.ring).map_err(err)?)
    }

    fn classify<'py>(&self, py: Python<'py>, ideal: &str) -> PyResult<Bound<'py, PyAny>> {
        let i = parse_ideal(&self.ring, ideal).map_err(err)?;
        to_py(py, &report::classify_report(&self.ring, &i).map_err(err)?)
    }

    fn lattice<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &report::lattice_report(&self.ring).map_err(err)?)
    }

    fn construct<'py>(&self, py: Python<'py>, ideal: &str) -> PyResult<Bound<'py, PyAny>> {
        let i = parse_ideal(&self.ring, ideal).map_err(err)?;
        to_py(py, &report::construct_report(&self.ring, &i).map_err(err)?)
    }

    fn __len__(&self) -> usize {
        self.ring.size()
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?})", self.spec)
    }
}

/// Summary of a ring, or of an extension written ext(R, S) / ext([gens], S).
#[pyfunction]
fn analyze<'py>(py: Python<'py>, spec: &str) -> PyResult<Bound<'py, PyAny>> {
    let v = if spec.trim_start().starts_with("ext(") {
        let e = ExtSpec::parse(spec).and_then(|s| s.build()).map_err(err)?;
        report::analyze_extension(&e)
    } else {
        report::analyze_ring(&build(spec)?)
    };
    to_py(py, &v.map_err(err)?)
}

#[pyfunction]
fn classify<'py>(py: Python<'py>, spec: &str, ideal: &str) -> PyResult<Bound<'py, PyAny>> {
    Ring::new(spec)?.classify(py, ideal)
}

#[pyfunction]
fn construct<'py>(py: Python<'py>, spec: &str, ideal: &str) -> PyResult<Bound<'py, PyAny>> {
    Ring::new(spec)?.construct(py, ideal)
}

#[pyfunction]
fn lattice<'py>(py: Python<'py>, spec: &str) -> PyResult<Bound<'py, PyAny>> {
    Ring::new(spec)?.lattice(py)
}

#[pyfunction]
fn z_ideal<'py>(py: Python<'py>, n: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &report::z_ideal_report(n).map_err(err)?)
}

/// Runs a verification suite (or "all") and returns {passed, suites}.
#[pyfunction]
#[pyo3(signature = (suite, max_size = None, seed = 0, props = None))]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    max_size: Option<usize>,
    seed: u64,
    props: Option<Vec<String>>,
) -> PyResult<Bound<'py, PyAny>> {
    let mut corpus = CorpusConfig { seed, ..CorpusConfig::default() };
    if let Some(n) = max_size {
        corpus.max_size = n;
    }
    if let Some(bad) = props.iter().flatten().find(|p| !prop_ids().contains(&p.as_str())) {
        return Err(PyValueError::new_err(format!("unknown statement id {bad:?}")));
    }
    let opts = SuiteOptions { corpus, props, records: false };
    let reports = py.detach(|| run_suite(suite, &opts)).map_err(err)?;
    to_py(py, &report::verify_report(&reports))
}

#[pyfunction]
fn suite_names() -> Vec<&'static str> {
    qmax::suites::suite_names()
}

#[pymodule]
fn qmax_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(lattice, m)?)?;
    m.add_function(wrap_pyfunction!(z_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    Ok(())
}
