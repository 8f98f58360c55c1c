//! Python bindings. Structured results (threshold reports, residual reports,
//! equivalence records, sweeps) are returned as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;
use stefan::asymptotics::{estimate_rates, sweep_h0 as core_sweep, ProbeSet};
use stefan::{equivalence, numerics, verify, ConvectiveBc, DirichletBc, Error, MaterialParams, RootConfig};

create_exception!(mushy_stefan, NoSolutionError, PyValueError, "h0 does not exceed the solvability threshold.");
create_exception!(mushy_stefan, ConvergenceError, PyRuntimeError, "A root search failed.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::NoSolution(_) => NoSolutionError::new_err(e.to_string()),
        Error::Convergence { .. } | Error::Bracket { .. } | Error::NoRoot(_) | Error::Overflow { .. } => {
            ConvergenceError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Material", frozen)]
struct PyMaterial {
    inner: stefan::Material,
}

#[pymethods]
impl PyMaterial {
    #[new]
    #[pyo3(signature = (rho=1.0, k1=1.0, k2=1.0, c1=1.0, c2=1.0, l=1.0, eps=0.5, gamma=1.0))]
    #[allow(clippy::too_many_arguments)]
    fn new(rho: f64, k1: f64, k2: f64, c1: f64, c2: f64, l: f64, eps: f64, gamma: f64) -> PyResult<Self> {
        let inner = MaterialParams { rho, k1, k2, c1, c2, l, eps, gamma }.validate().map_err(py_err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn alpha1(&self) -> f64 {
        self.inner.alpha1()
    }

    #[getter]
    fn alpha2(&self) -> f64 {
        self.inner.alpha2()
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner)
    }

    fn __repr__(&self) -> String {
        let p = self.inner.params();
        format!(
            "Material(rho={}, k1={}, k2={}, c1={}, c2={}, l={}, eps={}, gamma={})",
            p.rho, p.k1, p.k2, p.c1, p.c2, p.l, p.eps, p.gamma
        )
    }
}

#[pyclass(name = "Solution", frozen)]
struct PySolution {
    inner: stefan::SimilaritySolution,
}

#[pymethods]
impl PySolution {
    #[getter]
    fn xi(&self) -> f64 {
        self.inner.xi
    }

    #[getter]
    fn mu(&self) -> f64 {
        self.inner.mu
    }

    /// `(A1, B1, A2, B2)`.
    #[getter]
    fn coefficients(&self) -> (f64, f64, f64, f64) {
        let s = &self.inner;
        (s.a1, s.b1, s.a2, s.b2)
    }

    /// `(s(t), r(t))`.
    fn fronts(&self, t: f64) -> PyResult<(f64, f64)> {
        self.inner.fronts(t).map_err(py_err)
    }

    /// `(region, temperature)` with region one of "solid", "mush", "liquid".
    fn evaluate(&self, x: f64, t: f64) -> PyResult<(String, f64)> {
        let p = self.inner.evaluate(x, t).map_err(py_err)?;
        Ok((format!("{:?}", p.region).to_lowercase(), p.temperature))
    }

    #[pyo3(signature = (nx=10, nt=10, h=1e-2))]
    fn certify<'py>(&self, py: Python<'py>, nx: usize, nt: usize, h: f64) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &verify::certify(&self.inner, nx, nt, h).map_err(py_err)?)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Self { inner })
    }

    fn __repr__(&self) -> String {
        format!("Solution(xi={}, mu={})", self.inner.xi, self.inner.mu)
    }
}

#[pyfunction]
fn solve_convective(material: &PyMaterial, theta0: f64, dinf: f64, h0: f64) -> PyResult<PySolution> {
    let bc = ConvectiveBc { theta0, dinf, h0 };
    let inner = stefan::solve_convective(&material.inner, &bc, &RootConfig::default()).map_err(py_err)?;
    Ok(PySolution { inner })
}

#[pyfunction]
fn solve_dirichlet(material: &PyMaterial, theta0: f64, d0: f64) -> PyResult<PySolution> {
    let bc = DirichletBc { theta0, d0 };
    let inner = stefan::solve_dirichlet(&material.inner, &bc, &RootConfig::default()).map_err(py_err)?;
    Ok(PySolution { inner })
}

#[pyfunction]
fn threshold<'py>(
    py: Python<'py>,
    material: &PyMaterial,
    theta0: f64,
    dinf: f64,
    h0: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let bc = ConvectiveBc { theta0, dinf, h0 };
    to_py(py, &stefan::compute_threshold(&material.inner, &bc, &RootConfig::default()).map_err(py_err)?)
}

#[pyfunction]
fn convective_to_dirichlet<'py>(
    py: Python<'py>,
    material: &PyMaterial,
    theta0: f64,
    dinf: f64,
    h0: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let bc = ConvectiveBc { theta0, dinf, h0 };
    to_py(py, &equivalence::convective_to_dirichlet(&material.inner, &bc, &RootConfig::default()).map_err(py_err)?)
}

#[pyfunction]
fn dirichlet_to_convective<'py>(
    py: Python<'py>,
    material: &PyMaterial,
    theta0: f64,
    d0: f64,
    dinf: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let bc = DirichletBc { theta0, d0 };
    let rec = equivalence::dirichlet_to_convective(&material.inner, &bc, dinf, &RootConfig::default());
    to_py(py, &rec.map_err(py_err)?)
}

/// Sweep over an increasing `h0` ladder; returns records, rejected entries
/// and the fitted rates (None when the ladder is too short).
#[pyfunction]
fn sweep_h0<'py>(
    py: Python<'py>,
    material: &PyMaterial,
    theta0: f64,
    dinf: f64,
    ladder: Vec<f64>,
) -> PyResult<Bound<'py, PyAny>> {
    let out = core_sweep(&material.inner, theta0, dinf, &ladder, &ProbeSet::default(), &RootConfig::default())
        .map_err(py_err)?;
    let rates = estimate_rates(&out.records).ok();
    let payload = serde_json::json!({
        "limit": { "xi": out.limit.xi, "mu": out.limit.mu },
        "records": out.records,
        "rejected": out.rejected,
        "rates": rates,
    });
    to_py(py, &payload)
}

#[pyfunction]
fn erf(x: f64) -> PyResult<f64> {
    numerics::erf(x).map_err(py_err)
}

#[pyfunction]
fn erfc(x: f64) -> PyResult<f64> {
    numerics::erfc(x).map_err(py_err)
}

#[pyfunction]
fn erfcx(x: f64) -> PyResult<f64> {
    numerics::erfcx(x).map_err(py_err)
}

#[pymodule]
fn mushy_stefan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMaterial>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(solve_convective, m)?)?;
    m.add_function(wrap_pyfunction!(solve_dirichlet, m)?)?;
    m.add_function(wrap_pyfunction!(threshold, m)?)?;
    m.add_function(wrap_pyfunction!(convective_to_dirichlet, m)?)?;
    m.add_function(wrap_pyfunction!(dirichlet_to_convective, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_h0, m)?)?;
    m.add_function(wrap_pyfunction!(erf, m)?)?;
    m.add_function(wrap_pyfunction!(erfc, m)?)?;
    m.add_function(wrap_pyfunction!(erfcx, m)?)?;
    m.add("NoSolutionError", m.py().get_type::<NoSolutionError>())?;
    m.add("ConvergenceError", m.py().get_type::<ConvergenceError>())?;
    Ok(())
}
