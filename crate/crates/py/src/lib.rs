//! Python bindings.

use pyo3::exceptions::{PyNotImplementedError, PyValueError};
use pyo3::prelude::*;

use zalcman_core::asymptotics::{self, AuditGrids, ClosedForm};
use zalcman_core::classes::Phases;
use zalcman_core::{functional, search, Branch, Complex64, Error, FunctionalSpec};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Unsupported(msg) => PyNotImplementedError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn spec(lam: Complex64, m: usize, n: usize) -> PyResult<FunctionalSpec> {
    FunctionalSpec::new(lam, m, n).map_err(py_err)
}

/// Coefficients a_1..a_N of f(z) = Σ a_k z^k.
#[pyclass(name = "TruncatedSeries", module = "zalcman", from_py_object)]
#[derive(Clone)]
struct PySeries {
    inner: zalcman_core::TruncatedSeries,
}

#[pymethods]
impl PySeries {
    #[new]
    fn new(coeffs: Vec<Complex64>) -> PyResult<Self> {
        Ok(Self {
            inner: zalcman_core::TruncatedSeries::new(coeffs).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn identity(order: usize) -> Self {
        Self {
            inner: zalcman_core::TruncatedSeries::identity(order),
        }
    }

    #[staticmethod]
    fn koebe(order: usize) -> Self {
        Self {
            inner: zalcman_core::TruncatedSeries::koebe(order),
        }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn coeff(&self, k: usize) -> PyResult<Complex64> {
        self.inner
            .get(k)
            .ok_or_else(|| PyValueError::new_err(format!("index {k} outside 1..={}", self.inner.order())))
    }

    fn coeffs(&self) -> Vec<Complex64> {
        self.inner.coeffs().to_vec()
    }

    fn evaluate(&self, z: Complex64) -> PyResult<Complex64> {
        self.inner.evaluate(z).map_err(py_err)
    }

    fn rotate(&self, c: Complex64) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.rotate(c).map_err(py_err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("TruncatedSeries(order={})", self.inner.order())
    }
}

/// Atomic probability measure on the unit circle.
#[pyclass(name = "HerglotzMeasure", module = "zalcman", from_py_object)]
#[derive(Clone)]
struct PyMeasure {
    inner: zalcman_core::HerglotzMeasure,
}

#[pymethods]
impl PyMeasure {
    #[new]
    fn new(weights: Vec<f64>, thetas: Vec<f64>) -> PyResult<Self> {
        if weights.len() != thetas.len() {
            return Err(PyValueError::new_err("weights and thetas differ in length"));
        }
        let atoms = weights
            .into_iter()
            .zip(thetas)
            .map(|(w, theta)| zalcman_core::Atom { w, theta })
            .collect();
        Ok(Self {
            inner: zalcman_core::HerglotzMeasure::new(atoms).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn point_mass(theta: f64) -> Self {
        Self {
            inner: zalcman_core::HerglotzMeasure::point_mass(theta),
        }
    }

    #[staticmethod]
    fn roots_of_unity(q: usize) -> PyResult<Self> {
        Ok(Self {
            inner: zalcman_core::HerglotzMeasure::roots_of_unity(q).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("measures serialize")
    }

    #[getter]
    fn weights(&self) -> Vec<f64> {
        self.inner.atoms().iter().map(|a| a.w).collect()
    }

    #[getter]
    fn thetas(&self) -> Vec<f64> {
        self.inner.atoms().iter().map(|a| a.theta).collect()
    }

    /// p_1..p_N of the Carathéodory function.
    fn caratheodory_coefficients(&self, order: usize) -> Vec<Complex64> {
        self.inner.caratheodory_coefficients(order).coeffs().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

#[pyclass(name = "ClassSpec", module = "zalcman", from_py_object)]
#[derive(Clone)]
struct PyClassSpec {
    inner: zalcman_core::ClassSpec,
}

#[pymethods]
impl PyClassSpec {
    /// `name` is one of hurwitz, nw, hull_convex, hull_convex_alpha, hull_starlike, koebe.
    #[new]
    #[pyo3(signature = (name, alpha=None))]
    fn new(name: &str, alpha: Option<f64>) -> PyResult<Self> {
        let tag = name.parse().map_err(py_err)?;
        Ok(Self {
            inner: zalcman_core::ClassSpec::from_tag(tag, alpha).map_err(py_err)?,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    /// Sample `index` of the stream `seed`, as drawn by the `verify` command.
    #[pyo3(signature = (order, seed=0, index=0))]
    fn sample(&self, order: usize, seed: u64, index: usize) -> PyResult<PySeries> {
        let inner = zalcman_core::cli::verify_sample(&self.inner, order, seed, index).map_err(py_err)?;
        Ok(PySeries { inner })
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_measure(&self, measure: &PyMeasure, order: usize) -> PyResult<PySeries> {
        Ok(PySeries {
            inner: self.inner.from_measure(&measure.inner, order).map_err(py_err)?,
        })
    }

    fn membership_residual(&self, f: &PySeries) -> f64 {
        self.inner.membership_residual(&f.inner).value()
    }

    /// `branch` is "generic" or "resonant".
    #[pyo3(signature = (m, n, branch="generic", order=None))]
    fn extremal(&self, m: usize, n: usize, branch: &str, order: Option<usize>) -> PyResult<PySeries> {
        let branch = match branch {
            "generic" => Branch::Generic,
            "resonant" => Branch::Resonant,
            other => return Err(PyValueError::new_err(format!("unknown branch '{other}'"))),
        };
        let order = order.unwrap_or(2 * m.max(n));
        let inner = self
            .inner
            .extremal(m, n, branch, Phases::default(), order)
            .map_err(py_err)?;
        Ok(PySeries { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("class specs serialize")
    }

    fn __repr__(&self) -> String {
        format!("ClassSpec({})", self.inner.label())
    }
}

#[pyclass(name = "SearchResult", module = "zalcman", get_all, skip_from_py_object)]
struct PySearchResult {
    best_value: f64,
    bound: f64,
    gap: f64,
    restarts_used: usize,
    seed: u64,
    iterations: usize,
    params_json: String,
}

#[pyfunction]
fn zalcman(f: &PySeries, lam: Complex64, m: usize, n: usize) -> PyResult<Complex64> {
    functional::zalcman(&f.inner, &spec(lam, m, n)?).map_err(py_err)
}

#[pyfunction]
fn sharp_bound(class: &PyClassSpec, lam: Complex64, m: usize, n: usize) -> PyResult<f64> {
    functional::sharp_bound(&class.inner, &spec(lam, m, n)?).map_err(py_err)
}

#[pyfunction]
fn sum_form_check(class: &PyClassSpec, f: &PySeries, m: usize, n: usize) -> PyResult<f64> {
    functional::sum_form_check(&class.inner, &f.inner, m, n).map_err(py_err)
}

/// Returns `(sum_holds, max_holds_on_grid, worst_lambda)`.
#[pyfunction]
fn lemma_equivalence(a: Complex64, b: Complex64, c: f64, m: f64) -> PyResult<(bool, bool, Complex64)> {
    let inst = zalcman_core::EquivalenceInstance::new(a, b, c, m).map_err(py_err)?;
    let out = functional::lemma_equivalence(&inst);
    Ok((out.sum_holds, out.max_holds_on_grid, out.worst_lambda))
}

#[pyfunction]
#[pyo3(signature = (class, lam, m, n, restarts=20, seed=0, max_iterations=20000, target=None))]
#[allow(clippy::too_many_arguments)]
fn maximize_functional(
    py: Python<'_>,
    class: &PyClassSpec,
    lam: Complex64,
    m: usize,
    n: usize,
    restarts: usize,
    seed: u64,
    max_iterations: usize,
    target: Option<f64>,
) -> PyResult<PySearchResult> {
    let fspec = spec(lam, m, n)?;
    let cfg = zalcman_core::SearchConfig {
        restarts,
        max_iterations,
        seed,
        target,
        ..Default::default()
    };
    let class = class.inner;
    let res = py
        .detach(|| search::maximize_functional(&class, &fspec, &cfg))
        .map_err(py_err)?;
    Ok(PySearchResult {
        best_value: res.best_value,
        bound: res.bound,
        gap: res.gap,
        restarts_used: res.restarts_used,
        seed: res.seed,
        iterations: res.iterations,
        params_json: serde_json::to_string(&res.params).expect("params serialize"),
    })
}

/// Returns `(alpha_hat, radii, values)` for identity, koebe, half_plane or odd_half_plane.
#[pyfunction]
#[pyo3(signature = (function, levels=20))]
fn hayman_index(function: &str, levels: usize) -> PyResult<(f64, Vec<f64>, Vec<f64>)> {
    let f: ClosedForm = function.parse().map_err(py_err)?;
    let est = asymptotics::hayman_index(&f, levels).map_err(py_err)?;
    Ok((est.alpha_hat, est.radii, est.values))
}

#[pyfunction]
fn ratio_convergence(function: &str, lam: Complex64, pairs: Vec<(usize, usize)>) -> PyResult<Vec<f64>> {
    let f: ClosedForm = function.parse().map_err(py_err)?;
    asymptotics::ratio_convergence(&f, lam, &pairs).map_err(py_err)
}

/// Returns the booleans of statements `(a, b, c, d)`.
#[pyfunction]
fn zalcman_equivalence_audit(a_n: Complex64, a_2n1: Complex64, n: usize) -> PyResult<(bool, bool, bool, bool)> {
    let out = asymptotics::zalcman_equivalence_audit(a_n, a_2n1, n, &AuditGrids::default()).map_err(py_err)?;
    Ok((out.a, out.b, out.c, out.d))
}

#[pyfunction]
fn bieberbach_iterate(c0: f64, t: f64, k: usize) -> PyResult<Vec<f64>> {
    Ok(asymptotics::bieberbach_iterate(c0, t, k).map_err(py_err)?.sequence)
}

/// Runs the command-line driver with `args` (without the program name); returns the exit code.
#[pyfunction]
fn run_cli(py: Python<'_>, args: Vec<String>) -> i32 {
    py.detach(|| zalcman_core::cli::run(std::iter::once("zalcman".to_owned()).chain(args)))
}

#[pymodule(name = "zalcman")]
fn zalcman_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_class::<PyMeasure>()?;
    m.add_class::<PyClassSpec>()?;
    m.add_class::<PySearchResult>()?;
    m.add_function(wrap_pyfunction!(zalcman, m)?)?;
    m.add_function(wrap_pyfunction!(sharp_bound, m)?)?;
    m.add_function(wrap_pyfunction!(sum_form_check, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(maximize_functional, m)?)?;
    m.add_function(wrap_pyfunction!(hayman_index, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_convergence, m)?)?;
    m.add_function(wrap_pyfunction!(zalcman_equivalence_audit, m)?)?;
    m.add_function(wrap_pyfunction!(bieberbach_iterate, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
