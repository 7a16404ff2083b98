//! Python bindings. Rationals cross the boundary as strings ("3/4"); reports
//! come back as plain dicts/lists built from the JSON serialization.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use hypsec_core::curves;
use hypsec_core::detrep::{self, SymPencil};
use hypsec_core::exactalg::{self, MPoly, Q};
use hypsec_core::{fixtures, hyperbolic, io, shadows, Error};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::UnknownFixture(n) => PyKeyError::new_err(n),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any().unbind(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any().unbind(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any().unbind(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any().unbind(),
        Value::Array(a) => {
            let items = a.iter().map(|x| to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any().unbind()
        }
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any().unbind()
        }
    })
}

fn report<T: serde::Serialize>(py: Python<'_>, x: &T) -> PyResult<Py<PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &v)
}

/// A point given as "1,0,-1/2", a registry name, or a sequence of ints/strings.
fn point(obj: &Bound<'_, PyAny>) -> PyResult<Vec<Q>> {
    if let Ok(s) = obj.extract::<String>() {
        return match fixtures::point_fixture(&s) {
            Ok(v) => Ok(v),
            Err(_) => io::parse_rational_vec(&s).map_err(py_err),
        };
    }
    obj.try_iter()?
        .map(|x| io::parse_rational(&x?.str()?.to_cow()?).map_err(py_err))
        .collect()
}

fn strings(v: &[Q]) -> Vec<String> {
    io::rational_vec_strings(v)
}

/// A homogeneous polynomial with rational coefficients.
#[pyclass(name = "Poly", frozen, from_py_object)]
#[derive(Clone)]
struct PyPoly(MPoly);

#[pymethods]
impl PyPoly {
    /// Parses the text format ("x0^2 - 3/2*x1*x2"); nvars defaults to the highest index + 1.
    #[new]
    #[pyo3(signature = (text, nvars=None))]
    fn new(text: &str, nvars: Option<usize>) -> PyResult<Self> {
        io::read_poly(text, nvars).map(PyPoly).map_err(py_err)
    }

    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        fixtures::poly_fixture(name).map(PyPoly).map_err(py_err)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.0.total_degree()
    }

    fn eval(&self, x: &Bound<'_, PyAny>) -> PyResult<String> {
        Ok(self.0.eval(&point(x)?).map_err(py_err)?.to_string())
    }

    fn directional_derivative(&self, e: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.0.directional_derivative(&point(e)?).map(PyPoly).map_err(py_err)
    }

    fn to_json(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &io::poly_to_json(&self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?}, nvars={})", self.0.to_string(), self.0.nvars())
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }
}

/// A linear symmetric matrix pencil x0·A0 + … + x{n−1}·A{n−1}.
#[pyclass(name = "Pencil", frozen, from_py_object)]
#[derive(Clone)]
struct PyPencil(SymPencil);

#[pymethods]
impl PyPencil {
    /// Reads the JSON schema or the row-per-line text form.
    #[new]
    #[pyo3(signature = (text, nvars=None))]
    fn new(text: &str, nvars: Option<usize>) -> PyResult<Self> {
        SymPencil::read(text, nvars).map(PyPencil).map_err(py_err)
    }

    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        fixtures::pencil_fixture(name).map(PyPencil).map_err(py_err)
    }

    #[staticmethod]
    fn hankel(k: usize) -> PyResult<Self> {
        detrep::hankel_pencil(k).map(PyPencil).map_err(py_err)
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    fn det(&self) -> PyPoly {
        PyPoly(detrep::pencil_det(&self.0))
    }

    /// The evaluated matrix, as rows of rational strings.
    fn eval(&self, x: &Bound<'_, PyAny>) -> PyResult<Vec<Vec<String>>> {
        let m = self.0.eval(&point(x)?).map_err(py_err)?;
        Ok(m.rows().iter().map(|r| strings(r)).collect())
    }

    fn to_json(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.0.to_json())
    }
}

#[pyfunction]
#[pyo3(signature = (f, e, lines=200, seed=42, height=hyperbolic::DEFAULT_HEIGHT))]
fn certify_hyperbolic(py: Python<'_>, f: &PyPoly, e: &Bound<'_, PyAny>, lines: usize, seed: u64, height: u64) -> PyResult<Py<PyAny>> {
    report(py, &hyperbolic::certify_hyperbolic_with(&f.0, &point(e)?, lines, seed, height).map_err(py_err)?)
}

#[pyfunction]
fn is_real_rooted_on_line(f: &PyPoly, e: &Bound<'_, PyAny>, v: &Bound<'_, PyAny>) -> PyResult<bool> {
    hyperbolic::is_real_rooted_on_line(&f.0, &point(e)?, &point(v)?).map_err(py_err)
}

#[pyfunction]
fn cone_membership(py: Python<'_>, f: &PyPoly, e: &Bound<'_, PyAny>, v: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    report(py, &hyperbolic::cone_membership(&f.0, &point(e)?, &point(v)?).map_err(py_err)?)
}

#[pyfunction]
fn verify_definite_rep(py: Python<'_>, p: &PyPencil, f: &PyPoly, e: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    report(py, &detrep::verify_definite_rep(&p.0, &f.0, &point(e)?).map_err(py_err)?)
}

#[pyfunction]
fn hankel_membership(py: Python<'_>, v: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    report(py, &shadows::hankel_membership(&point(v)?).map_err(py_err)?)
}

#[pyfunction]
#[pyo3(signature = (p, z, slack=1))]
fn shadow_membership(py: Python<'_>, p: &PyPencil, z: &Bound<'_, PyAny>, slack: usize) -> PyResult<Py<PyAny>> {
    let rep = shadows::ShadowRep::new(p.0.clone(), slack).map_err(py_err)?;
    report(py, &shadows::shadow_membership(&rep, &point(z)?).map_err(py_err)?)
}

#[pyfunction]
fn shadow_size_bounds(py: Python<'_>, d: usize, g: usize) -> PyResult<Py<PyAny>> {
    report(py, &shadows::shadow_size_bounds(d, g).map_err(py_err)?)
}

#[pyfunction]
fn secant_degree(d: i64, g: i64, k: i64) -> i128 {
    curves::secant_degree(d, g, k)
}

#[pyfunction]
fn beta(r: i64, m: i64) -> i128 {
    curves::beta(r, m)
}

#[pyfunction]
fn chi_symprod(a: i64, b: i64, n: i64) -> i128 {
    curves::chi_symprod(a, b, n)
}

#[pyfunction]
fn curve(py: Python<'_>, name: &str) -> PyResult<Py<PyAny>> {
    report(py, &curves::curve_fixture(name).map_err(py_err)?)
}

#[pyfunction]
#[pyo3(signature = (curve, k=1))]
fn vastly_real(py: Python<'_>, curve: &str, k: usize) -> PyResult<Py<PyAny>> {
    let c = curves::curve_fixture(curve).map_err(py_err)?;
    report(py, &curves::build_vastly_real(&c, k).map_err(py_err)?)
}

#[pyfunction]
fn double_cover(py: Python<'_>, a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    let a = io::parse_rational(&a.str()?.to_cow()?).map_err(py_err)?;
    let b = io::parse_rational(&b.str()?.to_cow()?).map_err(py_err)?;
    report(py, &curves::double_cover(a, b).map_err(py_err)?)
}

#[pyfunction]
fn real_root_count(coeffs: &Bound<'_, PyAny>) -> PyResult<usize> {
    let p = exactalg::UPoly::new(point(coeffs)?);
    exactalg::roots::total_real_roots(&p).map_err(py_err)
}

#[pyfunction]
fn point_fixture(name: &str) -> PyResult<Vec<String>> {
    Ok(strings(&fixtures::point_fixture(name).map_err(py_err)?))
}

#[pymodule]
fn hypsec(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyPencil>()?;
    m.add_function(wrap_pyfunction!(certify_hyperbolic, m)?)?;
    m.add_function(wrap_pyfunction!(is_real_rooted_on_line, m)?)?;
    m.add_function(wrap_pyfunction!(cone_membership, m)?)?;
    m.add_function(wrap_pyfunction!(verify_definite_rep, m)?)?;
    m.add_function(wrap_pyfunction!(hankel_membership, m)?)?;
    m.add_function(wrap_pyfunction!(shadow_membership, m)?)?;
    m.add_function(wrap_pyfunction!(shadow_size_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(secant_degree, m)?)?;
    m.add_function(wrap_pyfunction!(beta, m)?)?;
    m.add_function(wrap_pyfunction!(chi_symprod, m)?)?;
    m.add_function(wrap_pyfunction!(curve, m)?)?;
    m.add_function(wrap_pyfunction!(vastly_real, m)?)?;
    m.add_function(wrap_pyfunction!(double_cover, m)?)?;
    m.add_function(wrap_pyfunction!(real_root_count, m)?)?;
    m.add_function(wrap_pyfunction!(point_fixture, m)?)?;
    m.add("REGISTRY_VERSION", fixtures::REGISTRY_VERSION)?;
    Ok(())
}
