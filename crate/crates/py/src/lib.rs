//! Python bindings: monomial ideals, pencils, and the bound calculators,
//! driven in-process. Reports come back as JSON strings matching the CLI
//! schema; scalar accessors cover the common one-off queries.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use konno::algebra::{Polynomial, Var};
use konno::blowup::{hoskin_deligne_check, lech_check, resolve_ideal};
use konno::bounds::{konno_bounds_hypersurface, konno_bounds_k3};
use konno::parse::{parse_monomial_ideal, parse_polynomial};
use konno::pencil::{resolve_pencil, Pencil as CorePencil};
use konno::staircase::MonomialIdeal as CoreIdeal;

fn py_err(e: konno::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vars_from_str(vars: &str) -> PyResult<Vec<Var>> {
    let parsed: Option<Vec<Var>> = vars.chars().map(Var::from_char).collect();
    match parsed {
        Some(v) if !v.is_empty() && v.len() <= 3 => Ok(v),
        _ => Err(PyValueError::new_err(format!(
            "variables must be a subset of \"xyz\", got {vars:?}"
        ))),
    }
}

/// A finite-colength monomial ideal in x and y.
#[pyclass]
struct MonomialIdeal {
    inner: CoreIdeal,
}

#[pymethods]
impl MonomialIdeal {
    /// Parse minimal generators from text like "x^3, y^2".
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let gens = parse_monomial_ideal(text).map_err(py_err)?;
        let inner = CoreIdeal::minimalize(&gens).map_err(py_err)?;
        Ok(MonomialIdeal { inner })
    }

    fn generators(&self) -> Vec<(u64, u64)> {
        self.inner.generators().to_vec()
    }

    fn colength(&self) -> PyResult<u64> {
        self.inner.colength().map_err(py_err)
    }

    fn order(&self) -> u64 {
        self.inner.order()
    }

    fn samuel_multiplicity(&self) -> PyResult<u64> {
        self.inner.samuel_multiplicity().map_err(py_err)
    }

    fn is_integrally_closed(&self) -> PyResult<bool> {
        self.inner.is_integrally_closed().map_err(py_err)
    }

    fn integral_closure(&self) -> PyResult<MonomialIdeal> {
        Ok(MonomialIdeal {
            inner: self.inner.integral_closure().map_err(py_err)?,
        })
    }

    fn membership_in_closure(&self, a: u64, b: u64) -> PyResult<bool> {
        self.inner.membership_in_closure((a, b)).map_err(py_err)
    }

    fn power(&self, n: u32) -> PyResult<MonomialIdeal> {
        if n < 1 {
            return Err(PyValueError::new_err("power must be at least 1"));
        }
        Ok(MonomialIdeal {
            inner: self.inner.power(n),
        })
    }

    /// Multiplicities of the cluster tree, depth-first.
    #[pyo3(signature = (depth_cap = 64))]
    fn cluster_multiplicities(&self, depth_cap: u32) -> PyResult<Vec<u64>> {
        let tree = resolve_ideal(&self.inner, depth_cap).map_err(py_err)?;
        Ok(tree.multiplicities())
    }

    /// Cluster tree as JSON: nested {m, chart, children}.
    #[pyo3(signature = (depth_cap = 64))]
    fn cluster_json(&self, depth_cap: u32) -> PyResult<String> {
        let tree = resolve_ideal(&self.inner, depth_cap).map_err(py_err)?;
        serde_json::to_string(&tree).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Colength identity report as JSON.
    #[pyo3(signature = (depth_cap = 64))]
    fn hoskin_deligne_json(&self, depth_cap: u32) -> PyResult<String> {
        let report = hoskin_deligne_check(&self.inner, depth_cap).map_err(py_err)?;
        serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Lech inequality report as JSON.
    fn lech_json(&self) -> PyResult<String> {
        let report = lech_check(&self.inner).map_err(py_err)?;
        serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({})", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// A pencil of plane curves spanned by two coprime forms of equal degree.
#[pyclass]
struct Pencil {
    inner: CorePencil,
}

#[pymethods]
impl Pencil {
    /// Two homogeneous polynomials in x, y, z.
    #[new]
    fn new(f: &str, g: &str) -> PyResult<Self> {
        let vars = [Var::X, Var::Y, Var::Z];
        let f: Polynomial = parse_polynomial(f, &vars).map_err(py_err)?;
        let g: Polynomial = parse_polynomial(g, &vars).map_err(py_err)?;
        Ok(Pencil {
            inner: CorePencil::new(f, g).map_err(py_err)?,
        })
    }

    /// Build from affine polynomials in x, y, homogenized to the given
    /// degree (default: the larger input degree).
    #[staticmethod]
    #[pyo3(signature = (f, g, degree = None))]
    fn affine(f: &str, g: &str, degree: Option<u64>) -> PyResult<Self> {
        let vars = [Var::X, Var::Y];
        let fa = parse_polynomial(f, &vars).map_err(py_err)?;
        let ga = parse_polynomial(g, &vars).map_err(py_err)?;
        if fa.is_zero() || ga.is_zero() {
            return Err(PyValueError::new_err("pencil members must be nonzero"));
        }
        let d = degree.unwrap_or_else(|| {
            fa.total_degree()
                .unwrap_or(0)
                .max(ga.total_degree().unwrap_or(0))
        });
        let fh = fa.homogenize(d).map_err(py_err)?;
        let gh = ga.homogenize(d).map_err(py_err)?;
        Ok(Pencil {
            inner: CorePencil::new(fh, gh).map_err(py_err)?,
        })
    }

    fn degree(&self) -> u64 {
        self.inner.degree()
    }

    /// Geometric genus of the generic member after full resolution.
    #[pyo3(signature = (depth_cap = 64))]
    fn genus(&self, depth_cap: u32) -> PyResult<i64> {
        Ok(resolve_pencil(&self.inner, depth_cap)
            .map_err(py_err)?
            .genus)
    }

    /// (sum m, sum m^2, sum m(m-1), sum m(m+1)/2) over the cluster.
    #[pyo3(signature = (depth_cap = 64))]
    fn sums(&self, depth_cap: u32) -> PyResult<(u64, u64, u64, u64)> {
        let r = resolve_pencil(&self.inner, depth_cap).map_err(py_err)?;
        Ok((
            r.sums.sum_m,
            r.sums.sum_m_sq,
            r.sums.sum_m_m_minus_1,
            r.sums.sum_m_m_plus_1_half,
        ))
    }

    /// Full resolution report as JSON, matching the CLI schema.
    #[pyo3(signature = (depth_cap = 64))]
    fn resolve_json(&self, depth_cap: u32) -> PyResult<String> {
        let report = resolve_pencil(&self.inner, depth_cap).map_err(py_err)?;
        serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        let (f, g) = self.inner.generators();
        format!("Pencil({f} ; {g})")
    }
}

/// Canonical form of a polynomial in the given variables ("xy", "xyz", ...).
#[pyfunction]
#[pyo3(signature = (text, vars = "xyz"))]
fn canonical_polynomial(text: &str, vars: &str) -> PyResult<String> {
    let vars = vars_from_str(vars)?;
    let p = parse_polynomial(text, &vars).map_err(py_err)?;
    Ok(p.to_string())
}

/// (lower, upper) pencil-genus bounds for a degree-d hypersurface in
/// P^(n+1).
#[pyfunction]
fn hypersurface_bounds(n: u64, d: u64) -> PyResult<(u64, u64)> {
    if n < 2 || d < 1 {
        return Err(PyValueError::new_err("need n >= 2 and d >= 1"));
    }
    let b = konno_bounds_hypersurface(n, d).map_err(py_err)?;
    Ok((b.lower, b.upper))
}

/// Full hypersurface report as JSON.
#[pyfunction]
fn hypersurface_bounds_json(n: u64, d: u64) -> PyResult<String> {
    if n < 2 || d < 1 {
        return Err(PyValueError::new_err("need n >= 2 and d >= 1"));
    }
    let b = konno_bounds_hypersurface(n, d).map_err(py_err)?;
    serde_json::to_string(&b).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// (m, g_min, g_max) for a polarized K3 surface of genus d >= 3.
#[pyfunction]
fn k3_bounds(d: u64) -> PyResult<(u64, u64, u64)> {
    let b = konno_bounds_k3(d).map_err(py_err)?;
    Ok((b.m, b.g_min, b.g_max))
}

#[pymodule]
fn konno_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<MonomialIdeal>()?;
    m.add_class::<Pencil>()?;
    m.add_function(wrap_pyfunction!(canonical_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(hypersurface_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(hypersurface_bounds_json, m)?)?;
    m.add_function(wrap_pyfunction!(k3_bounds, m)?)?;
    Ok(())
}
