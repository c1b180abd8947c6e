//! Python bindings: charges, grids, both entropy routes and the
//! finite-dimensional oracles.

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use wedge_entropy::entropy::{self, EntropyReport};
use wedge_entropy::modular;
use wedge_entropy::{fock, GaussianTerm, MomentumGrid, TimeZeroCharge, TruncationMode};

create_exception!(wedge_entropy_py, WedgeEntropyError, PyValueError);

fn err(e: wedge_entropy::Error) -> PyErr {
    WedgeEntropyError::new_err(e.to_string())
}

fn terms(raw: Vec<(f64, Vec<f64>, f64)>) -> PyResult<Vec<GaussianTerm>> {
    raw.into_iter().map(|(c, a, s)| GaussianTerm::new(c, a, s).map_err(err)).collect()
}

/// Time-zero charge: sums of Gaussians `c·exp(−|x − a|²/σ²)` for the field
/// and momentum parts, each given as `(amplitude, center, width)` tuples.
#[pyclass(name = "Charge", frozen)]
pub struct PyCharge {
    inner: TimeZeroCharge,
}

#[pymethods]
impl PyCharge {
    #[new]
    #[pyo3(signature = (dimension, field = Vec::new(), momentum = Vec::new()))]
    fn new(dimension: usize, field: Vec<(f64, Vec<f64>, f64)>, momentum: Vec<(f64, Vec<f64>, f64)>) -> PyResult<Self> {
        let inner = TimeZeroCharge::new(dimension, terms(field)?, terms(momentum)?).map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn field_part(&self) -> Self {
        Self { inner: self.inner.field_part() }
    }

    fn momentum_part(&self) -> Self {
        Self { inner: self.inner.momentum_part() }
    }

    fn scaled(&self, factor: f64) -> Self {
        Self { inner: self.inner.scaled(factor) }
    }

    fn shifted_along_x1(&self, offset: f64) -> Self {
        Self { inner: self.inner.shifted_along_x1(offset) }
    }

    /// `"full"` when every term is at least 6σ inside the wedge, else
    /// `"wedge_half_space"`.
    #[pyo3(signature = (offset = 0.0))]
    fn natural_mode(&self, offset: f64) -> &'static str {
        match self.inner.natural_mode(offset) {
            TruncationMode::Full => "full",
            TruncationMode::WedgeHalfSpace => "wedge_half_space",
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "Charge(dimension={}, field_terms={}, momentum_terms={})",
            self.inner.dimension(),
            self.inner.field_terms().len(),
            self.inner.momentum_terms().len()
        )
    }
}

/// Cubic momentum grid `[−P, P]^d` with `N` nodes per axis.
#[pyclass(name = "Grid", frozen)]
pub struct PyGrid {
    inner: MomentumGrid,
}

#[pymethods]
impl PyGrid {
    #[new]
    fn new(dimension: usize, mass: f64, half_extent: f64, points_per_axis: usize) -> PyResult<Self> {
        Ok(Self { inner: MomentumGrid::new(dimension, mass, half_extent, points_per_axis).map_err(err)? })
    }

    /// `P·s` and `N·s²`.
    fn scaled(&self, scale: f64) -> PyResult<Self> {
        Ok(Self { inner: self.inner.scaled(scale).map_err(err)? })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn mass(&self) -> f64 {
        self.inner.mass()
    }

    #[getter]
    fn half_extent(&self) -> f64 {
        self.inner.half_extent()
    }

    #[getter]
    fn points_per_axis(&self) -> usize {
        self.inner.points_per_axis()
    }

    fn __repr__(&self) -> String {
        format!(
            "Grid(dimension={}, mass={}, half_extent={}, points_per_axis={})",
            self.inner.dimension(),
            self.inner.mass(),
            self.inner.half_extent(),
            self.inner.points_per_axis()
        )
    }
}

#[pyclass(name = "EntropyReport", frozen)]
pub struct PyReport {
    inner: EntropyReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn route(&self) -> &'static str {
        self.inner.route.as_str()
    }

    #[getter]
    fn offset(&self) -> f64 {
        self.inner.offset
    }

    #[getter]
    fn total(&self) -> f64 {
        self.inner.total
    }

    #[getter]
    fn error_estimate(&self) -> f64 {
        self.inner.error_estimate
    }

    #[getter]
    fn field_term(&self) -> Option<f64> {
        self.inner.field_term
    }

    #[getter]
    fn momentum_bulk(&self) -> Option<f64> {
        self.inner.momentum_bulk
    }

    #[getter]
    fn boundary_term(&self) -> Option<f64> {
        self.inner.boundary_term
    }

    #[getter]
    fn momentum_total(&self) -> Option<f64> {
        self.inner.momentum_total
    }

    #[getter]
    fn cross_term(&self) -> Option<f64> {
        self.inner.cross_term
    }

    fn __repr__(&self) -> String {
        format!(
            "EntropyReport(route={}, offset={}, total={}, error_estimate={:e})",
            self.inner.route.as_str(),
            self.inner.offset,
            self.inner.total,
            self.inner.error_estimate
        )
    }
}

#[pyfunction]
#[pyo3(signature = (charge, mass, offset = 0.0))]
fn entropy_closed_form(charge: &PyCharge, mass: f64, offset: f64) -> PyResult<PyReport> {
    Ok(PyReport { inner: entropy::entropy_closed_form(&charge.inner, mass, offset).map_err(err)? })
}

#[pyfunction]
#[pyo3(signature = (charge, grid, offset = 0.0))]
fn entropy_momentum(py: Python<'_>, charge: &PyCharge, grid: &PyGrid, offset: f64) -> PyResult<PyReport> {
    let (c, g) = (&charge.inner, &grid.inner);
    let inner = py.detach(|| entropy::entropy_momentum(c, g, offset)).map_err(err)?;
    Ok(PyReport { inner })
}

/// `(bulk, edge)` with `S = bulk + edge/2` for a pure momentum charge.
#[pyfunction]
fn boundary_decomposition(charge: &PyCharge, mass: f64) -> PyResult<(f64, f64)> {
    entropy::boundary_decomposition(&charge.inner, mass).map_err(err)
}

#[pyfunction]
fn relative_entropy_between(first: &PyCharge, second: &PyCharge, mass: f64) -> PyResult<f64> {
    entropy::relative_entropy_between(&first.inner, &second.inner, mass).map_err(err)
}

#[pyfunction]
fn wedge_monotonicity_scan(charge: &PyCharge, mass: f64, offsets: Vec<f64>) -> PyResult<Vec<(f64, f64)>> {
    entropy::wedge_monotonicity_scan(&charge.inner, mass, &offsets).map_err(err)
}

#[pyfunction]
fn cross_term(py: Python<'_>, charge: &PyCharge, grid: &PyGrid) -> PyResult<f64> {
    let (c, g) = (&charge.inner, &grid.inner);
    py.detach(|| entropy::cross_term(c, g)).map_err(err)
}

/// Vector entropy of `h = ⊕ (z, √λ·conj z)` in the standard subspace with
/// modular spectrum `{λ, 1/λ}` per pair, by dense linear algebra.
#[pyfunction]
fn paired_vector_entropy(lambdas: Vec<f64>, zs: Vec<Complex64>) -> PyResult<f64> {
    let k = modular::subspace_from_modular_data(&lambdas).map_err(err)?;
    let h = modular::paired_vector(&lambdas, &zs).map_err(err)?;
    modular::vector_entropy(&k, &h).map_err(err)
}

/// `(1 − λ)(−log λ)|z|²`.
#[pyfunction]
fn paired_entropy_closed_form(lambda: f64, z: Complex64) -> f64 {
    modular::paired_entropy_closed_form(lambda, z)
}

#[pyfunction]
#[pyo3(signature = (lambda, z, cutoff = fock::DEFAULT_CUTOFF))]
fn coherent_araki_entropy(lambda: f64, z: Complex64, cutoff: usize) -> PyResult<f64> {
    fock::coherent_araki_entropy(lambda, z, cutoff).map_err(err)
}

/// Largest Tomita-relation residual for a seeded random standard subspace
/// of `ℂⁿ`.
#[pyfunction]
fn tomita_residual(n: usize, seed: u64) -> PyResult<f64> {
    let k = modular::random_standard_subspace(n, seed).map_err(err)?;
    Ok(modular::modular_operator(&k).map_err(err)?.residuals(k.space()).max())
}

#[pymodule]
pub fn wedge_entropy_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("WedgeEntropyError", m.py().get_type::<WedgeEntropyError>())?;
    m.add_class::<PyCharge>()?;
    m.add_class::<PyGrid>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(entropy_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_momentum, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(relative_entropy_between, m)?)?;
    m.add_function(wrap_pyfunction!(wedge_monotonicity_scan, m)?)?;
    m.add_function(wrap_pyfunction!(cross_term, m)?)?;
    m.add_function(wrap_pyfunction!(paired_vector_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(paired_entropy_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(coherent_araki_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(tomita_residual, m)?)?;
    Ok(())
}
