//! Python module `dendri`: dendriform coalgebras and algebras, relative
//! Rota-Baxter operators, formal deformations and Dend_∞ structures.
//!
//! Structures round-trip through the JSON documents of the command-line tool.
//! Rational entries are returned as strings such as `"-3/2"`.

use dendri_core::corpus::dend_coalgebras;
use dendri_core::deform::{
    apply_equivalence, check_deformation, extend, infinitesimal, obstruction, FormalIso, TruncDeformation,
};
use dendri_core::dendalg::{alg_cohomology_dims, dualize, DendAlgebra};
use dendri_core::dendcoalg::{dend_cohomology_dims, DendBicomodule, DendCoalgebra};
use dendri_core::homotopy::{check_ainf, check_d_squared, check_dendinf, shift_to_dendinf1, split, DendInfCoalgebra};
use dendri_core::io::{self, Structure};
use dendri_core::rota::RelRBO;
use dendri_core::{CheckReport, LinearMap};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

create_exception!(dendri, DendriError, PyValueError, "Invalid input or a violated identity.");

fn py_err(e: dendri_core::Error) -> PyErr {
    DendriError::new_err(e.to_string())
}

type Verdicts = Vec<(String, bool)>;
type Entries = Vec<(usize, usize, String)>;

fn verdicts(report: CheckReport) -> Verdicts {
    report.checks.into_iter().map(|v| (v.name, v.holds)).collect()
}

fn entries(map: &LinearMap) -> Entries {
    map.images().into_iter().map(|(from, to, v)| (from, to, v.to_string())).collect()
}

fn parse_as<T>(text: &str, kind: &str, pick: impl FnOnce(Structure) -> Option<T>) -> PyResult<T> {
    let parsed = io::parse(text).map_err(py_err)?;
    let found = parsed.kind();
    pick(parsed).ok_or_else(|| DendriError::new_err(format!("expected a {kind} document, found {found}")))
}

/// A dendriform coalgebra `(C, Δ_≺, Δ_≻)`.
#[pyclass(name = "DendCoalgebra", module = "dendri", frozen)]
struct PyDendCoalgebra(DendCoalgebra);

#[pymethods]
impl PyDendCoalgebra {
    #[staticmethod]
    fn zero(dim: usize) -> Self {
        PyDendCoalgebra(DendCoalgebra::zero(dim))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_as(text, "dendriform_coalgebra", |s| match s {
            Structure::DendCoalgebra(c) => Some(PyDendCoalgebra(c)),
            _ => None,
        })
    }

    fn to_json(&self) -> String {
        io::to_json(&Structure::DendCoalgebra(self.0.clone()))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Nonzero entries `(from, to, value)` of `Δ_≺`.
    fn prec(&self) -> Entries {
        entries(self.0.prec())
    }

    fn succ(&self) -> Entries {
        entries(self.0.succ())
    }

    /// Verdicts for the three dendriform coassociativity identities.
    fn check(&self) -> Verdicts {
        verdicts(self.0.check())
    }

    fn is_valid(&self) -> bool {
        self.0.is_valid()
    }

    /// Dimensions of the cohomology with coefficients in the structure itself.
    #[pyo3(signature = (max_degree = 3))]
    fn cohomology_dims(&self, max_degree: usize) -> PyResult<Vec<usize>> {
        dend_cohomology_dims(&DendBicomodule::self_bicomodule(&self.0), max_degree).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("DendCoalgebra(dim={})", self.0.dim())
    }
}

/// A dendriform algebra `(A, ≺, ≻)`.
#[pyclass(name = "DendAlgebra", module = "dendri", frozen)]
struct PyDendAlgebra(DendAlgebra);

#[pymethods]
impl PyDendAlgebra {
    #[staticmethod]
    fn truncated_polynomial(k: usize) -> Self {
        PyDendAlgebra(DendAlgebra::truncated_polynomial(k))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_as(text, "dendriform_algebra", |s| match s {
            Structure::DendAlgebra(a) => Some(PyDendAlgebra(a)),
            _ => None,
        })
    }

    fn to_json(&self) -> String {
        io::to_json(&Structure::DendAlgebra(self.0.clone()))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn check(&self) -> Verdicts {
        verdicts(self.0.check())
    }

    fn is_valid(&self) -> bool {
        self.0.is_valid()
    }

    #[pyo3(signature = (max_degree = 3))]
    fn cohomology_dims(&self, max_degree: usize) -> PyResult<Vec<usize>> {
        alg_cohomology_dims(&self.0, max_degree).map_err(py_err)
    }

    /// The dual dendriform coalgebra on `A^*`.
    fn dual(&self) -> PyDendCoalgebra {
        PyDendCoalgebra(dualize(&self.0))
    }

    fn __repr__(&self) -> String {
        format!("DendAlgebra(dim={})", self.0.dim())
    }
}

/// A relative Rota-Baxter operator `T : C → M`.
#[pyclass(name = "RelRBO", module = "dendri", frozen)]
struct PyRelRBO(RelRBO);

#[pymethods]
impl PyRelRBO {
    /// `c_k ↦ c_{k−1}/k` on the divided-power coalgebra of dimension `dim`.
    #[staticmethod]
    fn divided_power(dim: usize) -> Self {
        PyRelRBO(RelRBO::divided_power(dim))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_as(text, "rbo", |s| match s {
            Structure::Rbo(t) => Some(PyRelRBO(t)),
            _ => None,
        })
    }

    fn to_json(&self) -> String {
        io::to_json(&Structure::Rbo(self.0.clone()))
    }

    fn operator(&self) -> Entries {
        entries(self.0.operator())
    }

    fn check_rbo(&self) -> bool {
        self.0.check_rbo()
    }

    fn induced_dendriform(&self) -> PyResult<PyDendCoalgebra> {
        self.0.induced_dendriform().map(PyDendCoalgebra).map_err(py_err)
    }

    /// Dimensions of the cohomology of the operator complex `(C^*_T, d_T)`.
    #[pyo3(signature = (max_degree = 3))]
    fn cohomology_dims(&self, max_degree: usize) -> PyResult<Vec<usize>> {
        self.0.cohomology_dims(max_degree).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("RelRBO(base_dim={}, module_dim={})", self.0.base().dim(), self.0.module().dim())
    }
}

/// A deformation `Δ_t = Σ_{i ≤ order} Δ_i t^i` truncated at `order`.
#[pyclass(name = "Deformation", module = "dendri", frozen)]
struct PyDeformation(TruncDeformation);

#[pymethods]
impl PyDeformation {
    #[staticmethod]
    fn trivial(base: &PyDendCoalgebra, order: usize) -> Self {
        PyDeformation(TruncDeformation::trivial(base.0.clone(), order))
    }

    /// The trivial deformation transported by a seeded random formal isomorphism.
    #[staticmethod]
    fn transformed_trivial(base: &PyDendCoalgebra, order: usize, seed: u64) -> PyResult<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = FormalIso::random(&mut rng, base.0.dim(), order);
        apply_equivalence(&phi, &TruncDeformation::trivial(base.0.clone(), order)).map(PyDeformation).map_err(py_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_as(text, "deformation", |s| match s {
            Structure::Deformation(d) => Some(PyDeformation(d)),
            _ => None,
        })
    }

    fn to_json(&self) -> String {
        io::to_json(&Structure::Deformation(self.0.clone()))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn check(&self) -> PyResult<Verdicts> {
        check_deformation(&self.0).map(verdicts).map_err(py_err)
    }

    fn infinitesimal_is_cocycle(&self) -> PyResult<bool> {
        infinitesimal(&self.0).map(|c| c.is_cocycle()).map_err(py_err)
    }

    fn obstruction_is_cocycle(&self) -> PyResult<bool> {
        obstruction(&self.0).map(|c| c.is_cocycle()).map_err(py_err)
    }

    /// The deformation extended by one order, or `None` when the obstruction class is nonzero.
    fn extend(&self) -> PyResult<Option<PyDeformation>> {
        extend(&self.0).map(|d| d.map(PyDeformation)).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Deformation(dim={}, order={})", self.0.base().dim(), self.0.order())
    }
}

/// A graded Dend_∞ coalgebra with cooperations up to a fixed arity.
#[pyclass(name = "DendInfCoalgebra", module = "dendri", frozen)]
struct PyDendInf(DendInfCoalgebra);

#[pymethods]
impl PyDendInf {
    #[staticmethod]
    fn from_dendriform(c: &PyDendCoalgebra, max_arity: usize) -> Self {
        PyDendInf(DendInfCoalgebra::from_dendriform(&c.0, max_arity))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_as(text, "dendinf_coalgebra", |s| match s {
            Structure::DendInf(d) => Some(PyDendInf(d)),
            _ => None,
        })
    }

    fn to_json(&self) -> String {
        io::to_json(&Structure::DendInf(self.0.clone()))
    }

    #[getter]
    fn max_arity(&self) -> usize {
        self.0.max_arity()
    }

    fn check(&self, n_max: usize) -> PyResult<Verdicts> {
        check_dendinf(&self.0, n_max).map(verdicts).map_err(py_err)
    }

    /// A_∞ verdicts for the label sums.
    fn check_split(&self, n_max: usize) -> PyResult<Verdicts> {
        let total = split(&self.0).map_err(py_err)?;
        check_ainf(&total, n_max).map(verdicts).map_err(py_err)
    }

    /// Verdicts for `D² = 0` on the free diassociative algebra truncated at word length `trunc`.
    fn check_d_squared(&self, trunc: usize) -> PyResult<Verdicts> {
        let shifted = shift_to_dendinf1(&self.0).map_err(py_err)?;
        check_d_squared(&shifted, trunc, self.0.max_arity()).map(verdicts).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("DendInfCoalgebra(dim={}, max_arity={})", self.0.space().dim(), self.0.max_arity())
    }
}

/// Named dendriform coalgebras that satisfy their axioms by construction.
#[pyfunction]
fn corpus() -> Vec<(String, PyDendCoalgebra)> {
    dend_coalgebras().into_iter().map(|(name, c)| (name, PyDendCoalgebra(c))).collect()
}

/// The `"kind"` tag of a structure document, after validating it.
#[pyfunction]
fn kind_of(text: &str) -> PyResult<&'static str> {
    io::parse(text).map(|s| s.kind()).map_err(py_err)
}

#[pymodule]
fn dendri(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DendriError", m.py().get_type::<DendriError>())?;
    m.add_class::<PyDendCoalgebra>()?;
    m.add_class::<PyDendAlgebra>()?;
    m.add_class::<PyRelRBO>()?;
    m.add_class::<PyDeformation>()?;
    m.add_class::<PyDendInf>()?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    m.add_function(wrap_pyfunction!(kind_of, m)?)?;
    Ok(())
}
