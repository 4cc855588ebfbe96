//! Python bindings.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use interlace_core::graph::{parse_dow, EulerSystem as CoreEuler, Multigraph};
use interlace_core::interlace::{
    double_transform, interlace_graph, interlace_matrix, interlaced, kappa_transform,
    LoopedGraph as CoreLooped,
};
use interlace_core::partitions::{
    partition_matrix, trace, verify_extended_cle, TransitionAssignment, DEFAULT_CLE_CAP,
};
use interlace_core::permutations::{
    orbit_count_via_nullity, verify_permutation_reduction, Permutation, DEFAULT_REDUCTION_CAP,
};
use interlace_core::polynomials::{
    courcelle, courcelle_from_partitions, q2_from_partitions, q_from_partitions, q_nullity,
    q_two_variable, DEFAULT_PAIR_CAP, DEFAULT_SUBSET_CAP,
};
use interlace_core::{Gf2Matrix, MultiPoly};

/// `(assignment, traced, predicted)`.
type Failure = (String, usize, usize);

fn err(e: interlace_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Binary matrix over GF(2) with row/column labels.
#[pyclass(name = "Matrix", frozen)]
struct PyMatrix(Gf2Matrix);

#[pymethods]
impl PyMatrix {
    #[new]
    #[pyo3(signature = (rows, labels = None))]
    fn new(rows: Vec<Vec<u8>>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let m = match labels {
            Some(l) => Gf2Matrix::from_rows(l, &rows),
            None => Gf2Matrix::from_rows_numbered(&rows),
        };
        m.map(PyMatrix).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Gf2Matrix::parse(text).map(PyMatrix).map_err(err)
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    fn rows(&self) -> Vec<Vec<u32>> {
        self.0
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(u32::from).collect())
            .collect()
    }

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn nullity(&self) -> usize {
        self.0.nullity()
    }

    fn principal_submatrix(&self, keep: Vec<String>) -> PyResult<Self> {
        self.0.principal_submatrix(&keep).map(PyMatrix).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Sparse polynomial with exact integer coefficients.
#[pyclass(name = "Polynomial", frozen)]
struct PyPoly(MultiPoly);

#[pymethods]
impl PyPoly {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        MultiPoly::from_json(text).map(PyPoly).map_err(err)
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.0.vars().to_vec()
    }

    /// `(exponents, coefficient)` pairs in canonical order.
    fn terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.0
            .terms()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect()
    }

    fn coefficient(&self, monomial: HashMap<String, u32>) -> BigInt {
        let m: Vec<(&str, u32)> = monomial.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        self.0.coefficient_of(&m)
    }

    fn evaluate(&self, point: HashMap<String, BigInt>) -> PyResult<BigInt> {
        self.0.evaluate(&point).map_err(err)
    }

    fn substitute(&self, bindings: HashMap<String, PyRef<'_, PyPoly>>) -> Self {
        let b = bindings
            .into_iter()
            .map(|(k, v)| (k, v.0.clone()))
            .collect();
        PyPoly(self.0.substitute(&b))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPoly(&self.0 * &other.0)
    }
}

/// Graph with optional loops, given by a symmetric adjacency matrix.
#[pyclass(name = "LoopedGraph", frozen)]
struct PyLooped(CoreLooped);

#[pymethods]
impl PyLooped {
    #[new]
    #[pyo3(signature = (vertices, edges, loops = Vec::new()))]
    fn new(
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
        loops: Vec<String>,
    ) -> PyResult<Self> {
        CoreLooped::new(&vertices, &edges, &loops)
            .map(PyLooped)
            .map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        CoreLooped::parse(text).map(PyLooped).map_err(err)
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    #[getter]
    fn loops(&self) -> Vec<String> {
        self.0.loops()
    }

    fn matrix(&self) -> PyMatrix {
        PyMatrix(self.0.matrix().clone())
    }

    fn q_nullity(&self) -> PyPoly {
        PyPoly(q_nullity(&self.0))
    }

    fn q_two_variable(&self) -> PyPoly {
        PyPoly(q_two_variable(&self.0))
    }

    #[pyo3(signature = (cap = DEFAULT_PAIR_CAP))]
    fn courcelle(&self, cap: usize) -> PyResult<PyPoly> {
        courcelle(&self.0, cap).map(PyPoly).map_err(err)
    }
}

/// One Euler circuit per component of a 4-regular multigraph.
#[pyclass(name = "EulerSystem", frozen)]
struct PyEuler(CoreEuler);

#[pymethods]
impl PyEuler {
    /// From double occurrence words, one per component.
    #[staticmethod]
    fn from_words(words: Vec<Vec<String>>) -> PyResult<Self> {
        Multigraph::from_double_occurrence_words(&words)
            .map(|(_, es)| PyEuler(es))
            .map_err(err)
    }

    /// Text with one word per line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Self::from_words(parse_dow(text).map_err(err)?)
    }

    /// Hierholzer's circuits on an edge list.
    #[staticmethod]
    fn from_edges(edges: Vec<(String, String)>) -> PyResult<Self> {
        let g = Multigraph::from_edge_list(&edges).map_err(err)?;
        Ok(PyEuler(CoreEuler::hierholzer(Arc::new(g))))
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.graph().labels().to_vec()
    }

    #[getter]
    fn component_count(&self) -> usize {
        self.0.component_count()
    }

    fn words(&self) -> Vec<Vec<String>> {
        self.0.words()
    }

    fn interlaced(&self, u: &str, v: &str) -> PyResult<bool> {
        interlaced(&self.0, u, v).map_err(err)
    }

    fn interlace_matrix(&self) -> PyMatrix {
        PyMatrix(interlace_matrix(&self.0))
    }

    #[pyo3(signature = (loops = Vec::new()))]
    fn interlace_graph(&self, loops: Vec<String>) -> PyResult<PyLooped> {
        interlace_graph(&self.0, &loops).map(PyLooped).map_err(err)
    }

    fn kappa(&self, a: &str) -> PyResult<Self> {
        kappa_transform(&self.0, a).map(PyEuler).map_err(err)
    }

    fn double_transform(&self, a: &str, b: &str) -> PyResult<Self> {
        double_transform(&self.0, a, b).map(PyEuler).map_err(err)
    }

    /// Circuits of the partition given by `"v:F v:C v:X ..."`, as label words.
    fn trace(&self, assignment: &str) -> PyResult<Vec<Vec<String>>> {
        let g = self.0.graph();
        let t = TransitionAssignment::parse(g, assignment).map_err(err)?;
        Ok(trace(&self.0, &t).words(g))
    }

    fn partition_matrix(&self, assignment: &str) -> PyResult<PyMatrix> {
        let t = TransitionAssignment::parse(self.0.graph(), assignment).map_err(err)?;
        Ok(PyMatrix(partition_matrix(&self.0, &t)))
    }

    /// Checks every assignment; returns `(checked, failures)` with each
    /// failure as `(assignment, traced, predicted)`.
    #[pyo3(signature = (cap = DEFAULT_CLE_CAP))]
    fn verify_cle(&self, cap: usize) -> PyResult<(u64, Vec<Failure>)> {
        let r = verify_extended_cle(&self.0, cap).map_err(err)?;
        let failures = r
            .failures
            .into_iter()
            .map(|f| (f.assignment, f.traced, f.predicted))
            .collect();
        Ok((r.checked, failures))
    }

    #[pyo3(signature = (loops = Vec::new(), cap = DEFAULT_SUBSET_CAP))]
    fn q_from_partitions(&self, loops: Vec<String>, cap: usize) -> PyResult<PyPoly> {
        q_from_partitions(&self.0, &loops, cap)
            .map(PyPoly)
            .map_err(err)
    }

    #[pyo3(signature = (loops = Vec::new(), cap = DEFAULT_SUBSET_CAP))]
    fn q2_from_partitions(&self, loops: Vec<String>, cap: usize) -> PyResult<PyPoly> {
        q2_from_partitions(&self.0, &loops, cap)
            .map(PyPoly)
            .map_err(err)
    }

    #[pyo3(signature = (loops = Vec::new(), cap = DEFAULT_PAIR_CAP))]
    fn courcelle_from_partitions(&self, loops: Vec<String>, cap: usize) -> PyResult<PyPoly> {
        courcelle_from_partitions(&self.0, &loops, cap)
            .map(PyPoly)
            .map_err(err)
    }
}

/// Orbits of a permutation in image or cycle notation.
#[pyfunction]
#[pyo3(signature = (perm, size = None))]
fn orbit_count(perm: &str, size: Option<usize>) -> PyResult<usize> {
    Ok(Permutation::parse(perm, size).map_err(err)?.orbit_count())
}

/// `1 + nullity` of the interleaving matrix of disjoint transpositions.
#[pyfunction]
fn orbits_via_nullity(m: usize, transpositions: Vec<(usize, usize)>) -> PyResult<usize> {
    orbit_count_via_nullity(m, &transpositions).map_err(err)
}

/// Orbit count through circuit partitions of the pair digraph.
#[pyfunction]
#[pyo3(signature = (perm, size = None))]
fn verify_reduction<'py>(
    py: Python<'py>,
    perm: &str,
    size: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let p = Permutation::parse(perm, size).map_err(err)?;
    let r = verify_permutation_reduction(&p, DEFAULT_REDUCTION_CAP).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("size", r.size)?;
    d.set_item("extended_size", r.extended_size)?;
    d.set_item("orbits", r.orbits)?;
    d.set_item("traced", r.traced)?;
    d.set_item("nullity", r.nullity)?;
    d.set_item("components", r.components)?;
    d.set_item("assignment", r.assignment)?;
    d.set_item("agree", r.agree)?;
    Ok(d)
}

#[pymodule]
fn interlace(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyLooped>()?;
    m.add_class::<PyEuler>()?;
    m.add_function(wrap_pyfunction!(orbit_count, m)?)?;
    m.add_function(wrap_pyfunction!(orbits_via_nullity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_reduction, m)?)?;
    Ok(())
}
