//! Python bindings: groups, elements, summit graphs and parabolic subgroups.

use artin_core::complex::{intersect, join, LatticeResult};
use artin_core::conjugacy::{compute_summit_graph, SummitKind};
use artin_core::garside::word::format_positive_word;
use artin_core::garside::{GarsideStructure, GroupElement};
use artin_core::parabolic::{parabolic_closure, ParabolicSubgroup};
use artin_core::{GeneratorId, GeneratorSet};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: artin_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Group", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGroup(artin_core::Group, String);

#[pymethods]
impl PyGroup {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        artin_core::group(spec).map(|g| PyGroup(g, spec.to_string())).map_err(err)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn element(&self, word: &str) -> PyResult<PyElement> {
        GroupElement::parse(&self.0, word).map(PyElement).map_err(err)
    }

    fn delta(&self) -> PyElement {
        PyElement(GroupElement::delta(&self.0))
    }

    /// `g·A_X·g^{-1}` with `base` given by 1-based generator indices.
    #[pyo3(signature = (base, conjugator = None))]
    fn parabolic(&self, base: Vec<usize>, conjugator: Option<&PyElement>) -> PyResult<PyParabolic> {
        let mut x = GeneratorSet::EMPTY;
        for i in base {
            if i == 0 || i > self.0.rank() {
                return Err(PyValueError::new_err(format!("generator {i} out of range")));
            }
            x.insert(GeneratorId((i - 1) as u8));
        }
        let g = conjugator.map(|c| c.0.clone()).unwrap_or_else(|| GroupElement::identity(&self.0));
        Ok(PyParabolic(ParabolicSubgroup::new(&g, x)))
    }

    fn __repr__(&self) -> String {
        format!("Group({})", self.1)
    }
}

#[pyclass(name = "Element", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyElement(GroupElement);

#[pymethods]
impl PyElement {
    /// Left normal form with respect to `Δ^n`.
    #[pyo3(signature = (n = 1))]
    fn normal_form(&self, n: u32) -> PyResult<String> {
        if n == 0 {
            return Err(PyValueError::new_err("n must be at least 1"));
        }
        Ok(GarsideStructure::new(self.0.context(), n).normal_form(&self.0).to_string())
    }

    #[getter]
    fn inf(&self) -> i64 {
        self.0.inf()
    }

    #[getter]
    fn sup(&self) -> i64 {
        self.0.sup()
    }

    fn np(&self) -> (PyElement, PyElement) {
        let f = self.0.np_normal_form();
        (PyElement(f.negative), PyElement(f.positive))
    }

    fn pn(&self) -> (PyElement, PyElement) {
        let f = self.0.pn_normal_form();
        (PyElement(f.positive), PyElement(f.negative))
    }

    fn support(&self) -> Vec<usize> {
        self.0.support().iter().map(|s| s.index() + 1).collect()
    }

    fn positive_word(&self) -> Option<String> {
        self.0.positive_word().map(|w| format_positive_word(&w))
    }

    fn inverse(&self) -> PyElement {
        PyElement(self.0.inverse())
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.0.multiply(&other.0).map(PyElement).map_err(err)
    }

    fn __pow__(&self, m: i64, _modulo: Option<i64>) -> PyElement {
        PyElement(self.0.pow(m))
    }

    /// `x^{-1}·self·x`.
    fn conjugate(&self, x: &PyElement) -> PyElement {
        PyElement(self.0.conjugate(&x.0))
    }

    fn closure(&self) -> PyResult<PyParabolic> {
        parabolic_closure(&self.0).map(PyParabolic).map_err(err)
    }

    /// Summit graph as JSON text.
    #[pyo3(signature = (kind = "uss", n = 1, su_max_power = 4, max_vertices = 100_000))]
    fn summit_graph(&self, kind: &str, n: u32, su_max_power: u32, max_vertices: usize) -> PyResult<String> {
        let kind = SummitKind::parse(kind).map_err(err)?;
        let s = GarsideStructure::new(self.0.context(), n.max(1));
        let g = compute_summit_graph(&self.0, kind, &s, su_max_power, max_vertices).map_err(err)?;
        Ok(g.to_json().to_string())
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.0)
    }
}

#[pyclass(name = "Parabolic", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyParabolic(ParabolicSubgroup);

fn lattice(r: artin_core::Result<LatticeResult>) -> PyResult<(PyParabolic, bool)> {
    let r = r.map_err(err)?;
    Ok((PyParabolic(r.subgroup), r.certificate.complete))
}

#[pymethods]
impl PyParabolic {
    #[getter]
    fn z(&self) -> PyElement {
        PyElement(self.0.z().clone())
    }

    #[getter]
    fn base(&self) -> Vec<usize> {
        self.0.base().iter().map(|s| s.index() + 1).collect()
    }

    #[getter]
    fn standardizer(&self) -> PyElement {
        PyElement(self.0.standardizer().clone())
    }

    fn contains(&self, x: &PyElement) -> bool {
        self.0.contains_element(&x.0)
    }

    fn contains_subgroup(&self, q: &PyParabolic) -> bool {
        self.0.contains_subgroup(&q.0)
    }

    fn conjugated(&self, x: &PyElement) -> PyParabolic {
        PyParabolic(self.0.conjugated(&x.0))
    }

    /// `(P ∩ Q, complete)` where `complete` reports whether the search finished within `budget`.
    #[pyo3(signature = (other, budget = 5))]
    fn intersect(&self, other: &PyParabolic, budget: usize) -> PyResult<(PyParabolic, bool)> {
        lattice(intersect(&self.0, &other.0, budget))
    }

    #[pyo3(signature = (other, budget = 3))]
    fn join(&self, other: &PyParabolic, budget: usize) -> PyResult<(PyParabolic, bool)> {
        lattice(join(&self.0, &other.0, budget))
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Parabolic({})", self.0)
    }
}

#[pymodule]
fn artin(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyElement>()?;
    m.add_class::<PyParabolic>()?;
    Ok(())
}
