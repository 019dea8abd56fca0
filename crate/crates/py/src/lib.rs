//! Python bindings. Exact values cross the boundary as strings ("-3/2").

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tppa_core::bratteli::rhat;
use tppa_core::characters::chi_star as core_chi_star;
use tppa_core::combinat::{partitions_upto, SetPartitionTableau, YoungDiagram};
use tppa_core::diagram::{compose, from_orbit, to_orbit, AlgebraElement, Basis, PartitionDiagram};
use tppa_core::rook::RookElement;
use tppa_core::rsk::{path_to_spt, spt_to_path};
use tppa_core::seminormal::RookIrrep;
use tppa_core::verify::{multiplicity_three_ways, run_suite, Scope};
use tppa_core::{jm, tensor, Level};

fn err(e: tppa_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn shape(s: &str) -> PyResult<YoungDiagram> {
    s.parse().map_err(err)
}

/// A set partition of {1..k} ∪ {1'..k'}, written as signed blocks.
#[pyclass(name = "Diagram", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDiagram(PartitionDiagram);

#[pymethods]
impl PyDiagram {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyDiagram).map_err(err)
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    fn blocks(&self) -> Vec<Vec<i64>> {
        self.0.blocks()
    }

    fn num_blocks(&self) -> usize {
        self.0.num_blocks()
    }

    fn is_totally_propagating(&self) -> bool {
        self.0.is_totally_propagating()
    }

    /// Returns (self ∘ other, number of removed middle components).
    fn compose(&self, other: &PyDiagram) -> PyResult<(PyDiagram, usize)> {
        compose(&self.0, &other.0).map(|(d, l)| (PyDiagram(d), l)).map_err(err)
    }

    /// The diagram basis element in the orbit basis, as {diagram: coefficient}.
    fn to_orbit(&self) -> Vec<(String, String)> {
        terms(&to_orbit(&AlgebraElement::basis_element(
            self.0.clone(),
            Basis::Diagram,
        )))
    }

    /// The orbit basis element in the diagram basis.
    #[allow(clippy::wrong_self_convention)]
    fn from_orbit(&self) -> Vec<(String, String)> {
        terms(&from_orbit(&AlgebraElement::basis_element(
            self.0.clone(),
            Basis::Orbit,
        )))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Diagram('{}')", self.0)
    }
}

fn terms(a: &AlgebraElement) -> Vec<(String, String)> {
    a.sum().iter().map(|(d, c)| (d.to_string(), c.to_string())).collect()
}

/// Dimensions of V^λ_n keyed by λ.
#[pyfunction]
fn rook_dims(n: usize) -> PyResult<Vec<(String, usize)>> {
    partitions_upto(n)
        .into_iter()
        .map(|l| Ok((l.to_string(), RookIrrep::new(&l, n).map_err(err)?.dim())))
        .collect()
}

/// (paths, S(k,|λ|) f^λ, character multiplicity).
#[pyfunction]
fn mult(lam: &str, k: usize, n: usize) -> PyResult<(u128, u128, u128)> {
    multiplicity_three_ways(&shape(lam)?, k, n).map_err(err)
}

#[pyfunction]
fn chi_star(lam: &str, n: usize, sigma: Vec<(usize, usize)>) -> PyResult<String> {
    let s = RookElement::from_pairs(n, &sigma).map_err(err)?;
    core_chi_star(&shape(lam)?, &s).map(|v| v.to_string()).map_err(err)
}

/// Set-partition tableau of an R̂(n)-path given as a list of partitions.
#[pyfunction]
fn path_to_tableau(path: Vec<Vec<usize>>, n: usize) -> PyResult<Vec<Vec<Vec<usize>>>> {
    let shapes: Vec<YoungDiagram> = path
        .into_iter()
        .map(YoungDiagram::new)
        .collect::<Result<_, _>>()
        .map_err(err)?;
    if shapes.is_empty() || n == 0 {
        return Err(PyValueError::new_err("empty path or n = 0"));
    }
    let g = rhat(n, shapes.len());
    let p = g.path_from_shapes(Level::integer(1), &shapes).map_err(err)?;
    Ok(path_to_spt(&p).map_err(err)?.rows().to_vec())
}

#[pyfunction]
fn tableau_to_path(rows: Vec<Vec<Vec<usize>>>) -> PyResult<Vec<Vec<usize>>> {
    let t = SetPartitionTableau::new(rows).map_err(err)?;
    let k = t.letters().last().copied().unwrap_or(0);
    let p = spt_to_path(&t, k).map_err(err)?;
    Ok(p.vertices.iter().map(|l| l.parts().to_vec()).collect())
}

/// Schur–Weyl report as JSON text.
#[pyfunction]
#[pyo3(signature = (n, k, half=false))]
fn schur_weyl(n: usize, k: usize, half: bool) -> PyResult<String> {
    let r = tensor::schur_weyl_report(n, k, half).map_err(err)?;
    Ok(serde_json::to_string(&r).expect("serializable"))
}

/// Gelfand–Tsetlin table at level t (e.g. "5/2") as JSON text.
#[pyfunction]
fn gt_decompose(t: &str, n: usize) -> PyResult<String> {
    let t: Level = t.parse().map_err(err)?;
    let r = jm::gt_decompose(t, n).map_err(err)?;
    Ok(serde_json::to_string(&r).expect("serializable"))
}

/// (id, name, ok) for each check in a suite.
#[pyfunction]
#[pyo3(signature = (suite="all"))]
fn verify(suite: &str) -> PyResult<Vec<(u32, String, bool)>> {
    let checks = run_suite(suite, Scope::default()).map_err(err)?;
    Ok(checks.into_iter().map(|c| (c.id, c.name, c.ok)).collect())
}

#[pymodule]
fn tppa(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_function(wrap_pyfunction!(rook_dims, m)?)?;
    m.add_function(wrap_pyfunction!(mult, m)?)?;
    m.add_function(wrap_pyfunction!(chi_star, m)?)?;
    m.add_function(wrap_pyfunction!(path_to_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(tableau_to_path, m)?)?;
    m.add_function(wrap_pyfunction!(schur_weyl, m)?)?;
    m.add_function(wrap_pyfunction!(gt_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
