//! Python bindings. Partitions and compositions cross the boundary as lists
//! of ints; tableaux, affine permutations and matrices are wrapped classes.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use kcore::{affine, cores, ktableau, kostka, lattice};
use kcore::{AffinePermutation, Composition, Core, KTableau, Partition, PartitionMatrix};

fn err(e: kcore::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn part(v: Vec<usize>) -> PyResult<Partition> {
    Partition::new(v).map_err(err)
}

fn comp(v: Vec<usize>) -> PyResult<Composition> {
    Composition::new(v).map_err(err)
}

fn parts_of(ps: Vec<Partition>) -> Vec<Vec<usize>> {
    ps.into_iter().map(Partition::into_parts).collect()
}

#[pyclass(name = "KTableau", module = "kcore", frozen)]
struct PyKTableau(KTableau);

#[pymethods]
impl PyKTableau {
    /// Rows are listed bottom row first.
    #[new]
    fn new(rows: Vec<Vec<usize>>, k: usize) -> PyResult<Self> {
        KTableau::from_rows(rows, k).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_reduced_word(word: Vec<usize>, k: usize) -> PyResult<Self> {
        KTableau::from_reduced_word(&word, k).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(Self).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.0.shape().shape().parts().to_vec()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.rows().to_vec()
    }

    #[getter]
    fn evaluation(&self) -> Vec<usize> {
        self.0.evaluation().parts().to_vec()
    }

    fn bounded_shape(&self) -> Vec<usize> {
        self.0.bounded_shape().into_parts()
    }

    fn is_standard(&self) -> bool {
        self.0.is_standard()
    }

    fn standardize(&self) -> Self {
        Self(self.0.standardize())
    }

    fn to_reduced_word(&self) -> PyResult<Vec<usize>> {
        self.0.to_reduced_word().map_err(err)
    }

    /// The saturated chain of bounded shapes, from the empty partition up.
    fn chain(&self) -> PyResult<Vec<Vec<usize>>> {
        let chain = self.0.gamma_inv().map_err(err)?;
        Ok(parts_of(chain.steps))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("tableau serializes")
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!("KTableau({:?}, k={})", self.0.rows(), self.0.k())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "AffinePermutation", module = "kcore", frozen)]
struct PyAffinePermutation(AffinePermutation);

#[pymethods]
impl PyAffinePermutation {
    #[new]
    fn new(window: Vec<i64>, k: usize) -> PyResult<Self> {
        AffinePermutation::new(window, k).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_word(word: Vec<usize>, k: usize) -> PyResult<Self> {
        AffinePermutation::from_word(&word, k).map(Self).map_err(err)
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn window(&self) -> Vec<i64> {
        self.0.window().to_vec()
    }

    fn length(&self) -> usize {
        self.0.length()
    }

    fn reduced_word(&self) -> Vec<usize> {
        self.0.reduced_word()
    }

    fn is_min_coset_rep(&self) -> bool {
        self.0.is_min_coset_rep()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn core(&self) -> PyResult<Vec<usize>> {
        self.0.s_map().map(|c| c.into_shape().into_parts()).map_err(err)
    }

    fn to_partition(&self) -> PyResult<Vec<usize>> {
        self.0.to_partition().map(Partition::into_parts).map_err(err)
    }

    fn weak_covers(&self) -> Vec<Self> {
        self.0.weak_covers().into_iter().map(Self).collect()
    }

    fn bruhat_leq(&self, other: &Self) -> PyResult<bool> {
        affine::bruhat_leq(&self.0, &other.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("AffinePermutation({:?}, k={})", self.0.window(), self.0.k())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

#[pyclass(name = "PartitionMatrix", module = "kcore", frozen)]
struct PyPartitionMatrix(PartitionMatrix);

#[pymethods]
impl PyPartitionMatrix {
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k
    }

    #[getter]
    fn index(&self) -> Vec<Vec<usize>> {
        parts_of(self.0.index.clone())
    }

    #[getter]
    fn entries(&self) -> Vec<Vec<BigInt>> {
        self.0.entries.clone()
    }

    fn entry(&self, lam: Vec<usize>, mu: Vec<usize>) -> PyResult<BigInt> {
        self.0
            .entry(&part(lam)?, &part(mu)?)
            .cloned()
            .ok_or_else(|| PyValueError::new_err("partition not in index"))
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.invert_unitriangular().map(Self).map_err(err)
    }

    fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }
}

#[pyfunction]
fn partition_to_core(lam: Vec<usize>, k: usize) -> PyResult<Vec<usize>> {
    let core = cores::c_map(&part(lam)?, k).map_err(err)?;
    Ok(core.into_shape().into_parts())
}

#[pyfunction]
fn core_to_partition(core: Vec<usize>, k: usize) -> PyResult<Vec<usize>> {
    let core = Core::new(part(core)?, k).map_err(err)?;
    Ok(cores::p_map(&core).into_parts())
}

#[pyfunction]
fn is_core(p: Vec<usize>, k: usize) -> PyResult<bool> {
    Ok(Core::new(part(p)?, k).is_ok())
}

#[pyfunction]
fn k_conjugate(lam: Vec<usize>, k: usize) -> PyResult<Vec<usize>> {
    cores::k_conjugate(&part(lam)?, k).map(Partition::into_parts).map_err(err)
}

/// Returns `(outer, inner)` of the k-skew diagram.
#[pyfunction]
fn k_skew(lam: Vec<usize>, k: usize) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let s = cores::k_skew(&part(lam)?, k).map_err(err)?;
    Ok((s.outer().parts().to_vec(), s.inner().parts().to_vec()))
}

#[pyfunction]
fn core_from_word(word: Vec<usize>, k: usize) -> PyResult<Vec<usize>> {
    cores::core_from_word(&word, k).map(|c| c.into_shape().into_parts()).map_err(err)
}

#[pyfunction]
fn up_covers(lam: Vec<usize>, k: usize) -> PyResult<Vec<Vec<usize>>> {
    lattice::up_covers(&part(lam)?, k).map(parts_of).map_err(err)
}

#[pyfunction]
fn down_covers(lam: Vec<usize>, k: usize) -> PyResult<Vec<Vec<usize>>> {
    lattice::down_covers(&part(lam)?, k).map(parts_of).map_err(err)
}

#[pyfunction]
fn leq(lam: Vec<usize>, mu: Vec<usize>, k: usize) -> PyResult<bool> {
    lattice::leq(&part(lam)?, &part(mu)?, k).map_err(err)
}

#[pyfunction]
fn count_saturated_chains(lam: Vec<usize>, k: usize) -> PyResult<u64> {
    lattice::count_saturated_chains(&part(lam)?, k).map_err(err)
}

#[pyfunction]
fn count_admissible_chains(lam: Vec<usize>, alpha: Vec<usize>, k: usize) -> PyResult<u64> {
    lattice::count_admissible_chains(&part(lam)?, &comp(alpha)?, k).map_err(err)
}

#[pyfunction]
fn hasse_dot(n: usize, k: usize) -> PyResult<String> {
    lattice::hasse_dot(n, k).map_err(err)
}

#[pyfunction]
fn standard_tableaux(lam: Vec<usize>, k: usize) -> PyResult<Vec<PyKTableau>> {
    let ts = ktableau::enumerate_standard(&part(lam)?, k).map_err(err)?;
    Ok(ts.into_iter().map(PyKTableau).collect())
}

#[pyfunction]
fn semistandard_tableaux(lam: Vec<usize>, alpha: Vec<usize>, k: usize) -> PyResult<Vec<PyKTableau>> {
    let ts = ktableau::enumerate_semistandard(&part(lam)?, &comp(alpha)?, k).map_err(err)?;
    Ok(ts.into_iter().map(PyKTableau).collect())
}

#[pyfunction]
fn phi(lam: Vec<usize>, k: usize) -> PyResult<PyAffinePermutation> {
    affine::phi(&part(lam)?, k).map(PyAffinePermutation).map_err(err)
}

/// The word read from the k-skew diagram of `lam`, whose product is `phi(lam)`.
#[pyfunction]
fn w_lambda(lam: Vec<usize>, k: usize) -> PyResult<Vec<usize>> {
    affine::w_lambda(&part(lam)?, k).map_err(err)
}

#[pyfunction]
fn kostka_matrix(n: usize, k: usize) -> PyResult<PyPartitionMatrix> {
    kostka::kostka_matrix(n, k).map(PyPartitionMatrix).map_err(err)
}

#[pyfunction]
fn k_schur_in_h(n: usize, k: usize) -> PyResult<PyPartitionMatrix> {
    kostka::k_schur_in_h(n, k).map(PyPartitionMatrix).map_err(err)
}

#[pyfunction]
fn bounded_partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    parts_of(Partition::bounded(n, k))
}

#[pymodule]
#[pyo3(name = "kcore")]
fn kcore_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyKTableau>()?;
    m.add_class::<PyAffinePermutation>()?;
    m.add_class::<PyPartitionMatrix>()?;
    m.add_function(wrap_pyfunction!(partition_to_core, m)?)?;
    m.add_function(wrap_pyfunction!(core_to_partition, m)?)?;
    m.add_function(wrap_pyfunction!(is_core, m)?)?;
    m.add_function(wrap_pyfunction!(k_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(k_skew, m)?)?;
    m.add_function(wrap_pyfunction!(core_from_word, m)?)?;
    m.add_function(wrap_pyfunction!(up_covers, m)?)?;
    m.add_function(wrap_pyfunction!(down_covers, m)?)?;
    m.add_function(wrap_pyfunction!(leq, m)?)?;
    m.add_function(wrap_pyfunction!(count_saturated_chains, m)?)?;
    m.add_function(wrap_pyfunction!(count_admissible_chains, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_dot, m)?)?;
    m.add_function(wrap_pyfunction!(standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(semistandard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(w_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(kostka_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(k_schur_in_h, m)?)?;
    m.add_function(wrap_pyfunction!(bounded_partitions, m)?)?;
    Ok(())
}
