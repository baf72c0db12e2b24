//! Python bindings: `import lcs_apg`.
//!
//! Sequences are accepted as `bytes` or `str` (encoded as UTF-8). Prefix
//! arguments default to the full lengths. Counts are Python ints of
//! unbounded size.

use num_bigint::BigUint;
use pyo3::exceptions::{PyIndexError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyBytes;

use lcs_apg::oracle::{self, DedupKey, DEFAULT_PATH_LIMIT};
use lcs_apg::{Error, LcsGraph, Sequence};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::IndexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        Error::InputTooLarge { .. } => PyValueError::new_err(e.to_string()),
        Error::PathLimitExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
    }
}

#[derive(FromPyObject)]
enum Symbols {
    Bytes(Vec<u8>),
    Text(String),
}

impl Symbols {
    fn into_bytes(self) -> Vec<u8> {
        match self {
            Symbols::Bytes(b) => b,
            Symbols::Text(s) => s.into_bytes(),
        }
    }

    fn into_sequence(self) -> PyResult<Sequence> {
        Sequence::new(self.into_bytes()).map_err(to_py_err)
    }
}

/// One LCS with its 1-based positions in both sequences.
#[pyclass(frozen, eq, hash, from_py_object, module = "lcs_apg")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct LcsResult {
    inner: lcs_apg::LcsResult,
}

#[pymethods]
impl LcsResult {
    #[new]
    fn new(text: Symbols, pos_a: Vec<usize>, pos_b: Vec<usize>) -> PyResult<Self> {
        let text = text.into_bytes();
        if pos_a.len() != text.len() || pos_b.len() != text.len() {
            return Err(PyValueError::new_err("text and positions differ in length"));
        }
        Ok(LcsResult {
            inner: lcs_apg::LcsResult { text, pos_a, pos_b },
        })
    }

    #[getter]
    fn text<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
        PyBytes::new(py, &self.inner.text)
    }

    #[getter]
    fn pos_a(&self) -> Vec<usize> {
        self.inner.pos_a.clone()
    }

    #[getter]
    fn pos_b(&self) -> Vec<usize> {
        self.inner.pos_b.clone()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "LcsResult(text={:?}, pos_a={:?}, pos_b={:?})",
            self.inner.text_lossy(),
            self.inner.pos_a,
            self.inner.pos_b
        )
    }
}

fn wrap(results: impl IntoIterator<Item = lcs_apg::LcsResult>) -> Vec<LcsResult> {
    results
        .into_iter()
        .map(|inner| LcsResult { inner })
        .collect()
}

fn cell<G: LcsGraph>(g: &G, i: Option<usize>, j: Option<usize>) -> (usize, usize) {
    (i.unwrap_or(g.a().len()), j.unwrap_or(g.b().len()))
}

fn adjacency<G: LcsGraph>(
    g: &G,
    i: Option<usize>,
    j: Option<usize>,
) -> PyResult<Vec<(usize, usize)>> {
    let (i, j) = cell(g, i, j);
    Ok(g.adjacency(i, j)
        .map_err(to_py_err)?
        .into_iter()
        .map(|p| (p.row, p.col))
        .collect())
}

fn enumerate<G: LcsGraph>(
    g: &G,
    i: Option<usize>,
    j: Option<usize>,
    limit: Option<usize>,
) -> PyResult<Vec<LcsResult>> {
    let (i, j) = cell(g, i, j);
    let it = lcs_apg::enumerate(g, i, j).map_err(to_py_err)?;
    Ok(wrap(it.take(limit.unwrap_or(usize::MAX))))
}

fn count<G: LcsGraph>(g: &G, i: Option<usize>, j: Option<usize>) -> PyResult<BigUint> {
    let (i, j) = cell(g, i, j);
    Ok(lcs_apg::count_results(g, i, j).map_err(to_py_err)?.0)
}

fn rank<G: LcsGraph>(g: &G, i: usize, j: usize) -> PyResult<u32> {
    g.check_cell(i, j).map_err(to_py_err)?;
    Ok(g.rank(i, j))
}

macro_rules! graph_class {
    ($name:ident, $inner:ty, $doc:literal) => {
        #[doc = $doc]
        #[pyclass(frozen, module = "lcs_apg")]
        struct $name {
            inner: $inner,
        }

        #[pymethods]
        impl $name {
            #[new]
            fn new(a: Symbols, b: Symbols) -> PyResult<Self> {
                Ok($name {
                    inner: <$inner>::build(a.into_sequence()?, b.into_sequence()?),
                })
            }

            #[getter]
            fn a<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
                PyBytes::new(py, self.inner.a().as_bytes())
            }

            #[getter]
            fn b<'py>(&self, py: Python<'py>) -> Bound<'py, PyBytes> {
                PyBytes::new(py, self.inner.b().as_bytes())
            }

            #[getter]
            fn construction_steps(&self) -> u64 {
                self.inner.construction_steps()
            }

            fn lcs_length(&self) -> u32 {
                self.inner.ranks().lcs_len()
            }

            fn rank(&self, i: usize, j: usize) -> PyResult<u32> {
                rank(&self.inner, i, j)
            }

            /// `(row, col)` of each match in the cell's adjacency list.
            #[pyo3(signature = (i=None, j=None))]
            fn adjacency(
                &self,
                i: Option<usize>,
                j: Option<usize>,
            ) -> PyResult<Vec<(usize, usize)>> {
                adjacency(&self.inner, i, j)
            }

            /// Results in depth-first order, at most `limit` of them.
            #[pyo3(signature = (i=None, j=None, limit=None))]
            fn enumerate(
                &self,
                py: Python<'_>,
                i: Option<usize>,
                j: Option<usize>,
                limit: Option<usize>,
            ) -> PyResult<Vec<LcsResult>> {
                py.detach(|| enumerate(&self.inner, i, j, limit))
            }

            #[pyo3(signature = (i=None, j=None))]
            fn count(
                &self,
                py: Python<'_>,
                i: Option<usize>,
                j: Option<usize>,
            ) -> PyResult<BigUint> {
                py.detach(|| count(&self.inner, i, j))
            }

            fn __repr__(&self) -> String {
                format!(
                    "{}(m={}, n={})",
                    stringify!($name),
                    self.inner.a().len(),
                    self.inner.b().len()
                )
            }
        }
    };
}

graph_class!(
    DistinctGraph,
    lcs_apg::DistinctGraph,
    "Graph whose paths spell each distinct LCS of any prefix pair once."
);
graph_class!(
    EmbeddingsGraph,
    lcs_apg::EmbeddingsGraph,
    "Graph whose paths spell each LCS embedding of any prefix pair once."
);

#[pyfunction]
fn lcs_length(a: Symbols, b: Symbols) -> PyResult<u32> {
    let (a, b) = (a.into_sequence()?, b.into_sequence()?);
    Ok(lcs_apg::compute_ranks(&a, &b).lcs_len())
}

/// The full `(m+1) x (n+1)` rank matrix as nested lists.
#[pyfunction]
fn compute_ranks(a: Symbols, b: Symbols) -> PyResult<Vec<Vec<u32>>> {
    let (a, b) = (a.into_sequence()?, b.into_sequence()?);
    let r = lcs_apg::compute_ranks(&a, &b);
    Ok((0..r.rows()).map(|i| r.row(i).to_vec()).collect())
}

/// `(row, col, rank, dominant, antidominant)`
type ClassifiedTuple = (usize, usize, u32, bool, bool);

/// One tuple per match, contour by contour.
#[pyfunction]
fn classify(a: Symbols, b: Symbols) -> PyResult<Vec<ClassifiedTuple>> {
    let (a, b) = (a.into_sequence()?, b.into_sequence()?);
    let ranks = lcs_apg::compute_ranks(&a, &b);
    Ok(lcs_apg::classify_matches(&a, &b, &ranks)
        .iter()
        .map(|c| (c.point.row, c.point.col, c.rank, c.dominant, c.antidominant))
        .collect())
}

/// Every backtrace path, duplicates included.
#[pyfunction]
#[pyo3(signature = (a, b, i=None, j=None, limit=DEFAULT_PATH_LIMIT))]
fn naive_backtrace(
    a: Symbols,
    b: Symbols,
    i: Option<usize>,
    j: Option<usize>,
    limit: usize,
) -> PyResult<Vec<LcsResult>> {
    let (a, b) = (a.into_sequence()?, b.into_sequence()?);
    let ranks = lcs_apg::compute_ranks(&a, &b);
    let (i, j) = (i.unwrap_or(a.len()), j.unwrap_or(b.len()));
    oracle::naive_backtrace(&ranks, &a, &b, i, j, limit)
        .map(wrap)
        .map_err(to_py_err)
}

/// Keeps the first result per text (`key="text"`) or per embedding.
#[pyfunction]
#[pyo3(signature = (results, key="text"))]
fn dedup(results: Vec<LcsResult>, key: &str) -> PyResult<Vec<LcsResult>> {
    let key = match key {
        "text" => DedupKey::Text,
        "embedding" => DedupKey::Embedding,
        other => {
            return Err(PyValueError::new_err(format!(
                "key must be 'text' or 'embedding', not {other:?}"
            )))
        }
    };
    let inner = results.into_iter().map(|r| r.inner).collect();
    Ok(wrap(oracle::dedup(inner, key)))
}

/// Rightmost embedding of `s`, or None if it is not a common subsequence.
#[pyfunction]
fn greedy_anticanonical(a: Symbols, b: Symbols, s: Symbols) -> Option<LcsResult> {
    oracle::greedy_anticanonical(&a.into_bytes(), &b.into_bytes(), &s.into_bytes())
        .map(|inner| LcsResult { inner })
}

/// Compares both graphs with the oracle at every prefix pair. Returns the
/// number of pairs examined and the failure messages.
#[pyfunction]
#[pyo3(signature = (a, b, path_limit=DEFAULT_PATH_LIMIT))]
fn check_equivalence(
    py: Python<'_>,
    a: Symbols,
    b: Symbols,
    path_limit: usize,
) -> PyResult<(usize, Vec<String>)> {
    let (a, b) = (a.into_sequence()?, b.into_sequence()?);
    let report = py
        .detach(|| lcs_apg::check_equivalence(&a, &b, path_limit))
        .map_err(to_py_err)?;
    Ok((report.queries, report.failures))
}

#[pymodule]
#[pyo3(name = "lcs_apg")]
pub fn lcs_apg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<LcsResult>()?;
    m.add_class::<DistinctGraph>()?;
    m.add_class::<EmbeddingsGraph>()?;
    m.add_function(wrap_pyfunction!(lcs_length, m)?)?;
    m.add_function(wrap_pyfunction!(compute_ranks, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(naive_backtrace, m)?)?;
    m.add_function(wrap_pyfunction!(dedup, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_anticanonical, m)?)?;
    m.add_function(wrap_pyfunction!(check_equivalence, m)?)?;
    m.add("DEFAULT_PATH_LIMIT", DEFAULT_PATH_LIMIT)?;
    Ok(())
}
