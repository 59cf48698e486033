//! Python bindings. Vertex sets cross the boundary as sorted lists: of
//! labels for `Graph` methods, of vertex indices for the free functions.

use std::collections::BTreeMap;

use cover_ideals as ci;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn to_py(e: ci::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_set(indices: &[usize]) -> PyResult<ci::VertexSet> {
    indices
        .iter()
        .map(|&v| {
            if v < ci::vertex_set::MAX_VERTICES {
                Ok(v)
            } else {
                Err(PyValueError::new_err(format!("vertex {v} out of range")))
            }
        })
        .collect()
}

fn to_sets(list: &[Vec<usize>]) -> PyResult<Vec<ci::VertexSet>> {
    list.iter().map(|s| to_set(s)).collect()
}

fn table_dict(t: &ci::BettiTable) -> BTreeMap<(usize, usize), u64> {
    t.entries().clone()
}

/// `min`, `max`, `maxdeg`, or a list of labels tried first with `fallback`.
fn rule_from(g: &ci::Graph, pivot: Option<Vec<String>>, fallback: &str) -> PyResult<ci::PivotRule> {
    let fallback = match fallback {
        "min" => ci::PivotFallback::MinIndex,
        "max" => ci::PivotFallback::MaxIndex,
        "maxdeg" => ci::PivotFallback::MaxDegree,
        other => return Err(PyValueError::new_err(format!("unknown fallback `{other}`"))),
    };
    let priority = pivot
        .unwrap_or_default()
        .iter()
        .map(|l| {
            g.vertex_by_label(l)
                .ok_or_else(|| PyValueError::new_err(format!("unknown vertex `{l}`")))
        })
        .collect::<PyResult<Vec<_>>>()?;
    Ok(ci::PivotRule::with_priority(priority, fallback))
}

/// A simple graph with string vertex labels.
#[pyclass(name = "Graph", module = "cover_ideals", frozen)]
pub struct PyGraph {
    inner: ci::Graph,
}

impl PyGraph {
    fn sets(&self, sets: &[ci::VertexSet]) -> Vec<Vec<String>> {
        sets.iter().map(|&s| self.inner.set_labels(s)).collect()
    }

    fn ordering(
        &self,
        method: &str,
        pivot: Option<Vec<String>>,
        fallback: &str,
    ) -> PyResult<ci::MonomialOrdering> {
        let rule = rule_from(&self.inner, pivot, fallback)?;
        match method {
            "vv" => ci::vv_ordering(&self.inner, &rule),
            "fvt" => ci::fvt_ordering(&self.inner, &rule),
            other => return Err(PyValueError::new_err(format!("unknown ordering `{other}`"))),
        }
        .map_err(to_py)
    }
}

#[pymethods]
impl PyGraph {
    /// Builds a graph from `(label, label)` pairs; vertices are indexed in
    /// order of first appearance.
    #[new]
    fn new(edges: Vec<(String, String)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: ci::Graph::from_labeled_edges(&edges).map_err(to_py)?,
        })
    }

    /// Graph on vertices `0..n` labelled by their indices.
    #[staticmethod]
    fn from_indexed(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let g = ci::Graph::from_edges(n, edges).map_err(to_py)?;
        let labels = (0..n).map(|v| v.to_string()).collect();
        Ok(PyGraph {
            inner: g.with_labels(labels).map_err(to_py)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        (0..self.inner.n()).map(|v| self.inner.label(v).into_owned()).collect()
    }

    fn edges(&self) -> Vec<(String, String)> {
        self.inner
            .edges()
            .into_iter()
            .map(|(u, v)| (self.inner.label(u).into_owned(), self.inner.label(v).into_owned()))
            .collect()
    }

    fn is_chordal(&self) -> bool {
        ci::is_chordal(&self.inner)
    }

    fn simplicial_vertices(&self) -> Vec<String> {
        ci::simplicial_vertices(&self.inner)
            .into_iter()
            .map(|v| self.inner.label(v).into_owned())
            .collect()
    }

    fn maximal_cliques(&self) -> Vec<Vec<String>> {
        self.sets(&ci::maximal_cliques(&self.inner))
    }

    /// Minimal vertex covers, `method` being `recursive` or `bruteforce`.
    #[pyo3(signature = (method = "recursive"))]
    fn minimal_covers(&self, method: &str) -> PyResult<Vec<Vec<String>>> {
        let family = match method {
            "recursive" => ci::minimal_covers_recursive(&self.inner),
            "bruteforce" => ci::minimal_covers_bruteforce(&self.inner),
            other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
        }
        .map_err(to_py)?;
        Ok(self.sets(family.covers()))
    }

    fn independence_complex(&self) -> Vec<Vec<String>> {
        self.sets(ci::independence_complex(&self.inner).facets())
    }

    /// Linear-quotients ordering of the cover ideal (`vv` or `fvt`).
    #[pyo3(signature = (method = "vv", pivot = None, fallback = "min"))]
    fn linear_quotients_ordering(
        &self,
        method: &str,
        pivot: Option<Vec<String>>,
        fallback: &str,
    ) -> PyResult<Vec<Vec<String>>> {
        Ok(self.sets(self.ordering(method, pivot, fallback)?.gens()))
    }

    /// Shelling of the independence complex matching an ordering.
    #[pyo3(signature = (method = "vv", pivot = None, fallback = "min"))]
    fn shelling(
        &self,
        method: &str,
        pivot: Option<Vec<String>>,
        fallback: &str,
    ) -> PyResult<Vec<Vec<String>>> {
        let o = self.ordering(method, pivot, fallback)?;
        Ok(self.sets(&ci::shelling_from_ordering(&o, self.inner.n()).facets))
    }

    /// Graded Betti numbers `{(i, j): b_ij}` of the cover ideal by `lq`,
    /// `recursive` or `oracle`.
    #[pyo3(signature = (method = "recursive"))]
    fn betti(&self, method: &str) -> PyResult<BTreeMap<(usize, usize), u64>> {
        let t = match method {
            "lq" => ci::vv_ordering(&self.inner, &ci::PivotRule::min_index())
                .and_then(|o| ci::betti_from_ordering(&o)),
            "recursive" => ci::graded_recursive(&self.inner),
            "oracle" => ci::minimal_covers_bruteforce(&self.inner)
                .and_then(|c| ci::hochster_betti(c.covers(), self.inner.n())),
            other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
        }
        .map_err(to_py)?;
        Ok(table_dict(&t))
    }

    fn total_betti(&self) -> PyResult<Vec<u64>> {
        ci::total_recursive(&self.inner).map_err(to_py)
    }

    /// `{"pd", "im", "reg_edge_ideal", "b0"}`.
    fn invariants(&self) -> PyResult<BTreeMap<&'static str, u64>> {
        let inv = ci::invariants(&self.inner).map_err(to_py)?;
        Ok(BTreeMap::from([
            ("pd", inv.pd as u64),
            ("im", inv.im as u64),
            ("reg_edge_ideal", inv.reg_edge_ideal as u64),
            ("b0", inv.b0),
        ]))
    }

    fn induced_matching_number(&self) -> PyResult<usize> {
        ci::induced_matching_number(&self.inner).map_err(to_py)
    }

    fn is_unmixed(&self) -> PyResult<bool> {
        Ok(ci::unmixed_certificate(&self.inner).map_err(to_py)?.is_unmixed)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// Colon counts if `gens` (in order) has linear quotients, else `None`.
#[pyfunction]
fn verify_linear_quotients(gens: Vec<Vec<usize>>) -> PyResult<Option<Vec<usize>>> {
    match ci::verify_linear_quotients(&to_sets(&gens)?).map_err(to_py)? {
        ci::LqVerdict::Linear { colon_counts } => Ok(Some(colon_counts)),
        ci::LqVerdict::Fails { .. } => Ok(None),
    }
}

#[pyfunction]
fn verify_shelling(facets: Vec<Vec<usize>>) -> PyResult<bool> {
    let s = ci::Shelling::new(to_sets(&facets)?);
    Ok(ci::verify_shelling(&s).map_err(to_py)?.is_shelling())
}

/// Graded Betti numbers of the squarefree monomial ideal generated by
/// `gens` in `n` variables, from simplicial homology.
#[pyfunction]
fn hochster_betti(gens: Vec<Vec<usize>>, n: usize) -> PyResult<BTreeMap<(usize, usize), u64>> {
    let t = ci::hochster_betti(&to_sets(&gens)?, n).map_err(to_py)?;
    Ok(table_dict(&t))
}

#[pymodule]
#[pyo3(name = "cover_ideals")]
fn cover_ideals_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(verify_linear_quotients, m)?)?;
    m.add_function(wrap_pyfunction!(verify_shelling, m)?)?;
    m.add_function(wrap_pyfunction!(hochster_betti, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_with_tail() -> PyGraph {
        let edges = [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")];
        PyGraph::new(edges.iter().map(|(u, v)| (u.to_string(), v.to_string())).collect()).unwrap()
    }

    #[test]
    fn graph_methods() {
        let g = triangle_with_tail();
        assert!(g.is_chordal());
        assert_eq!(g.simplicial_vertices(), vec!["a", "b", "d"]);
        assert_eq!(
            g.minimal_covers("recursive").unwrap(),
            g.minimal_covers("bruteforce").unwrap()
        );
        let rec = g.betti("recursive").unwrap();
        assert_eq!(rec, g.betti("lq").unwrap());
        assert_eq!(rec, g.betti("oracle").unwrap());
        assert_eq!(g.invariants().unwrap()["pd"], 1);
    }

    #[test]
    fn pivot_rules() {
        let g = triangle_with_tail();
        let rule = rule_from(&g.inner, Some(vec!["d".into()]), "max").unwrap();
        assert_eq!(rule.priority, vec![3]);
        assert!(rule_from(&g.inner, Some(vec!["z".into()]), "min").is_err());
        assert!(rule_from(&g.inner, None, "sideways").is_err());
    }

    #[test]
    fn free_functions() {
        assert_eq!(verify_linear_quotients(vec![vec![0, 1], vec![1, 2]]).unwrap(), Some(vec![0, 1]));
        assert!(verify_shelling(vec![vec![0], vec![1]]).unwrap());
        assert!(!verify_shelling(vec![vec![0, 1], vec![2, 3]]).unwrap());
        let t = hochster_betti(vec![vec![0], vec![1]], 2).unwrap();
        assert_eq!(t, BTreeMap::from([((0, 1), 2), ((1, 2), 1)]));
        assert!(to_set(&[64]).is_err());
    }
}
