//! Immutable simple graphs over at most 64 indexed vertices.

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph. Adjacency is stored as one
/// [`VertexSet`] per vertex; labels are optional and unique.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] = g.adj[u].with(v);
            g.adj[v] = g.adj[v].with(u);
        }
        Ok(g)
    }

    /// Builds a graph from labelled edges; vertices are indexed in order of
    /// first appearance.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let mut idx = |s: &S| {
                let s = s.as_ref();
                *index.entry(s.to_string()).or_insert_with(|| {
                    labels.push(s.to_string());
                    labels.len() - 1
                })
            };
            let (u, v) = (idx(a), idx(b));
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            pairs.push((u, v));
        }
        Graph::from_edges(labels.len(), pairs)?.with_labels(labels)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// `K_n`. Panics if `n > 64`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n).expect("complete graph too large");
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`. Panics if `n > 64`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path too large")
    }

    /// Cycle on `n >= 3` vertices. Panics if `n > 64` or `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle too large")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// `N(v)`. Panics if `v` is out of range; see [`Graph::neighborhood`].
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N(v)`, checked.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.adj
            .get(v)
            .copied()
            .ok_or(Error::VertexOutOfRange { vertex: v, n: self.n() })
    }

    /// `N[v] = N(v) ∪ {v}`, checked.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        Ok(self.neighborhood(v)?.with(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|s| s.is_empty())
    }

    /// True iff every pair of vertices in `s` is adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    /// True iff no two vertices of `s` are adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Induced subgraph on `keep`, renumbered in increasing index order.
    /// The second component maps old indices to new ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if !keep.is_subset(self.vertex_set()) {
            let vertex = (keep - self.vertex_set()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex,
                n: self.n(),
            });
        }
        let mut map = vec![None; self.n()];
        for (new, old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut adj = vec![VertexSet::EMPTY; keep.len()];
        for old in keep {
            let new = map[old].unwrap();
            adj[new] = (self.adj[old] & keep).iter().filter_map(|w| map[w]).collect();
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|v| l[v].clone()).collect());
        Ok((Graph { adj, labels }, map))
    }

    /// Graph with the isolated vertices removed, plus the old-to-new map.
    pub fn without_isolated(&self) -> (Graph, Vec<Option<usize>>) {
        self.induced_subgraph(self.vertex_set() - self.isolated_vertices())
            .expect("subset of own vertex set")
    }

    pub fn complement_graph(&self) -> Graph {
        let all = self.vertex_set();
        Graph {
            adj: (0..self.n())
                .map(|v| (all - self.adj[v]).without(v))
                .collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, or its index when the graph is unlabelled.
    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(&l[v]),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&v| v < self.n()),
        }
    }

    pub fn set_labels(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.label(v).into_owned()).collect()
    }

    /// Renders a vertex set by its labels: concatenated when every label is a
    /// single character (`"bceg"`), space-separated otherwise.
    pub fn format_set(&self, s: VertexSet) -> String {
        let compact = (0..self.n()).all(|v| self.label(v).chars().count() == 1);
        let parts = self.set_labels(s);
        if compact {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.label(u), self.label(v)))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &edges)
            .finish()
    }
}

/// A graph restricted to a kept vertex set, without renumbering.
#[derive(Clone, Copy)]
pub(crate) struct Subgraph<'g> {
    pub(crate) graph: &'g Graph,
    pub(crate) kept: VertexSet,
}

impl<'g> Subgraph<'g> {
    pub(crate) fn whole(graph: &'g Graph) -> Self {
        Subgraph {
            graph,
            kept: graph.vertex_set(),
        }
    }

    pub(crate) fn restrict(self, kept: VertexSet) -> Self {
        Subgraph {
            graph: self.graph,
            kept: self.kept & kept,
        }
    }

    pub(crate) fn neighbors(self, v: usize) -> VertexSet {
        self.graph.neighbors(v) & self.kept
    }

    pub(crate) fn closed(self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    /// Vertices with at least one neighbour in the view.
    pub(crate) fn support(self) -> VertexSet {
        self.kept
            .iter()
            .filter(|&v| !self.neighbors(v).is_empty())
            .collect()
    }

    pub(crate) fn is_clique(self, s: VertexSet) -> bool {
        self.graph.is_clique(s & self.kept)
    }

    pub(crate) fn is_simplicial(self, v: usize) -> bool {
        self.is_clique(self.neighbors(v))
    }
}
