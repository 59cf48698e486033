//! Chordality recognition, simplicial vertices, maximal cliques and the
//! free-facet certificate for unmixed chordal graphs.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A vertex order in which every vertex's later neighbours form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering {
    order: Vec<usize>,
}

impl EliminationOrdering {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Checks the defining property on `g`; returns the first failing position.
    pub fn first_violation(order: &[usize], g: &Graph) -> Option<usize> {
        let mut later = g.vertex_set();
        for (p, &v) in order.iter().enumerate() {
            later = later.without(v);
            if !g.is_clique(g.neighbors(v) & later) {
                return Some(p);
            }
        }
        None
    }
}

/// Evidence that a graph is not chordal: in the maximum cardinality search
/// order, `vertex` has two later neighbours that are not adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonChordalWitness {
    pub attempted_order: Vec<usize>,
    pub vertex: usize,
    pub non_adjacent: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Chordal(EliminationOrdering),
    NotChordal(NonChordalWitness),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum cardinality search. Vertices are visited by decreasing number of
/// visited neighbours, ties going to the highest index; the elimination order
/// is the reverse visiting order.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertex_set();
    let mut visit = Vec::with_capacity(n);
    while let Some(first) = unvisited.last() {
        let v = unvisited
            .iter()
            .rev()
            .fold(first, |best, u| if weight[u] > weight[best] { u } else { best });
        unvisited = unvisited.without(v);
        visit.push(v);
        for u in g.neighbors(v) & unvisited {
            weight[u] += 1;
        }
    }
    visit.reverse();
    visit
}

pub fn elimination_ordering(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    match EliminationOrdering::first_violation(&order, g) {
        None => Chordality::Chordal(EliminationOrdering { order }),
        Some(p) => {
            let v = order[p];
            let later: VertexSet = order[p + 1..].iter().copied().collect();
            let nbrs = g.neighbors(v) & later;
            let pair = nbrs
                .iter()
                .find_map(|u| {
                    (nbrs - g.neighbors(u))
                        .without(u)
                        .first()
                        .map(|w| (u, w))
                })
                .expect("violation implies a non-adjacent pair");
            Chordality::NotChordal(NonChordalWitness {
                attempted_order: order,
                vertex: v,
                non_adjacent: pair,
            })
        }
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    elimination_ordering(g).is_chordal()
}

pub(crate) fn require_chordal(g: &Graph) -> Result<()> {
    match elimination_ordering(g) {
        Chordality::Chordal(_) => Ok(()),
        Chordality::NotChordal(w) => Err(Error::NotChordal { witness: w.vertex }),
    }
}

/// Vertices whose closed neighbourhood is a clique, ascending.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| g.is_clique(g.neighbors(v)))
        .collect()
}

/// Maximal cliques (Bron–Kerbosch with pivoting), sorted by size then bits.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x)
            .iter()
            .max_by_key(|&u| (g.neighbors(u) & p).len())
            .expect("p nonempty");
        for v in p - g.neighbors(pivot) {
            let nv = g.neighbors(v);
            expand(g, r.with(v), p & nv, x & nv, out);
            p = p.without(v);
            x = x.with(v);
        }
    }
    let mut out = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertex_set(), VertexSet::EMPTY, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(*b));
    out
}

/// The clique complex `Δ(G)` as its facet list.
pub fn clique_complex_facets(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_facets_unchecked(g.n(), maximal_cliques(g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnmixedCertificate {
    /// Maximal cliques containing a vertex that lies in no other maximal clique.
    pub free_facets: Vec<VertexSet>,
    /// True iff the free facets partition the vertex set.
    pub is_unmixed: bool,
}

/// For a chordal graph without isolated vertices, decides unmixedness by
/// checking whether the clique-complex facets with a free vertex partition
/// the vertex set.
pub fn unmixed_certificate(g: &Graph) -> Result<UnmixedCertificate> {
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    require_chordal(g)?;
    let complex = clique_complex_facets(g);
    let free = complex.free_vertices();
    let free_facets: Vec<VertexSet> = complex
        .facets()
        .iter()
        .copied()
        .filter(|f| !f.is_disjoint(free))
        .collect();
    let total: usize = free_facets.iter().map(|f| f.len()).sum();
    let union = free_facets
        .iter()
        .fold(VertexSet::EMPTY, |acc, &f| acc | f);
    let is_unmixed = union == g.vertex_set() && total == g.n();
    Ok(UnmixedCertificate {
        free_facets,
        is_unmixed,
    })
}
