//! Cover ideals of chordal graphs.
//!
//! Graphs have at most 64 vertices; a [`VertexSet`] is both a vertex subset
//! and the squarefree monomial it supports. The crate computes minimal
//! vertex covers, linear-quotients orderings of the cover ideal (and the
//! matching shellings of the independence complex), and graded Betti
//! numbers by three routes: colon counts along an ordering, a vertex
//! recursion, and simplicial homology of upper Koszul complexes.

pub mod betti;
pub mod chordal;
pub mod complex;
pub mod covers;
pub mod error;
pub mod generate;
pub mod graph;
pub mod linquo;
mod memo;
pub mod oracle;
pub mod pivot;
pub mod vertex_set;

pub use betti::{
    betti_from_ordering, complete_graph_betti, graded_recursive, graded_recursive_with,
    invariants, invariants_with, total_recursive, total_recursive_with, unmixed_1dim_betti,
    BettiMethod, BettiTable, Invariants, UnmixedBetti,
};
pub use chordal::{
    clique_complex_facets, elimination_ordering, is_chordal, maximal_cliques,
    simplicial_vertices, unmixed_certificate, Chordality, EliminationOrdering,
    NonChordalWitness, UnmixedCertificate,
};
pub use complex::SimplicialComplex;
pub use covers::{
    independence_complex, induced_matching_number, minimal_covers_bruteforce,
    minimal_covers_recursive, minimal_covers_recursive_with, CoverFamily,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use linquo::{
    colon_counts, fvt_ordering, fvt_ordering_with, fvt_step, shelling_from_ordering,
    verify_linear_quotients, verify_shelling, vv_ordering, vv_ordering_with, LqVerdict,
    MonomialOrdering, OrderingMethod, Shelling, ShellingVerdict,
};
pub use memo::RecursionConfig;
pub use oracle::{exhaustive_shelling_search, hochster_betti, HomologyResult};
pub use pivot::{PivotFallback, PivotRule};
pub use vertex_set::VertexSet;

#[cfg(test)]
pub(crate) mod test_graphs {
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use crate::generate::{random_chordal, random_graph};
    use crate::graph::Graph;
    use crate::vertex_set::VertexSet;

    pub fn seven_vertex_graph() -> Graph {
        let edges = [
            ("a", "b"),
            ("a", "c"),
            ("b", "c"),
            ("b", "d"),
            ("b", "e"),
            ("c", "d"),
            ("d", "e"),
            ("e", "f"),
            ("d", "g"),
            ("e", "g"),
            ("f", "g"),
        ];
        Graph::from_labeled_edges(&edges).unwrap()
    }

    pub fn labels_to_set(g: &Graph, word: &str) -> VertexSet {
        word.chars()
            .map(|c| g.vertex_by_label(&c.to_string()).expect("known label"))
            .collect()
    }

    pub fn render(g: &Graph, sets: &[VertexSet]) -> String {
        sets.iter()
            .map(|&s| g.format_set(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| {
            random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
        })
    }

    pub fn arb_chordal(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, any::<u64>(), any::<bool>()).prop_map(|(n, seed, connected)| {
            random_chordal(&mut ChaCha8Rng::seed_from_u64(seed), n, connected)
        })
    }
}
