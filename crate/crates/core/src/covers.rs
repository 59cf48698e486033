//! Minimal vertex covers (the generators of the cover ideal), independence
//! complexes and the induced matching number.

use std::sync::Arc;

use crate::chordal::{maximal_cliques, require_chordal};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};
use crate::memo::{Memo, RecursionConfig};
use crate::pivot::PivotRule;
use crate::vertex_set::VertexSet;

pub const BRUTE_FORCE_CAP: usize = 20;

/// Minimal vertex covers of a graph in canonical order (size, then bits).
/// An edgeless graph has the single cover `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverFamily {
    n: usize,
    covers: Vec<VertexSet>,
}

impl CoverFamily {
    pub(crate) fn from_unsorted(n: usize, mut covers: Vec<VertexSet>) -> Self {
        covers.sort_by(|a, b| a.canonical_cmp(*b));
        CoverFamily { n, covers }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[VertexSet] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn into_covers(self) -> Vec<VertexSet> {
        self.covers
    }
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeCap { what, size: n, cap })
    } else {
        Ok(())
    }
}

/// Exhaustive search over all vertex subsets.
pub fn minimal_covers_bruteforce(g: &Graph) -> Result<CoverFamily> {
    check_cap("brute-force cover enumeration", g.n(), BRUTE_FORCE_CAP)?;
    let covers = g
        .vertex_set()
        .subsets()
        .filter(|&s| {
            let outside = g.vertex_set() - s;
            // s covers every edge iff nothing outside s has a neighbour outside s
            outside.iter().all(|v| g.neighbors(v).is_subset(s))
                // and dropping any vertex of s uncovers an edge
                && s.iter().all(|v| !g.neighbors(v).is_subset(s))
        })
        .collect();
    Ok(CoverFamily::from_unsorted(g.n(), covers))
}

/// Minimal covers of a chordal graph by splitting on a simplicial vertex
/// `v` with `w = N(v)`: covers are `w ∪ A` for `A` a minimal cover of
/// `G \ N[v]`, together with `{v} ∪ B` for `B` a minimal cover of `G \ v`
/// not containing `w`.
pub fn minimal_covers_recursive(g: &Graph) -> Result<CoverFamily> {
    minimal_covers_recursive_with(g, &RecursionConfig::default())
}

pub fn minimal_covers_recursive_with(g: &Graph, config: &RecursionConfig) -> Result<CoverFamily> {
    require_chordal(g)?;
    let mut ctx = CoverRecursion::new(&config.pivot, config.memo_cap);
    let covers = ctx.covers(Subgraph::whole(g));
    Ok(CoverFamily::from_unsorted(g.n(), covers.as_ref().clone()))
}

/// Memoized cover recursion over induced subgraphs of one chordal root.
pub(crate) struct CoverRecursion<'r> {
    rule: &'r PivotRule,
    memo: Memo<Vec<VertexSet>>,
}

impl<'r> CoverRecursion<'r> {
    pub(crate) fn new(rule: &'r PivotRule, cap: Option<usize>) -> Self {
        CoverRecursion {
            rule,
            memo: Memo::new(cap),
        }
    }

    pub(crate) fn covers(&mut self, view: Subgraph<'_>) -> Arc<Vec<VertexSet>> {
        let view = view.restrict(view.support());
        if let Some(hit) = self.memo.get(view.kept) {
            return hit;
        }
        let result = match self.rule.pivot(view) {
            None => vec![VertexSet::EMPTY],
            Some(v) => {
                let w = view.neighbors(v);
                let outer = self.covers(view.restrict(view.kept - w.with(v)));
                let deleted = self.covers(view.restrict(view.kept.without(v)));
                outer
                    .iter()
                    .map(|&a| a | w)
                    .chain(
                        deleted
                            .iter()
                            .filter(|b| !w.is_subset(**b))
                            .map(|&b| b.with(v)),
                    )
                    .collect()
            }
        };
        self.memo.insert(view.kept, result)
    }
}

/// `ind(G)`: facets are the maximal independent sets, i.e. the maximal
/// cliques of the complement graph, in canonical order.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_facets_unchecked(g.n(), maximal_cliques(&g.complement_graph()))
}

/// Size of a largest induced matching, by branch and bound over edges.
pub fn induced_matching_number(g: &Graph) -> Result<usize> {
    check_cap("induced matching search", g.n(), BRUTE_FORCE_CAP)?;
    let edges = g.edges();
    let closed: Vec<VertexSet> = edges
        .iter()
        .map(|&(u, v)| g.neighbors(u) | g.neighbors(v) | VertexSet::from_iter([u, v]))
        .collect();

    struct Search<'a> {
        edges: &'a [(usize, usize)],
        closed: &'a [VertexSet],
        best: usize,
    }

    impl Search<'_> {
        fn run(&mut self, start: usize, blocked: VertexSet, size: usize) {
            self.best = self.best.max(size);
            let open: Vec<usize> = (start..self.edges.len())
                .filter(|&e| {
                    let (u, v) = self.edges[e];
                    !blocked.contains(u) && !blocked.contains(v)
                })
                .collect();
            let free_vertices = open
                .iter()
                .fold(VertexSet::EMPTY, |acc, &e| {
                    let (u, v) = self.edges[e];
                    acc.with(u).with(v)
                })
                .len();
            if size + open.len().min(free_vertices / 2) <= self.best {
                return;
            }
            for &e in &open {
                self.run(e + 1, blocked | self.closed[e], size + 1);
            }
        }
    }

    let mut search = Search {
        edges: &edges,
        closed: &closed,
        best: 0,
    };
    search.run(0, VertexSet::EMPTY, 0);
    Ok(search.best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::{arb_chordal, arb_graph, seven_vertex_graph, labels_to_set};
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn brute_force_examples() {
        // P_4 is 0-1-2-3; 1-indexed {x2,x3},{x1,x3},{x2,x4}
        let p4 = minimal_covers_bruteforce(&Graph::path(4)).unwrap();
        let mut expected = vec![set(&[1, 2]), set(&[0, 2]), set(&[1, 3])];
        expected.sort_by(|a, b| a.canonical_cmp(*b));
        assert_eq!(p4.covers(), expected.as_slice());

        let k3 = minimal_covers_bruteforce(&Graph::complete(3)).unwrap();
        assert_eq!(k3.covers(), &[set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);

        let empty = minimal_covers_bruteforce(&Graph::new(3).unwrap()).unwrap();
        assert_eq!(empty.covers(), &[VertexSet::EMPTY]);

        assert!(matches!(
            minimal_covers_bruteforce(&Graph::path(21)),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn recursive_examples() {
        let g = seven_vertex_graph();
        let got = minimal_covers_recursive(&g).unwrap();
        let mut expected: Vec<VertexSet> =
            ["bceg", "bcdfg", "bcdef", "acdeg", "abdeg", "abdef", "acdef", "abdfg"]
                .iter()
                .map(|s| labels_to_set(&g, s))
                .collect();
        expected.sort_by(|a, b| a.canonical_cmp(*b));
        assert_eq!(got.covers(), expected.as_slice());

        let edge = minimal_covers_recursive(&Graph::path(2)).unwrap();
        assert_eq!(edge.covers(), &[set(&[0]), set(&[1])]);

        assert_eq!(minimal_covers_recursive(&Graph::path(5)).unwrap().len(), 4);
        assert!(matches!(
            minimal_covers_recursive(&Graph::cycle(4)),
            Err(Error::NotChordal { .. })
        ));
        let with_isolated = Graph::from_edges(4, [(1, 2)]).unwrap();
        assert_eq!(
            minimal_covers_recursive(&with_isolated).unwrap().covers(),
            &[set(&[1]), set(&[2])]
        );
    }

    #[test]
    fn memo_shares_subproblems() {
        let g = Graph::path(12);
        let rule = PivotRule::min_index();
        let mut ctx = CoverRecursion::new(&rule, None);
        ctx.covers(Subgraph::whole(&g));
        // one entry per path suffix, far fewer than the unshared call tree
        assert!(ctx.memo.len() <= 13);
        let mut capped = CoverRecursion::new(&rule, Some(2));
        let capped_result = capped.covers(Subgraph::whole(&g));
        assert_eq!(capped.memo.len(), 2);
        assert_eq!(capped_result.len(), ctx.covers(Subgraph::whole(&g)).len());
    }

    #[test]
    fn independence_complex_examples() {
        let g = seven_vertex_graph();
        let ind = independence_complex(&g);
        assert!(ind.facets().contains(&labels_to_set(&g, "adf")));
        assert_eq!(ind.facets().len(), 8);

        let k4 = independence_complex(&Graph::complete(4));
        assert_eq!(k4.facets(), &[set(&[0]), set(&[1]), set(&[2]), set(&[3])]);

        // complements of the P_4 covers: {1,4},{2,4},{1,3} in 1-indexed form
        let p4 = independence_complex(&Graph::path(4));
        let mut facets = p4.facets().to_vec();
        facets.sort();
        let mut expected = vec![set(&[0, 3]), set(&[1, 3]), set(&[0, 2])];
        expected.sort();
        assert_eq!(facets, expected);
    }

    #[test]
    fn induced_matching_examples() {
        assert_eq!(induced_matching_number(&Graph::path(5)).unwrap(), 2);
        assert_eq!(induced_matching_number(&seven_vertex_graph()).unwrap(), 2);
        for n in 2..8 {
            assert_eq!(induced_matching_number(&Graph::complete(n)).unwrap(), 1);
        }
        assert_eq!(induced_matching_number(&Graph::new(4).unwrap()).unwrap(), 0);
        assert_eq!(induced_matching_number(&Graph::path(8)).unwrap(), 3);
    }

    /// Exhaustive induced-matching oracle over all edge subsets.
    fn im_exhaustive(g: &Graph) -> usize {
        let edges = g.edges();
        let m = edges.len();
        (0u32..1 << m)
            .filter(|mask| {
                let chosen: Vec<(usize, usize)> =
                    (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                chosen.iter().enumerate().all(|(i, &(a, b))| {
                    chosen[i + 1..].iter().all(|&(c, d)| {
                        [a, b].iter().all(|&x| [c, d].iter().all(|&y| x != y && !g.has_edge(x, y)))
                    })
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    proptest! {
        #[test]
        fn recursive_equals_brute_force(g in arb_chordal(12)) {
            prop_assert_eq!(minimal_covers_recursive(&g).unwrap(), minimal_covers_bruteforce(&g).unwrap());
        }

        #[test]
        fn covers_dual_to_independence_facets(g in arb_graph(9)) {
            let covers = minimal_covers_bruteforce(&g).unwrap();
            let ind = independence_complex(&g);
            prop_assert_eq!(covers.len(), ind.facets().len());
            for &c in covers.covers() {
                prop_assert!(ind.facets().contains(&c.complement(g.n())));
            }
            for &f in ind.facets() {
                prop_assert!(g.is_independent(f));
                for v in g.vertex_set() - f {
                    prop_assert!(!g.is_independent(f.with(v)));
                }
            }
            for (i, &a) in covers.covers().iter().enumerate() {
                for &b in &covers.covers()[i + 1..] {
                    prop_assert!(!a.is_subset(b) && !b.is_subset(a));
                }
            }
        }

        #[test]
        fn induced_matching_matches_exhaustive(g in arb_graph(7)) {
            prop_assume!(g.edge_count() <= 14);
            prop_assert_eq!(induced_matching_number(&g).unwrap(), im_exhaustive(&g));
        }
    }

    #[test]
    fn path_cover_counts_follow_padovan() {
        let counts: Vec<usize> = (1..=20)
            .map(|n| minimal_covers_recursive(&Graph::path(n)).unwrap().len())
            .collect();
        for n in 4..=20 {
            assert_eq!(counts[n - 1], counts[n - 3] + counts[n - 4], "n = {n}");
        }
        assert_eq!(&counts[..3], &[1, 2, 2]);
    }
}
