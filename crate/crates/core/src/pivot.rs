//! Choice of simplicial pivot and neighbour order for the recursions.

use std::fmt;

use crate::graph::Subgraph;
use crate::vertex_set::VertexSet;

/// How to pick among simplicial vertices when no priority entry applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PivotFallback {
    #[default]
    MinIndex,
    MaxIndex,
    /// Highest degree in the current subgraph, lowest index on ties.
    MaxDegree,
}

/// Pivot selection for the recursive constructions.
///
/// At every recursion step the pivot is the first vertex of `priority` that
/// is simplicial and not isolated in the current subgraph; when none
/// qualifies the `fallback` picks one. The remaining members of the closed
/// neighbourhood are visited with prioritised vertices first (in priority
/// order), then by ascending index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PivotRule {
    pub priority: Vec<usize>,
    pub fallback: PivotFallback,
}

impl PivotRule {
    pub fn min_index() -> Self {
        Self::default()
    }

    pub fn max_index() -> Self {
        PivotRule {
            priority: Vec::new(),
            fallback: PivotFallback::MaxIndex,
        }
    }

    pub fn max_degree() -> Self {
        PivotRule {
            priority: Vec::new(),
            fallback: PivotFallback::MaxDegree,
        }
    }

    pub fn with_priority(priority: Vec<usize>, fallback: PivotFallback) -> Self {
        PivotRule { priority, fallback }
    }

    fn rank(&self, v: usize) -> Option<usize> {
        self.priority.iter().position(|&p| p == v)
    }

    /// Pivot of a subgraph with at least one edge, or `None` if it has no
    /// simplicial non-isolated vertex (never the case for chordal input).
    pub(crate) fn pivot(&self, view: Subgraph<'_>) -> Option<usize> {
        let candidates: Vec<usize> = view
            .support()
            .iter()
            .filter(|&v| view.is_simplicial(v))
            .collect();
        if let Some(&v) = self
            .priority
            .iter()
            .find(|v| candidates.contains(v))
        {
            return Some(v);
        }
        match self.fallback {
            PivotFallback::MinIndex => candidates.first().copied(),
            PivotFallback::MaxIndex => candidates.last().copied(),
            PivotFallback::MaxDegree => candidates
                .iter()
                .copied()
                .max_by_key(|&v| (view.neighbors(v).len(), std::cmp::Reverse(v))),
        }
    }

    /// Pivot followed by its neighbours in visiting order.
    pub(crate) fn pivot_block(&self, view: Subgraph<'_>) -> Option<Vec<usize>> {
        let x = self.pivot(view)?;
        Some(std::iter::once(x).chain(self.order(view.neighbors(x))).collect())
    }

    pub(crate) fn order(&self, s: VertexSet) -> Vec<usize> {
        let mut v: Vec<usize> = s.iter().collect();
        v.sort_by_key(|&u| (self.rank(u).unwrap_or(usize::MAX), u));
        v
    }
}

impl fmt::Display for PivotRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fb = match self.fallback {
            PivotFallback::MinIndex => "min",
            PivotFallback::MaxIndex => "max",
            PivotFallback::MaxDegree => "maxdeg",
        };
        if self.priority.is_empty() {
            f.write_str(fb)
        } else {
            let p: Vec<String> = self.priority.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]+{}", p.join(","), fb)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::test_graphs::seven_vertex_graph;

    #[test]
    fn fallback_rules() {
        let g = seven_vertex_graph();
        let view = Subgraph::whole(&g);
        // simplicial, non-isolated: a (0) and f (5)
        assert_eq!(PivotRule::min_index().pivot(view), Some(0));
        assert_eq!(PivotRule::max_index().pivot(view), Some(5));
        assert_eq!(PivotRule::max_degree().pivot(view), Some(0));
    }

    #[test]
    fn priority_wins_when_simplicial() {
        let g = seven_vertex_graph();
        let view = Subgraph::whole(&g);
        // d (3) is not simplicial, so f (5) is chosen
        let rule = PivotRule::with_priority(vec![3, 5, 0], PivotFallback::MinIndex);
        assert_eq!(rule.pivot_block(view), Some(vec![5, 4, 6]));
        let rule = PivotRule::with_priority(vec![0, 2, 1], PivotFallback::MinIndex);
        assert_eq!(rule.pivot_block(view), Some(vec![0, 2, 1]));
    }

    #[test]
    fn edgeless_has_no_pivot() {
        let g = Graph::new(3).unwrap();
        assert_eq!(PivotRule::min_index().pivot(Subgraph::whole(&g)), None);
    }
}
