//! Linear quotients orderings of cover ideals and shellings of independence
//! complexes.
//!
//! For squarefree monomials the colon ideal `(m_1, ..., m_{p-1}) : m_p` is
//! generated by the set differences `m_j \ m_p`, so every check here is set
//! arithmetic on [`VertexSet`]s.

use std::fmt;
use std::sync::Arc;

use crate::chordal::require_chordal;
use crate::covers::CoverRecursion;
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};
use crate::memo::{Memo, RecursionConfig};
use crate::pivot::PivotRule;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderingMethod {
    /// Blocks `N(x_i) · J(G \ N[x_i])` over the closed neighbourhood of a
    /// simplicial vertex.
    Vv,
    /// `N(x) · J(G \ N[x])` followed by `x · J(G \ x)` restricted to the
    /// covers not containing `N(x)`.
    Fvt,
    User,
}

impl fmt::Display for OrderingMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderingMethod::Vv => "vv",
            OrderingMethod::Fvt => "fvt",
            OrderingMethod::User => "user",
        })
    }
}

/// An ordered list of squarefree generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrdering {
    gens: Vec<VertexSet>,
    colon_counts: Option<Vec<usize>>,
    method: OrderingMethod,
    pivot: Option<PivotRule>,
}

impl MonomialOrdering {
    pub fn user(gens: Vec<VertexSet>) -> Self {
        MonomialOrdering {
            gens,
            colon_counts: None,
            method: OrderingMethod::User,
            pivot: None,
        }
    }

    fn constructed(gens: Vec<VertexSet>, method: OrderingMethod, pivot: &PivotRule) -> Self {
        MonomialOrdering {
            gens,
            colon_counts: None,
            method,
            pivot: Some(pivot.clone()),
        }
    }

    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn method(&self) -> OrderingMethod {
        self.method
    }

    pub fn pivot_rule(&self) -> Option<&PivotRule> {
        self.pivot.as_ref()
    }

    /// Colon counts, present once the ordering has been verified.
    pub fn cached_colon_counts(&self) -> Option<&[usize]> {
        self.colon_counts.as_deref()
    }

    /// Verifies linear quotients and stores the colon counts.
    pub fn verified(mut self) -> Result<Self> {
        let counts = colon_counts(&self)?;
        self.colon_counts = Some(counts);
        Ok(self)
    }
}

/// Outcome of checking an ordering for linear quotients. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LqVerdict {
    Linear { colon_counts: Vec<usize> },
    /// `gens[earlier] \ gens[position]` contains no singleton difference
    /// `gens[l] \ gens[position]` with `l < position`.
    Fails { earlier: usize, position: usize },
}

impl LqVerdict {
    pub fn is_linear(&self) -> bool {
        matches!(self, LqVerdict::Linear { .. })
    }
}

fn require_minimal(gens: &[VertexSet]) -> Result<()> {
    for (i, &a) in gens.iter().enumerate() {
        for (j, &b) in gens.iter().enumerate().skip(i + 1) {
            if a.is_subset(b) || b.is_subset(a) {
                return Err(Error::NonMinimalGenerators {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}

/// Checks that each colon ideal `(m_1..m_{p-1}) : m_p` is generated by
/// variables, i.e. every `m_j \ m_p` contains a singleton `m_l \ m_p`.
pub fn verify_linear_quotients(gens: &[VertexSet]) -> Result<LqVerdict> {
    require_minimal(gens)?;
    let mut counts = Vec::with_capacity(gens.len());
    for (p, &mp) in gens.iter().enumerate() {
        let linear: VertexSet = gens[..p]
            .iter()
            .map(|&m| m - mp)
            .filter(|d| d.len() == 1)
            .fold(VertexSet::EMPTY, |acc, d| acc | d);
        if let Some(j) = gens[..p].iter().position(|&m| (m - mp).is_disjoint(linear)) {
            return Ok(LqVerdict::Fails {
                earlier: j,
                position: p,
            });
        }
        counts.push(linear.len());
    }
    Ok(LqVerdict::Linear {
        colon_counts: counts,
    })
}

/// Number of variables generating each colon ideal (`0` for the first).
pub fn colon_counts(o: &MonomialOrdering) -> Result<Vec<usize>> {
    if let Some(c) = &o.colon_counts {
        return Ok(c.clone());
    }
    match verify_linear_quotients(&o.gens)? {
        LqVerdict::Linear { colon_counts } => Ok(colon_counts),
        LqVerdict::Fails { earlier, position } => {
            Err(Error::NotLinearQuotients { earlier, position })
        }
    }
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.is_edgeless() {
        Err(Error::NoEdges)
    } else {
        Ok(())
    }
}

struct Orderer<'r> {
    rule: &'r PivotRule,
    memo: Memo<Vec<VertexSet>>,
}

impl Orderer<'_> {
    fn vv(&mut self, view: Subgraph<'_>) -> Arc<Vec<VertexSet>> {
        let view = view.restrict(view.support());
        if let Some(hit) = self.memo.get(view.kept) {
            return hit;
        }
        let result = match self.rule.pivot_block(view) {
            // edgeless: the single generator 1, so a block is just y_i
            None => vec![VertexSet::EMPTY],
            Some(block) => {
                let mut out = Vec::new();
                for x in block {
                    let y = view.neighbors(x);
                    let rest = self.vv(view.restrict(view.kept - y.with(x)));
                    out.extend(rest.iter().map(|&u| u | y));
                }
                out
            }
        };
        self.memo.insert(view.kept, result)
    }

    fn fvt(&mut self, view: Subgraph<'_>) -> Arc<Vec<VertexSet>> {
        let view = view.restrict(view.support());
        if let Some(hit) = self.memo.get(view.kept) {
            return hit;
        }
        let result = if view.kept.is_empty() {
            vec![VertexSet::EMPTY]
        } else if view.is_clique(view.kept) {
            complete_graph_gens(view.kept)
        } else {
            let x = self.rule.pivot(view).expect("chordal subgraph has a simplicial vertex");
            let outer = self.fvt(view.restrict(view.kept - view.closed(x)));
            let deleted = self.fvt(view.restrict(view.kept.without(x)));
            combine_fvt(x, view.neighbors(x), &outer, &deleted)
        };
        self.memo.insert(view.kept, result)
    }
}

/// Generators of `J(K)` for the clique on `clique`, lexicographically.
fn complete_graph_gens(clique: VertexSet) -> Vec<VertexSet> {
    let mut gens: Vec<VertexSet> = clique.iter().map(|v| clique.without(v)).collect();
    gens.sort_by(|a, b| a.lex_cmp(*b));
    gens
}

fn combine_fvt(x: usize, nx: VertexSet, outer: &[VertexSet], deleted: &[VertexSet]) -> Vec<VertexSet> {
    outer
        .iter()
        .map(|&a| a | nx)
        .chain(
            deleted
                .iter()
                .filter(|b| !nx.is_subset(**b))
                .map(|&b| b.with(x)),
        )
        .collect()
}

/// Linear quotients ordering built from a simplicial pivot `x_1` and its
/// neighbours `x_2..x_r`: the concatenation of the blocks `N(x_i) · u` for
/// `u` running over a recursively built ordering of `J(G \ N[x_i])`.
pub fn vv_ordering(g: &Graph, rule: &PivotRule) -> Result<MonomialOrdering> {
    vv_ordering_with(g, &RecursionConfig::with_pivot(rule.clone()))
}

pub fn vv_ordering_with(g: &Graph, config: &RecursionConfig) -> Result<MonomialOrdering> {
    require_chordal(g)?;
    require_edges(g)?;
    let mut orderer = Orderer {
        rule: &config.pivot,
        memo: Memo::new(config.memo_cap),
    };
    let gens = orderer.vv(Subgraph::whole(g)).as_ref().clone();
    Ok(MonomialOrdering::constructed(gens, OrderingMethod::Vv, &config.pivot))
}

/// Linear quotients ordering `N(x)·A_1, ..., N(x)·A_a, x·B_{i_1}, ...,
/// x·B_{i_k}` where the `A`s order `J(G \ N[x])`, the `B`s order
/// `J(G \ x)` and only the `B`s not containing `N(x)` are kept. Both
/// sub-orderings come from the same construction; complete graphs list
/// their generators lexicographically.
pub fn fvt_ordering(g: &Graph, rule: &PivotRule) -> Result<MonomialOrdering> {
    fvt_ordering_with(g, &RecursionConfig::with_pivot(rule.clone()))
}

pub fn fvt_ordering_with(g: &Graph, config: &RecursionConfig) -> Result<MonomialOrdering> {
    require_chordal(g)?;
    require_edges(g)?;
    let mut orderer = Orderer {
        rule: &config.pivot,
        memo: Memo::new(config.memo_cap),
    };
    let gens = orderer.fvt(Subgraph::whole(g)).as_ref().clone();
    Ok(MonomialOrdering::constructed(gens, OrderingMethod::Fvt, &config.pivot))
}

/// One step of the `fvt` construction with caller-supplied sub-orderings:
/// `outer` must be a linear quotients ordering of the covers of `G \ N[x]`
/// and `deleted` one of the covers of `G \ x` (in the indices of `g`).
pub fn fvt_step(
    g: &Graph,
    x: usize,
    outer: &[VertexSet],
    deleted: &[VertexSet],
) -> Result<MonomialOrdering> {
    require_chordal(g)?;
    let nx = g.neighborhood(x)?;
    if nx.is_empty() || !g.is_clique(nx) {
        return Err(Error::InvalidPivot(format!(
            "vertex {x} is not a simplicial vertex with a neighbour"
        )));
    }
    let rule = PivotRule::min_index();
    let mut covers = CoverRecursion::new(&rule, None);
    let root = Subgraph::whole(g);
    let checks = [
        ("outer", outer, root.restrict(g.vertex_set() - nx.with(x))),
        ("deleted", deleted, root.restrict(g.vertex_set().without(x))),
    ];
    for (name, given, view) in checks {
        let mut expected = covers.covers(view).as_ref().clone();
        let mut got = given.to_vec();
        expected.sort();
        got.sort();
        if expected != got {
            return Err(Error::InvalidSubOrdering(format!(
                "{name} ordering is not the generator set of its subgraph"
            )));
        }
        if !verify_linear_quotients(given)?.is_linear() {
            return Err(Error::InvalidSubOrdering(format!(
                "{name} ordering does not have linear quotients"
            )));
        }
    }
    Ok(MonomialOrdering {
        gens: combine_fvt(x, nx, outer, deleted),
        colon_counts: None,
        method: OrderingMethod::Fvt,
        pivot: Some(PivotRule::with_priority(vec![x], Default::default())),
    })
}

/// A facet order of a simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shelling {
    pub facets: Vec<VertexSet>,
}

impl Shelling {
    pub fn new(facets: Vec<VertexSet>) -> Self {
        Shelling { facets }
    }

    /// Complements in `{0..n-1}`, same order.
    pub fn to_ordering(&self, n: usize) -> MonomialOrdering {
        MonomialOrdering::user(self.facets.iter().map(|f| f.complement(n)).collect())
    }
}

/// Complements of the generators, in order: a linear quotients ordering of
/// `J(G)` corresponds to a shelling of `ind(G)`.
pub fn shelling_from_ordering(o: &MonomialOrdering, n: usize) -> Shelling {
    Shelling::new(o.gens.iter().map(|m| m.complement(n)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingVerdict {
    Shelling,
    /// No vertex `u ∈ F_position \ F_earlier` has `F_position \ F_l = {u}`
    /// for some `l < position`.
    Fails { earlier: usize, position: usize },
}

impl ShellingVerdict {
    pub fn is_shelling(&self) -> bool {
        matches!(self, ShellingVerdict::Shelling)
    }
}

/// Checks the shelling condition directly: for all `i < j` there are a
/// vertex `u ∈ F_j \ F_i` and an `l < j` with `F_j \ F_l = {u}`.
pub fn verify_shelling(s: &Shelling) -> Result<ShellingVerdict> {
    let f = &s.facets;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if f[i].is_subset(f[j]) || f[j].is_subset(f[i]) {
                return Err(Error::ComparableFacets {
                    first: i,
                    second: j,
                });
            }
        }
    }
    for j in 1..f.len() {
        for i in 0..j {
            let found = (f[j] - f[i]).iter().any(|u| {
                (0..j).any(|l| f[j] - f[l] == VertexSet::singleton(u))
            });
            if !found {
                return Ok(ShellingVerdict::Fails {
                    earlier: i,
                    position: j,
                });
            }
        }
    }
    Ok(ShellingVerdict::Shelling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{independence_complex, minimal_covers_bruteforce};
    use crate::pivot::PivotFallback;
    use crate::test_graphs::{arb_chordal, arb_graph, seven_vertex_graph, labels_to_set, render};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gens(g: &Graph, words: &[&str]) -> Vec<VertexSet> {
        words.iter().map(|w| labels_to_set(g, w)).collect()
    }

    fn idx(g: &Graph, l: &str) -> usize {
        g.vertex_by_label(l).unwrap()
    }

    #[test]
    fn vv_reproduces_both_reference_orderings() {
        let g = seven_vertex_graph();
        let bc = PivotRule::with_priority(
            vec![idx(&g, "a"), idx(&g, "b"), idx(&g, "c")],
            PivotFallback::MaxIndex,
        );
        let o = vv_ordering(&g, &bc).unwrap();
        assert_eq!(
            render(&g, o.gens()),
            "bceg bcdfg bcdef acdef acdeg abdef abdfg abdeg"
        );
        let cb = PivotRule::with_priority(
            vec![idx(&g, "a"), idx(&g, "c"), idx(&g, "b")],
            PivotFallback::MaxIndex,
        );
        let o = vv_ordering(&g, &cb).unwrap();
        assert_eq!(
            render(&g, o.gens()),
            "bceg bcdfg bcdef abdef abdfg abdeg acdef acdeg"
        );
    }

    #[test]
    fn vv_single_edge() {
        let g = Graph::path(2);
        let o = vv_ordering(&g, &PivotRule::min_index()).unwrap();
        assert_eq!(o.gens(), &[VertexSet::singleton(1), VertexSet::singleton(0)]);
        let o = vv_ordering(&g, &PivotRule::max_index()).unwrap();
        assert_eq!(o.gens(), &[VertexSet::singleton(0), VertexSet::singleton(1)]);
    }

    #[test]
    fn fvt_step_reproduces_reference_ordering() {
        let g = seven_vertex_graph();
        let outer = gens(&g, &["eg", "dfg", "def"]);
        let deleted = gens(&g, &["bceg", "cdeg", "bdeg", "bdef", "cdef", "bdfg"]);
        let o = fvt_step(&g, idx(&g, "a"), &outer, &deleted).unwrap();
        assert_eq!(
            render(&g, o.gens()),
            "bceg bcdfg bcdef acdeg abdeg abdef acdef abdfg"
        );
        // the two supplied sub-orderings are themselves linear quotients
        assert!(verify_linear_quotients(&outer).unwrap().is_linear());
        assert!(verify_linear_quotients(&deleted).unwrap().is_linear());
        let counts = colon_counts(&o).unwrap();
        assert_eq!(counts, vec![0, 1, 1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn fvt_step_rejects_bad_input() {
        let g = seven_vertex_graph();
        let outer = gens(&g, &["eg", "dfg", "def"]);
        let deleted = gens(&g, &["bceg", "cdeg", "bdeg", "bdef", "cdef", "bdfg"]);
        assert!(matches!(
            fvt_step(&g, idx(&g, "d"), &outer, &deleted),
            Err(Error::InvalidPivot(_))
        ));
        assert!(matches!(
            fvt_step(&g, idx(&g, "a"), &outer[..2], &deleted),
            Err(Error::InvalidSubOrdering(_))
        ));
    }

    #[test]
    fn fvt_complete_graph_is_lexicographic() {
        let o = fvt_ordering(&Graph::complete(4), &PivotRule::min_index()).unwrap();
        let words: Vec<String> = o
            .gens()
            .iter()
            .map(|s| s.iter().map(|v| v.to_string()).collect())
            .collect();
        assert_eq!(words, vec!["012", "013", "023", "123"]);
        assert_eq!(colon_counts(&o).unwrap(), vec![0, 1, 1, 1]);
    }

    #[test]
    fn fvt_path_three() {
        // 0-1-2 with pivot 0: (x1, x0 x2)
        let o = fvt_ordering(&Graph::path(3), &PivotRule::min_index()).unwrap();
        assert_eq!(o.gens(), &[VertexSet::singleton(1), VertexSet::from_iter([0, 2])]);
    }

    #[test]
    fn fvt_default_rule_on_seven_vertex_graph() {
        // regression fixture for the min-index recursion
        let g = seven_vertex_graph();
        let o = fvt_ordering(&g, &PivotRule::min_index()).unwrap();
        assert_eq!(
            render(&g, o.gens()),
            "bceg bcdef bcdfg abdef abdeg abdfg acdef acdeg"
        );
        assert!(verify_linear_quotients(o.gens()).unwrap().is_linear());
    }

    #[test]
    fn errors_on_unsuitable_graphs() {
        let rule = PivotRule::min_index();
        assert!(matches!(vv_ordering(&Graph::cycle(4), &rule), Err(Error::NotChordal { .. })));
        assert_eq!(fvt_ordering(&Graph::new(3).unwrap(), &rule), Err(Error::NoEdges));
    }

    #[test]
    fn verify_examples() {
        let disjoint = vec![VertexSet::from_iter([0, 1]), VertexSet::from_iter([2, 3])];
        assert_eq!(
            verify_linear_quotients(&disjoint).unwrap(),
            LqVerdict::Fails {
                earlier: 0,
                position: 1
            }
        );
        assert_eq!(
            verify_linear_quotients(&[VertexSet::from_iter([0, 1]), VertexSet::from_iter([0])]),
            Err(Error::NonMinimalGenerators { first: 0, second: 1 })
        );
        assert_eq!(
            colon_counts(&MonomialOrdering::user(vec![VertexSet::from_iter([0, 4])])).unwrap(),
            vec![0]
        );
        assert!(matches!(
            colon_counts(&MonomialOrdering::user(disjoint)),
            Err(Error::NotLinearQuotients { .. })
        ));
    }

    #[test]
    fn reversed_reference_ordering_verdict() {
        let g = seven_vertex_graph();
        let mut rev = gens(&g, &["bceg", "bcdfg", "bcdef", "acdeg", "abdeg", "abdef", "acdef", "abdfg"]);
        rev.reverse();
        // abdfg, acdef, abdef, abdeg, acdeg, bcdef, bcdfg, bceg:
        // at position 1, abdfg \ acdef = {b, g} has no singleton witness
        assert_eq!(
            verify_linear_quotients(&rev).unwrap(),
            LqVerdict::Fails {
                earlier: 0,
                position: 1
            }
        );
    }

    #[test]
    fn reference_shellings() {
        let g = seven_vertex_graph();
        let n = g.n();
        let cases = [
            (
                vec!["bceg", "bcdfg", "bcdef", "acdeg", "abdeg", "abdef", "acdef", "abdfg"],
                "adf ae ag bf cf cg bg ce",
            ),
            (
                vec!["bceg", "bcdfg", "bcdef", "acdef", "acdeg", "abdef", "abdfg", "abdeg"],
                "adf ae ag bg bf cg ce cf",
            ),
            (
                vec!["bceg", "bcdfg", "bcdef", "abdef", "abdfg", "abdeg", "acdef", "acdeg"],
                "adf ae ag cg ce cf bg bf",
            ),
        ];
        for (words, shelling) in cases {
            let o = MonomialOrdering::user(gens(&g, &words));
            let s = shelling_from_ordering(&o, n);
            assert_eq!(render(&g, &s.facets), shelling);
            assert!(verify_shelling(&s).unwrap().is_shelling());
        }
    }

    #[test]
    fn single_generator_shelling() {
        let o = MonomialOrdering::user(vec![VertexSet::from_iter([0, 1])]);
        let s = shelling_from_ordering(&o, 2);
        assert_eq!(s.facets, vec![VertexSet::EMPTY]);
        assert!(verify_shelling(&s).unwrap().is_shelling());
        let s = shelling_from_ordering(&o, 3);
        assert_eq!(s.facets, vec![VertexSet::singleton(2)]);
    }

    #[test]
    fn cycle_five_bad_order() {
        // facets of ind(C_5) are the five non-edges; two disjoint ones first
        // cannot start a shelling.
        let g = Graph::cycle(5);
        let facets = independence_complex(&g).into_facets();
        assert_eq!(facets.len(), 5);
        let mut order = facets.clone();
        let (i, j) = (0..5)
            .flat_map(|i| (0..5).map(move |j| (i, j)))
            .find(|&(i, j)| facets[i].is_disjoint(facets[j]))
            .unwrap();
        order.swap(0, i);
        let jpos = order.iter().position(|&f| f == facets[j]).unwrap();
        order.swap(1, jpos);
        assert_eq!(
            verify_shelling(&Shelling::new(order)).unwrap(),
            ShellingVerdict::Fails {
                earlier: 0,
                position: 1
            }
        );
        assert!(matches!(
            verify_shelling(&Shelling::new(vec![VertexSet::from_iter([0, 1]), VertexSet::singleton(0)])),
            Err(Error::ComparableFacets { .. })
        ));
    }

    #[test]
    fn complete_graphs_every_permutation_is_linear() {
        fn permutations(items: Vec<VertexSet>) -> Vec<Vec<VertexSet>> {
            if items.len() <= 1 {
                return vec![items];
            }
            let mut out = Vec::new();
            for i in 0..items.len() {
                let mut rest = items.clone();
                let head = rest.remove(i);
                for mut p in permutations(rest) {
                    p.insert(0, head);
                    out.push(p);
                }
            }
            out
        }
        for n in 2..=6 {
            let covers = minimal_covers_bruteforce(&Graph::complete(n)).unwrap();
            for p in permutations(covers.into_covers()) {
                assert_eq!(
                    verify_linear_quotients(&p).unwrap(),
                    LqVerdict::Linear {
                        colon_counts: (0..n).map(|i| usize::from(i > 0)).collect()
                    }
                );
            }
        }
    }

    fn rules(g: &Graph) -> Vec<PivotRule> {
        let mut rev: Vec<usize> = (0..g.n()).rev().collect();
        rev.rotate_left(g.n() / 2);
        vec![
            PivotRule::min_index(),
            PivotRule::max_index(),
            PivotRule::max_degree(),
            PivotRule::with_priority(rev, PivotFallback::MinIndex),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn constructions_have_linear_quotients(g in arb_chordal(12)) {
            prop_assume!(!g.is_edgeless());
            let mut expected = minimal_covers_bruteforce(&g).unwrap().into_covers();
            expected.sort();
            for rule in rules(&g) {
                for o in [vv_ordering(&g, &rule).unwrap(), fvt_ordering(&g, &rule).unwrap()] {
                    prop_assert!(verify_linear_quotients(o.gens()).unwrap().is_linear());
                    let mut got = o.gens().to_vec();
                    got.sort();
                    prop_assert_eq!(&got, &expected);
                }
            }
        }

        #[test]
        fn shelling_iff_linear_quotients(g in arb_graph(8), seed in any::<u64>()) {
            let mut covers = minimal_covers_bruteforce(&g).unwrap().into_covers();
            covers.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let o = MonomialOrdering::user(covers);
            let lq = verify_linear_quotients(o.gens()).unwrap().is_linear();
            let sh = verify_shelling(&shelling_from_ordering(&o, g.n())).unwrap().is_shelling();
            prop_assert_eq!(lq, sh);
        }
    }
}
