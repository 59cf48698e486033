//! Graph families and random generators used by tests and the self-test.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Random chordal graph on `n` vertices by clique-tree growth: each new
/// vertex attaches to a random subset of a previously created bag, and
/// `S ∪ {v}` becomes a new bag. New vertices are simplicial when added, so
/// the reverse insertion order is a perfect elimination order.
///
/// With `connected`, the attachment set is never empty.
pub fn random_chordal<R: Rng + ?Sized>(rng: &mut R, n: usize, connected: bool) -> Graph {
    let density: f64 = rng.gen_range(0.25..1.0);
    let mut bags: Vec<VertexSet> = vec![VertexSet::singleton(0)];
    let mut edges = Vec::new();
    for v in 1..n {
        let bag = bags[rng.gen_range(0..bags.len())];
        let mut attach: VertexSet = bag.iter().filter(|_| rng.gen_bool(density)).collect();
        if attach.is_empty() && (connected || rng.gen_bool(0.7)) {
            let members: Vec<usize> = bag.iter().collect();
            attach = VertexSet::singleton(members[rng.gen_range(0..members.len())]);
        }
        edges.extend(attach.iter().map(|u| (u, v)));
        bags.push(attach.with(v));
    }
    // random relabelling
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
        .expect("n within vertex cap")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("n within vertex cap")
}

fn tree_code(adj: &[Vec<usize>], root: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[root]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| tree_code(adj, c, root))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn canonical_tree(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut remaining = n;
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut removed = vec![false; n];
    while remaining > 2 {
        let mut next = Vec::new();
        for &l in &leaves {
            removed[l] = true;
            remaining -= 1;
            for &u in &adj[l] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        leaves = next;
    }
    (0..n)
        .filter(|&v| !removed[v])
        .map(|c| tree_code(adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// All trees on `n` vertices up to isomorphism.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for _ in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.len() {
                let mut adj = t.clone();
                let new = adj.len();
                adj.push(vec![v]);
                adj[v].push(new);
                if seen.insert(canonical_tree(&adj)) {
                    next.push(adj);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|adj| {
            let edges = adj
                .iter()
                .enumerate()
                .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)));
            Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("n within vertex cap")
        })
        .collect()
}

/// Two cliques `{a_1..a_q}` (vertices `0..q`) and `{b_1..b_p}` (vertices
/// `q..q+p`) joined by nested cross edges: `a_{i+2}` is adjacent to the first
/// `cross[i]` of `b_2, ..., b_p`. The result is chordal, `a_1` and `b_1` are
/// free vertices and the two cliques partition the vertices.
///
/// Panics unless `q, p >= 2`, `cross.len() == q - 1` and every `cross[i] < p`.
pub fn two_free_facet_graph(q: usize, p: usize, cross: &[usize]) -> Graph {
    assert!(q >= 2 && p >= 2 && cross.len() == q - 1);
    let mut edges = Vec::new();
    for i in 0..q {
        for j in i + 1..q {
            edges.push((i, j));
        }
    }
    for i in 0..p {
        for j in i + 1..p {
            edges.push((q + i, q + j));
        }
    }
    for (i, &t) in cross.iter().enumerate() {
        assert!(t < p);
        for k in 0..t {
            edges.push((i + 1, q + 1 + k));
        }
    }
    Graph::from_edges(p + q, edges).expect("n within vertex cap")
}
