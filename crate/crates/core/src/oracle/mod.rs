//! Independent ground truth: multigraded Betti numbers of squarefree
//! monomial ideals from simplicial homology, and exhaustive shelling search.
//!
//! For squarefree `σ`, `b_{i,σ}(I) = dim H̃_{i-1}(K^σ(I))` where
//! `K^σ(I) = {τ ⊆ σ : σ \ τ supports a monomial of I}`. Only `σ` in the lcm
//! lattice of the generators can contribute.

mod homology;
mod rank;

use std::collections::{BTreeSet, HashSet};

pub use homology::{koszul_homology, reduced_homology, upper_koszul_faces, HomologyResult};
pub use rank::exact_rank;

use crate::betti::{BettiMethod, BettiTable};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linquo::Shelling;
use crate::vertex_set::VertexSet;

pub const HOCHSTER_VERTEX_CAP: usize = 14;
pub const SHELLING_FACET_CAP: usize = 9;

/// All unions of nonempty subsets of `gens`.
pub fn lcm_lattice(gens: &[VertexSet]) -> BTreeSet<VertexSet> {
    let mut lattice: BTreeSet<VertexSet> = gens.iter().copied().collect();
    let mut frontier: Vec<VertexSet> = lattice.iter().copied().collect();
    while let Some(s) = frontier.pop() {
        for &g in gens {
            let u = s | g;
            if lattice.insert(u) {
                frontier.push(u);
            }
        }
    }
    lattice
}

/// Graded Betti numbers of the ideal generated by `gens` in `n` variables.
pub fn hochster_betti(gens: &[VertexSet], n: usize) -> Result<BettiTable> {
    if n > HOCHSTER_VERTEX_CAP {
        return Err(Error::SizeCap {
            what: "homology oracle",
            size: n,
            cap: HOCHSTER_VERTEX_CAP,
        });
    }
    let ambient = VertexSet::full(n);
    for &m in gens {
        if let Some(v) = (m - ambient).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
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
    let mut table = BettiTable::new(BettiMethod::Oracle);
    for sigma in lcm_lattice(gens) {
        let h = koszul_homology(gens, sigma);
        for (&d, &rank) in &h.reduced_betti {
            table.add((d + 1) as usize, sigma.len(), rank as u64);
        }
    }
    Ok(table)
}

/// Searches all facet orders (with pruning on the set of facets already
/// placed) for a shelling. `Ok(None)` means no order is a shelling.
pub fn exhaustive_shelling_search(c: &SimplicialComplex) -> Result<Option<Shelling>> {
    let facets = c.facets();
    let k = facets.len();
    if k > SHELLING_FACET_CAP {
        return Err(Error::SizeCap {
            what: "shelling search",
            size: k,
            cap: SHELLING_FACET_CAP,
        });
    }

    // facet `next` may follow the facets in `placed`
    let extends = |placed: u32, next: usize| -> bool {
        let f = facets[next];
        let earlier = (0..k).filter(|i| placed >> i & 1 == 1);
        let witnesses: VertexSet = earlier
            .clone()
            .map(|l| f - facets[l])
            .filter(|d| d.len() == 1)
            .fold(VertexSet::EMPTY, |acc, d| acc | d);
        earlier.into_iter().all(|i| !(f - facets[i]).is_disjoint(witnesses))
    };

    fn dfs(
        placed: u32,
        k: usize,
        order: &mut Vec<usize>,
        dead: &mut HashSet<u32>,
        extends: &dyn Fn(u32, usize) -> bool,
    ) -> bool {
        if order.len() == k {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        for next in 0..k {
            if placed >> next & 1 == 0 && extends(placed, next) {
                order.push(next);
                if dfs(placed | 1 << next, k, order, dead, extends) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(placed);
        false
    }

    let mut order = Vec::with_capacity(k);
    let mut dead = HashSet::new();
    Ok(dfs(0, k, &mut order, &mut dead, &extends)
        .then(|| Shelling::new(order.into_iter().map(|i| facets[i]).collect())))
}
