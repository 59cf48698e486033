use std::collections::{BTreeMap, HashMap};

use super::rank::exact_rank;
use crate::vertex_set::VertexSet;

/// Reduced homology ranks of one upper Koszul complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub multidegree: VertexSet,
    /// Nonzero ranks of `H̃_d` keyed by dimension `d >= -1`.
    pub reduced_betti: BTreeMap<isize, usize>,
}

/// Faces of `K^σ(I) = {τ ⊆ σ : σ \ τ contains a generator}`.
pub fn upper_koszul_faces(gens: &[VertexSet], sigma: VertexSet) -> Vec<VertexSet> {
    sigma
        .subsets()
        .filter(|&tau| {
            let rest = sigma - tau;
            gens.iter().any(|m| m.is_subset(rest))
        })
        .collect()
}

/// Reduced homology over the rationals of the complex whose faces are
/// listed (the list must be closed under taking subsets).
///
/// Conventions: the complex `{∅}` has `H̃_{-1}` of rank 1; the void complex
/// (no faces at all) has every rank 0.
pub fn reduced_homology(faces: &[VertexSet]) -> BTreeMap<isize, usize> {
    let mut out = BTreeMap::new();
    if faces.is_empty() {
        return out;
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    // by_size[s] lists faces with s vertices (dimension s - 1)
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.len()].push(f);
    }
    for level in &mut by_size {
        level.sort();
    }
    let index: Vec<HashMap<VertexSet, usize>> = by_size
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    // rank of the boundary map from faces of size s to faces of size s - 1
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > top || by_size[s].is_empty() || by_size[s - 1].is_empty() {
            return 0;
        }
        let mut rows = vec![vec![0i64; by_size[s].len()]; by_size[s - 1].len()];
        for (col, &f) in by_size[s].iter().enumerate() {
            for (pos, v) in f.iter().enumerate() {
                let facet = f.without(v);
                let row = index[s - 1][&facet];
                rows[row][col] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        exact_rank(&rows)
    };

    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    for s in 0..=top {
        let chains = by_size[s].len();
        let h = chains - ranks[s] - ranks[s + 1];
        if h > 0 {
            out.insert(s as isize - 1, h);
        }
    }
    out
}

pub fn koszul_homology(gens: &[VertexSet], sigma: VertexSet) -> HomologyResult {
    HomologyResult {
        multidegree: sigma,
        reduced_betti: reduced_homology(&upper_koszul_faces(gens, sigma)),
    }
}
