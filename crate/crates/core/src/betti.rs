//! Graded Betti numbers of cover ideals: from a linear quotients ordering,
//! from the recursion over `G \ N[x_t]`, and derived invariants.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::chordal::{require_chordal, unmixed_certificate};
use crate::covers::{independence_complex, induced_matching_number, CoverRecursion};
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};
use crate::linquo::{colon_counts, MonomialOrdering};
use crate::memo::{Memo, RecursionConfig};
use crate::pivot::PivotRule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BettiMethod {
    LinearQuotients,
    Recursive,
    Oracle,
    ClosedForm,
}

impl fmt::Display for BettiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BettiMethod::LinearQuotients => "lq",
            BettiMethod::Recursive => "recursive",
            BettiMethod::Oracle => "oracle",
            BettiMethod::ClosedForm => "closed-form",
        })
    }
}

/// Nonzero graded Betti numbers `b_{i,j}` keyed by `(i, j)`, where `j` is
/// the internal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    method: BettiMethod,
}

impl BettiTable {
    pub fn new(method: BettiMethod) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            method,
        }
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn method(&self) -> BettiMethod {
        self.method
    }

    /// Entrywise equality, ignoring the method tag.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    /// Total Betti numbers `b_0, ..., b_pd`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.pd().map_or(0, |p| p + 1);
        let mut t = vec![0; len];
        for (&(i, _), &v) in &self.entries {
            t[i] += v;
        }
        t
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Projective dimension: the largest `i` with a nonzero entry.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Regularity: the largest `j - i` over nonzero entries.
    pub fn reg(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `b_{i,i+d}` is the sum of `C(n_p, i)` over generators of degree `d`,
/// where `n_p` counts the variables generating the `p`-th colon ideal.
pub fn betti_from_ordering(o: &MonomialOrdering) -> Result<BettiTable> {
    let counts = colon_counts(o)?;
    let mut table = BettiTable::new(BettiMethod::LinearQuotients);
    for (m, &np) in o.gens().iter().zip(&counts) {
        for i in 0..=np {
            table.add(i, i + m.len(), binomial(np, i));
        }
    }
    Ok(table)
}

/// `J(K_n)`: `b_{0,n-1} = n`, `b_{1,n} = n - 1`. Requires `n >= 2`.
pub fn complete_graph_betti(n: usize) -> Result<BettiTable> {
    if n < 2 {
        return Err(Error::NoEdges);
    }
    let mut t = BettiTable::new(BettiMethod::ClosedForm);
    t.add(0, n - 1, n as u64);
    t.add(1, n, n as u64 - 1);
    Ok(t)
}

type Entries = BTreeMap<(usize, usize), u64>;

struct BettiRecursion<'r> {
    rule: &'r PivotRule,
    covers: CoverRecursion<'r>,
    graded: Memo<Entries>,
    totals: Memo<Vec<u64>>,
}

impl<'r> BettiRecursion<'r> {
    fn new(config: &'r RecursionConfig) -> Self {
        BettiRecursion {
            rule: &config.pivot,
            covers: CoverRecursion::new(&config.pivot, config.memo_cap),
            graded: Memo::new(config.memo_cap),
            totals: Memo::new(config.memo_cap),
        }
    }

    /// Graded table of `J(H)`. For edgeless `H` this is the generator `1`
    /// in degree 0, i.e. the cover `∅`.
    fn graded(&mut self, view: Subgraph<'_>) -> Arc<Entries> {
        let view = view.restrict(view.support());
        if let Some(hit) = self.graded.get(view.kept) {
            return hit;
        }
        let mut out = Entries::new();
        // row 0 from generator degrees
        for c in self.covers.covers(view).iter() {
            *out.entry((0, c.len())).or_insert(0) += 1;
        }
        if let Some(block) = self.rule.pivot_block(view) {
            for (t, &x) in block.iter().enumerate() {
                let shift = view.neighbors(x).len();
                let sub = self.graded(view.restrict(view.kept - view.closed(x)));
                for (&(i, j), &v) in sub.iter() {
                    // b_{i, j} of J(H_t) lands at (i, j + |N(x_t)|) for i >= 1 ...
                    if i >= 1 {
                        *out.entry((i, j + shift)).or_insert(0) += v;
                    }
                    // ... and, for t >= 2, at (i + 1, j + 1 + |N(x_t)|)
                    if t >= 1 {
                        *out.entry((i + 1, j + 1 + shift)).or_insert(0) += v;
                    }
                }
            }
        }
        self.graded.insert(view.kept, out)
    }

    fn totals(&mut self, view: Subgraph<'_>) -> Arc<Vec<u64>> {
        let view = view.restrict(view.support());
        if let Some(hit) = self.totals.get(view.kept) {
            return hit;
        }
        let mut out = vec![self.covers.covers(view).len() as u64];
        if let Some(block) = self.rule.pivot_block(view) {
            for (t, &x) in block.iter().enumerate() {
                let sub = self.totals(view.restrict(view.kept - view.closed(x)));
                let mut bump = |i: usize, v: u64| {
                    if out.len() <= i {
                        out.resize(i + 1, 0);
                    }
                    out[i] += v;
                };
                for (i, &v) in sub.iter().enumerate() {
                    if i >= 1 {
                        bump(i, v);
                    }
                    if t >= 1 {
                        bump(i + 1, v);
                    }
                }
            }
        }
        while out.len() > 1 && out.last() == Some(&0) {
            out.pop();
        }
        self.totals.insert(view.kept, out)
    }
}

fn require_chordal_with_edges(g: &Graph) -> Result<()> {
    require_chordal(g)?;
    if g.is_edgeless() {
        return Err(Error::NoEdges);
    }
    Ok(())
}

/// Graded Betti numbers of `J(G)` for chordal `G` by recursion on a
/// simplicial vertex `x_1` with `N[x_1] = {x_1, ..., x_r}` and
/// `H_t = G \ N[x_t]`:
///
/// `b_{i,i+j}(J(G)) = Σ_{t=1}^{r} b_{i,i+j-|N(x_t)|}(J(H_t))
///                  + Σ_{t=2}^{r} b_{i-1,(i-1)+j-|N(x_t)|}(J(H_t))`
///
/// for `i >= 1`, with `J(H) = (1)` contributing `b_{0,0} = 1` when `H` has no
/// edges. Row 0 is the degree distribution of the minimal covers.
pub fn graded_recursive(g: &Graph) -> Result<BettiTable> {
    graded_recursive_with(g, &RecursionConfig::default())
}

pub fn graded_recursive_with(g: &Graph, config: &RecursionConfig) -> Result<BettiTable> {
    require_chordal_with_edges(g)?;
    let mut rec = BettiRecursion::new(config);
    let entries = rec.graded(Subgraph::whole(g));
    Ok(BettiTable {
        entries: entries.as_ref().clone(),
        method: BettiMethod::Recursive,
    })
}

/// Total Betti numbers `b_0, ..., b_pd` of `J(G)`:
/// `b_i(J(G)) = Σ_{t=1}^{r} b_i(J(H_t)) + Σ_{t=2}^{r} b_{i-1}(J(H_t))` for
/// `i >= 1`, with `b_0 = 1` for edgeless `H`; `b_0` is the number of covers.
pub fn total_recursive(g: &Graph) -> Result<Vec<u64>> {
    total_recursive_with(g, &RecursionConfig::default())
}

pub fn total_recursive_with(g: &Graph, config: &RecursionConfig) -> Result<Vec<u64>> {
    require_chordal_with_edges(g)?;
    let mut rec = BettiRecursion::new(config);
    Ok(rec.totals(Subgraph::whole(g)).as_ref().clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    /// `pd(J(G))`, which equals `reg(S / I(G))`.
    pub pd: usize,
    /// Induced matching number.
    pub im: usize,
    /// `reg(I(G)) = reg(S / I(G)) + 1`.
    pub reg_edge_ideal: usize,
    /// Number of minimal covers.
    pub b0: u64,
}

/// `pd(J(G))` from the recursive table, checked against the induced matching
/// number. A mismatch is reported as [`Error::Internal`].
pub fn invariants(g: &Graph) -> Result<Invariants> {
    invariants_with(g, &RecursionConfig::default())
}

pub fn invariants_with(g: &Graph, config: &RecursionConfig) -> Result<Invariants> {
    let table = graded_recursive_with(g, config)?;
    let pd = table.pd().expect("nonzero ideal has generators");
    let (core, _) = g.without_isolated();
    let im = induced_matching_number(&core)?;
    if pd != im {
        return Err(Error::Internal(format!(
            "projective dimension {pd} differs from induced matching number {im}"
        )));
    }
    Ok(Invariants {
        pd,
        im,
        reg_edge_ideal: pd + 1,
        b0: table.total(0),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnmixedBetti {
    /// `b_1 = 2 b_0 - n` and `b_2 = b_0 - n + 1`, with `n` counting
    /// non-isolated vertices.
    Applicable { n: usize, b0: u64, b1: i64, b2: i64 },
    NotApplicable { reason: String },
}

/// Closed-form `b_1, b_2` for unmixed chordal graphs whose independence
/// complex is one-dimensional. Isolated vertices are dropped first.
pub fn unmixed_1dim_betti(g: &Graph) -> Result<UnmixedBetti> {
    let na = |reason: &str| {
        Ok(UnmixedBetti::NotApplicable {
            reason: reason.to_string(),
        })
    };
    let (g, _) = g.without_isolated();
    if g.is_edgeless() {
        return na("graph has no edges");
    }
    let cert = match unmixed_certificate(&g) {
        Ok(c) => c,
        Err(Error::NotChordal { .. }) => return na("graph is not chordal"),
        Err(e) => return Err(e),
    };
    if !cert.is_unmixed {
        return na("graph is not unmixed");
    }
    let ind = independence_complex(&g);
    if ind.dim() != 1 {
        return na("independence complex is not one-dimensional");
    }
    let b0 = ind.facets().len() as u64;
    let n = g.n() as i64;
    Ok(UnmixedBetti::Applicable {
        n: g.n(),
        b0,
        b1: 2 * b0 as i64 - n,
        b2: b0 as i64 - n + 1,
    })
}
