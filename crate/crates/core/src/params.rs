//! Exact classical parameters: independence, k-domination, connected domination,
//! and maximum-cut partitions of vertex subsets.
//!
//! Every minimum/maximum routine returns the lexicographically smallest optimal
//! witness, so outputs are stable across runs.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::alliance::mask_is_k_dominating;
use crate::error::{Error, Result};
use crate::formulas::k_domination_lower;
use crate::graph::Graph;
use crate::search::{for_each_k_subset, full_mask, guard, mask_connected, Limits, HARD_MAX_N};
use crate::vertex_set::{mask_lex_less, VertexSet};

/// Largest subset on which [`CutMode::Auto`] enumerates bipartitions exactly.
pub const EXACT_CUT_MAX: usize = 20;

/// An optimal value together with a canonical witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub value: usize,
    pub witness: VertexSet,
}

fn adjacency(g: &Graph, what: &'static str) -> Result<Vec<u64>> {
    guard(what, HARD_MAX_N, g.n())?;
    Ok(g.masks().expect("n <= 64 fits one word"))
}

/// α(Γ) by include-first branch and bound.
///
/// Branching on the lowest remaining candidate and taking the include branch first
/// visits equal-size sets in lexicographic order; since only strict improvements
/// are kept, the first maximum found is the lexicographically smallest.
pub fn independence_number(g: &Graph) -> Result<Optimum> {
    let adj = adjacency(g, "independence number")?;
    let mut best = (0usize, 0u64);
    mis_branch(&adj, full_mask(g.n()), 0, 0, &mut best);
    Ok(Optimum {
        value: best.0,
        witness: VertexSet::from_mask(g.n(), best.1),
    })
}

fn mis_branch(adj: &[u64], candidates: u64, chosen: u64, size: usize, best: &mut (usize, u64)) {
    if candidates == 0 {
        if size > best.0 {
            *best = (size, chosen);
        }
        return;
    }
    if size + candidates.count_ones() as usize <= best.0 {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let bit = 1u64 << v;
    mis_branch(
        adj,
        candidates & !bit & !adj[v],
        chosen | bit,
        size + 1,
        best,
    );
    mis_branch(adj, candidates & !bit, chosen, size, best);
}

/// γ_k(Γ): the smallest `H` such that every vertex outside `H` has at least `k`
/// neighbors in `H`. The search starts at `max(1, ⌈kn/(Δ+k)⌉)`.
pub fn k_domination_number(g: &Graph, k: usize) -> Result<Optimum> {
    k_domination_number_with(g, k, &Limits::default())
}

pub fn k_domination_number_with(g: &Graph, k: usize, limits: &Limits) -> Result<Optimum> {
    if k == 0 {
        return Err(Error::Input("k-domination needs k >= 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::Input("k-domination of the null graph".into()));
    }
    limits.guard_exact("k-domination number", g.n())?;
    let adj = adjacency(g, "k-domination number")?;
    let n = g.n();
    let full = full_mask(n);
    let start = k_domination_lower(n, g.max_degree(), k).max(1) as usize;
    for size in start..=n {
        let hit = for_each_k_subset(n, size, |s| {
            if mask_is_k_dominating(&adj, full, s, k as u32) {
                ControlFlow::Break(s)
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(s) = hit {
            return Ok(Optimum {
                value: size,
                witness: VertexSet::from_mask(n, s),
            });
        }
    }
    unreachable!("V is k-dominating for every k")
}

/// γ(Γ).
pub fn domination_number(g: &Graph) -> Result<Optimum> {
    k_domination_number(g, 1)
}

/// γ_c(Γ): smallest dominating set inducing a connected subgraph.
pub fn connected_domination_number(g: &Graph) -> Result<Optimum> {
    connected_domination_number_with(g, &Limits::default())
}

pub fn connected_domination_number_with(g: &Graph, limits: &Limits) -> Result<Optimum> {
    if g.n() == 0 {
        return Err(Error::Input(
            "connected domination of the null graph".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Domain(
            "connected domination needs a connected graph".into(),
        ));
    }
    limits.guard_exact("connected domination number", g.n())?;
    let adj = adjacency(g, "connected domination number")?;
    let n = g.n();
    let full = full_mask(n);
    for size in 1..=n {
        let hit = for_each_k_subset(n, size, |s| {
            if mask_is_k_dominating(&adj, full, s, 1) && mask_connected(&adj, s) {
                ControlFlow::Break(s)
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(s) = hit {
            return Ok(Optimum {
                value: size,
                witness: VertexSet::from_mask(n, s),
            });
        }
    }
    unreachable!("V is a connected dominating set of a connected graph")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CutMode {
    /// Enumerate every bipartition; refuses subsets above [`EXACT_CUT_MAX`].
    Exact,
    /// Parity seed plus single-vertex moves until no move increases the cut.
    LocalSearch,
    /// Exact up to [`EXACT_CUT_MAX`] vertices, local search beyond.
    Auto,
}

/// A bipartition `x ∪ y` of a vertex subset with `|x| <= |y|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutPartition {
    pub x: VertexSet,
    pub y: VertexSet,
    pub cut_size: usize,
    /// The mode actually used (never `Auto`).
    pub mode: CutMode,
}

impl CutPartition {
    /// Local maximality: no single vertex has more neighbors on its own side than
    /// across, so no single move increases the cut.
    pub fn is_locally_maximal(&self, g: &Graph) -> bool {
        let side_ok = |own: &VertexSet, other: &VertexSet| {
            own.iter()
                .all(|v| g.count_in(v, other) >= g.count_in(v, own))
        };
        side_ok(&self.x, &self.y) && side_ok(&self.y, &self.x)
    }
}

fn cut_between(g: &Graph, x: &VertexSet, y: &VertexSet) -> usize {
    x.iter().map(|v| g.count_in(v, y)).sum()
}

/// Max-cut partition of `sub` (edges of `Γ` with both ends in `sub`).
///
/// `x` is the smaller side; among equally good partitions the lexicographically
/// smallest `x` is returned in exact mode.
pub fn max_cut_partition(sub: &VertexSet, g: &Graph, mode: CutMode) -> Result<CutPartition> {
    if sub.universe() != g.n() {
        return Err(Error::Input(
            "subset universe does not match graph order".into(),
        ));
    }
    if sub.len() < 2 {
        return Err(Error::Input(format!(
            "max-cut partition needs at least 2 vertices, got {}",
            sub.len()
        )));
    }
    match mode {
        CutMode::Exact => {
            guard("exact max-cut", EXACT_CUT_MAX, sub.len())?;
            Ok(exact_cut(sub, g))
        }
        CutMode::LocalSearch => Ok(local_search_cut(sub, g)),
        CutMode::Auto if sub.len() <= EXACT_CUT_MAX => Ok(exact_cut(sub, g)),
        CutMode::Auto => Ok(local_search_cut(sub, g)),
    }
}

fn exact_cut(sub: &VertexSet, g: &Graph) -> CutPartition {
    let members = sub.to_vec();
    let k = members.len();
    let local_adj: Vec<u64> = members
        .iter()
        .map(|&v| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &u)| g.has_edge(v, u))
                .fold(0u64, |m, (j, _)| m | 1u64 << j)
        })
        .collect();
    let all = full_mask(k);
    let mut best: Option<(usize, u64)> = None;
    for x in 0..=all {
        let size = x.count_ones() as usize;
        if 2 * size > k {
            continue;
        }
        let y = all & !x;
        let mut cut = 0usize;
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cut += (local_adj[i] & y).count_ones() as usize;
        }
        let better = match best {
            None => true,
            Some((c, bx)) => cut > c || (cut == c && mask_lex_less(x, bx)),
        };
        if better {
            best = Some((cut, x));
        }
    }
    let (cut_size, x_local) = best.expect("at least the empty side exists");
    let mut x = VertexSet::empty(g.n());
    for (i, &v) in members.iter().enumerate() {
        if x_local >> i & 1 == 1 {
            x.insert(v);
        }
    }
    let y = sub.difference(&x);
    CutPartition {
        x,
        y,
        cut_size,
        mode: CutMode::Exact,
    }
}

fn local_search_cut(sub: &VertexSet, g: &Graph) -> CutPartition {
    let mut x = VertexSet::from_members(g.n(), sub.iter().filter(|v| v % 2 == 0))
        .expect("subset of a valid set");
    let mut y = sub.difference(&x);
    loop {
        let mut moved = false;
        for v in sub {
            let (own, other) = if x.contains(v) { (&x, &y) } else { (&y, &x) };
            if g.count_in(v, own) > g.count_in(v, other) {
                if x.contains(v) {
                    x.remove(v);
                    y.insert(v);
                } else {
                    y.remove(v);
                    x.insert(v);
                }
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    if y.len() < x.len() || (y.len() == x.len() && y < x) {
        std::mem::swap(&mut x, &mut y);
    }
    CutPartition {
        cut_size: cut_between(g, &x, &y),
        x,
        y,
        mode: CutMode::LocalSearch,
    }
}
