//! Exact alliance numbers and minimal-alliance enumeration.
//!
//! Minimum solvers walk cardinalities upward from a proven lower bound and, within a
//! cardinality, visit subsets in lexicographic order; the first hit is therefore the
//! lexicographically smallest optimal witness. For global kinds every candidate must
//! be `⌈(δ+margin)/2⌉`-dominating, which is checked before the full inequality.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::alliance::{check_alliance, mask_is_alliance, mask_is_k_dominating, AllianceKind};
use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::Graph;
use crate::search::{for_each_k_subset, full_mask, mask_connected, Limits};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectedness {
    None,
    AllianceConnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub kind: AllianceKind,
    pub connectedness: Connectedness,
    pub value: usize,
    pub witness: VertexSet,
    /// Candidate subsets examined.
    pub nodes_explored: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub limits: Limits,
    /// Start the cardinality walk at the best closed-form lower bound instead of 1.
    pub seed_lower_bound: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            limits: Limits::default(),
            seed_lower_bound: true,
        }
    }
}

/// Best closed-form lower bound applicable to `kind` (1 for plain kinds).
pub fn seed_lower_bound(g: &Graph, kind: AllianceKind, connected_alliance: bool) -> usize {
    if !kind.is_global() || g.n() == 0 {
        return 1;
    }
    let (n, m, dmin, dmax) = (g.n(), g.m(), g.min_degree(), g.max_degree());
    let strong = kind.is_strong();
    let mut lb: i64 = 1;
    if strong {
        lb = lb.max(formulas::global_strong_size_degree_lower(n, m, dmax));
        lb = lb.max(formulas::global_strong_order_size_lower(n, m).unwrap_or(1));
    } else {
        lb = lb.max(formulas::global_offensive_size_degree_lower(n, m, dmax));
        lb = lb.max(formulas::global_offensive_order_size_lower(n, m).unwrap_or(1));
    }
    if g.is_connected() && n >= 2 {
        let degree = if strong {
            Some(formulas::global_strong_degree_lower(n, dmin, dmax))
        } else {
            formulas::global_offensive_degree_lower(n, dmin, dmax)
        };
        lb = lb.max(degree.unwrap_or(1));
        if connected_alliance {
            if let Ok(d) = g.diameter() {
                lb = lb.max(if strong {
                    formulas::global_connected_lower_strong(n, m, dmax, d)
                } else {
                    formulas::global_connected_lower(n, m, dmax, d)
                });
            }
        }
    }
    lb.clamp(1, n as i64) as usize
}

/// a_o, a_ô, γ_o or γ_ô depending on `kind`.
pub fn min_alliance(g: &Graph, kind: AllianceKind) -> Result<SolveResult> {
    min_alliance_with(g, kind, &SolveOptions::default())
}

pub fn min_alliance_with(
    g: &Graph,
    kind: AllianceKind,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    solve(g, kind, false, opts)
}

/// γ_co or γ_ĉo: smallest global (strong) alliance whose induced subgraph is connected.
pub fn min_connected_alliance(g: &Graph, kind: AllianceKind) -> Result<SolveResult> {
    min_connected_alliance_with(g, kind, &SolveOptions::default())
}

pub fn min_connected_alliance_with(
    g: &Graph,
    kind: AllianceKind,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    if !kind.is_global() {
        return Err(Error::Input(format!(
            "connected alliance numbers are defined for global kinds, not {kind}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Domain(
            "global-connected alliance numbers need a connected graph".into(),
        ));
    }
    solve(g, kind, true, opts)
}

fn solve(
    g: &Graph,
    kind: AllianceKind,
    connected: bool,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Input("alliance numbers of the null graph".into()));
    }
    opts.limits.guard_exact("exact alliance search", n)?;
    let adj = g.masks().expect("guarded to n <= 64");
    let full = full_mask(n);
    let k_needed = if kind.is_global() {
        kind.domination_order(g.min_degree()) as u32
    } else {
        0
    };
    let start = if opts.seed_lower_bound {
        seed_lower_bound(g, kind, connected)
    } else {
        1
    };
    let mut nodes = 0u64;
    for size in start..=n {
        let hit = for_each_k_subset(n, size, |s| {
            nodes += 1;
            if k_needed > 0 && !mask_is_k_dominating(&adj, full, s, k_needed) {
                return ControlFlow::Continue(());
            }
            if mask_is_alliance(&adj, full, s, kind) && (!connected || mask_connected(&adj, s)) {
                ControlFlow::Break(s)
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(s) = hit {
            let witness = VertexSet::from_mask(n, s);
            let cert = check_alliance(g, &witness, kind)?;
            assert!(cert.satisfied, "solver witness {witness} fails {kind}");
            return Ok(SolveResult {
                kind,
                connectedness: if connected {
                    Connectedness::AllianceConnected
                } else {
                    Connectedness::None
                },
                value: size,
                witness,
                nodes_explored: nodes,
            });
        }
    }
    // V satisfies every kind; for the connected variant V is connected by the
    // precondition. Reaching this point means the seed overshot.
    unreachable!("no {kind} alliance found from cardinality {start}")
}

/// Every minimal alliance of `kind`, optionally restricted to those whose complement
/// induces a (nonempty) connected subgraph, in lexicographic order.
///
/// Works over the full subset lattice: an alliance table is closed downward with a
/// subset-sum pass, after which `S` is minimal iff no `S ∖ {v}` contains an alliance.
pub fn enumerate_minimal_alliances(
    g: &Graph,
    kind: AllianceKind,
    require_connected_complement: bool,
    limit: Option<usize>,
    limits: &Limits,
) -> Result<Vec<VertexSet>> {
    let n = g.n();
    limits.guard_enumerate("minimal alliance enumeration", n)?;
    let adj = g.masks().expect("guarded");
    let full = full_mask(n);
    let size = 1usize << n;

    let mut contains: Vec<bool> = (0..size as u64)
        .map(|s| mask_is_alliance(&adj, full, s, kind))
        .collect();
    let is_alliance = contains.clone();
    for bit in 0..n {
        let b = 1usize << bit;
        for s in 0..size {
            if s & b != 0 && contains[s ^ b] {
                contains[s] = true;
            }
        }
    }

    let mut out: Vec<VertexSet> = Vec::new();
    for s in 1..size {
        if !is_alliance[s] {
            continue;
        }
        let minimal = (0..n).all(|v| s >> v & 1 == 0 || !contains[s ^ (1usize << v)]);
        if !minimal {
            continue;
        }
        if require_connected_complement && !mask_connected(&adj, full & !(s as u64)) {
            continue;
        }
        out.push(VertexSet::from_mask(n, s as u64));
    }
    out.sort();
    if let Some(limit) = limit {
        out.truncate(limit);
    }
    Ok(out)
}

/// Minimal global alliances (the inputs to the diameter and size theorems).
pub fn enumerate_minimal_global_alliances(
    g: &Graph,
    kind: AllianceKind,
    require_connected_complement: bool,
    limit: Option<usize>,
) -> Result<Vec<VertexSet>> {
    if !kind.is_global() {
        return Err(Error::Input(format!("{kind} is not a global kind")));
    }
    enumerate_minimal_alliances(
        g,
        kind,
        require_connected_complement,
        limit,
        &Limits::default(),
    )
}
