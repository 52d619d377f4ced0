//! Offensive alliance predicates, boundaries and minimality.
//!
//! All four kinds share one inequality: a vertex `v` outside `S` is *attacked* when
//! `|N_S(v)| - |N_{V∖S}(v)| >= margin`, with margin 1 for plain and 2 for strong
//! alliances. Plain kinds require it on the boundary `∂(S)`, global kinds on all of
//! `V ∖ S`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest set for which [`is_minimal_alliance`] runs its proper-subset search.
pub const MINIMALITY_MAX_SET: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AllianceKind {
    Offensive,
    StrongOffensive,
    GlobalOffensive,
    GlobalStrongOffensive,
}

impl AllianceKind {
    pub const ALL: [AllianceKind; 4] = [
        AllianceKind::Offensive,
        AllianceKind::StrongOffensive,
        AllianceKind::GlobalOffensive,
        AllianceKind::GlobalStrongOffensive,
    ];

    pub fn margin(self) -> usize {
        match self {
            AllianceKind::Offensive | AllianceKind::GlobalOffensive => 1,
            AllianceKind::StrongOffensive | AllianceKind::GlobalStrongOffensive => 2,
        }
    }

    pub fn is_global(self) -> bool {
        matches!(
            self,
            AllianceKind::GlobalOffensive | AllianceKind::GlobalStrongOffensive
        )
    }

    pub fn is_strong(self) -> bool {
        self.margin() == 2
    }

    pub fn name(self) -> &'static str {
        match self {
            AllianceKind::Offensive => "offensive",
            AllianceKind::StrongOffensive => "strong_offensive",
            AllianceKind::GlobalOffensive => "global_offensive",
            AllianceKind::GlobalStrongOffensive => "global_strong_offensive",
        }
    }

    /// The `k` for which every alliance of this kind on a graph of minimum degree
    /// `min_degree` is necessarily `k`-dominating (global kinds only).
    pub fn domination_order(self, min_degree: usize) -> usize {
        (min_degree + self.margin()).div_ceil(2)
    }
}

impl fmt::Display for AllianceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AllianceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AllianceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::Input(format!(
                    "unknown alliance kind '{s}'; expected offensive, strong_offensive, \
                     global_offensive or global_strong_offensive"
                ))
            })
    }
}

/// Counts at the first vertex where the defining inequality fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: usize,
    /// |N_S(v)|
    pub inside: usize,
    /// |N_{V∖S}(v)|
    pub outside: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateCertificate {
    pub kind: AllianceKind,
    pub set: VertexSet,
    pub satisfied: bool,
    pub violator: Option<Violation>,
}

fn nonempty(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::Input(format!(
            "vertex set over universe {} used with graph of order {}",
            s.universe(),
            g.n()
        )));
    }
    if s.is_empty() {
        return Err(Error::Input("alliances are nonempty by definition".into()));
    }
    Ok(())
}

/// ∂(S): vertices outside `S` with at least one neighbor in `S`.
pub fn boundary(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    nonempty(g, s)?;
    Ok(boundary_unchecked(g, s))
}

fn boundary_unchecked(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut reach = VertexSet::empty(g.n());
    for v in s {
        reach = reach.union(g.neighbors(v));
    }
    reach.difference(s)
}

/// Evaluates `kind` on `s`, reporting the smallest-index violator if any.
pub fn check_alliance(
    g: &Graph,
    s: &VertexSet,
    kind: AllianceKind,
) -> Result<PredicateCertificate> {
    nonempty(g, s)?;
    let targets = if kind.is_global() {
        s.complement()
    } else {
        boundary_unchecked(g, s)
    };
    let violator = targets.iter().find_map(|v| {
        let inside = g.count_in(v, s);
        let outside = g.deg(v) - inside;
        (inside < outside + kind.margin()).then_some(Violation {
            vertex: v,
            inside,
            outside,
        })
    });
    Ok(PredicateCertificate {
        kind,
        set: s.clone(),
        satisfied: violator.is_none(),
        violator,
    })
}

pub fn is_alliance(g: &Graph, s: &VertexSet, kind: AllianceKind) -> Result<bool> {
    Ok(check_alliance(g, s, kind)?.satisfied)
}

/// Single-word predicate used by the exact solvers (`n <= 64`).
///
/// `adj` holds adjacency rows, `full` the mask of all vertices.
#[inline]
pub fn mask_is_alliance(adj: &[u64], full: u64, s: u64, kind: AllianceKind) -> bool {
    if s == 0 {
        return false;
    }
    let mut targets = full & !s;
    if !kind.is_global() {
        let mut reach = 0u64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            reach |= adj[v];
        }
        targets &= reach;
    }
    let margin = kind.margin() as u32;
    while targets != 0 {
        let v = targets.trailing_zeros() as usize;
        targets &= targets - 1;
        let inside = (adj[v] & s).count_ones();
        let outside = (adj[v] & !s).count_ones();
        if inside < outside + margin {
            return false;
        }
    }
    true
}

/// Every vertex outside `s` has at least `k` neighbors in `s`.
#[inline]
pub fn mask_is_k_dominating(adj: &[u64], full: u64, s: u64, k: u32) -> bool {
    let mut outside = full & !s;
    while outside != 0 {
        let v = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        if (adj[v] & s).count_ones() < k {
            return false;
        }
    }
    true
}

/// Whether no proper nonempty subset of `s` is an alliance of the same kind.
///
/// The alliance property is not hereditary, so every proper subset is examined
/// (up to [`MINIMALITY_MAX_SET`] members). Global kinds skip subsets that fail to
/// dominate before evaluating the full inequality.
pub fn is_minimal_alliance(g: &Graph, s: &VertexSet, kind: AllianceKind) -> Result<bool> {
    if !check_alliance(g, s, kind)?.satisfied {
        return Err(Error::Input(format!(
            "{s} is not a {kind} alliance, minimality is undefined"
        )));
    }
    if s.len() > MINIMALITY_MAX_SET {
        return Err(Error::Capacity {
            what: "minimality search",
            limit: MINIMALITY_MAX_SET,
            actual: s.len(),
        });
    }
    let members = s.to_vec();
    let k = members.len();
    let full_local: u64 = (1u64 << k) - 1;

    if let Some(adj) = g.masks() {
        let full = if g.n() == 64 {
            u64::MAX
        } else {
            (1u64 << g.n()) - 1
        };
        let lift = |local: u64| -> u64 {
            let mut out = 0u64;
            let mut rest = local;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out |= 1u64 << members[i];
            }
            out
        };
        for local in 1..full_local {
            let sub = lift(local);
            if kind.is_global() && !mask_is_k_dominating(&adj, full, sub, 1) {
                continue;
            }
            if mask_is_alliance(&adj, full, sub, kind) {
                return Ok(false);
            }
        }
        return Ok(true);
    }

    for local in 1..full_local {
        let sub = VertexSet::from_members(
            g.n(),
            (0..k).filter(|i| local >> i & 1 == 1).map(|i| members[i]),
        )
        .expect("members of s are in range");
        if kind.is_global() && !g.is_dominating(&sub) {
            continue;
        }
        if check_alliance(g, &sub, kind)?.satisfied {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn boundary_examples() {
        let c5 = gen::cycle(5).unwrap();
        assert!(boundary(&c5, &c5.all()).unwrap().is_empty());
        assert_eq!(boundary(&c5, &set(5, &[0])).unwrap(), set(5, &[1, 4]));
        assert!(boundary(&c5, &VertexSet::empty(5)).is_err());

        // K_{2,2,2}: pairs (0,1), (2,3), (4,5) are the non-edges. 0 and 2 are adjacent;
        // every other vertex is adjacent to one of them.
        let cp = gen::cocktail_party(3).unwrap();
        assert_eq!(
            boundary(&cp, &set(6, &[0, 2])).unwrap(),
            set(6, &[1, 3, 4, 5])
        );
    }

    #[test]
    fn cube_bipartition_class_is_global() {
        let q3 = gen::hypercube(3).unwrap();
        let even: Vec<usize> = (0..8)
            .filter(|v: &usize| v.count_ones().is_multiple_of(2))
            .collect();
        let s = set(8, &even);
        for kind in AllianceKind::ALL {
            assert!(check_alliance(&q3, &s, kind).unwrap().satisfied, "{kind}");
        }
    }

    #[test]
    fn whole_vertex_set_is_every_kind() {
        let p = gen::petersen();
        for kind in AllianceKind::ALL {
            assert!(is_alliance(&p, &p.all(), kind).unwrap());
        }
    }

    #[test]
    fn star_center() {
        let star = gen::star(6).unwrap();
        let center = set(7, &[0]);
        assert!(
            check_alliance(&star, &center, AllianceKind::GlobalOffensive)
                .unwrap()
                .satisfied
        );
        let cert = check_alliance(&star, &center, AllianceKind::GlobalStrongOffensive).unwrap();
        assert!(!cert.satisfied);
        assert_eq!(
            cert.violator,
            Some(Violation {
                vertex: 1,
                inside: 1,
                outside: 0
            })
        );
    }

    #[test]
    fn plain_kinds_only_look_at_the_boundary() {
        // Two disjoint triangles: one whole triangle has an empty boundary.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let tri = set(6, &[0, 1, 2]);
        assert!(is_alliance(&g, &tri, AllianceKind::StrongOffensive).unwrap());
        assert!(!is_alliance(&g, &tri, AllianceKind::GlobalOffensive).unwrap());
    }

    #[test]
    fn minimality_examples() {
        let c5 = gen::cycle(5).unwrap();
        assert!(!is_minimal_alliance(&c5, &c5.all(), AllianceKind::GlobalOffensive).unwrap());
        assert!(
            is_minimal_alliance(&c5, &set(5, &[0, 1, 3]), AllianceKind::GlobalOffensive).unwrap()
        );
        assert!(
            is_minimal_alliance(&c5, &set(5, &[0, 1, 2]), AllianceKind::GlobalOffensive).is_err()
        );
        let star = gen::star(6).unwrap();
        assert!(is_minimal_alliance(&star, &set(7, &[0]), AllianceKind::GlobalOffensive).unwrap());
        assert!(matches!(
            is_minimal_alliance(&star, &set(7, &[0]), AllianceKind::GlobalStrongOffensive),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn mask_predicate_matches_set_predicate() {
        let g = gen::random_gnp(9, 0.4, 3).unwrap();
        let adj = g.masks().unwrap();
        let full = (1u64 << 9) - 1;
        for s in 1..(1u64 << 9) {
            let vs = VertexSet::from_mask(9, s);
            for kind in AllianceKind::ALL {
                assert_eq!(
                    mask_is_alliance(&adj, full, s, kind),
                    is_alliance(&g, &vs, kind).unwrap()
                );
            }
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in AllianceKind::ALL {
            assert_eq!(kind.name().parse::<AllianceKind>().unwrap(), kind);
        }
        assert!("defensive".parse::<AllianceKind>().is_err());
        assert_eq!(AllianceKind::GlobalOffensive.domination_order(4), 3);
        assert_eq!(AllianceKind::GlobalStrongOffensive.domination_order(3), 3);
    }
}
