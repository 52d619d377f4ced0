//! Versioned JSON report of everything known about one graph.
//!
//! Field order is fixed by the struct definitions and every witness is canonical, so
//! two runs on the same input serialize to identical bytes. Loading a report rebuilds
//! the graph from its edge list and re-verifies every witness against its predicate.

use serde::{Deserialize, Serialize};

use crate::alliance::{check_alliance, AllianceKind};
use crate::bounds::{evaluate_profile, BoundRecord, GraphProfile};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::Optimum;
use crate::search::Limits;
use crate::solvers::SolveResult;
use crate::vertex_set::VertexSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diameter: Option<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witnessed {
    pub value: usize,
    pub witness: Vec<usize>,
}

impl From<&Optimum> for Witnessed {
    fn from(o: &Optimum) -> Self {
        Witnessed {
            value: o.value,
            witness: o.witness.to_vec(),
        }
    }
}

/// Classical parameters; `None` means above capacity (or undefined, for γ_c on a
/// disconnected graph).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    pub alpha: Option<Witnessed>,
    pub gamma: Option<Witnessed>,
    pub gamma2: Option<Witnessed>,
    pub gamma_c: Option<Witnessed>,
    pub mu: f64,
    pub mu_tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AllianceEntry {
    pub kind: AllianceKind,
    /// Minimum over alliances inducing a connected subgraph.
    pub connected: bool,
    pub value: Option<usize>,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub graph: GraphSummary,
    pub parameters: Parameters,
    pub alliances: Vec<AllianceEntry>,
    pub bounds: Vec<BoundRecord>,
}

fn entry(kind: AllianceKind, connected: bool, r: &Option<SolveResult>) -> AllianceEntry {
    AllianceEntry {
        kind,
        connected,
        value: r.as_ref().map(|r| r.value),
        witness: r.as_ref().map(|r| r.witness.to_vec()),
    }
}

impl ReportDocument {
    pub fn build(g: &Graph, limits: &Limits) -> Result<ReportDocument> {
        let p = GraphProfile::compute(g, limits)?;
        Ok(Self::from_profile(g, &p))
    }

    pub fn from_profile(g: &Graph, p: &GraphProfile) -> ReportDocument {
        use AllianceKind::*;
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            graph: GraphSummary {
                n: p.n,
                m: p.m,
                min_degree: p.min_degree,
                max_degree: p.max_degree,
                connected: p.connected,
                diameter: p.diameter,
                edges: g.edges(),
            },
            parameters: Parameters {
                alpha: p.alpha.as_ref().map(Witnessed::from),
                gamma: p.gamma.as_ref().map(Witnessed::from),
                gamma2: p.gamma2.as_ref().map(Witnessed::from),
                gamma_c: p.gamma_c.as_ref().map(Witnessed::from),
                mu: p.spectral.mu,
                mu_tolerance: p.spectral.tolerance,
            },
            alliances: vec![
                entry(Offensive, false, &p.offensive),
                entry(StrongOffensive, false, &p.strong_offensive),
                entry(GlobalOffensive, false, &p.global_offensive),
                entry(GlobalStrongOffensive, false, &p.global_strong_offensive),
                entry(GlobalOffensive, true, &p.global_connected),
                entry(GlobalStrongOffensive, true, &p.global_strong_connected),
            ],
            bounds: evaluate_profile(p),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Parses and re-verifies a report. Returns the rebuilt graph alongside it.
    pub fn from_json(text: &str) -> Result<(ReportDocument, Graph)> {
        let doc: ReportDocument =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("report: {e}")))?;
        let g = doc.verify()?;
        Ok((doc, g))
    }

    /// Rebuilds the graph and checks every witness; returns the graph.
    pub fn verify(&self) -> Result<Graph> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Input(format!(
                "report schema {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let g = Graph::from_edges(self.graph.n, &self.graph.edges)?;
        if g.m() != self.graph.m {
            return Err(Error::Input(
                "edge count does not match the edge list".into(),
            ));
        }
        let set = |members: &[usize]| {
            VertexSet::from_members(g.n(), members.iter().copied())
                .map_err(|v| Error::Input(format!("witness vertex {v} out of range")))
        };
        let bad = |what: &str| Err(Error::Input(format!("{what} witness does not verify")));

        let params = &self.parameters;
        let checks = [
            ("alpha", &params.alpha),
            ("gamma", &params.gamma),
            ("gamma2", &params.gamma2),
            ("gamma_c", &params.gamma_c),
        ];
        for (what, w) in checks {
            let Some(w) = w else { continue };
            let s = set(&w.witness)?;
            let ok = match what {
                "alpha" => g.is_independent(&s),
                "gamma" => g.is_dominating(&s),
                "gamma2" => g.is_k_dominating(&s, 2),
                _ => g.is_dominating(&s) && g.induces_connected(&s),
            };
            if s.len() != w.value || !ok {
                return bad(what);
            }
        }
        for a in &self.alliances {
            match (&a.value, &a.witness) {
                (Some(value), Some(w)) => {
                    let s = set(w)?;
                    let ok = s.len() == *value
                        && check_alliance(&g, &s, a.kind)?.satisfied
                        && (!a.connected || g.induces_connected(&s));
                    if !ok {
                        return bad(a.kind.name());
                    }
                }
                (None, None) => {}
                _ => return bad(a.kind.name()),
            }
        }
        Ok(g)
    }
}
