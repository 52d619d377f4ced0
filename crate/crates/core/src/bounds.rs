//! The bound catalog: every inequality instantiated on a concrete graph and compared
//! against exact values.
//!
//! Identifiers `U1`–`U13` are upper bounds on alliance numbers, `L1`–`L9` lower
//! bounds, `X1`–`X3` external inequalities on classical parameters that the upper
//! bounds rely on, and `C1`–`C5` the results about connected complements and
//! connected alliances. The ids are a stable naming contract for reports and the CLI.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alliance::AllianceKind;
use crate::error::{Error, Result};
use crate::formulas as f;
use crate::graph::Graph;
use crate::params::{self, Optimum};
use crate::search::Limits;
use crate::solvers::{self, SolveOptions, SolveResult};
use crate::spectral::{laplacian_spectral_radius, SpectralResult};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundId {
    U1,
    U2,
    U3,
    U4,
    U5,
    U6,
    U7,
    U8,
    U9,
    U10,
    U11,
    U12a,
    U12b,
    U13,
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    L7,
    L8,
    L9,
    X1,
    X2,
    X3,
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl BoundId {
    pub const ALL: [BoundId; 31] = [
        BoundId::U1,
        BoundId::U2,
        BoundId::U3,
        BoundId::U4,
        BoundId::U5,
        BoundId::U6,
        BoundId::U7,
        BoundId::U8,
        BoundId::U9,
        BoundId::U10,
        BoundId::U11,
        BoundId::U12a,
        BoundId::U12b,
        BoundId::U13,
        BoundId::L1,
        BoundId::L2,
        BoundId::L3,
        BoundId::L4,
        BoundId::L5,
        BoundId::L6,
        BoundId::L7,
        BoundId::L8,
        BoundId::L9,
        BoundId::X1,
        BoundId::X2,
        BoundId::X3,
        BoundId::C1,
        BoundId::C2,
        BoundId::C3,
        BoundId::C4,
        BoundId::C5,
    ];

    pub fn description(self) -> &'static str {
        use BoundId::*;
        match self {
            U1 => "γ_o ≤ n − α (connected, n ≥ 2)",
            U2 => "γ_o ≤ ⌊(n + α)/2⌋ (connected, n ≥ 2)",
            U3 => "γ_o ≤ ⌊2n/3⌋ (connected, n ≥ 2)",
            U4 => "γ_o ≤ ⌊(γ + n)/2⌋ (connected, n ≥ 2)",
            U5 => "γ_o ≤ ⌊n(2μ − δ)/(2μ)⌋ (connected, n ≥ 2)",
            U6 => "γ_o ≤ ⌊(n + γ_c)/2⌋ (connected, n ≥ 2)",
            U7 => "γ_o ≤ ⌊(2n − Δ)/2⌋ (connected, n ≥ 2)",
            U8 => "γ_ô ≤ ⌊(n + γ₂)/2⌋ (connected)",
            U9 => "γ_ô ≤ n − α (connected, δ ≥ 2)",
            U10 => "γ_ô ≤ ⌊5n/6⌋ (connected, δ ≥ 2)",
            U11 => "γ_ô ≤ ⌊3n/4⌋ (connected, cubic)",
            U12a => "a_o ≤ ⌊2n/3⌋ (n ≥ 2)",
            U12b => "a_o ≤ ⌊(γ + n)/2⌋ (n ≥ 2)",
            U13 => "a_ô ≤ ⌊5n/6⌋ (n ≥ 3)",
            L1 => "γ_o ≥ ⌈n(δ+1)/(2Δ+δ+1)⌉ (δ odd), ⌈nδ/(2Δ+δ)⌉ (δ even) (connected, n ≥ 2)",
            L2 => "γ_ô ≥ ⌈n(δ+3)/(2Δ+δ+3)⌉ (δ odd), ⌈n(δ+2)/(2Δ+δ+2)⌉ (δ even) (connected)",
            L3 => "γ_o ≥ ⌈(3n − √(9n² − 8n − 16m))/4⌉",
            L4 => "γ_ô ≥ ⌈(3n + 1 − √(9n² − 10n − 16m + 1))/4⌉",
            L5 => "γ_o ≥ ⌈(2m + n)/(3Δ + 1)⌉",
            L6 => "γ_ô ≥ ⌈2(m + n)/(3Δ + 2)⌉",
            L7 => "γ_o ≥ ⌈(n/μ)⌈(δ+1)/2⌉⌉ (m ≥ 1)",
            L8 => "γ_ô ≥ ⌈(n/μ)(⌈δ/2⌉ + 1)⌉ (m ≥ 1)",
            L9 => "γ_k ≥ ⌈kn/(Δ + k)⌉",
            X1 => "α ≤ n(μ − δ)/μ (m ≥ 1)",
            X2 => "γ₂ ≤ 2n/3 (δ ≥ 2)",
            X3 => "γ_c ≤ n − Δ (connected)",
            C1 => "D ≤ n − |S| + 1 for every minimal global offensive alliance S with ⟨V∖S⟩ connected (connected)",
            C2 => "|S| ≥ ⌈(3n − 2)/(Δ + 3)⌉ for every minimal global offensive alliance S with ⟨V∖S⟩ connected",
            C3 => "|S| ≥ ⌈(4n − 2)/(Δ + 4)⌉ for every minimal global strong offensive alliance S with ⟨V∖S⟩ connected",
            C4 => "γ_co ≥ ⌈(2m + n + 2(D − 1)²)/(2n + Δ + 1)⌉ (connected)",
            C5 => "γ_ĉo ≥ ⌈2(m + n + (D − 1)²)/(2n + Δ + 2)⌉ (connected)",
        }
    }

    pub fn sense(self) -> Sense {
        use BoundId::*;
        match self {
            L1 | L2 | L3 | L4 | L5 | L6 | L7 | L8 | L9 | C2 | C3 | C4 | C5 => Sense::Lower,
            _ => Sense::Upper,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, fm)
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Input(format!("unknown bound id '{s}'")))
    }
}

/// Whether the bound caps the exact value from above or below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    NotApplicable,
    NotEvaluable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundRecord {
    pub id: BoundId,
    /// The `k` of an `L9` instance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub description: String,
    pub sense: Sense,
    pub hypothesis_met: bool,
    /// The bound after the ceiling or floor.
    pub bound_value: Option<i64>,
    /// The real-valued expression before rounding, where it is not rational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_real: Option<f64>,
    pub exact_value: Option<i64>,
    pub holds: Verdict,
    pub tight: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundRecord {
    fn new(id: BoundId) -> Self {
        BoundRecord {
            id,
            k: None,
            description: id.description().to_string(),
            sense: id.sense(),
            hypothesis_met: false,
            bound_value: None,
            bound_real: None,
            exact_value: None,
            holds: Verdict::NotApplicable,
            tight: Verdict::NotApplicable,
            note: None,
        }
    }

    fn unmet(id: BoundId) -> Self {
        Self::new(id)
    }

    fn judged(id: BoundId, bound: Option<i64>, exact: Option<i64>) -> Self {
        let mut r = Self::new(id);
        r.hypothesis_met = true;
        r.bound_value = bound;
        r.exact_value = exact;
        r.judge();
        r
    }

    fn judge(&mut self) {
        match (self.bound_value, self.exact_value) {
            (Some(b), Some(e)) => {
                let ok = match self.sense {
                    Sense::Upper => e <= b,
                    Sense::Lower => e >= b,
                };
                self.holds = if ok { Verdict::True } else { Verdict::False };
                self.tight = if b == e {
                    Verdict::True
                } else {
                    Verdict::False
                };
            }
            _ => {
                self.holds = Verdict::NotEvaluable;
                self.tight = Verdict::NotEvaluable;
            }
        }
    }

    fn with_real(mut self, real: Option<f64>) -> Self {
        self.bound_real = real;
        self
    }

    /// A met hypothesis with `holds = false`: a counterexample to a theorem.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && self.holds == Verdict::False
    }

    /// Short label including the `k` of `L9` records.
    pub fn label(&self) -> String {
        match self.k {
            Some(k) => format!("{}(k={k})", self.id),
            None => self.id.to_string(),
        }
    }
}

/// Exact parameters and alliance numbers of one graph, each `None` when the graph
/// exceeds the configured capacity (or the quantity is undefined).
#[derive(Clone, Debug)]
pub struct GraphProfile {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub alpha: Option<Optimum>,
    pub gamma: Option<Optimum>,
    pub gamma2: Option<Optimum>,
    pub gamma_c: Option<Optimum>,
    pub spectral: SpectralResult<f64>,
    pub offensive: Option<SolveResult>,
    pub strong_offensive: Option<SolveResult>,
    pub global_offensive: Option<SolveResult>,
    pub global_strong_offensive: Option<SolveResult>,
    pub global_connected: Option<SolveResult>,
    pub global_strong_connected: Option<SolveResult>,
    /// γ_k for the k values the catalog needs.
    pub gamma_k: BTreeMap<usize, Optimum>,
    /// Minimal global (strong) offensive alliances with connected complement.
    pub minimal_connected_complement: Option<Vec<VertexSet>>,
    pub minimal_connected_complement_strong: Option<Vec<VertexSet>>,
}

/// Capacity failures become `None`; any other error is a defect and propagates.
fn capped<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Capacity { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The k values the catalog checks for `L9`.
pub fn l9_orders(min_degree: usize) -> Vec<usize> {
    let mut ks = vec![
        1,
        2,
        AllianceKind::GlobalOffensive.domination_order(min_degree),
        AllianceKind::GlobalStrongOffensive.domination_order(min_degree),
    ];
    ks.sort_unstable();
    ks.dedup();
    ks
}

impl GraphProfile {
    pub fn compute(g: &Graph, limits: &Limits) -> Result<GraphProfile> {
        if g.n() == 0 {
            return Err(Error::Input("bounds of the null graph".into()));
        }
        let opts = SolveOptions {
            limits: *limits,
            seed_lower_bound: true,
        };
        let connected = g.is_connected();
        let exact_ok = g.n() <= limits.exact_max_n;
        let alpha = if exact_ok {
            capped(params::independence_number(g))?
        } else {
            None
        };
        let mut gamma_k = BTreeMap::new();
        for k in l9_orders(g.min_degree()) {
            if let Some(o) = capped(params::k_domination_number_with(g, k, limits))? {
                gamma_k.insert(k, o);
            }
        }
        let solve = |kind| capped(solvers::min_alliance_with(g, kind, &opts));
        let solve_connected = |kind| -> Result<Option<SolveResult>> {
            if connected {
                capped(solvers::min_connected_alliance_with(g, kind, &opts))
            } else {
                Ok(None)
            }
        };
        let enumerate = |kind| -> Result<Option<Vec<VertexSet>>> {
            capped(solvers::enumerate_minimal_alliances(
                g, kind, true, None, limits,
            ))
        };
        Ok(GraphProfile {
            n: g.n(),
            m: g.m(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            connected,
            diameter: if connected { g.diameter().ok() } else { None },
            alpha,
            gamma: gamma_k.get(&1).cloned(),
            gamma2: gamma_k.get(&2).cloned(),
            gamma_c: if connected {
                capped(params::connected_domination_number_with(g, limits))?
            } else {
                None
            },
            spectral: laplacian_spectral_radius::<f64>(g),
            offensive: solve(AllianceKind::Offensive)?,
            strong_offensive: solve(AllianceKind::StrongOffensive)?,
            global_offensive: solve(AllianceKind::GlobalOffensive)?,
            global_strong_offensive: solve(AllianceKind::GlobalStrongOffensive)?,
            global_connected: solve_connected(AllianceKind::GlobalOffensive)?,
            global_strong_connected: solve_connected(AllianceKind::GlobalStrongOffensive)?,
            gamma_k,
            minimal_connected_complement: enumerate(AllianceKind::GlobalOffensive)?,
            minimal_connected_complement_strong: enumerate(AllianceKind::GlobalStrongOffensive)?,
        })
    }

    fn value(o: &Option<SolveResult>) -> Option<i64> {
        o.as_ref().map(|r| r.value as i64)
    }

    fn param(o: &Option<Optimum>) -> Option<i64> {
        o.as_ref().map(|r| r.value as i64)
    }
}

/// Evaluates the whole catalog on `g` with default capacity limits.
pub fn evaluate_all_bounds(g: &Graph) -> Result<Vec<BoundRecord>> {
    let profile = GraphProfile::compute(g, &Limits::default())?;
    Ok(evaluate_profile(&profile))
}

/// Evaluates the catalog from a precomputed profile. Records come out in catalog order.
pub fn evaluate_profile(p: &GraphProfile) -> Vec<BoundRecord> {
    use BoundId::*;
    let n = p.n;
    let (m, dmin, dmax) = (p.m, p.min_degree, p.max_degree);
    let conn2 = p.connected && n >= 2;
    let g_o = GraphProfile::value(&p.global_offensive);
    let g_oh = GraphProfile::value(&p.global_strong_offensive);
    let alpha = GraphProfile::param(&p.alpha);
    let gamma = GraphProfile::param(&p.gamma);
    let gamma2 = GraphProfile::param(&p.gamma2);
    let gamma_c = GraphProfile::param(&p.gamma_c);
    let mu_hi = p.spectral.upper();
    let param_bound = |x: Option<i64>, op: &dyn Fn(usize) -> i64| x.map(|v| op(v as usize));

    let mut out = Vec::with_capacity(BoundId::ALL.len() + 3);
    let mut push = |cond: bool, make: &dyn Fn() -> BoundRecord, id: BoundId| {
        out.push(if cond { make() } else { BoundRecord::unmet(id) });
    };

    push(
        conn2,
        &|| BoundRecord::judged(U1, alpha.map(|a| n as i64 - a), g_o),
        U1,
    );
    push(
        conn2,
        &|| BoundRecord::judged(U2, param_bound(alpha, &|a| f::half_sum_upper(n, a)), g_o),
        U2,
    );
    push(
        conn2,
        &|| BoundRecord::judged(U3, Some(f::fraction_of_order(n, 2, 3)), g_o),
        U3,
    );
    push(
        conn2,
        &|| BoundRecord::judged(U4, param_bound(gamma, &|x| f::half_sum_upper(n, x)), g_o),
        U4,
    );
    push(
        conn2,
        &|| {
            let s = f::spectral_upper(n, dmin, mu_hi);
            BoundRecord::judged(U5, s.map(|s| s.1), g_o).with_real(s.map(|s| s.0))
        },
        U5,
    );
    push(
        conn2,
        &|| BoundRecord::judged(U6, param_bound(gamma_c, &|x| f::half_sum_upper(n, x)), g_o),
        U6,
    );
    push(
        conn2,
        &|| BoundRecord::judged(U7, Some(f::max_degree_upper(n, dmax)), g_o),
        U7,
    );
    push(
        p.connected,
        &|| BoundRecord::judged(U8, param_bound(gamma2, &|x| f::half_sum_upper(n, x)), g_oh),
        U8,
    );
    let conn_d2 = p.connected && dmin >= 2;
    push(
        conn_d2,
        &|| BoundRecord::judged(U9, alpha.map(|a| n as i64 - a), g_oh),
        U9,
    );
    push(
        conn_d2,
        &|| BoundRecord::judged(U10, Some(f::fraction_of_order(n, 5, 6)), g_oh),
        U10,
    );
    push(
        p.connected && dmin == 3 && dmax == 3,
        &|| BoundRecord::judged(U11, Some(f::fraction_of_order(n, 3, 4)), g_oh),
        U11,
    );
    let a_o = GraphProfile::value(&p.offensive);
    let a_oh = GraphProfile::value(&p.strong_offensive);
    push(
        n >= 2,
        &|| BoundRecord::judged(U12a, Some(f::fraction_of_order(n, 2, 3)), a_o),
        U12a,
    );
    push(
        n >= 2,
        &|| BoundRecord::judged(U12b, param_bound(gamma, &|x| f::half_sum_upper(n, x)), a_o),
        U12b,
    );
    push(
        n >= 3,
        &|| BoundRecord::judged(U13, Some(f::fraction_of_order(n, 5, 6)), a_oh),
        U13,
    );

    push(
        conn2,
        &|| BoundRecord::judged(L1, f::global_offensive_degree_lower(n, dmin, dmax), g_o),
        L1,
    );
    push(
        p.connected,
        &|| BoundRecord::judged(L2, Some(f::global_strong_degree_lower(n, dmin, dmax)), g_oh),
        L2,
    );
    push(
        true,
        &|| BoundRecord::judged(L3, f::global_offensive_order_size_lower(n, m).ok(), g_o),
        L3,
    );
    push(
        true,
        &|| BoundRecord::judged(L4, f::global_strong_order_size_lower(n, m).ok(), g_oh),
        L4,
    );
    push(
        true,
        &|| {
            BoundRecord::judged(
                L5,
                Some(f::global_offensive_size_degree_lower(n, m, dmax)),
                g_o,
            )
        },
        L5,
    );
    push(
        true,
        &|| {
            BoundRecord::judged(
                L6,
                Some(f::global_strong_size_degree_lower(n, m, dmax)),
                g_oh,
            )
        },
        L6,
    );
    for (id, strong, exact) in [(L7, false, g_o), (L8, true, g_oh)] {
        push(
            m >= 1,
            &|| {
                let s = f::spectral_lower(n, dmin, mu_hi, strong);
                BoundRecord::judged(id, s.map(|s| s.1), exact).with_real(s.map(|s| s.0))
            },
            id,
        );
    }
    for k in l9_orders(dmin) {
        let exact = p.gamma_k.get(&k).map(|o| o.value as i64);
        let mut r = BoundRecord::judged(L9, Some(f::k_domination_lower(n, dmax, k)), exact);
        r.k = Some(k);
        out.push(r);
    }

    let mut push = |cond: bool, make: &dyn Fn() -> BoundRecord, id: BoundId| {
        out.push(if cond { make() } else { BoundRecord::unmet(id) });
    };
    push(
        m >= 1,
        &|| {
            let s = f::spectral_independence_upper(n, dmin, mu_hi);
            BoundRecord::judged(X1, s.map(|s| s.1), alpha).with_real(s.map(|s| s.0))
        },
        X1,
    );
    push(
        dmin >= 2,
        &|| BoundRecord::judged(X2, Some(f::fraction_of_order(n, 2, 3)), gamma2),
        X2,
    );
    push(
        p.connected,
        &|| BoundRecord::judged(X3, Some(n as i64 - dmax as i64), gamma_c),
        X3,
    );

    // C1: the strongest instance is the largest qualifying S.
    push(
        conn2,
        &|| match (&p.minimal_connected_complement, p.diameter) {
            (Some(sets), Some(d)) => quantified(
                C1,
                sets.iter().map(|s| n as i64 - s.len() as i64 + 1).min(),
                d as i64,
                sets.iter().all(|s| d + s.len() <= n + 1),
            ),
            _ => BoundRecord::judged(C1, None, None),
        },
        C1,
    );
    for (id, sets, bound) in [
        (
            C2,
            &p.minimal_connected_complement,
            f::minimal_connected_complement_lower(n, dmax),
        ),
        (
            C3,
            &p.minimal_connected_complement_strong,
            f::minimal_connected_complement_lower_strong(n, dmax),
        ),
    ] {
        let rec = match sets {
            Some(sets) => {
                let smallest = sets.iter().map(|s| s.len() as i64).min();
                match smallest {
                    Some(s) => BoundRecord::judged(id, Some(bound), Some(s)),
                    None => vacuous(id, Some(bound)),
                }
            }
            None => {
                let mut r = BoundRecord::judged(id, Some(bound), None);
                r.note = Some("enumeration above capacity; not sampled".into());
                r
            }
        };
        out.push(rec);
    }
    let mut push = |cond: bool, make: &dyn Fn() -> BoundRecord, id: BoundId| {
        out.push(if cond { make() } else { BoundRecord::unmet(id) });
    };
    push(
        p.connected,
        &|| {
            let b = p.diameter.map(|d| f::global_connected_lower(n, m, dmax, d));
            BoundRecord::judged(C4, b, GraphProfile::value(&p.global_connected))
        },
        C4,
    );
    push(
        p.connected,
        &|| {
            let b = p
                .diameter
                .map(|d| f::global_connected_lower_strong(n, m, dmax, d));
            BoundRecord::judged(C5, b, GraphProfile::value(&p.global_strong_connected))
        },
        C5,
    );
    out
}

fn vacuous(id: BoundId, bound: Option<i64>) -> BoundRecord {
    let mut r = BoundRecord::new(id);
    r.hypothesis_met = true;
    r.bound_value = bound;
    r.holds = Verdict::True;
    r.note = Some("vacuous: no minimal alliance with connected complement".into());
    r
}

/// C1 is quantified over all qualifying sets; `bound` is its strongest instance.
fn quantified(id: BoundId, bound: Option<i64>, exact: i64, all_hold: bool) -> BoundRecord {
    match bound {
        None => {
            let mut r = vacuous(id, None);
            r.exact_value = Some(exact);
            r
        }
        Some(b) => {
            let mut r = BoundRecord::judged(id, Some(b), Some(exact));
            if !all_hold {
                r.holds = Verdict::False;
            }
            r
        }
    }
}

/// Per-bound tally over an ensemble.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub holds: usize,
    pub violated: usize,
    pub tight: usize,
    pub hypothesis_unmet: usize,
    pub not_evaluable: usize,
    /// Edge list and order of the smallest graph (by order, then size, then first
    /// seen) on which the bound was tight.
    pub smallest_tight: Option<(usize, Vec<(usize, usize)>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SurveyTable {
    pub graphs: usize,
    pub rows: BTreeMap<BoundId, SurveyRow>,
}

impl SurveyTable {
    pub fn violations(&self) -> usize {
        self.rows.values().map(|r| r.violated).sum()
    }
}

impl fmt::Display for SurveyTable {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fm, "graphs: {}", self.graphs)?;
        writeln!(
            fm,
            "{:<6} {:>7} {:>8} {:>7} {:>7} {:>9}  smallest tight",
            "id", "holds", "violated", "tight", "unmet", "n/eval"
        )?;
        for (id, r) in &self.rows {
            let witness = r
                .smallest_tight
                .as_ref()
                .map(|(n, e)| format!("n={n} m={}", e.len()))
                .unwrap_or_else(|| "-".into());
            writeln!(
                fm,
                "{:<6} {:>7} {:>8} {:>7} {:>7} {:>9}  {}",
                id.to_string(),
                r.holds,
                r.violated,
                r.tight,
                r.hypothesis_unmet,
                r.not_evaluable,
                witness
            )?;
        }
        Ok(())
    }
}

/// Tallies the catalog over an ensemble, optionally restricted to `filter`.
pub fn tightness_survey<I>(
    graphs: I,
    filter: Option<&[BoundId]>,
    limits: &Limits,
) -> Result<SurveyTable>
where
    I: IntoIterator<Item = Graph>,
{
    let mut table = SurveyTable::default();
    for g in graphs {
        table.graphs += 1;
        let profile = GraphProfile::compute(&g, limits)?;
        for rec in evaluate_profile(&profile) {
            if filter.is_some_and(|f| !f.contains(&rec.id)) {
                continue;
            }
            let row = table.rows.entry(rec.id).or_default();
            if !rec.hypothesis_met {
                row.hypothesis_unmet += 1;
                continue;
            }
            match rec.holds {
                Verdict::True => row.holds += 1,
                Verdict::False => row.violated += 1,
                _ => row.not_evaluable += 1,
            }
            if rec.tight == Verdict::True {
                row.tight += 1;
                let better = row
                    .smallest_tight
                    .as_ref()
                    .is_none_or(|(n, e)| (g.n(), g.m()) < (*n, e.len()));
                if better {
                    row.smallest_tight = Some((g.n(), g.edges()));
                }
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn record(recs: &[BoundRecord], id: BoundId) -> &BoundRecord {
        recs.iter().find(|r| r.id == id).unwrap()
    }

    #[test]
    fn cube_examples() {
        let recs = evaluate_all_bounds(&gen::hypercube(3).unwrap()).unwrap();
        let l5 = record(&recs, BoundId::L5);
        assert_eq!(
            (l5.bound_value, l5.exact_value, l5.tight),
            (Some(4), Some(4), Verdict::True)
        );
        let l6 = record(&recs, BoundId::L6);
        assert_eq!((l6.bound_value, l6.tight), (Some(4), Verdict::True));
        let l3 = record(&recs, BoundId::L3);
        assert_eq!((l3.bound_value, l3.tight), (Some(2), Verdict::False));
        let c1 = record(&recs, BoundId::C1);
        assert_eq!(c1.holds, Verdict::True);
        assert!(c1.note.as_deref().unwrap().starts_with("vacuous"));
        assert!(recs.iter().all(|r| !r.is_violation()));
    }

    #[test]
    fn star_gates_strong_bounds() {
        let recs = evaluate_all_bounds(&gen::star(6).unwrap()).unwrap();
        for id in [BoundId::U9, BoundId::U10] {
            let r = record(&recs, id);
            assert!(!r.hypothesis_met);
            assert_eq!(r.holds, Verdict::NotApplicable);
        }
    }

    #[test]
    fn singleton_gates_upper_bounds() {
        let recs = evaluate_all_bounds(&Graph::empty(1)).unwrap();
        assert!(!record(&recs, BoundId::U1).hypothesis_met);
        assert!(recs.iter().all(|r| !r.is_violation()));
    }

    #[test]
    fn catalog_order_is_fixed() {
        let recs = evaluate_all_bounds(&gen::petersen()).unwrap();
        let mut ids: Vec<BoundId> = recs.iter().map(|r| r.id).collect();
        ids.dedup();
        assert_eq!(ids, BoundId::ALL.to_vec());
    }

    #[test]
    fn ids_parse() {
        for id in BoundId::ALL {
            assert_eq!(id.to_string().parse::<BoundId>().unwrap(), id);
        }
        assert!("U99".parse::<BoundId>().is_err());
    }

    #[test]
    fn survey_on_empty_ensemble() {
        let t = tightness_survey(std::iter::empty(), None, &Limits::default()).unwrap();
        assert_eq!(t.graphs, 0);
        assert!(t.rows.is_empty());
    }
}
