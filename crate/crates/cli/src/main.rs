use std::io::{ErrorKind, Read, Write};
use std::ops::Range;
use std::path::PathBuf;
use std::process::ExitCode;

use alliance_core::bounds::{evaluate_profile, tightness_survey, BoundId, GraphProfile};
use alliance_core::constructions::maxcut_refined_alliance_with;
use alliance_core::gen::{self, GraphSpec};
use alliance_core::io::{parse_edge_list_with, write_edge_list_with};
use alliance_core::solvers::{min_alliance_with, min_connected_alliance_with, SolveOptions};
use alliance_core::{
    check_alliance, independent_complement_alliance, AllianceKind, BaseSet, CutMode,
    EdgeListOptions, Error, Graph, Limits, ReportDocument, Result, VertexSet,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Writes to stdout; a closed pipe (`| head`) ends the process quietly.
fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! out {
    ($($arg:tt)*) => { emit(&format!($($arg)*)) };
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(&format!("{}\n", format_args!($($arg)*))) };
}

/// Exit status when `bounds` finds a theorem violated.
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "alliance",
    version,
    about = "Offensive alliances in small graphs"
)]
struct Cli {
    /// Read and print vertex ids starting at 1 instead of 0.
    #[arg(long, global = true)]
    one_indexed: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact minimum alliance with a canonical witness.
    Solve {
        #[arg(long)]
        kind: AllianceKind,
        /// Minimize over alliances that induce a connected subgraph (global kinds).
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        json: bool,
        /// Edge-list file; standard input when omitted or '-'.
        file: Option<PathBuf>,
    },
    /// The full bound catalog as JSON; VIOLATION lines go to stderr.
    Bounds {
        /// Emit the whole report (parameters and alliance witnesses), not just the bounds.
        #[arg(long)]
        report: bool,
        file: Option<PathBuf>,
    },
    /// Checks one set against an alliance predicate.
    Check {
        #[arg(long)]
        kind: AllianceKind,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        file: Option<PathBuf>,
    },
    /// Builds a witness the way an upper-bound proof does.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        strong: bool,
        /// Use local search instead of an exact cut.
        #[arg(long)]
        local_search: bool,
        file: Option<PathBuf>,
    },
    /// Prints a generated graph as an edge list.
    Gen {
        /// complete, complete_bipartite, complete_multipartite, cocktail_party, star, path,
        /// cycle, hypercube, petersen, prism, join_complete_with_empty, gnp, connected_gnp, regular.
        family: String,
        params: Vec<usize>,
        /// Seed for the random families (gnp and connected_gnp take n and p in percent).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Tallies how often each bound holds and is tight over an ensemble.
    Survey {
        /// `family:p1,p2,...`; parameters may be ranges `a..b` or `a..=b`; `labeled:n`
        /// enumerates every labeled graph on n vertices.
        #[arg(long)]
        ensemble: String,
        /// Seed range `a..b` (half-open) or `a..=b`.
        #[arg(long, default_value = "0..1")]
        seeds: String,
        /// Comma-separated bound ids to keep.
        #[arg(long, value_delimiter = ',')]
        bounds: Vec<BoundId>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    IndependentComplement,
    Independent,
    Dominating,
    TwoDominating,
}

fn read_graph(file: Option<&PathBuf>, opts: EdgeListOptions) -> Result<Graph> {
    let text = match file {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("stdin: {e}")))?;
            s
        }
    };
    parse_edge_list_with(&text, opts)
}

struct Ids {
    shift: usize,
}

impl Ids {
    fn out(&self, s: &VertexSet) -> Vec<usize> {
        s.iter().map(|v| v + self.shift).collect()
    }

    fn show(&self, s: &VertexSet) -> String {
        let parts: Vec<String> = self.out(s).iter().map(usize::to_string).collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

/// Parses `a..b`, `a..=b` or a single number into a half-open range.
fn parse_range(s: &str) -> Result<Range<u64>> {
    let bad = || Error::Input(format!("bad range '{s}'"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..=") {
        Ok(num(a)?..num(b)?.checked_add(1).ok_or_else(bad)?)
    } else if let Some((a, b)) = s.split_once("..") {
        Ok(num(a)?..num(b)?)
    } else {
        let a = num(s)?;
        Ok(a..a + 1)
    }
}

fn ensemble(spec: &str, seeds: Range<u64>) -> Result<Vec<Graph>> {
    let (family, params) = spec.split_once(':').unwrap_or((spec, ""));
    let ranges = params
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_range)
        .collect::<Result<Vec<_>>>()?;
    // Cartesian product of the parameter ranges, first parameter slowest.
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for r in &ranges {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                r.clone().map(move |x| {
                    let mut c = c.clone();
                    c.push(x as usize);
                    c
                })
            })
            .collect();
    }
    let random = matches!(family, "gnp" | "connected_gnp" | "regular");
    let mut out = Vec::new();
    for params in combos {
        if family == "labeled" {
            let [n] = params[..] else {
                return Err(Error::Input("labeled takes one parameter".into()));
            };
            if n > 6 {
                return Err(Error::Capacity {
                    what: "labeled ensemble",
                    limit: 6,
                    actual: n,
                });
            }
            out.extend(gen::labeled_graphs(n));
        } else if random {
            for seed in seeds.clone() {
                let spec = GraphSpec {
                    family: family.to_string(),
                    params: params.clone(),
                    seed: Some(seed),
                };
                out.push(spec.build()?);
            }
        } else {
            out.push(gen::named(family, &params)?);
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<u8> {
    let opts = EdgeListOptions {
        one_indexed: cli.one_indexed,
    };
    let ids = Ids {
        shift: usize::from(cli.one_indexed),
    };
    let limits = Limits::from_env();
    match cli.command {
        Command::Solve {
            kind,
            connected,
            json,
            file,
        } => {
            let g = read_graph(file.as_ref(), opts)?;
            let solve = SolveOptions {
                limits,
                ..SolveOptions::default()
            };
            let r = if connected {
                min_connected_alliance_with(&g, kind, &solve)?
            } else {
                min_alliance_with(&g, kind, &solve)?
            };
            if json {
                let v = json!({
                    "kind": kind,
                    "connected": connected,
                    "value": r.value,
                    "witness": ids.out(&r.witness),
                    "nodes_explored": r.nodes_explored,
                });
                outln!("{}", pretty(&v));
            } else {
                outln!(
                    "kind        {kind}{}",
                    if connected { " (connected)" } else { "" }
                );
                outln!("value       {}", r.value);
                outln!("witness     {}", ids.show(&r.witness));
                outln!("explored    {}", r.nodes_explored);
            }
            Ok(0)
        }
        Command::Bounds { report, file } => {
            let g = read_graph(file.as_ref(), opts)?;
            let profile = GraphProfile::compute(&g, &limits)?;
            let records = evaluate_profile(&profile);
            if report {
                outln!("{}", ReportDocument::from_profile(&g, &profile).to_json());
            } else {
                outln!(
                    "{}",
                    serde_json::to_string_pretty(&records).expect("records serialize")
                );
            }
            let mut status = 0;
            for r in records.iter().filter(|r| r.is_violation()) {
                eprintln!(
                    "VIOLATION {}: bound {:?}, exact {:?} ({})",
                    r.label(),
                    r.bound_value,
                    r.exact_value,
                    r.description
                );
                status = EXIT_VIOLATION;
            }
            Ok(status)
        }
        Command::Check { kind, set, file } => {
            let g = read_graph(file.as_ref(), opts)?;
            let members = set
                .iter()
                .map(|&v| {
                    v.checked_sub(ids.shift)
                        .ok_or_else(|| Error::Input("vertex 0 with --one-indexed".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            let s = VertexSet::from_members(g.n(), members)
                .map_err(|v| Error::Input(format!("vertex {} out of range", v + ids.shift)))?;
            let cert = check_alliance(&g, &s, kind)?;
            let violator = cert.violator.map(|v| {
                json!({"vertex": v.vertex + ids.shift, "inside": v.inside, "outside": v.outside})
            });
            let v = json!({
                "kind": cert.kind,
                "set": ids.out(&cert.set),
                "satisfied": cert.satisfied,
                "violator": violator,
            });
            outln!("{}", pretty(&v));
            Ok(0)
        }
        Command::Construct {
            method,
            strong,
            local_search,
            file,
        } => {
            let g = read_graph(file.as_ref(), opts)?;
            let mode = if local_search {
                CutMode::LocalSearch
            } else {
                CutMode::Auto
            };
            let w = match method {
                Method::IndependentComplement => independent_complement_alliance(&g, strong)?,
                Method::Independent => {
                    maxcut_refined_alliance_with(&g, BaseSet::Independent, strong, mode, &limits)?
                }
                Method::Dominating => {
                    maxcut_refined_alliance_with(&g, BaseSet::Dominating, strong, mode, &limits)?
                }
                Method::TwoDominating => {
                    maxcut_refined_alliance_with(&g, BaseSet::TwoDominating, strong, mode, &limits)?
                }
            };
            let v = json!({
                "construction": w.construction,
                "base": w.base,
                "kind": w.kind,
                "set": ids.out(&w.set),
                "size": w.set.len(),
                "size_bound_claimed": w.size_bound_claimed,
                "satisfied": w.certificate.satisfied,
                "note": w.note,
            });
            outln!("{}", pretty(&v));
            Ok(0)
        }
        Command::Gen {
            family,
            params,
            seed,
        } => {
            let g = GraphSpec {
                family,
                params,
                seed,
            }
            .build()?;
            out!("{}", write_edge_list_with(&g, opts));
            Ok(0)
        }
        Command::Survey {
            ensemble: spec,
            seeds,
            bounds,
            json,
        } => {
            let graphs = ensemble(&spec, parse_range(&seeds)?)?;
            let filter = (!bounds.is_empty()).then_some(bounds.as_slice());
            let table = tightness_survey(graphs, filter, &limits)?;
            if json {
                outln!(
                    "{}",
                    serde_json::to_string_pretty(&table).expect("table serializes")
                );
            } else {
                out!("{table}");
            }
            Ok(if table.violations() > 0 {
                EXIT_VIOLATION
            } else {
                0
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
