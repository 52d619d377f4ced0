//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if
//! any criterion fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use alliance_core::bounds::{evaluate_all_bounds, BoundId, BoundRecord, Verdict};
use alliance_core::constructions::maxcut_refined_alliance_with;
use alliance_core::formulas::{
    half_sum_upper, minimal_connected_complement_lower, minimal_connected_complement_lower_strong,
};
use alliance_core::params::{independence_number, k_domination_number};
use alliance_core::{
    check_alliance, enumerate_minimal_global_alliances, gen, independent_complement_alliance,
    laplacian_spectral_radius, min_alliance, min_connected_alliance, AllianceKind, BaseSet,
    CutMode, Graph, Limits, WitnessReport,
};
use oracle::Naive;

use AllianceKind::*;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The 1024 labeled graphs on 5 vertices and 500 seeded connected random graphs
/// with 6 <= n <= 12.
fn soundness_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = gen::labeled_graphs(5).collect();
    for seed in 0..500u64 {
        let n = 6 + (seed % 7) as usize;
        let p = 0.2 + 0.1 * ((seed / 7) % 6) as f64;
        graphs.push(gen::random_connected_gnp(n, p, seed).unwrap());
    }
    graphs
}

/// 200 seeded random graphs with 1 <= n <= 9, not necessarily connected.
fn small_random() -> Vec<Graph> {
    (0..200u64)
        .map(|seed| {
            let n = 1 + (seed % 9) as usize;
            let p = 0.15 + 0.1 * ((seed / 9) % 7) as f64;
            gen::random_gnp(n, p, 1000 + seed).unwrap()
        })
        .collect()
}

fn record(recs: &[BoundRecord], id: BoundId) -> &BoundRecord {
    recs.iter().find(|r| r.id == id).expect("catalog entry")
}

fn criterion_1() -> Outcome {
    let mut checks = 0;
    let mut timed = |what: &str, f: &dyn Fn() -> Result<(), String>| -> Result<(), String> {
        let start = Instant::now();
        f()?;
        checks += 1;
        let took = start.elapsed();
        ensure(took < Duration::from_secs(1), || {
            format!("{what} took {took:?}")
        })
    };
    let value = |g: &Graph, kind| min_alliance(g, kind).unwrap().value;
    let cp = gen::cocktail_party(3).unwrap();
    timed("K6-F", &|| {
        let got = (
            value(&cp, GlobalOffensive),
            value(&cp, GlobalStrongOffensive),
            independence_number(&cp).unwrap().value,
            k_domination_number(&cp, 1).unwrap().value,
            k_domination_number(&cp, 2).unwrap().value,
        );
        ensure(got == (4, 4, 2, 2, 2), || format!("K6-F: {got:?}"))?;
        let mu = laplacian_spectral_radius::<f64>(&cp).mu;
        ensure((mu - 6.0).abs() <= 1e-6, || format!("μ(K6-F) = {mu}"))
    })?;
    for r in [6, 7, 8] {
        timed("star", &|| {
            let s = gen::star(r).unwrap();
            let got = (value(&s, GlobalOffensive), value(&s, GlobalStrongOffensive));
            ensure(got == (1, r), || format!("K1,{r}: {got:?}"))
        })?;
    }
    timed("Q3", &|| {
        let q = gen::hypercube(3).unwrap();
        let got = (value(&q, GlobalOffensive), value(&q, GlobalStrongOffensive));
        ensure(got == (4, 4), || format!("Q3: {got:?}"))
    })?;
    timed("K3,3", &|| {
        let v = value(&gen::complete_bipartite(3, 3).unwrap(), GlobalOffensive);
        ensure(v == 3, || format!("K3,3: {v}"))
    })?;
    timed("K3xK2", &|| {
        let v = value(&gen::prism(3).unwrap(), GlobalStrongOffensive);
        ensure(v == 4, || format!("K3xK2: {v}"))
    })?;
    timed("Petersen", &|| {
        let p = gen::petersen();
        let mu = laplacian_spectral_radius::<f64>(&p).mu;
        ensure((mu - 5.0).abs() <= 1e-6, || format!("μ(Petersen) = {mu}"))?;
        let got = (value(&p, GlobalOffensive), value(&p, GlobalStrongOffensive));
        ensure(got == (4, 6), || format!("Petersen: {got:?}"))
    })?;
    for t in [8, 10] {
        timed("Γ3,t", &|| {
            let g = gen::join_complete_with_empty(3, t).unwrap();
            let got = (
                min_connected_alliance(&g, GlobalOffensive).unwrap().value,
                min_connected_alliance(&g, GlobalStrongOffensive)
                    .unwrap()
                    .value,
            );
            ensure(got == (3, 3), || format!("Γ3,{t}: {got:?}"))
        })?;
    }
    Ok(format!("{checks} graphs, each under 1 s"))
}

fn criterion_2(corpus: &[Graph]) -> Outcome {
    let mut met = 0usize;
    for g in corpus {
        let recs = evaluate_all_bounds(g).map_err(|e| e.to_string())?;
        for r in &recs {
            if r.hypothesis_met {
                met += 1;
                ensure(r.holds == Verdict::True, || {
                    format!(
                        "{} holds={:?} on n={} edges {:?}",
                        r.label(),
                        r.holds,
                        g.n(),
                        g.edges()
                    )
                })?;
            }
        }
    }
    Ok(format!(
        "{} graphs, {met} applicable records, 0 violations",
        corpus.len()
    ))
}

fn criterion_3() -> Outcome {
    let graphs: Vec<Graph> = (1..=5)
        .flat_map(gen::labeled_graphs)
        .chain(small_random())
        .collect();
    for g in &graphs {
        let naive = Naive::from_graph(g);
        for kind in AllianceKind::ALL {
            let r = min_alliance(g, kind).map_err(|e| e.to_string())?;
            let expected = naive.min_alliance(kind);
            ensure((r.value, r.witness.to_vec()) == expected, || {
                format!(
                    "{kind} on {:?}: got {} {}, oracle {expected:?}",
                    g.edges(),
                    r.value,
                    r.witness
                )
            })?;
        }
    }
    Ok(format!(
        "{} graphs x 4 kinds match the oracle",
        graphs.len()
    ))
}

fn valid(g: &Graph, w: &WitnessReport, bound: i64, what: &str) -> Result<(), String> {
    let cert = check_alliance(g, &w.set, w.kind).map_err(|e| e.to_string())?;
    ensure(cert.satisfied, || {
        format!("{what}: {} fails on {:?}", w.set, g.edges())
    })?;
    ensure(w.set.len() as i64 <= bound, || {
        format!("{what}: |{}| > {bound} on {:?}", w.set, g.edges())
    })
}

fn criterion_4(corpus: &[Graph]) -> Outcome {
    let limits = Limits::default();
    let mut built = 0usize;
    for g in corpus {
        let n = g.n();
        let alpha = independence_number(g).unwrap().value;
        let gamma = k_domination_number(g, 1).unwrap().value;
        let gamma2 = k_domination_number(g, 2).unwrap().value;
        let dmin = g.min_degree();
        for strong in [false, true] {
            if dmin >= if strong { 2 } else { 1 } {
                let w = independent_complement_alliance(g, strong).map_err(|e| e.to_string())?;
                valid(g, &w, (n - alpha) as i64, "independent complement")?;
                built += 1;
            }
        }
        for mode in [CutMode::Auto, CutMode::LocalSearch] {
            for (base, strong, p) in [
                (BaseSet::Independent, false, alpha),
                (BaseSet::Dominating, false, gamma),
                (BaseSet::TwoDominating, true, gamma2),
            ] {
                let w = maxcut_refined_alliance_with(g, base, strong, mode, &limits)
                    .map_err(|e| e.to_string())?;
                valid(
                    g,
                    &w,
                    half_sum_upper(n, p),
                    &format!("{base:?} base, {mode:?} cut"),
                )?;
                built += 1;
            }
        }
    }
    Ok(format!("{built} witnesses verified"))
}

fn criterion_5() -> Outcome {
    let tight = |g: &Graph, ids: &[BoundId], name: &str| -> Result<Vec<BoundRecord>, String> {
        let recs = evaluate_all_bounds(g).map_err(|e| e.to_string())?;
        for &id in ids {
            let r = record(&recs, id);
            ensure(r.hypothesis_met && r.tight == Verdict::True, || {
                format!(
                    "{id} not tight on {name}: bound {:?}, exact {:?}",
                    r.bound_value, r.exact_value
                )
            })?;
        }
        Ok(recs)
    };
    let q3 = tight(
        &gen::hypercube(3).unwrap(),
        &[BoundId::L5, BoundId::L6, BoundId::L1],
        "Q3",
    )?;
    let l3 = record(&q3, BoundId::L3);
    ensure(
        l3.bound_value == Some(2) && l3.exact_value == Some(4),
        || format!("L3 on Q3: {:?} vs {:?}", l3.bound_value, l3.exact_value),
    )?;
    tight(&gen::petersen(), &[BoundId::L7, BoundId::L8], "Petersen")?;
    tight(
        &gen::complete_bipartite(3, 3).unwrap(),
        &[BoundId::L1],
        "K3,3",
    )?;
    for t in [8, 10] {
        tight(
            &gen::join_complete_with_empty(3, t).unwrap(),
            &[BoundId::C4, BoundId::C5],
            "Γ3,t",
        )?;
    }
    let ids = [
        BoundId::U1,
        BoundId::U2,
        BoundId::U3,
        BoundId::U4,
        BoundId::U5,
    ];
    let cp = tight(&gen::cocktail_party(3).unwrap(), &ids, "K6-F")?;
    ensure(
        ids.iter().all(|&id| record(&cp, id).bound_value == Some(4)),
        || "U1-U5 on K6-F are not all 4".into(),
    )?;
    Ok("L1, L5, L6 on Q3 (L3 = 2); L7, L8 on Petersen; L1 on K3,3; C4, C5 on Γ3,8 and Γ3,10; U1-U5 = 4 on K6-F".into())
}

fn criterion_6(corpus: &[Graph]) -> Outcome {
    let q3 = gen::hypercube(3).unwrap();
    let found = enumerate_minimal_global_alliances(&q3, GlobalOffensive, true, None)
        .map_err(|e| e.to_string())?;
    ensure(found.is_empty(), || {
        format!("Q3 has qualifying sets {found:?}")
    })?;

    let mut sets = 0usize;
    for g in corpus.iter().filter(|g| g.n() <= 9) {
        let (n, dmax) = (g.n(), g.max_degree());
        let naive = Naive::from_graph(g);
        let diameter = naive.diameter();
        for (kind, lower) in [
            (GlobalOffensive, minimal_connected_complement_lower(n, dmax)),
            (
                GlobalStrongOffensive,
                minimal_connected_complement_lower_strong(n, dmax),
            ),
        ] {
            let found = enumerate_minimal_global_alliances(g, kind, true, None)
                .map_err(|e| e.to_string())?;
            for s in &found {
                let members = s.to_vec();
                let rest: Vec<usize> = (0..n).filter(|v| !s.contains(*v)).collect();
                ensure(
                    naive.is_minimal(&members, kind) && naive.is_connected_set(&rest),
                    || format!("{s} is not a qualifying {kind} set on {:?}", g.edges()),
                )?;
                ensure(s.len() as i64 >= lower, || {
                    format!("|{s}| < {lower} for {kind} on {:?}", g.edges())
                })?;
                if kind == GlobalOffensive {
                    if let Some(d) = diameter {
                        ensure(d + s.len() <= n + 1, || {
                            format!("D = {d} > n - |{s}| + 1 on {:?}", g.edges())
                        })?;
                    }
                }
                sets += 1;
            }
        }
    }
    Ok(format!("Q3 has none; {sets} qualifying sets checked"))
}

fn criterion_7() -> Outcome {
    for r in 6..=10 {
        let recs = evaluate_all_bounds(&gen::star(r).unwrap()).map_err(|e| e.to_string())?;
        for id in [BoundId::U9, BoundId::U10] {
            let rec = record(&recs, id);
            ensure(
                !rec.hypothesis_met && rec.holds == Verdict::NotApplicable,
                || {
                    format!(
                        "{id} on K1,{r}: met={} holds={:?}",
                        rec.hypothesis_met, rec.holds
                    )
                },
            )?;
        }
    }
    Ok("U9, U10 not applicable on K1,r for r = 6..10".into())
}

fn run_bounds(input: &str, extra: &[&str]) -> Result<Vec<u8>, String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_alliance"))
        .arg("bounds")
        .args(extra)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        String::from_utf8_lossy(&out.stderr).into_owned()
    })?;
    Ok(out.stdout)
}

fn criterion_8() -> Outcome {
    let inputs = [
        alliance_core::write_edge_list(&gen::petersen()),
        alliance_core::write_edge_list(&gen::cocktail_party(3).unwrap()),
        alliance_core::write_edge_list(&gen::random_connected_gnp(11, 0.35, 42).unwrap()),
    ];
    for input in &inputs {
        for extra in [&[][..], &["--report"][..]] {
            let a = run_bounds(input, extra)?;
            let b = run_bounds(input, extra)?;
            ensure(a == b, || format!("outputs differ for {extra:?}"))?;
        }
    }
    Ok(format!(
        "{} inputs, catalog and report byte-identical across runs",
        inputs.len()
    ))
}

fn main() {
    let corpus = soundness_corpus();
    let criteria: Vec<Criterion> = vec![
        ("known values", Box::new(criterion_1)),
        ("bound soundness sweep", Box::new(|| criterion_2(&corpus))),
        ("oracle equivalence", Box::new(criterion_3)),
        ("construction validity", Box::new(|| criterion_4(&corpus))),
        ("tightness", Box::new(criterion_5)),
        (
            "connected complements",
            Box::new(|| {
                let small: Vec<Graph> = (1..=5)
                    .flat_map(gen::labeled_graphs)
                    .chain(small_random())
                    .chain(corpus.iter().cloned())
                    .collect();
                criterion_6(&small)
            }),
        ),
        ("hypothesis gating", Box::new(criterion_7)),
        ("determinism", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{took:.1}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{took:.1}s] {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
