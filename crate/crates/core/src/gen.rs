//! Named graph families, seeded random ensembles and labeled enumeration.
//!
//! Vertex numbering per family:
//!
//! * `complete(n)`: `0..n`.
//! * `complete_bipartite(a, b)`: part A is `0..a`, part B is `a..a+b`.
//! * `complete_multipartite(p1, p2, ..)`: parts are consecutive blocks.
//! * `cocktail_party(k)`: `K_{2k}` minus the matching `(2i, 2i+1)`.
//! * `star(r)`: center `0`, leaves `1..=r`.
//! * `path(n)`, `cycle(n)`: `i ~ i+1` (and `n-1 ~ 0` for cycles).
//! * `hypercube(k)`: vertices are the binary codes `0..2^k`, adjacent at Hamming distance 1.
//! * `petersen()`: outer 5-cycle `0..5`, inner pentagram `5..10` with `5+i ~ 5+(i+2)%5`,
//!   spokes `i ~ 5+i`.
//! * `prism(k)`: Cartesian product `C_k × K_2`; top cycle `0..k`, bottom `k..2k`, rungs `i ~ k+i`.
//! * `join_complete_with_empty(r, t)`: clique on `0..r`, independent `r..r+t`, every
//!   clique vertex joined to every independent vertex.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Pairing-model attempts before [`random_regular`] gives up.
pub const REGULAR_MAX_RETRIES: usize = 10_000;

pub const FAMILIES: &[&str] = &[
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "cocktail_party",
    "star",
    "path",
    "cycle",
    "hypercube",
    "petersen",
    "prism",
    "join_complete_with_empty",
];

fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub fn complete(n: usize) -> Result<Graph> {
    complete_multipartite(&vec![1; n])
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(input("complete_bipartite needs both parts nonempty"));
    }
    complete_multipartite(&[a, b])
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(input(
            "complete_multipartite needs at least one part, all nonempty",
        ));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

pub fn cocktail_party(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(input("cocktail_party needs k >= 1"));
    }
    let n = 2 * k;
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !(u % 2 == 0 && v == u + 1) {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

pub fn star(r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(input("star needs r >= 1 leaves"));
    }
    let mut b = GraphBuilder::new(r + 1);
    for leaf in 1..=r {
        b.add_edge(0, leaf)?;
    }
    Ok(b.build())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(input("path needs n >= 1"));
    }
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        b.add_edge(i - 1, i)?;
    }
    Ok(b.build())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(input("cycle needs n >= 3"));
    }
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        b.add_edge(i, (i + 1) % n)?;
    }
    Ok(b.build())
}

pub fn hypercube(k: usize) -> Result<Graph> {
    if k == 0 || k > 16 {
        return Err(input("hypercube dimension must be in 1..=16"));
    }
    let n = 1usize << k;
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for bit in 0..k {
            let v = u ^ (1 << bit);
            if u < v {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5).expect("outer cycle");
        b.add_edge(5 + i, 5 + (i + 2) % 5).expect("pentagram");
        b.add_edge(i, 5 + i).expect("spoke");
    }
    b.build()
}

pub fn prism(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(input("prism needs k >= 3"));
    }
    let mut b = GraphBuilder::new(2 * k);
    for i in 0..k {
        b.add_edge(i, (i + 1) % k)?;
        b.add_edge(k + i, k + (i + 1) % k)?;
        b.add_edge(i, k + i)?;
    }
    Ok(b.build())
}

pub fn join_complete_with_empty(r: usize, t: usize) -> Result<Graph> {
    if r == 0 || t == 0 {
        return Err(input("join_complete_with_empty needs r >= 1 and t >= 1"));
    }
    let mut b = GraphBuilder::new(r + t);
    for u in 0..r {
        for v in u + 1..r + t {
            b.add_edge(u, v)?;
        }
    }
    Ok(b.build())
}

/// Builds a named family from its positional parameters (the CLI `gen` contract).
pub fn named(family: &str, params: &[usize]) -> Result<Graph> {
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(input(format!(
                "{family} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match family {
        "complete" => {
            arity(1)?;
            complete(params[0])
        }
        "complete_bipartite" => {
            arity(2)?;
            complete_bipartite(params[0], params[1])
        }
        "complete_multipartite" => complete_multipartite(params),
        "cocktail_party" => {
            arity(1)?;
            cocktail_party(params[0])
        }
        "star" => {
            arity(1)?;
            star(params[0])
        }
        "path" => {
            arity(1)?;
            path(params[0])
        }
        "cycle" => {
            arity(1)?;
            cycle(params[0])
        }
        "hypercube" => {
            arity(1)?;
            hypercube(params[0])
        }
        "petersen" => {
            arity(0)?;
            Ok(petersen())
        }
        "prism" => {
            arity(1)?;
            prism(params[0])
        }
        "join_complete_with_empty" => {
            arity(2)?;
            join_complete_with_empty(params[0], params[1])
        }
        other => Err(input(format!(
            "unknown family '{other}'; expected one of {}",
            FAMILIES.join(", ")
        ))),
    }
}

/// Reproducible graph recipe: a named family, or a seeded random model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub family: String,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

impl GraphSpec {
    pub fn named(family: &str, params: &[usize]) -> Self {
        GraphSpec {
            family: family.to_string(),
            params: params.to_vec(),
            seed: None,
        }
    }

    /// Random families: `gnp [n, p_percent]`, `connected_gnp [n, p_percent]`,
    /// `regular [n, d]`. Everything else goes through [`named`].
    pub fn build(&self) -> Result<Graph> {
        let seed = || {
            self.seed
                .ok_or_else(|| input(format!("{} needs a seed", self.family)))
        };
        let two = || -> Result<(usize, usize)> {
            match self.params.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(input(format!("{} takes 2 parameters", self.family))),
            }
        };
        match self.family.as_str() {
            "gnp" => {
                let (n, pct) = two()?;
                random_gnp(n, percent(pct)?, seed()?)
            }
            "connected_gnp" => {
                let (n, pct) = two()?;
                random_connected_gnp(n, percent(pct)?, seed()?)
            }
            "regular" => {
                let (n, d) = two()?;
                random_regular(n, d, seed()?)
            }
            family => named(family, &self.params),
        }
    }
}

fn percent(p: usize) -> Result<f64> {
    if p > 100 {
        Err(input(format!("edge probability {p}% exceeds 100%")))
    } else {
        Ok(p as f64 / 100.0)
    }
}

/// Erdős–Rényi G(n, p); each unordered pair is drawn in lexicographic order.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// G(n, p) conditioned on connectivity: redraws with derived seeds, then as a last
/// resort overlays a random spanning path so the result is always connected.
pub fn random_connected_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(input("connected graph needs n >= 1"));
    }
    for attempt in 0..64u64 {
        let g = random_gnp(
            n,
            p,
            seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .wrapping_add(attempt),
        )?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    let g = random_gnp(n, p, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xA5A5_A5A5);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut b = GraphBuilder::new(n);
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
    }
    for w in order.windows(2) {
        b.add_edge_if_absent(w[0], w[1])?;
    }
    Ok(b.build())
}

/// Uniform-ish random `d`-regular graph via the pairing model with rejection.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n.max(1) || !(n * d).is_multiple_of(2) {
        return Err(input(format!(
            "no simple {d}-regular graph on {n} vertices (need d < n and nd even)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'retry: for _ in 0..REGULAR_MAX_RETRIES {
        points.shuffle(&mut rng);
        let mut b = GraphBuilder::new(n);
        for pair in points.chunks(2) {
            if b.add_edge(pair[0], pair[1]).is_err() {
                continue 'retry;
            }
        }
        return Ok(b.build());
    }
    Err(Error::Generation(format!(
        "pairing model failed {REGULAR_MAX_RETRIES} times for n={n}, d={d}"
    )))
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices; graph `i` contains pair
/// number `j` (lexicographic pair order) iff bit `j` of `i` is set.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "labeled enumeration is limited to n <= 11");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1u64 << pairs.len();
    (0..total).map(move |code| {
        let mut b = GraphBuilder::new(n);
        for (j, &(u, v)) in pairs.iter().enumerate() {
            if code >> j & 1 == 1 {
                b.add_edge(u, v).expect("distinct pairs");
            }
        }
        b.build()
    })
}

/// First labeled graph on `n` vertices (in enumeration order) satisfying `pred`.
pub fn search_labeled<F>(n: usize, mut pred: F) -> Option<Graph>
where
    F: FnMut(&Graph) -> bool,
{
    labeled_graphs(n).find(|g| pred(g))
}
