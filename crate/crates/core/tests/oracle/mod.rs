//! Unpruned brute force over plain adjacency matrices. Shares nothing with the
//! library except the edge list it is built from.
#![allow(dead_code, clippy::needless_range_loop)]

use alliance_core::{AllianceKind, Graph};

pub struct Naive {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

/// (global, margin)
fn shape(kind: AllianceKind) -> (bool, i64) {
    match kind {
        AllianceKind::Offensive => (false, 1),
        AllianceKind::StrongOffensive => (false, 2),
        AllianceKind::GlobalOffensive => (true, 1),
        AllianceKind::GlobalStrongOffensive => (true, 2),
    }
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl Naive {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Naive { n, adj }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self::new(g.n(), &g.edges())
    }

    fn member(&self, s: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.n];
        for &v in s {
            m[v] = true;
        }
        m
    }

    fn count(&self, v: usize, m: &[bool]) -> i64 {
        (0..self.n).filter(|&u| self.adj[v][u] && m[u]).count() as i64
    }

    fn degree(&self, v: usize) -> i64 {
        self.adj[v].iter().filter(|&&b| b).count() as i64
    }

    pub fn is_alliance(&self, s: &[usize], kind: AllianceKind) -> bool {
        if s.is_empty() {
            return false;
        }
        let (global, margin) = shape(kind);
        let m = self.member(s);
        (0..self.n).filter(|&v| !m[v]).all(|v| {
            let inside = self.count(v, &m);
            let outside = self.degree(v) - inside;
            (!global && inside == 0) || inside - outside >= margin
        })
    }

    pub fn is_connected_set(&self, s: &[usize]) -> bool {
        if s.is_empty() {
            return false;
        }
        let m = self.member(s);
        let mut seen = vec![false; self.n];
        let mut stack = vec![s[0]];
        seen[s[0]] = true;
        while let Some(v) = stack.pop() {
            for u in 0..self.n {
                if self.adj[v][u] && m[u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        s.iter().all(|&v| seen[v])
    }

    /// Smallest size, then lexicographically smallest set, satisfying `pred`.
    pub fn first<F: Fn(&[usize]) -> bool>(&self, pred: F) -> Option<(usize, Vec<usize>)> {
        (0..=self.n)
            .flat_map(|k| combinations(self.n, k))
            .find(|s| pred(s))
            .map(|s| (s.len(), s))
    }

    pub fn min_alliance(&self, kind: AllianceKind) -> (usize, Vec<usize>) {
        self.first(|s| self.is_alliance(s, kind))
            .expect("V is an alliance")
    }

    pub fn min_connected_alliance(&self, kind: AllianceKind) -> (usize, Vec<usize>) {
        self.first(|s| self.is_alliance(s, kind) && self.is_connected_set(s))
            .expect("V is a connected alliance of a connected graph")
    }

    pub fn alpha(&self) -> (usize, Vec<usize>) {
        let independent = |s: &[usize]| s.iter().all(|&a| s.iter().all(|&b| !self.adj[a][b]));
        (0..=self.n)
            .rev()
            .flat_map(|k| combinations(self.n, k))
            .find(|s| independent(s))
            .map(|s| (s.len(), s))
            .unwrap()
    }

    pub fn is_k_dominating(&self, s: &[usize], k: i64) -> bool {
        let m = self.member(s);
        (0..self.n).all(|v| m[v] || self.count(v, &m) >= k)
    }

    pub fn gamma_k(&self, k: i64) -> (usize, Vec<usize>) {
        self.first(|s| self.is_k_dominating(s, k)).unwrap()
    }

    pub fn gamma_c(&self) -> (usize, Vec<usize>) {
        self.first(|s| self.is_k_dominating(s, 1) && self.is_connected_set(s))
            .unwrap()
    }

    /// Minimal by definition: no proper nonempty subset is an alliance.
    pub fn is_minimal(&self, s: &[usize], kind: AllianceKind) -> bool {
        self.is_alliance(s, kind)
            && (1..(1u32 << s.len()) - 1).all(|mask| {
                let sub: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                !self.is_alliance(&sub, kind)
            })
    }

    pub fn minimal_alliances(
        &self,
        kind: AllianceKind,
        connected_complement: bool,
    ) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (1..=self.n)
            .flat_map(|k| combinations(self.n, k))
            .filter(|s| self.is_minimal(s, kind))
            .filter(|s| {
                if !connected_complement {
                    return true;
                }
                let rest: Vec<usize> = (0..self.n).filter(|v| !s.contains(v)).collect();
                self.is_connected_set(&rest)
            })
            .collect();
        out.sort();
        out
    }

    /// Floyd–Warshall; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        const INF: usize = usize::MAX / 4;
        let n = self.n;
        let mut d = vec![vec![INF; n]; n];
        for v in 0..n {
            d[v][v] = 0;
            for u in 0..n {
                if self.adj[v][u] {
                    d[v][u] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        let max = d.iter().flatten().copied().max()?;
        (max < INF).then_some(max)
    }
}
