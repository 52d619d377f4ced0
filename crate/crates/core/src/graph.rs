//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Simple undirected graph with per-vertex neighbor bitsets.
///
/// Construct through [`GraphBuilder`] or [`Graph::from_edges`]; a built graph is
/// never mutated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

/// Accumulates edges, rejecting loops and duplicates.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::Input(format!(
                "edge ({u}, {v}) references a vertex outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Input(format!("self-loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(Error::Input(format!("duplicate edge ({u}, {v})")));
        }
        Ok(self)
    }

    /// Adds the edge unless it is already present. Loops are still rejected.
    pub fn add_edge_if_absent(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        if self.has_edge(u, v) {
            return Ok(self);
        }
        self.add_edge(u, v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn build(&self) -> Graph {
        let mut adj = vec![VertexSet::empty(self.n); self.n];
        for &(u, v) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph {
            n: self.n,
            m: self.edges.len(),
            adj,
        }
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    /// Order.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::Input(format!(
                "vertex {v} out of range for graph of order {}",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            Err(Error::Input(format!(
                "vertex set over universe {} used with graph of order {}",
                s.universe(),
                self.n
            )))
        } else {
            Ok(())
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Unchecked degree for hot loops; panics on an out-of-range vertex.
    #[inline]
    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// δ; zero for the null graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    /// Δ; zero for the null graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// N_S(v): neighbors of `v` that lie in `s`.
    pub fn neighbors_in(&self, v: usize, s: &VertexSet) -> Result<VertexSet> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        Ok(self.adj[v].intersection(s))
    }

    /// |N_S(v)|, unchecked.
    #[inline]
    pub fn count_in(&self, v: usize, s: &VertexSet) -> usize {
        self.adj[v].intersection_len(s)
    }

    /// Single-word adjacency rows, available when `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(VertexSet::to_mask).collect()
    }

    /// Subgraph induced by `s`, relabelled densely in increasing id order.
    ///
    /// The second component maps new ids to original ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::Input("induced subgraph of an empty set".into()));
        }
        let map: Vec<usize> = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut b = GraphBuilder::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v].intersection(s).iter() {
                let j = index[u];
                if i < j {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok((b.build(), map))
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        if !within.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for u in self.adj[v].iter() {
                if within.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    frontier.push(u);
                }
            }
        }
        seen
    }

    /// Whether `⟨s⟩` is connected. The empty set is not.
    pub fn induces_connected(&self, s: &VertexSet) -> bool {
        match s.iter().next() {
            None => false,
            Some(first) => self.reach_within(first, s).len() == s.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, &self.all()).len() == self.n
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for u in self.adj[v].iter() {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::Domain("diameter of the null graph".into()));
        }
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => {
                        return Err(Error::Domain(
                            "diameter is undefined for a disconnected graph".into(),
                        ))
                    }
                }
            }
        }
        Ok(best)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.adj[v].iter() {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// S dominates when every vertex outside S has a neighbor inside.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.is_k_dominating(s, 1)
    }

    /// Every vertex outside `s` has at least `k` neighbors in `s`.
    pub fn is_k_dominating(&self, s: &VertexSet, k: usize) -> bool {
        (0..self.n).all(|v| s.contains(v) || self.count_in(v, s) >= k)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Relabels vertices through a permutation `perm[old] = new`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v])?;
        }
        Ok(b.build())
    }
}
