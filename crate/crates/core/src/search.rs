//! Subset enumeration shared by the exact solvers.

use std::ops::ControlFlow;

use crate::error::{Error, Result};

/// Exact-search guards. Defaults keep the full test corpus fast; both can be raised
/// with `ALLIANCE_MAX_EXACT_N` / `ALLIANCE_MAX_ENUM_N` at the caller's risk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted by the cardinality-ascending solvers.
    pub exact_max_n: usize,
    /// Largest order accepted by full minimal-alliance enumeration.
    pub enumerate_max_n: usize,
}

pub const DEFAULT_EXACT_MAX_N: usize = 24;
pub const DEFAULT_ENUMERATE_MAX_N: usize = 16;
/// Single-word bitsets bound every exact routine regardless of configuration.
pub const HARD_MAX_N: usize = 64;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exact_max_n: DEFAULT_EXACT_MAX_N,
            enumerate_max_n: DEFAULT_ENUMERATE_MAX_N,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
                .map_or(default, |v| v.min(HARD_MAX_N))
        };
        Limits {
            exact_max_n: read("ALLIANCE_MAX_EXACT_N", DEFAULT_EXACT_MAX_N),
            enumerate_max_n: read("ALLIANCE_MAX_ENUM_N", DEFAULT_ENUMERATE_MAX_N).min(26),
        }
    }

    pub(crate) fn guard_exact(&self, what: &'static str, n: usize) -> Result<()> {
        guard(what, self.exact_max_n.min(HARD_MAX_N), n)
    }

    pub(crate) fn guard_enumerate(&self, what: &'static str, n: usize) -> Result<()> {
        guard(what, self.enumerate_max_n.min(26), n)
    }
}

pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Capacity {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Visits every `k`-subset of `0..n` as a mask, in lexicographic order of the sorted
/// member lists. The first subset accepted by `visit` is therefore the
/// lexicographically smallest one.
pub(crate) fn for_each_k_subset<B>(
    n: usize,
    k: usize,
    mut visit: impl FnMut(u64) -> ControlFlow<B>,
) -> Option<B> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1u64 << i);
        if let ControlFlow::Break(b) = visit(mask) {
            return Some(b);
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Whether `⟨s⟩` is connected, for single-word adjacency. Empty is not connected.
#[inline]
pub(crate) fn mask_connected(adj: &[u64], s: u64) -> bool {
    if s == 0 {
        return false;
    }
    let mut seen = s & s.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut rest = frontier;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v];
        }
        next &= s & !seen;
        seen |= next;
        frontier = next;
    }
    seen == s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::mask_lex_less;

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        for_each_k_subset::<()>(5, 2, |m| {
            seen.push(m);
            ControlFlow::Continue(())
        });
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| mask_lex_less(w[0], w[1])));
        assert_eq!(seen[0], 0b00011);
        assert_eq!(seen[1], 0b00101);

        let mut count = 0;
        for_each_k_subset::<()>(4, 0, |m| {
            assert_eq!(m, 0);
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);
        assert_eq!(
            for_each_k_subset::<()>(3, 4, |_| ControlFlow::Continue(())),
            None
        );
    }

    #[test]
    fn connectivity_of_masks() {
        // path 0-1-2-3
        let adj = [0b0010, 0b0101, 0b1010, 0b0100];
        assert!(mask_connected(&adj, 0b1111));
        assert!(!mask_connected(&adj, 0b1011));
        assert!(mask_connected(&adj, 0b0001));
        assert!(!mask_connected(&adj, 0));
    }
}
