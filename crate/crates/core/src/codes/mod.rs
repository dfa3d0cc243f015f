//! Clique-family capacity codes.
//!
//! A family of strings over `[t]` has the pair property for clique size `s`
//! when every two members, for every `s`-subset `S` of the alphabet, differ at
//! some position where both letters lie in `S`. Equivalently, the letter pairs
//! realized at the differing positions form a graph on `[t]` with no
//! independent set of size `s`. That second form is what [`PairOracle`] tests.

mod build;
mod clique;
mod format;
mod rate;
mod search;

pub use build::{balanced_type_family, concat_product, cyclic_family, differs_inside_clique};
pub use clique::{max_clique, DenseGraph, MaxClique};
pub use rate::{jensen_holds, rate_report, RateReport};
pub use search::{
    compatibility_graph, exact_max_family, greedy_search, ExactFamily, SearchConfig,
    DEFAULT_ENUMERATION_BUDGET, DEFAULT_LIMIT,
};

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;

/// A letter of the alphabet `1..=t`.
pub type Letter = u8;

/// Largest supported alphabet; letters are tracked in 64-bit masks.
pub const MAX_ALPHABET: usize = 64;

/// A duplicate-free set of strings of common length `k` over `1..=t`,
/// kept in insertion order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StringFamily {
    t: usize,
    k: usize,
    strings: Vec<Vec<Letter>>,
}

fn check_alphabet(t: usize) -> Result<()> {
    if t == 0 || t > MAX_ALPHABET {
        return Err(Error::param(format!(
            "alphabet size t = {t} must lie in 1..={MAX_ALPHABET}"
        )));
    }
    Ok(())
}

fn check_clique_size(t: usize, s: usize) -> Result<()> {
    if s < 2 || s > t {
        return Err(Error::param(format!(
            "clique size s = {s} must satisfy 2 <= s <= t = {t}"
        )));
    }
    Ok(())
}

fn check_string(t: usize, k: usize, x: &[Letter]) -> Result<()> {
    if x.len() != k {
        return Err(Error::param(format!(
            "string has length {}, expected {k}",
            x.len()
        )));
    }
    if let Some(&bad) = x.iter().find(|&&a| a == 0 || a as usize > t) {
        return Err(Error::param(format!("letter {bad} outside 1..={t}")));
    }
    Ok(())
}

impl StringFamily {
    pub fn new(t: usize, k: usize, strings: Vec<Vec<Letter>>) -> Result<Self> {
        check_alphabet(t)?;
        if k == 0 {
            return Err(Error::param("string length k must be at least 1"));
        }
        let mut seen = HashSet::with_capacity(strings.len());
        for x in &strings {
            check_string(t, k, x)?;
            if !seen.insert(x.as_slice()) {
                return Err(Error::param(format!("duplicate string {x:?}")));
            }
        }
        Ok(StringFamily { t, k, strings })
    }

    pub fn empty(t: usize, k: usize) -> Result<Self> {
        Self::new(t, k, Vec::new())
    }

    // caller guarantees the invariants
    pub(crate) fn from_parts(t: usize, k: usize, strings: Vec<Vec<Letter>>) -> Self {
        debug_assert!(Self::new(t, k, strings.clone()).is_ok());
        StringFamily { t, k, strings }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn strings(&self) -> &[Vec<Letter>] {
        &self.strings
    }

    pub fn contains(&self, x: &[Letter]) -> bool {
        self.strings.iter().any(|y| y == x)
    }

    /// Family made of the members at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        let strings = indices
            .iter()
            .map(|&i| {
                self.strings
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::param(format!("no member at index {i}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.t, self.k, strings)
    }

    /// The first `m` members.
    pub fn truncated(&self, m: usize) -> Self {
        let mut out = self.clone();
        out.strings.truncate(m);
        out
    }
}

/// Decides the pair property for one alphabet size and clique size.
///
/// Letter pairs are numbered and a string pair is summarized by the bitmask of
/// pairs it realizes. For `t <= 7` the verdict for every mask is tabulated up
/// front; larger alphabets search for an independent `s`-set directly.
pub struct PairOracle {
    t: usize,
    s: usize,
    pair_bit: Vec<u64>,
    table: Option<Vec<bool>>,
}

const TABLE_MAX_T: usize = 7;
const EDGE_LIST_MAX: usize = 32;

/// Whether at most `budget` letters outside `removed` cover every pair.
fn cover_edges(edges: &[(u8, u8)], removed: u64, budget: usize) -> bool {
    let open = edges
        .iter()
        .find(|&&(a, b)| removed >> a & 1 == 0 && removed >> b & 1 == 0);
    match open {
        None => true,
        Some(&(a, b)) => {
            budget > 0
                && (cover_edges(edges, removed | 1 << a, budget - 1)
                    || cover_edges(edges, removed | 1 << b, budget - 1))
        }
    }
}

impl PairOracle {
    pub fn new(t: usize, s: usize) -> Result<Self> {
        Self::build(t, s, true)
    }

    /// Oracle without the verdict table, for a handful of queries.
    fn direct(t: usize, s: usize) -> Result<Self> {
        Self::build(t, s, false)
    }

    fn build(t: usize, s: usize, tabulate: bool) -> Result<Self> {
        check_alphabet(t)?;
        check_clique_size(t, s)?;
        let mut oracle = PairOracle {
            t,
            s,
            pair_bit: Vec::new(),
            table: None,
        };
        if tabulate && t <= TABLE_MAX_T {
            let npairs = t * (t - 1) / 2;
            oracle.pair_bit = vec![0u64; t * t];
            let mut idx = 0;
            for a in 0..t {
                for b in a + 1..t {
                    oracle.pair_bit[a * t + b] = 1 << idx;
                    oracle.pair_bit[b * t + a] = 1 << idx;
                    idx += 1;
                }
            }
            let table = (0..1usize << npairs)
                .map(|mask| !oracle.has_independent_set(&oracle.letter_graph_from_mask(mask as u64)))
                .collect();
            oracle.table = Some(table);
        }
        Ok(oracle)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn s(&self) -> usize {
        self.s
    }

    fn letter_graph_from_mask(&self, mask: u64) -> Vec<u64> {
        let t = self.t;
        let mut adj = vec![0u64; t];
        for a in 0..t {
            for b in a + 1..t {
                if mask & self.pair_bit[a * t + b] != 0 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        adj
    }

    fn has_independent_set(&self, adj: &[u64]) -> bool {
        fn grow(adj: &[u64], cand: u64, need: usize) -> bool {
            if need == 0 {
                return true;
            }
            if (cand.count_ones() as usize) < need {
                return false;
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if grow(adj, rest & !adj[v], need - 1) {
                    return true;
                }
            }
            false
        }
        // An independent s-set exists iff some vertex cover has at most t - s
        // letters; search whichever side is shallower.
        fn cover(adj: &[u64], budget: usize) -> bool {
            let Some(u) = adj.iter().position(|&row| row != 0) else {
                return true;
            };
            if budget == 0 {
                return false;
            }
            let v = adj[u].trailing_zeros() as usize;
            [u, v].into_iter().any(|w| {
                let mut rest = [0u64; MAX_ALPHABET];
                for (i, &row) in adj.iter().enumerate() {
                    rest[i] = if i == w { 0 } else { row & !(1 << w) };
                }
                cover(&rest[..adj.len()], budget - 1)
            })
        }
        if self.t - self.s < self.s {
            return cover(adj, self.t - self.s);
        }
        let all = if self.t == 64 { !0 } else { (1u64 << self.t) - 1 };
        grow(adj, all, self.s)
    }

    /// Pair property for two equal-length strings with letters in range.
    #[inline]
    pub fn compatible(&self, x: &[Letter], y: &[Letter]) -> bool {
        let t = self.t;
        match &self.table {
            Some(table) => {
                let mut mask = 0u64;
                for (&a, &b) in x.iter().zip(y) {
                    mask |= self.pair_bit[(a as usize - 1) * t + (b as usize - 1)];
                }
                table[mask as usize]
            }
            None if x.len() <= EDGE_LIST_MAX && self.t - self.s < self.s => {
                let mut edges = [(0u8, 0u8); EDGE_LIST_MAX];
                let mut len = 0;
                for (&a, &b) in x.iter().zip(y) {
                    if a != b {
                        edges[len] = (a - 1, b - 1);
                        len += 1;
                    }
                }
                !cover_edges(&edges[..len], 0, self.t - self.s)
            }
            None => {
                let mut adj = [0u64; MAX_ALPHABET];
                for (&a, &b) in x.iter().zip(y) {
                    if a != b {
                        let (a, b) = (a as usize - 1, b as usize - 1);
                        adj[a] |= 1 << b;
                        adj[b] |= 1 << a;
                    }
                }
                !self.has_independent_set(&adj[..t])
            }
        }
    }
}

/// Whether `x` and `y` differ, for every `s`-subset `S` of `1..=t`, at some
/// position where both letters lie in `S`.
pub fn has_pair_property(t: usize, s: usize, x: &[Letter], y: &[Letter]) -> Result<bool> {
    check_alphabet(t)?;
    check_clique_size(t, s)?;
    if x.len() != y.len() {
        return Err(Error::param(format!(
            "string lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    check_string(t, x.len(), x)?;
    check_string(t, y.len(), y)?;
    Ok(PairOracle::direct(t, s)?.compatible(x, y))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FamilyVerdict {
    pub ok: bool,
    /// Member indices `(i, j)`, `i < j`, of the first pair lacking the property.
    pub violation: Option<(usize, usize)>,
}

/// Checks the pair property on every unordered pair of members.
pub fn verify_family(family: &StringFamily, s: usize) -> Result<FamilyVerdict> {
    let oracle = PairOracle::new(family.t, s)?;
    let xs = &family.strings;
    let violation = par::find_map_first(0..xs.len(), |i| {
        (i + 1..xs.len())
            .find(|&j| !oracle.compatible(&xs[i], &xs[j]))
            .map(|j| (i, j))
    });
    Ok(FamilyVerdict {
        ok: violation.is_none(),
        violation,
    })
}
