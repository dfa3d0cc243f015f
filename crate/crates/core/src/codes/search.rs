//! Searches for large families: seeded greedy restarts and the exact maximum
//! via maximum clique in the compatibility graph.
//!
//! Greedy restart `r` shuffles all `t^k` strings with `ChaCha8Rng` seeded by
//! `seed_from_u64(seed)` on stream `r`, using `rand`'s slice shuffle, and keeps
//! every string compatible with those already accepted. The largest family wins;
//! ties go to the lowest restart index.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::clique::{max_clique_orbits, DenseGraph, Orbits};
use super::{check_alphabet, check_clique_size, Letter, PairOracle, StringFamily, MAX_ALPHABET};
use crate::error::{Error, Result};
use crate::par;

/// Default cap on `t^k` for searches that materialize every string.
pub const DEFAULT_LIMIT: usize = 20_000;

/// Default number of colored graphs `exact_rsat` may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

/// Limits, seeds and budgets shared by the searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `t^k` a code search may enumerate.
    pub limit: usize,
    /// Cap on branch-and-bound nodes for the exact code search.
    pub node_budget: Option<u64>,
    pub seed: u64,
    pub restarts: usize,
    /// Cap on colored graphs visited by the saturation-number enumeration.
    pub enumeration_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            limit: DEFAULT_LIMIT,
            node_budget: None,
            seed: 0,
            restarts: 16,
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

/// Every string of `[t]^k` in lexicographic order, flattened.
struct AllStrings {
    k: usize,
    letters: Vec<Letter>,
}

impl AllStrings {
    fn new(t: usize, k: usize, limit: usize) -> Result<Self> {
        check_alphabet(t)?;
        if k == 0 {
            return Err(Error::param("string length k must be at least 1"));
        }
        let n = (t as u128)
            .checked_pow(k as u32)
            .filter(|&n| n <= limit as u128)
            .ok_or_else(|| {
                Error::Resource(format!(
                    "t^k = {t}^{k} = {} strings exceeds the limit of {limit}",
                    (t as f64).powi(k as i32)
                ))
            })? as usize;
        let mut letters = vec![0; n * k];
        for (i, x) in letters.chunks_mut(k).enumerate() {
            let mut rest = i;
            for slot in x.iter_mut().rev() {
                *slot = (rest % t) as Letter + 1;
                rest /= t;
            }
        }
        Ok(AllStrings { k, letters })
    }

    fn len(&self) -> usize {
        self.letters.len() / self.k
    }

    #[inline]
    fn get(&self, i: usize) -> &[Letter] {
        &self.letters[i * self.k..(i + 1) * self.k]
    }
}

/// Letter permutations act on the compatibility graph, and at the root so do
/// position permutations. Two strings lie in one root orbit iff their sorted
/// letter counts agree.
struct StringOrbits<'a> {
    t: usize,
    all: &'a AllStrings,
}

impl Orbits for StringOrbits<'_> {
    fn root_key(&self, v: usize) -> Vec<u8> {
        let mut counts = vec![0u8; self.t];
        for &c in self.all.get(v) {
            counts[c as usize - 1] += 1;
        }
        counts.sort_unstable_by(|a, b| b.cmp(a));
        counts
    }

    fn labels(&self, v: usize) -> u64 {
        self.all.get(v).iter().fold(0, |m, &c| m | 1 << (c - 1))
    }

    fn rigid(&self, fixed: u64) -> bool {
        self.t - fixed.count_ones() as usize <= 1
    }

    /// Fixed letters stay, free letters are renamed by first appearance.
    fn key(&self, v: usize, fixed: u64) -> Vec<u8> {
        let mut rename = [0u8; MAX_ALPHABET];
        let mut next = 0u8;
        self.all
            .get(v)
            .iter()
            .map(|&c| {
                if fixed >> (c - 1) & 1 == 1 {
                    c
                } else {
                    let slot = &mut rename[c as usize - 1];
                    if *slot == 0 {
                        next += 1;
                        *slot = 100 + next;
                    }
                    *slot
                }
            })
            .collect()
    }
}

/// Greedy restarts with a seeded shuffle; see the module docs for the exact
/// random stream. `restarts = 0` is treated as one restart.
pub fn greedy_search(t: usize, s: usize, k: usize, cfg: &SearchConfig) -> Result<StringFamily> {
    let oracle = PairOracle::new(t, s)?;
    let all = AllStrings::new(t, k, cfg.limit)?;
    let restarts = cfg.restarts.max(1);
    let runs = par::map_collect(0..restarts, |r| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(r as u64);
        let mut perm: Vec<usize> = (0..all.len()).collect();
        perm.shuffle(&mut rng);
        let mut accepted: Vec<usize> = Vec::new();
        for i in perm {
            let x = all.get(i);
            if accepted.iter().all(|&j| oracle.compatible(x, all.get(j))) {
                accepted.push(i);
            }
        }
        accepted
    });
    let mut best = &runs[0];
    for run in &runs[1..] {
        if run.len() > best.len() {
            best = run;
        }
    }
    Ok(StringFamily::from_parts(
        t,
        k,
        best.iter().map(|&i| all.get(i).to_vec()).collect(),
    ))
}

/// Compatibility graph on all of `[t]^k`, vertices in lexicographic order.
pub fn compatibility_graph(t: usize, s: usize, k: usize, limit: usize) -> Result<DenseGraph> {
    let oracle = PairOracle::new(t, s)?;
    let all = AllStrings::new(t, k, limit)?;
    Ok(DenseGraph::from_fn(all.len(), |i, j| {
        oracle.compatible(all.get(i), all.get(j))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactFamily {
    pub size: usize,
    pub family: StringFamily,
    /// Branch-and-bound nodes expanded (diagnostic).
    pub nodes: u64,
}

/// Largest family in `[t]^k` with the pair property for `s`.
///
/// The witness is the first maximum clique in search order, seeded with the
/// lexicographic greedy clique, and is listed in lexicographic order.
pub fn exact_max_family(t: usize, s: usize, k: usize, cfg: &SearchConfig) -> Result<ExactFamily> {
    check_alphabet(t)?;
    check_clique_size(t, s)?;
    let all = AllStrings::new(t, k, cfg.limit)?;
    // Two strings realize at most k letter pairs, so when s + k <= t some
    // s-set avoids all of them and no pair is compatible. With s = t any two
    // distinct strings are compatible. Both answers match the search below.
    if s + k <= t || s == t {
        let take = if s == t { all.len() } else { 1 };
        let family = StringFamily::from_parts(t, k, (0..take).map(|i| all.get(i).to_vec()).collect());
        return Ok(ExactFamily {
            size: family.len(),
            family,
            nodes: 0,
        });
    }
    let oracle = PairOracle::new(t, s)?;
    let graph = DenseGraph::from_fn(all.len(), |i, j| {
        oracle.compatible(all.get(i), all.get(j))
    });
    let seed = graph.greedy_clique();
    let best = max_clique_orbits(&graph, &seed, cfg.node_budget, &StringOrbits { t, all: &all })?;
    let family = StringFamily::from_parts(
        t,
        k,
        best.vertices.iter().map(|&i| all.get(i).to_vec()).collect(),
    );
    Ok(ExactFamily {
        size: family.len(),
        family,
        nodes: best.nodes,
    })
}
