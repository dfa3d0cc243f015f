//! Maximum clique by bitset branch and bound with greedy coloring bounds.
//!
//! Candidate sets are colored greedily in vertex-index order; a branch is cut
//! when the clique size plus the number of colors left cannot beat the
//! incumbent. The root is split into independent top-level branches so they
//! can run on the rayon pool. Sequential and parallel runs return the same
//! clique: the first maximum clique in the sequential search order, where a
//! caller-supplied seed clique counts as found before any branch.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use crate::bitset::words_for;
use crate::error::{Error, Result};
use crate::par;

/// Undirected graph stored as dense adjacency bit rows.
#[derive(Clone, Debug)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl DenseGraph {
    /// Builds the graph from a symmetric predicate; rows are filled in parallel.
    pub fn from_fn<F>(n: usize, adjacent: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        let words = words_for(n);
        // the predicate is evaluated once per pair, above the diagonal
        let upper = par::map_collect(0..n, |i| {
            let mut row = vec![0u64; words];
            for j in i + 1..n {
                if adjacent(i, j) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        });
        let mut rows: Vec<u64> = upper.into_iter().flatten().collect();
        for i in 0..n {
            for wi in i / 64..words {
                let mut w = rows[i * words + wi];
                while w != 0 {
                    let j = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    rows[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        DenseGraph { n, words, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && self.adjacent(u, v)))
    }

    /// Greedy clique taking the lowest-index compatible vertex each step.
    pub fn greedy_clique(&self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut clique = vec![0];
        let mut cand = self.row(0).to_vec();
        while let Some(v) = first_bit(&cand) {
            clique.push(v);
            for (c, r) in cand.iter_mut().zip(self.row(v)) {
                *c &= *r;
            }
        }
        clique
    }
}

#[inline]
fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + set[i].trailing_zeros() as usize)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxClique {
    /// Ascending vertex indices.
    pub vertices: Vec<usize>,
    /// Search nodes expanded; diagnostic only, varies with thread count.
    pub nodes: u64,
}

struct Shared<'a> {
    g: &'a DenseGraph,
    global: AtomicUsize,
    nodes: AtomicU64,
    budget: u64,
    aborted: AtomicBool,
    // parallel runs must keep exploring branches that can only tie
    keep_ties: bool,
}

struct Branch<'a> {
    shared: &'a Shared<'a>,
    clique: Vec<usize>,
    best: Vec<usize>,
    best_len: usize,
}

impl Branch<'_> {
    #[inline]
    fn cut(&self, bound: usize) -> bool {
        let global = self.shared.global.load(Ordering::Relaxed);
        bound <= self.best_len || if self.shared.keep_ties { bound < global } else { bound <= global }
    }

    fn record(&mut self) {
        if self.clique.len() > self.best_len {
            self.best_len = self.clique.len();
            self.best = self.clique.clone();
            self.shared.global.fetch_max(self.best_len, Ordering::Relaxed);
        }
    }

    fn expand(&mut self, mut cand: Vec<u64>) {
        let sh = self.shared;
        if sh.aborted.load(Ordering::Relaxed) {
            return;
        }
        if sh.nodes.fetch_add(1, Ordering::Relaxed) >= sh.budget {
            sh.aborted.store(true, Ordering::Relaxed);
            return;
        }
        let (order, colors) = color_classes(sh.g, &cand);
        for idx in (0..order.len()).rev() {
            if self.cut(self.clique.len() + colors[idx]) {
                return;
            }
            let v = order[idx];
            let next: Vec<u64> = cand.iter().zip(sh.g.row(v)).map(|(a, b)| a & b).collect();
            self.clique.push(v);
            if next.iter().all(|&w| w == 0) {
                self.record();
            } else {
                self.expand(next);
            }
            self.clique.pop();
            if sh.aborted.load(Ordering::Relaxed) {
                return;
            }
            cand[v / 64] &= !(1 << (v % 64));
        }
    }
}

/// Greedy sequential coloring of `cand`; returns vertices grouped by color
/// class with the (1-based) class of each, classes ascending.
fn color_classes(g: &DenseGraph, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut uncolored = cand.to_vec();
    let mut q = vec![0u64; cand.len()];
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut color = 0;
    while uncolored.iter().any(|&w| w != 0) {
        color += 1;
        q.copy_from_slice(&uncolored);
        let mut wi = 0;
        while wi < q.len() {
            let w = q[wi];
            if w == 0 {
                wi += 1;
                continue;
            }
            let v = wi * 64 + w.trailing_zeros() as usize;
            q[wi] &= w - 1;
            uncolored[wi] &= !(1 << (v % 64));
            let row = g.row(v);
            for x in wi..q.len() {
                q[x] &= !row[x];
            }
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

/// Maximum clique of `g`.
///
/// `seed` must be a clique; it is the answer unless a strictly larger clique
/// exists. `node_budget` caps the number of expanded search nodes.
pub fn max_clique(g: &DenseGraph, seed: &[usize], node_budget: Option<u64>) -> Result<MaxClique> {
    if !g.is_clique(seed) {
        return Err(Error::param("seed is not a clique"));
    }
    let parallel = par::threads() > 1;
    let shared = Shared {
        g,
        global: AtomicUsize::new(seed.len()),
        nodes: AtomicU64::new(0),
        budget: node_budget.unwrap_or(u64::MAX),
        aborted: AtomicBool::new(false),
        keep_ties: parallel,
    };
    let all = full_set(g.n, g.words);
    let (order, colors) = color_classes(g, &all);
    let mut position = vec![0usize; g.n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // top-level branch i picks order[i] and may use only earlier vertices
    let run_branch = |i: usize| -> Option<Vec<usize>> {
        let mut br = Branch {
            shared: &shared,
            clique: Vec::new(),
            best: Vec::new(),
            best_len: seed.len(),
        };
        if br.cut(colors[i]) {
            return None;
        }
        let v = order[i];
        let mut cand = vec![0u64; g.words];
        for (wi, &w) in g.row(v).iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let u = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                if position[u] < i {
                    cand[u / 64] |= 1 << (u % 64);
                }
            }
        }
        br.clique.push(v);
        if cand.iter().all(|&w| w == 0) {
            br.record();
        } else {
            br.expand(cand);
        }
        (br.best_len > seed.len()).then_some(br.best)
    };
    let count = order.len();
    let found: Vec<Option<Vec<usize>>> = if parallel {
        par::map_collect(0..count, |j| run_branch(count - 1 - j))
    } else {
        let mut out = Vec::with_capacity(count);
        for j in 0..count {
            let i = count - 1 - j;
            if shared.aborted.load(Ordering::Relaxed)
                || colors[i] <= shared.global.load(Ordering::Relaxed)
            {
                break;
            }
            out.push(run_branch(i));
        }
        out
    };
    finish(&shared, seed, found)
}

/// Graph symmetries that map string labels to string labels.
///
/// The group acts on a label alphabet (at most 64 labels). `key(v, fixed)`
/// must be equal exactly for vertices in the same orbit of the subgroup that
/// fixes every label in `fixed`; `root_key` may use a larger group that also
/// preserves adjacency.
pub(crate) trait Orbits: Sync {
    fn root_key(&self, v: usize) -> Vec<u8>;
    /// Labels that become fixed once `v` joins the clique.
    fn labels(&self, v: usize) -> u64;
    /// Whether fixing `fixed` leaves only the identity.
    fn rigid(&self, fixed: u64) -> bool;
    fn key(&self, v: usize, fixed: u64) -> Vec<u8>;
}

fn color_bound(g: &DenseGraph, cand: &[u64]) -> usize {
    color_classes(g, cand).1.last().copied().unwrap_or(0)
}

fn remove_where(cand: &mut [u64], mut pred: impl FnMut(usize) -> bool) {
    for wi in 0..cand.len() {
        let mut w = cand[wi];
        while w != 0 {
            let v = wi * 64 + w.trailing_zeros() as usize;
            w &= w - 1;
            if pred(v) {
                cand[wi] &= !(1 << (v % 64));
            }
        }
    }
}

impl Branch<'_> {
    /// `cand` is invariant under the stabilizer of `fixed`; one vertex per
    /// orbit is branched on and its whole orbit is dropped afterwards.
    fn expand_orbits<O: Orbits>(&mut self, orbits: &O, fixed: u64, mut cand: Vec<u64>) {
        if orbits.rigid(fixed) {
            return self.expand(cand);
        }
        let sh = self.shared;
        if sh.aborted.load(Ordering::Relaxed) {
            return;
        }
        if sh.nodes.fetch_add(1, Ordering::Relaxed) >= sh.budget {
            sh.aborted.store(true, Ordering::Relaxed);
            return;
        }
        while let Some(v) = first_bit(&cand) {
            if self.cut(self.clique.len() + color_bound(sh.g, &cand)) {
                return;
            }
            let next: Vec<u64> = cand.iter().zip(sh.g.row(v)).map(|(a, b)| a & b).collect();
            self.clique.push(v);
            if next.iter().all(|&w| w == 0) {
                self.record();
            } else {
                self.expand_orbits(orbits, fixed | orbits.labels(v), next);
            }
            self.clique.pop();
            if sh.aborted.load(Ordering::Relaxed) {
                return;
            }
            let key = orbits.key(v, fixed);
            remove_where(&mut cand, |u| orbits.key(u, fixed) == key);
        }
    }
}

/// Maximum clique of `g` using the symmetries described by `orbits`.
///
/// Same contract as [`max_clique`]; the search order differs, so among
/// several maximum cliques a different one may be returned.
pub(crate) fn max_clique_orbits<O: Orbits>(
    g: &DenseGraph,
    seed: &[usize],
    node_budget: Option<u64>,
    orbits: &O,
) -> Result<MaxClique> {
    if !g.is_clique(seed) {
        return Err(Error::param("seed is not a clique"));
    }
    let parallel = par::threads() > 1;
    let shared = Shared {
        g,
        global: AtomicUsize::new(seed.len()),
        nodes: AtomicU64::new(0),
        budget: node_budget.unwrap_or(u64::MAX),
        aborted: AtomicBool::new(false),
        keep_ties: parallel,
    };
    // root branch j takes the first vertex left after removing the orbits of
    // branches 0..j
    let mut roots = Vec::new();
    let mut rest = full_set(g.n, g.words);
    while let Some(v) = first_bit(&rest) {
        let before = rest.clone();
        let key = orbits.root_key(v);
        remove_where(&mut rest, |u| orbits.root_key(u) == key);
        roots.push((v, before));
    }
    let run_branch = |j: usize| -> Option<Vec<usize>> {
        let (v, cand) = &roots[j];
        let mut br = Branch {
            shared: &shared,
            clique: vec![*v],
            best: Vec::new(),
            best_len: seed.len(),
        };
        if br.cut(color_bound(g, cand)) {
            return None;
        }
        let next: Vec<u64> = cand.iter().zip(g.row(*v)).map(|(a, b)| a & b).collect();
        if next.iter().all(|&w| w == 0) {
            br.record();
        } else {
            br.expand_orbits(orbits, orbits.labels(*v), next);
        }
        (br.best_len > seed.len()).then_some(br.best)
    };
    let found: Vec<Option<Vec<usize>>> = if parallel {
        par::map_collect(0..roots.len(), run_branch)
    } else {
        let mut out = Vec::with_capacity(roots.len());
        for j in 0..roots.len() {
            if shared.aborted.load(Ordering::Relaxed) {
                break;
            }
            out.push(run_branch(j));
        }
        out
    };
    finish(&shared, seed, found)
}

fn full_set(n: usize, words: usize) -> Vec<u64> {
    let mut v = vec![!0u64; words];
    if n % 64 != 0 {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    v
}

fn finish(shared: &Shared<'_>, seed: &[usize], found: Vec<Option<Vec<usize>>>) -> Result<MaxClique> {
    let nodes = shared.nodes.load(Ordering::Relaxed);
    if shared.aborted.load(Ordering::Relaxed) {
        return Err(Error::Resource(format!(
            "maximum clique search exceeded its budget of {} nodes",
            shared.budget
        )));
    }
    let best_len = found.iter().flatten().map(Vec::len).max().unwrap_or(0);
    let mut vertices = if best_len > seed.len() {
        found
            .into_iter()
            .flatten()
            .find(|c| c.len() == best_len)
            .expect("a branch reached the maximum")
    } else {
        seed.to_vec()
    };
    vertices.sort_unstable();
    Ok(MaxClique { vertices, nodes })
}
