//! The bipartite code graph and its saturating extension.
//!
//! A code `X` of `m` strings of length `k` over `[t]` becomes the complete
//! bipartite graph between `A = {1..k}` and `B = {k+1..k+m}`, the edge
//! `(i, k+j)` colored with letter `i` of string `j`. When `X` has the pair
//! property for `s = t-1`, any edge inside `B` in any color closes a rainbow
//! triangle through `A`, so extending greedily only ever adds edges inside `A`.

use serde::Serialize;

use crate::codes::{greedy_search, verify_family, SearchConfig, StringFamily};
use crate::error::{Error, Result};
use crate::graph::{
    creates_rainbow_through, first_blocking_pair, rainbow_clique_seq, Color, ColoredGraph,
};
use crate::oracle::rsat_coefficient;

/// Complete bipartite colored graph of a code.
///
/// Logs a warning when the code lacks the pair property for `t - 1`, since
/// the triangle-saturation guarantee then no longer applies.
pub fn build_bipartite(family: &StringFamily) -> Result<ColoredGraph> {
    if family.is_empty() {
        return Err(Error::param("cannot build a graph from an empty family"));
    }
    let (t, k, m) = (family.t(), family.k(), family.len());
    if t >= 3 && !verify_family(family, t - 1)?.ok {
        log::warn!("family lacks the pair property for s = t - 1 = {}; B-B additions may not close rainbow triangles", t - 1);
    }
    let mut g = ColoredGraph::new(k + m, t as Color)?;
    for (j, x) in family.strings().iter().enumerate() {
        for (i, &a) in x.iter().enumerate() {
            g.put(i, k + j, a as Color);
        }
    }
    Ok(g)
}

/// Saturating supergraph of `g` with respect to rainbow `K_s`.
///
/// Missing pairs are scanned once in lexicographic order; each gets the first
/// color (ascending) whose addition creates no rainbow `K_s`, or stays missing
/// when every color creates one. One pass suffices because an addition that
/// creates a rainbow `K_s` keeps doing so in every supergraph.
pub fn maximal_extension(g: &ColoredGraph, s: usize) -> Result<ColoredGraph> {
    if s < 2 {
        return Err(Error::param(format!("clique size s = {s} must be at least 2")));
    }
    if let Some(w) = rainbow_clique_seq(g, s) {
        return Err(Error::Contract(format!(
            "input already contains a rainbow K_{s} on {:?}",
            w.vertices
        )));
    }
    if s > 3 {
        log::info!("extension for s = {s} is a heuristic construction, not a tight one");
    }
    let mut out = g.clone();
    for (u, v) in g.non_edges() {
        for c in 1..=g.t() {
            if !creates_rainbow_through(&out, u, v, c, s)? {
                out.put(u - 1, v - 1, c);
                break;
            }
        }
    }
    debug_assert!(first_blocking_pair(&out, s, false).is_none());
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionReport {
    pub t: usize,
    pub k: usize,
    pub m: usize,
    pub n: usize,
    /// Edges of the saturated extension.
    pub edges: usize,
    /// `k*m + k(k-1)/2`.
    pub edge_bound: usize,
    pub added_inside_a: usize,
    pub added_inside_b: usize,
    pub saturated: bool,
    /// `t / ((t-1) ln(t-1))`, the triangle coefficient with natural log.
    pub coefficient: f64,
    /// `coefficient * n ln n`; asymptotic, not binding at small `n`.
    pub asymptotic_value: f64,
}

/// Builds, extends for triangles, and measures the graph of `family`.
pub fn report_for_family(family: &StringFamily) -> Result<ConstructionReport> {
    let t = family.t();
    if t < 3 {
        return Err(Error::param("the triangle construction needs t >= 3"));
    }
    let g0 = build_bipartite(family)?;
    let g = maximal_extension(&g0, 3)?;
    let (k, m) = (family.k(), family.len());
    let (mut in_a, mut in_b) = (0, 0);
    for (u, v, _) in g.edges() {
        if v <= k {
            in_a += 1;
        } else if u > k {
            in_b += 1;
        }
    }
    let saturated = rainbow_clique_seq(&g, 3).is_none() && first_blocking_pair(&g, 3, true).is_none();
    let coefficient = rsat_coefficient(3, t);
    let n = k + m;
    Ok(ConstructionReport {
        t,
        k,
        m,
        n,
        edges: g.edge_count(),
        edge_bound: k * m + k * (k - 1) / 2,
        added_inside_a: in_a,
        added_inside_b: in_b,
        saturated,
        coefficient,
        asymptotic_value: coefficient * n as f64 * (n as f64).ln(),
    })
}

/// Construction on `n` vertices over `t` colors: tries string lengths
/// `k = 1, 2, ..` and takes the first whose greedy code for `s = t - 1`
/// reaches `m = n - k` members.
pub fn construction_report(t: usize, n: usize, cfg: &SearchConfig) -> Result<ConstructionReport> {
    if t < 3 {
        return Err(Error::param("the triangle construction needs t >= 3"));
    }
    if n < 2 {
        return Err(Error::param("n must be at least 2"));
    }
    let mut tried = Vec::new();
    for k in 1..n {
        let m = n - k;
        let family = match greedy_search(t, t - 1, k, cfg) {
            Ok(f) => f,
            Err(Error::Resource(_)) => break,
            Err(e) => return Err(e),
        };
        if family.len() >= m {
            return report_for_family(&family.truncated(m));
        }
        tried.push(format!("k = {k}: found {} of {m}", family.len()));
    }
    Err(Error::Resource(format!(
        "no code with k + m = {n} found within the string limit {} ({})",
        cfg.limit,
        tried.join("; ")
    )))
}
