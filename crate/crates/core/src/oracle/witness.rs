//! Instance-level replay of the counting argument behind the lower bound.
//!
//! Given a saturated graph `H` and a degree threshold `d`, vertices split
//! into `A` (degree `>= d`) and `B` (the rest). Each `v` in `B` is encoded
//! by the colors of its edges to `a_1, .., a_k`, with `t+1` marking a
//! missing edge. After moving the `s-2` most common `A`-`B` colors to the top
//! labels `t-s+3..=t`, every qualifying pair `v, w` in `B` (non-adjacent, no
//! common neighbour in `B`) must differ at a position where both letters are
//! at most `q = t-s+2`; this is disjointness of the completion sets of `v`
//! and `w` over `[q]^k`, tested position by position. The report then
//! evaluates the resulting chain of inequalities exactly where possible.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{first_blocking_pair, rainbow_clique_seq, Color, ColoredGraph, Vertex};
use crate::par;

fn as_number<S: Serializer>(x: &BigUint, ser: S) -> std::result::Result<S::Ok, S::Error> {
    let num: serde_json::Number = x
        .to_string()
        .parse()
        .map_err(serde::ser::Error::custom)?;
    num.serialize(ser)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BVertex {
    pub v: Vertex,
    pub degree: usize,
    /// `A`-`B` edges at `v`.
    pub d_v: usize,
    /// Those among the `s-2` most common colors.
    pub d_prime_v: usize,
    /// Original colors of the edges to `a_1..a_k`, `t+1` for a missing edge.
    pub encoding: Vec<Color>,
    /// `encoding` after relabeling.
    pub relabeled: Vec<Color>,
    /// Vertices of `B` adjacent to `v` or sharing a neighbour with it in `B`.
    pub partners: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub v: Vertex,
    pub w: Vertex,
    pub disjoint: bool,
    /// 1-based position in `A` that separates the pair.
    pub position: Option<usize>,
}

/// The averaging steps, in floating point (absent when `q < 2` or `B` is empty).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JensenSteps {
    /// `sum_v q^(d'_v - d_v)`.
    pub sum_powers: f64,
    /// `m q^((sum d' - sum d)/m)`.
    pub mean_power: f64,
    pub mean_ok: bool,
    /// `(t/q) m (log_q m - log_q(d^2+1))`.
    pub edge_lower_bound: f64,
    pub edge_bound_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub d: usize,
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub k: usize,
    pub m: usize,
    /// `n / ln n`, for comparison with `k`.
    pub n_over_log_n: f64,
    pub partition_ok: bool,
    /// `A`-`B` edge count per original color.
    pub color_counts: Vec<u64>,
    /// The `s-2` most common colors, ties to the smaller color.
    pub heavy_colors: Vec<Color>,
    /// `relabeling[c-1]` is the new label of color `c`.
    pub relabeling: Vec<Color>,
    pub vertices: Vec<BVertex>,
    pub pairs: Vec<PairVerdict>,
    pub all_disjoint: bool,
    pub max_partners: usize,
    /// Every vertex of `B` has at most `d^2` partners.
    pub neighborhood_ok: bool,
    pub sum_d: u64,
    pub sum_d_prime: u64,
    /// `t * sum d' >= (s-2) * sum d`.
    pub color_share_ok: bool,
    /// `(d^2+1) q^k`.
    #[serde(serialize_with = "as_number")]
    pub jensen_lhs: BigUint,
    /// `sum_v q^(k - d_v + d'_v)`.
    #[serde(serialize_with = "as_number")]
    pub jensen_rhs: BigUint,
    pub jensen_ok: bool,
    pub steps: Option<JensenSteps>,
    pub passed: bool,
}

/// Replays the lower-bound accounting on `h`.
///
/// Needs `s >= 3`, `t >= s - 1`, `d >= 1`, and `h` rainbow `K_s`-saturated;
/// an unsaturated `h` is a contract violation.
pub fn lower_bound_witness_check(h: &ColoredGraph, s: usize, d: usize) -> Result<LowerBoundReport> {
    let t = h.t() as usize;
    if s < 3 {
        return Err(Error::param(format!("s = {s}: the argument needs s >= 3")));
    }
    if t + 1 < s {
        return Err(Error::param(format!("t = {t} must be at least s - 1 = {}", s - 1)));
    }
    if d == 0 {
        return Err(Error::param("degree threshold d must be at least 1"));
    }
    if rainbow_clique_seq(h, s).is_some() || first_blocking_pair(h, s, true).is_some() {
        return Err(Error::Contract(format!(
            "graph is not rainbow K_{s}-saturated; the argument only covers saturated graphs"
        )));
    }
    let n = h.n();
    let q = t + 2 - s;
    let missing = (t + 1) as Color;

    let (a, b): (Vec<Vertex>, Vec<Vertex>) = (1..=n).partition(|&v| h.degree(v) >= d);
    let (k, m) = (a.len(), b.len());
    let partition_ok = a.iter().all(|&v| h.degree(v) >= d) && b.iter().all(|&v| h.degree(v) < d);

    let encoding: Vec<Vec<Color>> = b
        .iter()
        .map(|&v| a.iter().map(|&ai| h.color(ai, v).unwrap_or(missing)).collect())
        .collect();

    let mut color_counts = vec![0u64; t];
    for x in &encoding {
        for &c in x.iter().filter(|&&c| c != missing) {
            color_counts[c as usize - 1] += 1;
        }
    }
    let mut by_freq: Vec<Color> = (1..=t as Color).collect();
    by_freq.sort_by_key(|&c| (std::cmp::Reverse(color_counts[c as usize - 1]), c));
    let mut heavy_colors: Vec<Color> = by_freq[..s - 2].to_vec();
    heavy_colors.sort_unstable();
    let mut relabeling = vec![0; t];
    let mut light_label = 0;
    for c in 1..=t as Color {
        if !heavy_colors.contains(&c) {
            light_label += 1;
            relabeling[c as usize - 1] = light_label;
        }
    }
    for (i, &c) in heavy_colors.iter().enumerate() {
        relabeling[c as usize - 1] = (q + 1 + i) as Color;
    }
    let relabel = |c: Color| if c == missing { missing } else { relabeling[c as usize - 1] };

    let in_b = {
        let mut mask = vec![false; n + 1];
        for &v in &b {
            mask[v] = true;
        }
        mask
    };
    let b_neighbors: Vec<Vec<Vertex>> = b
        .iter()
        .map(|&v| h.neighbors(v).into_iter().filter(|&w| in_b[w]).collect())
        .collect();

    let vertices: Vec<BVertex> = par::map_collect(0..m, |j| {
        let v = b[j];
        let relabeled: Vec<Color> = encoding[j].iter().map(|&c| relabel(c)).collect();
        let d_v = encoding[j].iter().filter(|&&c| c != missing).count();
        let d_prime_v = relabeled
            .iter()
            .filter(|&&c| c != missing && c as usize > q)
            .count();
        let mut reach = vec![false; n + 1];
        for &w in &b_neighbors[j] {
            reach[w] = true;
            for x in h.neighbors(w) {
                if in_b[x] {
                    reach[x] = true;
                }
            }
        }
        reach[v] = false;
        BVertex {
            v,
            degree: h.degree(v),
            d_v,
            d_prime_v,
            encoding: encoding[j].clone(),
            relabeled,
            partners: reach.iter().filter(|&&r| r).count(),
        }
    });

    let pairs: Vec<PairVerdict> = par::map_collect(0..m, |i| {
        let (v, xv) = (b[i], &vertices[i].relabeled);
        let mut out = Vec::new();
        for j in i + 1..m {
            let w = b[j];
            if h.has_edge(v, w) || b_neighbors[i].iter().any(|&x| h.has_edge(x, w)) {
                continue;
            }
            let xw = &vertices[j].relabeled;
            let position = (0..k)
                .find(|&p| xv[p] != xw[p] && xv[p] as usize <= q && xw[p] as usize <= q)
                .map(|p| p + 1);
            out.push(PairVerdict {
                v,
                w,
                disjoint: position.is_some(),
                position,
            });
        }
        out
    })
    .into_iter()
    .flatten()
    .collect();

    let all_disjoint = pairs.iter().all(|p| p.disjoint);
    let max_partners = vertices.iter().map(|x| x.partners).max().unwrap_or(0);
    let neighborhood_ok = max_partners <= d * d;
    let sum_d: u64 = vertices.iter().map(|x| x.d_v as u64).sum();
    let sum_d_prime: u64 = vertices.iter().map(|x| x.d_prime_v as u64).sum();
    let color_share_ok = t as u64 * sum_d_prime >= (s as u64 - 2) * sum_d;

    let qb = BigUint::from(q);
    let jensen_lhs = (BigUint::from(d) * d + 1u32) * qb.pow(k as u32);
    let jensen_rhs: BigUint = vertices
        .iter()
        .map(|x| qb.pow((k - x.d_v + x.d_prime_v) as u32))
        .sum();
    let jensen_ok = jensen_lhs >= jensen_rhs;

    let steps = (q >= 2 && m > 0).then(|| {
        let qf = q as f64;
        let mf = m as f64;
        let sum_powers: f64 = vertices
            .iter()
            .map(|x| qf.powf(x.d_prime_v as f64 - x.d_v as f64))
            .sum();
        let mean_power = mf * qf.powf((sum_d_prime as f64 - sum_d as f64) / mf);
        let dd = (d * d + 1) as f64;
        let edge_lower_bound = t as f64 / qf * mf * ((mf.ln() - dd.ln()) / qf.ln());
        let tol = 1e-9;
        JensenSteps {
            sum_powers,
            mean_power,
            mean_ok: sum_powers >= mean_power * (1.0 - tol),
            edge_lower_bound,
            edge_bound_ok: sum_d as f64 >= edge_lower_bound - tol * edge_lower_bound.abs(),
        }
    });
    let steps_ok = steps.as_ref().is_none_or(|st| st.mean_ok && st.edge_bound_ok);

    Ok(LowerBoundReport {
        n,
        s,
        t,
        d,
        k,
        m,
        n_over_log_n: if n > 1 { n as f64 / (n as f64).ln() } else { 0.0 },
        partition_ok,
        color_counts,
        heavy_colors,
        relabeling,
        passed: partition_ok
            && all_disjoint
            && neighborhood_ok
            && color_share_ok
            && jensen_ok
            && steps_ok,
        a,
        b,
        vertices,
        pairs,
        all_disjoint,
        max_partners,
        neighborhood_ok,
        sum_d,
        sum_d_prime,
        color_share_ok,
        jensen_lhs,
        jensen_rhs,
        jensen_ok,
        steps,
    })
}
