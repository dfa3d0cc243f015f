use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::clique_edges;

/// `t / ((t-s+2) ln(t-s+2))`.
pub fn rsat_coefficient(s: usize, t: usize) -> f64 {
    let q = (t + 2 - s) as f64;
    t as f64 / (q * q.ln())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub log_base: &'static str,
    pub coefficient: f64,
    /// `coefficient * n ln n` with the lower-order factor dropped.
    pub asymptotic_lower: f64,
    pub note: &'static str,
    /// `n(n-1)/2`: the complete monochromatic graph is vacuously saturated.
    pub trivial_upper: u64,
}

pub fn bound_formulas(n: usize, s: usize, t: usize) -> Result<BoundReport> {
    if s < 3 {
        return Err(Error::param(format!("s = {s}: the bound is stated for s >= 3")));
    }
    if t < clique_edges(s) {
        return Err(Error::param(format!(
            "t = {t} < s(s-1)/2 = {}: the lower bound assumes t >= s(s-1)/2",
            clique_edges(s)
        )));
    }
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    let coefficient = rsat_coefficient(s, t);
    let nf = n as f64;
    Ok(BoundReport {
        n,
        s,
        t,
        log_base: "e",
        coefficient,
        asymptotic_lower: coefficient * nf * nf.ln(),
        note: "asymptotic, non-binding at small n",
        trivial_upper: (n as u64) * (n as u64 - 1) / 2,
    })
}
