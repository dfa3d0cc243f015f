use num_bigint::BigUint;
use serde::Serialize;

use super::{check_clique_size, StringFamily};
use crate::error::{Error, Result};

/// Size and rate of a verified family against the clique-family capacity.
/// All logarithms are natural.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateReport {
    pub log_base: &'static str,
    pub t: usize,
    pub s: usize,
    pub k: usize,
    pub size: usize,
    /// `ln(size) / k`.
    pub rate: f64,
    /// `(s/t) ln s`, the capacity of the family of all `s`-cliques on `[t]`.
    pub clique_bound: f64,
    /// `((t-1)/t) ln(t-1)`; the relevant target when `s = t - 1`.
    pub family_target: f64,
    /// `size <= s^(s k / t)`, decided exactly as `size^t <= s^(s k)`.
    pub jensen_ok: bool,
}

/// Exact test of `m <= s^(s k / t)`.
pub fn jensen_holds(m: usize, t: usize, s: usize, k: usize) -> bool {
    let lhs = BigUint::from(m).pow(t as u32);
    let rhs = BigUint::from(s).pow((s * k) as u32);
    lhs <= rhs
}

pub fn rate_report(family: &StringFamily, s: usize) -> Result<RateReport> {
    let (t, k) = (family.t(), family.k());
    check_clique_size(t, s)?;
    if family.is_empty() {
        return Err(Error::param("rate of an empty family is undefined"));
    }
    let m = family.len();
    let tf = t as f64;
    let sf = s as f64;
    Ok(RateReport {
        log_base: "e",
        t,
        s,
        k,
        size: m,
        rate: (m as f64).ln() / k as f64,
        clique_bound: sf / tf * sf.ln(),
        family_target: (tf - 1.0) / tf * (tf - 1.0).ln(),
        jensen_ok: jensen_holds(m, t, s, k),
    })
}
