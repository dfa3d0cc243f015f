//! Exhaustive rainbow saturation numbers.
//!
//! Levels ascend by edge count. Within a level, edge sets come in
//! lexicographic combination order and colorings in lexicographic order, the
//! first edge most significant. A partial coloring is dropped as soon as the
//! last colored edge closes a rainbow `K_s`, since every completion keeps it.
//! The first level holding a saturated graph is the answer; its witness is
//! the first saturated graph in that order, whatever the thread count.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{creates_through0, first_blocking_pair, Color, ColoredGraph};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RsatResult {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub minimum: usize,
    pub witness: ColoredGraph,
    /// Saturated graphs at the minimum level, when requested.
    pub count: Option<u64>,
    /// Colored graphs (partial and complete) visited.
    pub visited: u64,
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut c: Vec<usize> = (0..r).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..r).rposition(|i| c[i] != i + n - r) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..r {
            c[j] = c[j - 1] + 1;
        }
    }
}

struct Level<'a> {
    n: usize,
    s: usize,
    t: Color,
    pairs: &'a [(usize, usize)],
    visited: &'a AtomicU64,
    budget: u64,
    aborted: &'a AtomicBool,
}

impl Level<'_> {
    fn tick(&self) -> bool {
        if self.visited.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    /// Colors `edges[depth..]`; returns the first saturated completion and,
    /// when `count` is set, tallies all of them.
    fn colorings(
        &self,
        g: &mut ColoredGraph,
        edges: &[usize],
        depth: usize,
        count: Option<&mut u64>,
    ) -> Option<ColoredGraph> {
        if !self.tick() {
            return None;
        }
        if depth == edges.len() {
            if first_blocking_pair(g, self.s, false).is_none() {
                if let Some(c) = count {
                    *c += 1;
                }
                return Some(g.clone());
            }
            return None;
        }
        let (a, b) = self.pairs[edges[depth]];
        let mut first = None;
        let mut count = count;
        for c in 1..=self.t {
            if creates_through0(g, a, b, c, self.s) {
                continue;
            }
            g.put(a, b, c);
            let found = self.colorings(g, edges, depth + 1, count.as_deref_mut());
            g.unput(a, b);
            if first.is_none() {
                first = found;
            }
            if (first.is_some() && count.is_none()) || self.aborted.load(Ordering::Relaxed) {
                break;
            }
        }
        first
    }

    fn run(&self, edges: &[usize], count: bool) -> (Option<ColoredGraph>, u64) {
        let mut g = ColoredGraph::new(self.n, self.t).expect("t >= 1");
        let mut tally = 0;
        let first = self.colorings(&mut g, edges, 0, count.then_some(&mut tally));
        (first, tally)
    }
}

/// Minimum edge count of a rainbow `K_s`-saturated `t`-edge-colored graph on
/// `n` labelled vertices, by exhaustive enumeration.
///
/// `budget` caps the colored graphs visited; running out is a resource error
/// naming the level reached. With `count_all` every saturated graph at the
/// minimum level is counted.
pub fn exact_rsat(n: usize, s: usize, t: usize, budget: u64, count_all: bool) -> Result<RsatResult> {
    if s < 2 {
        return Err(Error::param(format!("clique size s = {s} must be at least 2")));
    }
    if t == 0 {
        return Err(Error::param("palette size t must be at least 1"));
    }
    let tc = Color::try_from(t).map_err(|_| Error::param("palette too large"))?;
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    let visited = AtomicU64::new(0);
    let aborted = AtomicBool::new(false);
    let level = || Level {
        n,
        s,
        t: tc,
        pairs: &pairs,
        visited: &visited,
        budget,
        aborted: &aborted,
    };
    for e in 0..=pairs.len() {
        let lv = level();
        let sets = combinations(pairs.len(), e);
        let (witness, count) = if count_all {
            let results = par::map_collect(0..sets.len(), |i| lv.run(&sets[i], true));
            let count = results.iter().map(|r| r.1).sum::<u64>();
            (results.into_iter().find_map(|r| r.0), Some(count))
        } else {
            (
                par::find_map_first(0..sets.len(), |i| lv.run(&sets[i], false).0),
                None,
            )
        };
        if aborted.load(Ordering::Relaxed) {
            return Err(Error::Resource(format!(
                "enumeration budget of {budget} colored graphs exhausted at edge level {e} of {}",
                pairs.len()
            )));
        }
        if let Some(witness) = witness {
            return Ok(RsatResult {
                n,
                s,
                t,
                minimum: e,
                witness,
                count,
                visited: visited.load(Ordering::Relaxed),
            });
        }
    }
    unreachable!("the complete monochromatic graph is always saturated")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_in_order() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn tiny_values() {
        let r = exact_rsat(2, 3, 3, 1000, true).unwrap();
        assert_eq!(r.minimum, 1);
        assert_eq!(r.count, Some(3));
        assert_eq!(r.witness.to_string(), "2 3\n1 2 1\n");
        let r = exact_rsat(3, 3, 3, 10_000, false).unwrap();
        assert_eq!(r.minimum, 3);
        assert_eq!(r.witness.to_string(), "3 3\n1 2 1\n1 3 1\n2 3 1\n");
        assert_eq!(exact_rsat(1, 3, 3, 10, false).unwrap().minimum, 0);
        // s = 2: the edgeless graph is saturated
        assert_eq!(exact_rsat(4, 2, 3, 10, false).unwrap().minimum, 0);
    }

    #[test]
    fn budget_exhaustion_names_level() {
        let e = exact_rsat(4, 3, 3, 5, false).unwrap_err();
        assert!(matches!(e, Error::Resource(_)));
        assert!(e.to_string().contains("level"), "{e}");
    }
}
