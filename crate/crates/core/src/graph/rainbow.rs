use serde::Serialize;

use super::{clique_edges, Color, ColoredGraph, Vertex};
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::par;

/// `s` pairwise adjacent vertices whose edges carry pairwise distinct colors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RainbowClique {
    /// Ascending vertex labels.
    pub vertices: Vec<Vertex>,
    /// `(u, v, color)` for every pair of `vertices`, lexicographic.
    pub edges: Vec<(Vertex, Vertex, Color)>,
}

/// A missing edge and a color whose addition creates no rainbow `K_s`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BlockingPair {
    pub u: Vertex,
    pub v: Vertex,
    pub color: Color,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SaturationReport {
    pub s: usize,
    pub saturated: bool,
    pub rainbow_found: Option<RainbowClique>,
    pub blocking_pair: Option<BlockingPair>,
    /// Set when `t < s(s-1)/2`: no rainbow `K_s` can exist at all, so the
    /// predicate degenerates to completeness.
    pub palette_too_small: bool,
}

/// Depth-first extension of a partial clique, optionally through one edge that
/// is not stored in the graph.
struct CliqueSearch<'g> {
    g: &'g ColoredGraph,
    virtual_edge: Option<(usize, usize, Color)>,
}

impl CliqueSearch<'_> {
    #[inline]
    fn color(&self, a: usize, b: usize) -> Color {
        if let Some((x, y, c)) = self.virtual_edge {
            if (a == x && b == y) || (a == y && b == x) {
                return c;
            }
        }
        self.g.color0(a, b)
    }

    /// Grows `clique` by `need` vertices drawn from `cand` in ascending order.
    /// `cand` must only hold common neighbours of the clique.
    fn extend(
        &self,
        clique: &mut Vec<usize>,
        used: &mut Vec<Color>,
        cand: &Bitset,
        need: usize,
    ) -> bool {
        if need == 0 {
            return true;
        }
        if cand.count() < need {
            return false;
        }
        let base = used.len();
        for w in cand.iter() {
            let fresh = clique.iter().all(|&x| {
                let c = self.color(x, w);
                if used.contains(&c) {
                    false
                } else {
                    used.push(c);
                    true
                }
            });
            if fresh {
                let mut next = cand.intersection(self.g.adj0(w));
                next.clear_through(w);
                clique.push(w);
                if self.extend(clique, used, &next, need - 1) {
                    return true;
                }
                clique.pop();
            }
            used.truncate(base);
        }
        false
    }
}

fn witness(g: &ColoredGraph, clique: &[usize]) -> RainbowClique {
    let mut vs: Vec<usize> = clique.to_vec();
    vs.sort_unstable();
    let mut edges = Vec::with_capacity(clique_edges(vs.len()));
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            edges.push((a + 1, b + 1, g.color0(a, b)));
        }
    }
    RainbowClique {
        vertices: vs.iter().map(|a| a + 1).collect(),
        edges,
    }
}

/// Lexicographically first rainbow `K_s`, no parameter checks; `None` when `s > n`.
pub(crate) fn rainbow_clique_seq(g: &ColoredGraph, s: usize) -> Option<RainbowClique> {
    if s > g.n() || clique_edges(s) > g.t() as usize {
        return None;
    }
    let search = CliqueSearch {
        g,
        virtual_edge: None,
    };
    let mut clique = Vec::with_capacity(s);
    let mut used = Vec::with_capacity(clique_edges(s));
    for a in 0..g.n() {
        let mut cand = g.adj0(a).clone();
        cand.clear_through(a);
        clique.clear();
        clique.push(a);
        if search.extend(&mut clique, &mut used, &cand, s - 1) {
            return Some(witness(g, &clique));
        }
    }
    None
}

/// Finds a rainbow copy of `K_s` in `g`.
///
/// The returned witness is the lexicographically first rainbow `s`-set.
pub fn find_rainbow_clique(g: &ColoredGraph, s: usize) -> Result<Option<RainbowClique>> {
    if s < 2 || s > g.n() {
        return Err(Error::param(format!(
            "clique size s = {s} must satisfy 2 <= s <= n = {}",
            g.n()
        )));
    }
    Ok(rainbow_clique_seq(g, s))
}

// 0-based, unchecked: does g + {a,b} colored c hold a rainbow K_s through {a,b}?
pub(crate) fn creates_through0(g: &ColoredGraph, a: usize, b: usize, c: Color, s: usize) -> bool {
    if s <= 2 {
        return true;
    }
    if clique_edges(s) > g.t() as usize {
        return false;
    }
    let search = CliqueSearch {
        g,
        virtual_edge: Some((a, b, c)),
    };
    let cand = g.adj0(a).intersection(g.adj0(b));
    let mut clique = vec![a, b];
    let mut used = vec![c];
    search.extend(&mut clique, &mut used, &cand, s - 2)
}

/// Whether adding the missing edge `uv` in color `c` creates a rainbow `K_s`
/// that uses the new edge.
pub fn creates_rainbow_through(
    g: &ColoredGraph,
    u: Vertex,
    v: Vertex,
    c: Color,
    s: usize,
) -> Result<bool> {
    let (a, b) = g.check_pair(u, v)?;
    g.check_color(c)?;
    if s < 2 {
        return Err(Error::param(format!("clique size s = {s} must be at least 2")));
    }
    if g.color0(a, b) != 0 {
        return Err(Error::param(format!(
            "{{{}, {}}} is already an edge",
            u.min(v),
            u.max(v)
        )));
    }
    Ok(creates_through0(g, a, b, c, s))
}

/// First `(non-edge, color)` in lexicographic pair order, colors ascending,
/// whose addition creates no rainbow `K_s`.
pub(crate) fn first_blocking_pair(g: &ColoredGraph, s: usize, parallel: bool) -> Option<BlockingPair> {
    let missing = g.non_edges();
    let probe = |i: usize| {
        let (u, v) = missing[i];
        (1..=g.t())
            .find(|&c| !creates_through0(g, u - 1, v - 1, c, s))
            .map(|color| BlockingPair { u, v, color })
    };
    if parallel {
        par::find_map_first(0..missing.len(), probe)
    } else {
        (0..missing.len()).find_map(probe)
    }
}

pub(crate) fn saturation_report(g: &ColoredGraph, s: usize, parallel: bool) -> SaturationReport {
    let rainbow_found = rainbow_clique_seq(g, s);
    let blocking_pair = first_blocking_pair(g, s, parallel);
    SaturationReport {
        s,
        saturated: rainbow_found.is_none() && blocking_pair.is_none(),
        rainbow_found,
        blocking_pair,
        palette_too_small: (g.t() as usize) < clique_edges(s),
    }
}

/// Decides whether `g` is rainbow `K_s`-saturated: it has no rainbow `K_s`, and
/// every missing edge in every color would create one.
///
/// On failure the report names the lexicographically first violation of each kind.
pub fn is_rainbow_saturated(g: &ColoredGraph, s: usize) -> Result<SaturationReport> {
    if s < 2 {
        return Err(Error::param(format!("clique size s = {s} must be at least 2")));
    }
    Ok(saturation_report(g, s, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(c: [Color; 3]) -> ColoredGraph {
        ColoredGraph::from_edges(3, 3, [(1, 2, c[0]), (1, 3, c[1]), (2, 3, c[2])]).unwrap()
    }

    #[test]
    fn rainbow_triangle() {
        let w = find_rainbow_clique(&tri([1, 2, 3]), 3).unwrap().unwrap();
        assert_eq!(w.vertices, vec![1, 2, 3]);
        assert_eq!(w.edges, vec![(1, 2, 1), (1, 3, 2), (2, 3, 3)]);
        assert!(find_rainbow_clique(&tri([1, 1, 2]), 3).unwrap().is_none());
    }

    #[test]
    fn parameter_errors() {
        let g = tri([1, 2, 3]);
        assert!(find_rainbow_clique(&g, 4).is_err());
        assert!(find_rainbow_clique(&g, 1).is_err());
        assert!(creates_rainbow_through(&g, 1, 2, 1, 3).is_err());
        assert!(is_rainbow_saturated(&g, 1).is_err());
    }

    #[test]
    fn path_completion() {
        let g = ColoredGraph::from_edges(3, 3, [(1, 2, 1), (2, 3, 2)]).unwrap();
        assert!(creates_rainbow_through(&g, 1, 3, 3, 3).unwrap());
        assert!(!creates_rainbow_through(&g, 1, 3, 1, 3).unwrap());
        assert!(!creates_rainbow_through(&g, 1, 3, 2, 3).unwrap());
    }

    #[test]
    fn k2_is_always_rainbow() {
        let g = ColoredGraph::new(3, 1).unwrap();
        assert!(creates_rainbow_through(&g, 1, 2, 1, 2).unwrap());
        // the edgeless graph is K_2-saturated
        assert!(is_rainbow_saturated(&g, 2).unwrap().saturated);
    }

    #[test]
    fn monochromatic_triangle_is_saturated() {
        let r = is_rainbow_saturated(&tri([1, 1, 1]), 3).unwrap();
        assert!(r.saturated);
        assert!(!r.palette_too_small);
    }

    #[test]
    fn empty_graph_blocks_first_pair() {
        let g = ColoredGraph::new(3, 3).unwrap();
        let r = is_rainbow_saturated(&g, 3).unwrap();
        assert!(!r.saturated);
        assert!(r.rainbow_found.is_none());
        assert_eq!(r.blocking_pair, Some(BlockingPair { u: 1, v: 2, color: 1 }));
    }

    #[test]
    fn rainbow_triangle_is_reported() {
        let r = is_rainbow_saturated(&tri([1, 2, 3]), 3).unwrap();
        assert!(!r.saturated);
        assert_eq!(r.rainbow_found.unwrap().vertices, vec![1, 2, 3]);
        assert!(r.blocking_pair.is_none());
    }

    #[test]
    fn small_palette_flags_regime() {
        // t = 2 < 3: no rainbow triangle can exist, saturated iff complete
        let g = ColoredGraph::from_edges(3, 2, [(1, 2, 1), (2, 3, 2)]).unwrap();
        let r = is_rainbow_saturated(&g, 3).unwrap();
        assert!(r.palette_too_small);
        assert_eq!(r.blocking_pair, Some(BlockingPair { u: 1, v: 3, color: 1 }));
    }

    #[test]
    fn s_larger_than_n() {
        // no K_4 fits on 3 vertices; saturated iff complete
        assert!(is_rainbow_saturated(&tri([1, 2, 3]), 4).unwrap().saturated);
        let g = ColoredGraph::from_edges(3, 6, [(1, 2, 1)]).unwrap();
        assert!(!is_rainbow_saturated(&g, 4).unwrap().saturated);
    }
}
