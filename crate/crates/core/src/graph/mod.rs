//! Edge-colored simple graphs and the rainbow-saturation predicate.
//!
//! Vertices are labelled `1..=n` and colors `1..=t` at every public boundary.
//! Internally rows are 0-based and color 0 marks a non-edge.

mod format;
mod rainbow;

pub use rainbow::{
    creates_rainbow_through, find_rainbow_clique, is_rainbow_saturated, BlockingPair,
    RainbowClique, SaturationReport,
};
pub(crate) use rainbow::{creates_through0, first_blocking_pair, rainbow_clique_seq};

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// 1-based vertex label.
pub type Vertex = usize;
/// 1-based edge color.
pub type Color = u32;

/// Number of edges in a rainbow `K_s`.
pub fn clique_edges(s: usize) -> usize {
    s * s.saturating_sub(1) / 2
}

/// A `t`-edge-colored simple graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredGraph {
    n: usize,
    t: Color,
    // row-major n*n, symmetric, 0 = no edge
    colors: Vec<Color>,
    adj: Vec<Bitset>,
    edge_count: usize,
}

impl ColoredGraph {
    /// Edgeless graph on `n` vertices with palette `1..=t`.
    pub fn new(n: usize, t: Color) -> Result<Self> {
        if t == 0 {
            return Err(Error::param("palette size t must be at least 1"));
        }
        Ok(ColoredGraph {
            n,
            t,
            colors: vec![0; n * n],
            adj: vec![Bitset::new(n); n],
            edge_count: 0,
        })
    }

    /// Builds a graph from `(u, v, c)` triples; any order of endpoints is accepted.
    pub fn from_edges(
        n: usize,
        t: Color,
        edges: impl IntoIterator<Item = (Vertex, Vertex, Color)>,
    ) -> Result<Self> {
        let mut g = Self::new(n, t)?;
        for (u, v, c) in edges {
            g.add_edge(u, v, c)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> Color {
        self.t
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check_vertex(&self, v: Vertex) -> Result<usize> {
        if v == 0 || v > self.n {
            return Err(Error::param(format!(
                "vertex {v} outside 1..={}",
                self.n
            )));
        }
        Ok(v - 1)
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<(usize, usize)> {
        let a = self.check_vertex(u)?;
        let b = self.check_vertex(v)?;
        if a == b {
            return Err(Error::param(format!("self-loop at vertex {u}")));
        }
        Ok((a, b))
    }

    fn check_color(&self, c: Color) -> Result<()> {
        if c == 0 || c > self.t {
            return Err(Error::param(format!("color {c} outside 1..={}", self.t)));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<()> {
        let (a, b) = self.check_pair(u, v)?;
        self.check_color(c)?;
        if self.colors[a * self.n + b] != 0 {
            return Err(Error::param(format!(
                "edge {{{}, {}}} is already present",
                u.min(v),
                u.max(v)
            )));
        }
        self.put(a, b, c);
        Ok(())
    }

    /// Removes an edge, returning its color if it was present.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<Option<Color>> {
        let (a, b) = self.check_pair(u, v)?;
        let old = self.colors[a * self.n + b];
        if old == 0 {
            return Ok(None);
        }
        self.unput(a, b);
        Ok(Some(old))
    }

    // unchecked insert on 0-based endpoints
    pub(crate) fn put(&mut self, a: usize, b: usize, c: Color) {
        debug_assert!(self.colors[a * self.n + b] == 0);
        self.colors[a * self.n + b] = c;
        self.colors[b * self.n + a] = c;
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        self.edge_count += 1;
    }

    pub(crate) fn unput(&mut self, a: usize, b: usize) {
        debug_assert!(self.colors[a * self.n + b] != 0);
        self.colors[a * self.n + b] = 0;
        self.colors[b * self.n + a] = 0;
        self.adj[a].remove(b);
        self.adj[b].remove(a);
        self.edge_count -= 1;
    }

    pub fn color(&self, u: Vertex, v: Vertex) -> Option<Color> {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return None;
        }
        match self.colors[(u - 1) * self.n + (v - 1)] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.color(u, v).is_some()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].count()
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.adj[v - 1].iter().map(|i| i + 1).collect()
    }

    #[inline]
    pub(crate) fn color0(&self, a: usize, b: usize) -> Color {
        self.colors[a * self.n + b]
    }

    #[inline]
    pub(crate) fn adj0(&self, a: usize) -> &Bitset {
        &self.adj[a]
    }

    /// Edges as `(u, v, c)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        (0..self.n).flat_map(move |a| {
            let mut row = self.adj[a].clone();
            row.clear_through(a);
            row.iter()
                .map(move |b| (a + 1, b + 1, self.color0(a, b)))
                .collect::<Vec<_>>()
        })
    }

    /// Missing pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.color0(a, b) == 0 {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// True when every edge of `self` is present in `other` with the same color.
    pub fn is_subgraph_of(&self, other: &ColoredGraph) -> bool {
        self.n == other.n && self.edges().all(|(u, v, c)| other.color(u, v) == Some(c))
    }

    /// Copy with every color `c` replaced by `perm[c - 1]`.
    pub fn permute_colors(&self, perm: &[Color]) -> Result<ColoredGraph> {
        let mut seen = vec![false; self.t as usize];
        if perm.len() != self.t as usize {
            return Err(Error::param("color permutation has the wrong length"));
        }
        for &c in perm {
            if c == 0 || c > self.t || std::mem::replace(&mut seen[c as usize - 1], true) {
                return Err(Error::param("not a permutation of the palette"));
            }
        }
        ColoredGraph::from_edges(
            self.n,
            self.t,
            self.edges().map(|(u, v, c)| (u, v, perm[c as usize - 1])),
        )
    }
}

/// JSON form: `{"n": .., "t": .., "edges": [[u, v, c], ..]}`.
impl Serialize for ColoredGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ColoredGraph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        let mut g = ColoredGraph::new(3, 2).unwrap();
        assert!(g.add_edge(1, 1, 1).is_err());
        assert!(g.add_edge(0, 2, 1).is_err());
        assert!(g.add_edge(1, 4, 1).is_err());
        assert!(g.add_edge(1, 2, 3).is_err());
        assert!(g.add_edge(1, 2, 0).is_err());
        g.add_edge(2, 1, 2).unwrap();
        assert!(g.add_edge(1, 2, 1).is_err());
        assert_eq!(g.color(1, 2), Some(2));
        assert_eq!(g.color(2, 1), Some(2));
        assert!(ColoredGraph::new(3, 0).is_err());
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = ColoredGraph::from_edges(4, 3, [(3, 4, 1), (1, 3, 2), (2, 1, 3)]).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(1, 2, 3), (1, 3, 2), (3, 4, 1)]
        );
        assert_eq!(g.non_edges(), vec![(1, 4), (2, 3), (2, 4)]);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.neighbors(3), vec![1, 4]);
    }

    #[test]
    fn remove_and_permute() {
        let mut g = ColoredGraph::from_edges(3, 3, [(1, 2, 1), (2, 3, 2)]).unwrap();
        let p = g.permute_colors(&[3, 1, 2]).unwrap();
        assert_eq!(p.color(1, 2), Some(3));
        assert_eq!(p.color(2, 3), Some(1));
        assert!(g.permute_colors(&[1, 1, 2]).is_err());
        assert_eq!(g.remove_edge(1, 2).unwrap(), Some(1));
        assert_eq!(g.remove_edge(1, 2).unwrap(), None);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn empty_vertex_set() {
        let g = ColoredGraph::new(0, 1).unwrap();
        assert_eq!(g.edges().count(), 0);
        assert!(g.is_complete());
    }
}
