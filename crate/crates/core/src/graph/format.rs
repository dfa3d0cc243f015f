//! Colored-graph text format.
//!
//! ```text
//! # optional comment lines
//! n t
//! u v c
//! ...
//! ```
//!
//! Edge lines need `1 <= u < v <= n` and `1 <= c <= t`; a repeated pair is a
//! load error. Blank lines are ignored. Output lists edges lexicographically.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use super::{Color, ColoredGraph};
use crate::error::{Error, Result};

fn fields<T: FromStr>(line: &str, lineno: usize, want: usize) -> Result<Vec<T>> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != want {
        return Err(Error::parse(
            lineno,
            format!("expected {want} integers, found {}", parts.len()),
        ));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<T>()
                .map_err(|_| Error::parse(lineno, format!("not a non-negative integer: {p:?}")))
        })
        .collect()
}

impl FromStr for ColoredGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut graph: Option<ColoredGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match graph.as_mut() {
                None => {
                    let h: Vec<usize> = fields(line, lineno, 2)?;
                    let t = Color::try_from(h[1])
                        .map_err(|_| Error::parse(lineno, "palette size too large"))?;
                    graph = Some(
                        ColoredGraph::new(h[0], t).map_err(|e| Error::parse(lineno, e.to_string()))?,
                    );
                }
                Some(g) => {
                    let e: Vec<usize> = fields(line, lineno, 3)?;
                    let (u, v) = (e[0], e[1]);
                    if !(1 <= u && u < v && v <= g.n()) {
                        return Err(Error::parse(
                            lineno,
                            format!("edge endpoints must satisfy 1 <= u < v <= {}", g.n()),
                        ));
                    }
                    let c = Color::try_from(e[2])
                        .map_err(|_| Error::parse(lineno, "color too large"))?;
                    if g.has_edge(u, v) {
                        return Err(Error::parse(lineno, format!("duplicate pair {u} {v}")));
                    }
                    g.add_edge(u, v, c)
                        .map_err(|e| Error::parse(lineno, e.to_string()))?;
                }
            }
        }
        graph.ok_or_else(|| Error::parse(0, "missing \"n t\" header"))
    }
}

impl fmt::Display for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.t())?;
        for (u, v, c) in self.edges() {
            writeln!(f, "{u} {v} {c}")?;
        }
        Ok(())
    }
}

impl ColoredGraph {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        fs::read_to_string(path)?.parse()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_string())?;
        Ok(())
    }
}
