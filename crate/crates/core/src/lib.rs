//! Rainbow saturation of edge-colored graphs at desk scale.
//!
//! * [`graph`]: `t`-edge-colored graphs, rainbow `K_s` detection and the
//!   saturation predicate.
//! * [`codes`]: string families whose members pairwise separate every
//!   `s`-subset of the alphabet, with explicit constructions, greedy and exact
//!   searches, concatenation products and rate reports.
//! * [`construct`]: the complete bipartite graph of a code and its saturating
//!   extension.
//! * [`oracle`]: exhaustive saturation numbers, a replay of the lower-bound
//!   counting argument on concrete graphs, and the asymptotic formulas.
//! * [`cli`]: the `rainbow-sat` command line.
//!
//! Inner loops run on rayon when the `parallel` feature is on (the default)
//! and the current pool has more than one thread; results do not depend on
//! the thread count.

pub mod bitset;
pub mod cli;
pub mod codes;
pub mod construct;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod par;

pub use codes::{SearchConfig, StringFamily};
pub use error::{Error, Result};
pub use graph::{Color, ColoredGraph, SaturationReport, Vertex};
