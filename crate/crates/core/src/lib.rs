//! Tools for generalized Turán problems on books.
//!
//! A book `B(r,s)` is a pair of `r`-cliques sharing exactly `s` vertices. The
//! crate counts cliques in graphs that avoid a family of such books (and other
//! fixed patterns), builds the known extremal constructions, and computes
//! `ex(n, K_r, F)` exactly for small `n` with two independent exhaustive
//! engines. A Zykov-symmetrization hill climber covers larger `n` heuristically.
//!
//! ```
//! use booklab::{constructions, graph::count_cliques, patterns::{is_free, ForbiddenFamily}};
//!
//! let g = constructions::book_extremal(8, 4, 1).unwrap();
//! assert_eq!(count_cliques(&g, 4), 9);
//! let family: ForbiddenFamily = "B(4,1)".parse().unwrap();
//! assert!(is_free(&g, &family).unwrap());
//! ```

pub mod constructions;
pub mod error;
pub mod graph;
pub mod partitions;
pub mod patterns;
pub mod search;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph, VertexSet};
pub use partitions::Partition;
pub use patterns::{BookSpec, CliqueWitness, ForbiddenFamily};
pub use search::{Engine, SearchOptions, SearchReport};
