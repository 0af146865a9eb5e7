//! Dominating induced matchings in simple graphs.
//!
//! A *dominating induced matching* (DIM) of a graph is a set of edges, no two
//! sharing a vertex or joined by an edge, such that every edge of the graph
//! touches one of them. This crate finds and enumerates DIMs, partitions edge
//! sets into DIMs, builds the Kneser-type graphs whose edge sets split into
//! DIMs in closed form, and checks the structural facts DIMs obey on concrete
//! graphs.
//!
//! ```
//! use dimatch::{generators, solver};
//!
//! let petersen = generators::petersen();
//! assert_eq!(solver::dim_size(&petersen), Some(3));
//! assert!(solver::find_dim(&generators::cycle(4).unwrap()).is_none());
//! ```
//!
//! The guide under `book/` explains the concepts; its code snippets are
//! compiled and run as doc tests of this crate.

pub mod corpus;
pub mod cycles;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod partition;
pub mod solver;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Regularity};
pub use partition::{DimPartition, ListAssignment};
pub use solver::{Matching, Verdict};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/dims.md")]
    mod dims {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/kneser.md")]
    mod kneser {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
