//! Exact linear and centered chromatic numbers of small graphs.
//!
//! A *linear coloring* gives every path a vertex whose color is unique on that
//! path; a *centered coloring* asks the same of every connected subgraph. The
//! minimum palettes are the linear chromatic number `χlin` and the centered
//! chromatic number `χcen`, which equals treedepth.
//!
//! The crate is organized as:
//!
//! * [`graph`]: bit-row graphs on at most 64 vertices, named families,
//!   graph6 I/O, canonical forms, enumeration and subgraph containment.
//! * [`verify`]: proper / linear / centered verifiers with witnesses, and
//!   elimination-forest certificates.
//! * [`solve`]: exact `χcen` (treedepth) and `χlin` with witnesses.
//! * [`construct`]: explicit colorings for the classes where the values are
//!   known in closed form.
//! * [`obstruct`]: mining subgraph-minimal obstructions to `χlin <= k`.
//! * [`scan`]: claim checks over graph streams (ratios, class theorems).
//!
//! ```
//! use chromlab::graph::path_graph;
//! use chromlab::solve::{centered_chromatic, linear_chromatic};
//!
//! let p8 = path_graph(8).unwrap();
//! assert_eq!(linear_chromatic(&p8).value, 4);
//! assert_eq!(centered_chromatic(&p8).value, 4);
//! ```

pub mod cli;
pub mod coloring;
pub mod construct;
pub mod error;
pub mod forest;
pub mod graph;
pub mod obstruct;
pub mod partitions;
pub mod scan;
pub mod solve;
mod tally;
pub mod verify;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use forest::EliminationForest;
pub use graph::{Graph, VertexSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/colorings.md")]
    mod colorings {}
    #[doc = include_str!("../../../book/src/solvers.md")]
    mod solvers {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/obstructions.md")]
    mod obstructions {}
    #[doc = include_str!("../../../book/src/scans.md")]
    mod scans {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
