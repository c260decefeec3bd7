//! Exact graph diameter computation guided by structural parameters.
//!
//! Every solver returns the same number as [`oracle::naive_diameter`] (one
//! BFS per vertex) but exploits a small parameter of the input: feedback
//! edge number ([`fes`]), distance to cographs ([`cograph`]), h-index
//! ([`hindex`]), or a deletion set to cliques ([`deletion`]). The
//! [`constructions`] module builds instances whose diameter is tied to an
//! input graph or formula.

pub mod cograph;
pub mod constructions;
pub mod deletion;
pub mod error;
pub mod fes;
pub mod graph;
pub mod hindex;
pub mod io;
pub mod oracle;
pub mod params;
pub mod traverse;

pub use error::{Error, Result};
pub use graph::Graph;
