//! Constructive hitting sets for the maximum stable sets of graphs in
//! hereditary classes, with exact oracles to check them against.
//!
//! `η(G)` is the least size of a vertex set meeting every maximum stable set
//! of `G`. The [`cradle`] module builds such sets for P5-free graphs with a
//! size bounded in terms of `ω(G)` alone; [`bounders`] does the same for
//! several further classes. Every result can be verified with [`oracle`].

pub mod error;
pub mod graph;
pub mod oracle;
pub mod ramsey;
pub mod cradle;
pub mod bounders;
pub mod generators;
pub mod cli;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, View};
