//! Exact scramble orders, order-k edge connectivity, component independence
//! and divisorial gonality for small multigraphs.

pub mod count;
pub mod divisor;
pub mod error;
pub mod flow;
pub mod graph;
pub mod invariants;
pub mod scramble;
pub mod verify;

pub use count::ExtendedCount;
pub use error::{Error, Result};
pub use graph::{Family, Multigraph, VertexSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/graphs.md")]
    struct Graphs;
    #[doc = include_str!("../../../book/src/cuts.md")]
    struct Cuts;
    #[doc = include_str!("../../../book/src/invariants.md")]
    struct Invariants;
    #[doc = include_str!("../../../book/src/scrambles.md")]
    struct Scrambles;
    #[doc = include_str!("../../../book/src/chip-firing.md")]
    struct ChipFiring;
    #[doc = include_str!("../../../book/src/theorems.md")]
    struct Theorems;
}
