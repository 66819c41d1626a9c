//! Exact independence, core/corona and matching machinery for small simple
//! graphs, with witness-producing checkers for the inequalities that tie
//! them together.

pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod lemma;
pub mod matching;
pub mod mis;
pub mod search;
pub mod set;

pub use error::{CapOverflow, GraphError};
pub use generate::{generate, GraphFamily};
pub use graph::Graph;
pub use matching::{HallCertificate, Matching};
pub use mis::{CoreCorona, FamilyKind, MisFamily};
pub use set::VertexSet;
