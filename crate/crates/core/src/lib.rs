//! List colouring: exact and polynomial-time solvers, choosability
//! checking, hardness-reduction builders with certificates, and a text
//! format for instances.

pub mod choosability;
pub mod decompose;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod lists;
pub mod peel;
pub mod reductions;
pub mod solvers;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Vertex};
pub use lists::{check_colouring, Colour, ColourSet, Colouring, Instance, ListAssignment, Precolouring};
