//! Webs as layered diagrams and their formal linear combinations.

pub mod build;
mod diagram;
mod expr;
mod object;

pub use diagram::{CrossDir, Diagram, Gen, Sense};
pub use expr::{compose_all, tensor_all, Flavor, WebExpr};
pub use object::{Orient, Strand, WebObject};
