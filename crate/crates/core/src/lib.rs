//! Symmetric `gl_n` webs, exactly.
//!
//! Diagrams are built in [`webcat`], sent to matrices of quantum-group
//! intertwiners by [`functor`], and every relation between them can be
//! checked with [`verify`]. All arithmetic is exact, over the Laurent ring
//! `Z[q^(1/n), q^(-1/n)]` and its fraction field.
#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

mod error;

pub mod dotu;
pub mod functor;
pub mod glnmod;
pub mod linalg;
pub mod qalg;
pub mod verify;
pub mod webcat;

pub use error::Error;
pub use qalg::{LaurentFraction, LaurentPoly};
