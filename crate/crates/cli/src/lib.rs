//! Text front end for `glweb`: the web expression language, JSON export and
//! the acceptance suite behind the `glweb` binary.

pub mod dsl;
pub mod json;
pub mod suite;
