//! Executable relation catalog, closed-web evaluation, pairings and the
//! integral identities.

pub mod basis;
pub mod catalog;
pub mod corpus;
mod eval;
mod integral;
mod pairing;
mod report;

pub use catalog::{check, check_with, Rel, RelationId};
pub use eval::{eval_closed_rewrite, eval_closed_rewrite_with, eval_expr_rewrite, DEFAULT_BUDGET};
pub use basis::{color_change, independence_report, projector_report, rank_of_span, thin_expression, thin_span, two_dumbbell_count, LocalDumbbell};
pub use integral::int_suite;
pub use pairing::{closing_web, closure, closures_report, explosion_shapes, pair, pair_report};
pub use report::{digest, Report, Status, Witness};
