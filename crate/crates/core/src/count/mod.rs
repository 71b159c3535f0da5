//! Degrees of the classes `A(N,Q)` on the moduli space of stable rational
//! curves with marked points.

mod canonical;
mod compact;
mod engine;
mod pivot;
mod problem;
mod split;

pub use canonical::{canonical_key, MemoKey};
pub use engine::{count_realizations, CountOptions, Counter, MemoStats, PivotSide};
pub use pivot::{select_pivot, PivotRule};
pub use problem::{to_count_problem, CountProblem, Label, Quad};
pub use split::{split_classes, star_substitute, SplitClasses};
