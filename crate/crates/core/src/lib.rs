//! Number of complex realizations of Laman graphs on the sphere, up to
//! rotations, computed as the degree of a product of boundary-divisor sums
//! on the moduli space of stable rational curves with `2n` marked points.
//!
//! The pieces:
//!
//! - [`graph`], [`graph6`], [`pebble`], [`canon`]: graphs, their encodings,
//!   Laman testing and isomorphism-invariant forms.
//! - [`count`]: the degree recursion with bitset blocks and memoization.
//! - [`generator`]: Laman graphs up to isomorphism by Henneberg moves.
//! - [`oracle`]: an independent check on tiny graphs that solves the
//!   cross-ratio system on the projective line exactly.

pub mod canon;
pub mod count;
pub mod error;
pub mod generator;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod pebble;

pub use count::{count_realizations, to_count_problem, CountOptions, CountProblem, Counter, Quad};
pub use error::{CountError, GraphError};
pub use graph::{parse_graph, parse_graphs, Format, Graph};

/// Realization count of a graph with default counting options.
pub fn count_graph(g: &Graph) -> Result<num_bigint::BigUint, Box<dyn std::error::Error + Send + Sync>> {
    Ok(count_realizations(&to_count_problem(g)?)?)
}
