//! An independent check of the recursive count.
//!
//! [`sphere`] holds the geometry: points on the complex sphere, their two
//! lifts to the projective line, and spherical distances recovered as
//! cross-ratios of lifts. [`oracle_count`] solves the resulting cross-ratio
//! system exactly over the rationals for very small graphs.

pub mod poly;
pub mod sphere;
mod system;

pub use system::{oracle_count, oracle_count_random, DistanceAssignment, MAX_ORACLE_N};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("point is not on the sphere x² + y² + z² = 1")]
    NotOnQuadric,
    #[error("(0:0) is not a point of the projective line")]
    ZeroProjectivePoint,
    #[error("cross-ratio of coincident points")]
    CoincidentPoints,
    #[error("both chart representatives of a lift vanish")]
    DegenerateLift,
    #[error("distance assignment does not match the edge set")]
    DistanceDomain,
    #[error("degenerate distance assignment; redraw")]
    Degenerate,
    #[error("non-generic distance assignment ({0}); redraw")]
    NonGeneric(&'static str),
    #[error("unsupported graph: {0}")]
    Unsupported(String),
}
