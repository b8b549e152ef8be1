use thiserror::Error;

use crate::base_ring::Violation;
use crate::skew_poly::R0Failure;

#[derive(Debug, Error)]
pub enum Error {
    /// Shapes, lengths or ambient spaces do not match.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An operation was called outside its precondition.
    #[error("{0}")]
    Usage(String),

    #[error("invalid ring data: {}", join(.0))]
    InvalidRing(Vec<Violation>),

    #[error("polynomial is not in R(0): {0}")]
    NotInR0(R0Failure),

    #[error("outside B^rho[X] scope: {0}")]
    OutOfScope(String),

    /// A proven identity failed; this indicates a bug, never bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn join(vs: &[Violation]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
