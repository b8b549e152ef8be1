//! Exact decision procedures for separability and weak separability of
//! quotients `A = R/fR` of skew polynomial rings `R = B[X; ρ, D]`.
//!
//! The base ring `B` is a free module of finite rank over ℤ or ℤ/n given by
//! structure constants. All computations are exact.
//!
//! Module map:
//! * [`linalg`]: HNF/SNF, kernels, images, subgroup lattice operations.
//! * [`base_ring`]: structure-constant rings, automorphisms, twisted derivations.
//! * [`skew_poly`]: arithmetic in `B[X; ρ, D]`, the `Φ` maps, `R(0)` membership.
//! * [`quotient`]: the quotient ring `A` and its subgroups `A_k`, `V`, `C(A)`, `Ker τ`.
//! * [`separability`]: the decisions, exactness reports and the derivation oracle.
//! * [`sweep`]: enumeration of candidate polynomials over finite base rings.

pub mod base_ring;
pub mod catalog;
mod error;
pub mod linalg;
pub mod quotient;
pub mod separability;
pub mod skew_poly;
pub mod sweep;

pub use base_ring::{BaseRing, FixMode, RingElement, RingMap, Violation};
pub use error::Error;
pub use linalg::{CoeffRing, Matrix, Submodule};
pub use quotient::{AElement, QuotientRing};
pub use separability::{
    a1_tau_kernel, build_derivation_from_seed, d_type_checks, derivation_module, exactness_report,
    inner_derivation_matrix, is_b_derivation, is_separable, is_weakly_separable, oracle_weakly_separable, DTypeReport,
    DerivationModule, ExactnessReport, OracleReport, Separability, Verdict,
};
pub use skew_poly::{R0Check, R0Failure, SkewPoly, SkewPolyRing};
