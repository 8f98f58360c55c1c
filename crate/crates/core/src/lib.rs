//! Exact similarity solution of a two-phase solidification problem with a
//! mushy zone on a semi-infinite slab, cooled through a convective boundary
//! condition `k1 θ1x(0,t) = (h0/√t)(θ1(0,t) + D∞)`.
//!
//! The crate covers the transcendental equations that fix the free
//! boundaries, the solvability threshold in `h0`, the correspondence with the
//! problem under a prescribed boundary temperature, numerical certification
//! of the closed forms, and the `O(1/h0)` approach to the temperature problem
//! as `h0 → ∞`.

// `!(a < b)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// published coefficients and frozen reference values are kept verbatim
#![allow(clippy::excessive_precision)]

pub mod asymptotics;
pub mod config;
pub mod equivalence;
mod error;
pub mod model;
pub mod numerics;
pub mod solver;
pub mod transcendental;
pub mod verify;

pub use error::{Error, Result};
pub use model::{ConvectiveBc, DirichletBc, Material, MaterialParams};
pub use numerics::RootConfig;
pub use solver::{solve_convective, solve_dirichlet, BoundaryKind, PointEval, Region, SimilaritySolution};
pub use transcendental::{compute_threshold, ThresholdRegime, ThresholdReport};
