//! Lagrangians of uniform hypergraphs.
//!
//! The Lagrangian of an `r`-graph `G` on `[n]` is the maximum of
//! `w(G, x) = Σ_{e ∈ E} Π_{i ∈ e} x_i` over the probability simplex. This
//! crate evaluates and maximizes it, builds colex initial segments
//! `C_{r,m}`, performs left-compression, and runs an exhaustive harness
//! comparing the maximum Lagrangian over all `m`-edge 3-graphs with
//! `λ(C_{3,m})` and the known upper bounds.
//!
//! The optimizer is generic over [`Scalar`] (`f32` or `f64`); closed forms
//! are exact [`Rational`]s. The aliases below fix the scalar to `f64`,
//! which is what the bounds and the harness use.

pub mod bounds;
pub mod combinatorics;
mod error;
pub mod format;
pub mod hypergraph;
pub mod lagrangian;
pub mod rng;
mod scalar;
pub mod verify;

pub use combinatorics::{ColexIndex, Rational, RealShape};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, PairCoverage};
pub use scalar::Scalar;

pub type Weighting = lagrangian::Weighting<f64>;
pub type Weighting32 = lagrangian::Weighting<f32>;
pub type Estimate = lagrangian::LagrangianEstimate<f64>;
pub type Estimate32 = lagrangian::LagrangianEstimate<f32>;
