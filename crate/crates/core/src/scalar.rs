//! Floating-point scalars the optimizer can run on.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// A binary floating-point type usable as a simplex coordinate.
///
/// The tolerances are expressed in the scalar's own precision: `f64` uses the
/// thresholds the library is specified against, `f32` scales them to what
/// single precision can actually resolve.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Allowed deviation of `Σ x_i` from 1 for a legal weighting.
    const SIMPLEX_TOL: f64;
    /// Coordinates below this are treated as outside the support.
    const TRIM: f64;
    /// Default stopping tolerance on the KKT residual.
    const KKT_TOL: f64;

    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    fn from_count(v: usize) -> Self {
        Self::from_usize(v).expect("count fits in a float")
    }
}

impl Scalar for f64 {
    const SIMPLEX_TOL: f64 = 1e-12;
    const TRIM: f64 = 1e-12;
    const KKT_TOL: f64 = 1e-10;
}

impl Scalar for f32 {
    const SIMPLEX_TOL: f64 = 1e-5;
    const TRIM: f64 = 1e-7;
    const KKT_TOL: f64 = 1e-5;
}
