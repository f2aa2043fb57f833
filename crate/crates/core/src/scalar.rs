use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar used throughout the crate.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal or tolerance.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Tolerance floor: requested tolerances below a few ulps are clamped.
    fn clamp_tol(tol: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(4.0);
        Self::lit(tol).max(floor)
    }

    /// Like `clamp_tol` but for quantities that accumulate rounding over a
    /// whole eigensolve (cluster widths, projector weights).
    fn accumulated_tol(tol: f64) -> Self {
        let floor = Self::epsilon() * Self::lit(1024.0);
        Self::lit(tol).max(floor)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
