use std::fmt::Debug;

use num_traits::{Float, FromPrimitive};

/// Floating point scalar used by the eigensolver: `f32` or `f64`.
pub trait Scalar: Float + FromPrimitive + Debug + Send + Sync + 'static {
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).unwrap_or_else(Self::nan)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
