use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the geometry and indicator code is generic over.
///
/// Implemented for `f32` and `f64`. Indicators involve `exp`, `ln` and
/// fractional powers, so exact/rational types are not supported.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal. Panics only for values the type cannot represent at all.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `a` is smaller than `b` by more than a relative tolerance.
///
/// Tie-aware comparisons keep index-based tie-breaking stable when two sets differ
/// only by floating-point rounding (e.g. a front and its reflection).
#[inline]
pub(crate) fn clearly_less<T: Scalar>(a: T, b: T, rel: T) -> bool {
    let scale = a.abs().max(b.abs()).max(T::one());
    a < b - rel * scale
}

/// Relative tolerance used for tie detection.
#[inline]
pub(crate) fn tie_tol<T: Scalar>() -> T {
    // f32 rounding is ~1e-7; keep ties meaningful there too.
    T::epsilon()
        .sqrt()
        .min(T::lit(1e-12))
        .max(T::epsilon() * T::lit(64.0))
}
