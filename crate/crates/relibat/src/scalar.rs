//! Scalar abstraction for the numeric core.
//!
//! Probability math, decay laws, dataset normalization, and the LSTM are
//! written against [`Scalar`] so they run at `f32` or `f64`. The crate-level
//! aliases and the CLI instantiate everything at `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::str::FromStr;

use num_traits::{Float, FromPrimitive};
use rand::Rng;

/// Floating-point scalar usable throughout the numeric core.
pub trait Scalar:
    Float + FromPrimitive + Sum + Display + Debug + FromStr + Send + Sync + 'static
{
    /// Draws a uniform value on the half-open interval `[0, 1)`.
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Scalar for f64 {
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen::<f64>()
    }
}

impl Scalar for f32 {
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen::<f32>()
    }
}

/// Converts an `f64` constant into `T`.
///
/// Panics only if `T` cannot represent any approximation of `x`, which cannot
/// happen for the float types this crate supports.
#[inline]
pub fn cast<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable in scalar type")
}
