use std::fmt::Debug;
use std::ops::Neg;

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, ToPrimitive};

use crate::Integer;

/// Coefficient type for the group algebra and the series engine.
///
/// Exact computations use [`crate::Rational`]; the integral [`crate::Integer`]
/// is enough for products of class sums, and `f64`/`f32` are available for
/// quick numerical experiments.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + Debug + PartialEq + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + Debug + PartialEq + Send + Sync + 'static
{
}

/// Conversion from exact rationals, for scalars that can hold them.
pub trait FromRational: Scalar {
    fn from_rational(q: &BigRational) -> Self;
}

impl FromRational for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl FromRational for f64 {
    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

impl FromRational for f32 {
    fn from_rational(q: &BigRational) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }
}

impl FromRational for Integer {
    /// Panics on a non-integral rational.
    fn from_rational(q: &BigRational) -> Self {
        assert!(q.is_integer(), "{q} is not an integer");
        q.to_integer()
    }
}

/// `value` as a scalar. All scalars here represent every `i64` closely enough.
pub(crate) fn from_i64<S: Scalar>(value: i64) -> S {
    S::from_i64(value).expect("scalar cannot represent an i64")
}
