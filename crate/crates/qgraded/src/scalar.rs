//! Scalar abstraction for the numeric core.

use std::fmt;
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Euclid, Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar type the matrix representations are built over: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Euclid
    + Sum
    + Default
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for a complex number with real part `re` and zero imaginary part.
pub fn cplx<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// Converts an `f64` constant (tolerances, frozen values) into `T`.
pub fn from_f64<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

/// Converts a nonnegative integer into `T`.
pub fn from_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("index representable in scalar type")
}
