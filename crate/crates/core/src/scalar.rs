use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, One, ToPrimitive, Zero};

/// Floating scalar used by the spectral, index and measure code.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("usize representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Field elements that can hold the square root of a non-negative integer.
///
/// Floats always can; exact rationals only when the integer is a perfect square.
pub trait RootField:
    Clone
    + PartialOrd
    + Zero
    + One
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
{
    fn from_int(v: i64) -> Self;
    fn sqrt_int(v: u64) -> Option<Self>;
}

impl RootField for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn sqrt_int(v: u64) -> Option<Self> {
        Some((v as f64).sqrt())
    }
}

impl RootField for f32 {
    fn from_int(v: i64) -> Self {
        v as f32
    }
    fn sqrt_int(v: u64) -> Option<Self> {
        Some((v as f32).sqrt())
    }
}

impl RootField for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn sqrt_int(v: u64) -> Option<Self> {
        exact_isqrt(v).map(|r| BigRational::from_integer(BigInt::from(r)))
    }
}

/// Integer square root when `v` is a perfect square.
pub fn exact_isqrt(v: u64) -> Option<u64> {
    let mut r = (v as f64).sqrt() as u64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    (r * r == v).then_some(r)
}
