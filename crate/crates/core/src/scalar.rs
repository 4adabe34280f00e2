//! Exact scalar rings for cofactor evaluation.
//!
//! Counting needs exact arithmetic, so floating point types are not
//! admitted. Fixed-width integers report overflow through the checked
//! operations; big integers and rationals never overflow.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

/// A commutative ring with exact (possibly failing) arithmetic in which
/// Bareiss divisions are exact.
pub trait ExactScalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
{
    fn from_i64(v: i64) -> Self;
}

impl ExactScalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl ExactScalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl ExactScalar for num_bigint::BigInt {
    fn from_i64(v: i64) -> Self {
        v.into()
    }
}

impl ExactScalar for num_rational::BigRational {
    fn from_i64(v: i64) -> Self {
        num_rational::BigRational::from_integer(v.into())
    }
}
