use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::kronecker::{mul_kronecker, KRONECKER_MIN_LEN};

/// Exact coefficient ring for [`super::Poly`].
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self;

    fn from_u64(v: u64) -> Self;

    /// Division by a small positive integer known to be exact.
    fn div_u64(&self, d: u64) -> Self;

    /// Ring-specific product of coefficient slices, used by `*` when it
    /// beats Karatsuba. `None` means no faster route.
    fn fast_mul(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>> {
        None
    }
}

impl Scalar for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn from_u64(v: u64) -> Self {
        BigInt::from(v)
    }

    fn div_u64(&self, d: u64) -> Self {
        debug_assert!((self % d).is_zero());
        self / d
    }

    fn fast_mul(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        (a.len().min(b.len()) >= KRONECKER_MIN_LEN).then(|| mul_kronecker(a, b))
    }
}

impl Scalar for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn div_u64(&self, d: u64) -> Self {
        self / BigRational::from_integer(BigInt::from(d))
    }
}
