use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;

/// Exact commutative ring with a (partial) exact division.
///
/// Implemented for [`Rational`] and for polynomials in `k`, so Bezoutians and
/// fraction-free determinants can be computed with either numeric or symbolic
/// entries.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `self / divisor` when the quotient exists in the ring, `None` otherwise.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for Rational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}
