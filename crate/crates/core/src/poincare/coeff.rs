use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Unsigned};

/// Exact nonnegative integer coefficients. Implemented for every unsigned
/// primitive and for `BigUint`; arithmetic is checked so that fixed-width
/// types report overflow instead of wrapping.
pub trait Coeff:
    Integer + Unsigned + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + Clone + Debug + Display
{
}

impl<T> Coeff for T where
    T: Integer + Unsigned + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + Clone + Debug + Display
{
}
