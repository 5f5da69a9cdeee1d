//! The scalar type carried by exponent vectors.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// Unsigned machine integer usable as a monomial exponent.
///
/// Every arithmetic step on exponents goes through the checked operations
/// supplied by [`PrimInt`]; an overflow surfaces as
/// [`Error::ExponentOverflow`](crate::Error::ExponentOverflow).
pub trait Exponent:
    PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static
{
    /// Widen to `u64` for reporting. Saturates for types wider than 64 bits.
    fn to_u64_saturating(self) -> u64 {
        self.to_u64().unwrap_or(u64::MAX)
    }

    /// Narrow from `u64`, returning `None` if the value does not fit.
    fn from_u64(value: u64) -> Option<Self> {
        Self::from(value)
    }
}

impl<T> Exponent for T where
    T: PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static
{
}
