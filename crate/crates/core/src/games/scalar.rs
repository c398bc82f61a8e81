use std::fmt::Debug;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact ordered field. Implemented for every `Ratio<T>` over a signed
/// integer type: `BigRational` for unbounded work, `Ratio<i64>` and friends
/// where the instance is known to stay small.
pub trait ExactScalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync {
    fn from_entry(v: i8) -> Self;
}

impl<T> ExactScalar for Ratio<T>
where
    T: Clone + Debug + Integer + Signed + From<i8> + Send + Sync,
{
    fn from_entry(v: i8) -> Self {
        Ratio::from_integer(T::from(v))
    }
}
