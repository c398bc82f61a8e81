//! Exact equilibria of symmetric zero-sum games.
//!
//! Everything here is generic over an exact ordered field ([`ExactScalar`]);
//! the crate root fixes the arbitrary-precision instance as
//! [`crate::Rational`]. Floating-point types are deliberately not scalars:
//! supports are read off as strictly positive weights with no tolerance.

mod lottery;
mod scalar;
mod simplex;

pub use lottery::{slacks, verify_equilibrium, Lottery};
pub use scalar::ExactScalar;
pub use simplex::{solve_skew_symmetric, solve_symmetric_zero_sum, PivotStats};
