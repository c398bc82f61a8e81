//! Tournament solutions with exact equilibria.
//!
//! Computes the Copeland set, top cycle, uncovered set, Banks set and
//! bipartisan set of arbitrary tournaments, builds the order-36 tournament
//! in which the Banks set and the bipartisan set are disjoint, and checks
//! every claim about it mechanically.
//!
//! The game solver is generic over an exact field ([`games::ExactScalar`]);
//! [`Rational`] and [`Lottery`] fix the arbitrary-precision instance used
//! everywhere else.

pub mod construction;
pub mod error;
pub mod games;
pub mod io;
pub mod perm;
pub mod search;
pub mod set;
pub mod solutions;
pub mod symmetry;
pub mod transitive;
pub mod tournament;
pub mod verify;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use set::ChoiceSet;
pub use solutions::Rule;
pub use tournament::{AlternativeId, Restriction, SkewAdjacency, Tournament};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Equilibrium lottery with arbitrary-precision weights.
pub type Lottery = games::Lottery<Rational>;

/// Small-integer rational for instances known not to overflow.
pub type Rational64 = num_rational::Rational64;
