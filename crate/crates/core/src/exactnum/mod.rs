//! Exact scalars: rationals, quadratic extensions of ℚ and the ring/field
//! traits the rest of the crate is generic over.

mod field;
mod quadext;
mod rational;

pub use field::{Field, Ring};
pub use quadext::{QuadExt, QuadExtError, Radicand};
pub use rational::{ceil_two_sqrt, rational_is_square, ParseRationalError, Rational};
