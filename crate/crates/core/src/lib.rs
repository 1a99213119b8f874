//! Exact arithmetic toolkit for nilpotent Lie algebras of dimension at most
//! six: structure constants, faithful (nil)representations, and the bounds
//! engine for the minimal representation dimensions μ and μ_nil.

pub mod catalog;
pub mod exactnum;
pub mod liealg;
pub mod linalg;
pub mod symbolic;
