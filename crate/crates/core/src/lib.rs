//! Exact mixed volumes of zonotopes in R³ and checkers for the Bézout-type
//! inequality `V(A,A,A)·V(A,B,C) ≤ (3/2)·V(A,A,B)·V(A,A,C)`.
//!
//! All arithmetic is over arbitrary-precision rationals. Floating point only
//! appears in the `*_f64` helpers and in [`Rat::approx_string`].

pub mod error;
pub mod grassmann;
pub mod hull;
pub mod io;
pub mod numeric;
pub mod reduction;
pub mod rng;
pub mod verify;
pub mod witness;
pub mod zonotope;

pub use error::{Error, Result};
pub use grassmann::PlueckerVector;
pub use numeric::{Mat3, Mat3xM, Rat, Vec3};
pub use reduction::{BraidCell, SStats, TwoValuePattern};
pub use verify::{FuzzConfig, FuzzSummary, FuzzTarget, IneqReport};
pub use witness::PolytopeV;
pub use zonotope::Zonotope3;
