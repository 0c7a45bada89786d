//! Exact computation of the space W(f) of polynomials `p` with
//! `deg p ≤ deg f − 2` and `f | f″p − f′p′`, together with the interpolation
//! spaces `Z(η, ω; s, k)` it reduces to.
//!
//! Three routes are provided and cross-checked by [`classifier::classify`]:
//! a brute-force kernel ([`oracle`]), the reduction to an interpolation space
//! ([`bridge`] + [`zspace`]), and a closed-form case analysis.

pub mod approx;
pub mod bridge;
pub mod classifier;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod verify;
pub mod zspace;

pub use error::{Error, Result};
pub use poly::{FactoredInput, Poly};
pub use scalar::{ExactScalar, FieldDescriptor};
