//! Exact computation of defining relations of Nichols algebras of diagonal type.

pub mod error;
pub mod identities;
pub mod io;
pub mod linalg;
pub mod relations;
pub mod braid;
pub mod braiding;
pub mod calculus;
pub mod cli;
pub mod degsearch;
pub mod scalar;
pub mod specialize;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::Scalar;
