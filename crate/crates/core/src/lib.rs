//! Exact verification of determinant identities for matrices whose entries
//! are q-integers of floor and ceiling quotients.

pub mod dftcheck;
pub mod error;
pub mod exactring;
pub mod linalg;
pub mod matrix;
pub mod ntheory;
pub mod qmatrix;
pub mod verify;

pub use error::{Error, Result};
