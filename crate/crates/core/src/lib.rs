//! Exact arithmetic in cyclotomic completions `R[q]^S` of polynomial rings,
//! with the Habiro ring `Z[q]^N` as the main example.

pub mod error;
pub mod polyring;

pub use error::{Error, Result};
pub use polyring::{Degree, IntPolynomial, RatPolynomial};
pub mod cyclotomic;
pub mod completion;
pub mod rootexp;
pub mod qcrt;
pub mod selfcheck;
pub mod cli;
