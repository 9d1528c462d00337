//! Hilbert functions, Macaulay growth and postulation characters of ACM
//! subschemes in exact integer arithmetic.

pub mod binomial;
pub mod character;
pub mod cli;
pub mod codim3;
pub mod enumerate;
pub mod error;
pub mod growth;
pub mod intfun;
pub mod lex;

pub use error::{Error, Result};
