//! Ordinals below ε₀, order-type terms, scattered ω*-sums of ordinals and
//! their ℤ-sums, and eventually periodic integer sequences, with a
//! verifier that replays the isomorphism classification end to end.

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
mod lex;
pub mod ordinal;
pub mod scattered;
pub mod seq;
pub mod term;
pub mod verify;

pub use error::{Error, ParseError, Result};
