//! Exact-arithmetic workbench for finite hypervector spaces and bipolar
//! fuzzy soft sets.
//!
//! Every degree is an exact rational, every structure is a finite table,
//! and every law is checked by exhaustive enumeration.

pub mod algebra;
pub mod bipolar;
pub mod cli;
mod error;
pub mod hvs_ops;
pub mod io;
pub mod lab;
pub mod rational;
pub mod soft;
pub mod structure;
pub mod transform;

pub use error::{Error, Result};
pub use rational::Rational;
