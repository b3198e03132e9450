//! Exact chromatic symmetric functions, their noncommutative analogs for
//! paths, and verification of Schur positivity for spiders S(a,2,1) and S(a,4,1).

pub mod analogs;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod graphs;
pub mod nsym;
pub mod rational;
pub mod sym;
pub mod yamanouchi;

pub use error::{Error, Result};
