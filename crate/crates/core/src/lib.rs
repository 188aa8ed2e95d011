//! Exact realizability checks for Π-algebras concentrated in two degrees.

pub mod cli;
pub mod error;
pub mod fgab;
pub mod int;
pub mod io;
pub mod matrix;
pub mod pi_functors;
pub mod quadratic;
pub mod realizability;
pub mod report;
pub mod selftest;
pub mod snf;
pub mod tables;

pub use error::{Error, Result};
pub use fgab::{FgAbGroup, GroupHom};
pub use int::Int;
