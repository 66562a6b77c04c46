//! Injectivity and surjectivity orders of Taylor maps for spaces of
//! polynomials, differential operators preserving them, and the toric
//! combinatorics that predicts both.

pub mod algebra;
pub mod cli;
pub mod config;
pub mod diffops;
pub mod error;
pub mod jets;
pub mod linalg;
pub mod toric;
pub mod verify;

pub use config::ComputeConfig;
pub use error::{Error, Result};
