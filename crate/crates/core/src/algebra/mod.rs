//! Exact arithmetic: rationals, multi-indices, sparse polynomials over ℚ and
//! normally ordered Weyl-algebra operators acting on them.

mod exponent;
mod operator;
mod polynomial;
mod rational;
pub mod serialize;

pub use exponent::{binomial_count, Exponent};
pub use operator::{DifferentialOperator, Weight};
pub use polynomial::{var_name, Polynomial};
pub use rational::{format_rational, int, one, parse_rational, rat, zero, Rational};
