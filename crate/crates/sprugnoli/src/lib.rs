//! Exact computations with generating-function-defined triangular arrays:
//! ordinary and vertically stretched Riordan arrays, double Riordan arrays,
//! Sprugnoli arrays and their order-m generalization, together with
//! production matrices, stripe sequences, and a closed-form expression
//! parser for building fixtures. All arithmetic is over arbitrary-precision
//! rationals; nothing is ever rounded.

pub mod double;
pub mod error;
pub mod expr;
pub mod general;
pub mod matrix;
pub mod production;
pub mod rational;
pub mod riordan;
pub mod series;
pub mod sprugnoli;

pub use double::DoubleTriple;
pub use error::Error;
pub use expr::{eval, gf, parse, ExprAst};
pub use general::{general_inv, general_mul, stripe_zero_pattern, GeneralInverse, GeneralTuple, StripeSumPattern};
pub use matrix::{SquareMatrix, TriMatrix};
pub use production::{ab_series_closed_form, extract_stripes, production_matrix, recurrence_check, ProductionStripes};
pub use rational::Rational;
pub use riordan::{RiordanPair, StretchedPair};
pub use series::{jacobi_cf, Series};
pub use sprugnoli::{compute_r1, compute_r2, from_riordan_sqrt_case, InverseParts, SprugnoliTriple, SumsMode};
