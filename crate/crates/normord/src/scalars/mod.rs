//! Exact scalar arithmetic: big rationals, parameter polynomials, and the
//! rational-function field the whole crate computes over.

mod parampoly;
mod paramrat;
mod rational;

pub use parampoly::{gcd, Monomial, ParamPoly, Symbol};
pub use paramrat::{ParamEnv, ParamRat};
pub use rational::{roots_of_quadratic, Rat};
