//! Exact computer algebra for normal ordering and exponential identities.
//!
//! Two noncommuting generators `A` and `B` satisfy a prescribed commutator
//! relation `[B, A] = BA - AB`, given either as a polynomial in `A` alone,
//! in `B` alone, or as a bivariate polynomial of total degree at most two.
//! On top of that algebra the crate provides:
//!
//! - normal ordering of words and polynomials ([`ncalg`]), by a chain-rule
//!   rewriter for univariate relations and a grade-by-grade linear solver
//!   for bivariate ones, all over exact rational-function coefficients;
//! - truncated formal power series in a central variable `t` with
//!   polynomial coefficients ([`series`]): products, exp, log, integration,
//!   scalar powers computed by two independent routes, and the formal
//!   exponentiation `x^B = sum_n (x-1)^n C(B, n)`;
//! - Stirling, Lah, and generalized Stirling numbers with cross-checking
//!   implementations ([`combinat`]);
//! - an order-by-order solver for the Cauchy problem behind conjugation
//!   identities of the form `exp((f(A)B + g(A))t)` ([`viskov`]);
//! - a faithful differential-operator representation `A -> x`,
//!   `B -> p(x) d/dx` acting on exact polynomials ([`oracle`]), used as an
//!   independent evidence channel;
//! - a catalog of named operator identities — binomial theorems,
//!   exponential disentangling identities, ordering formulas — each checked
//!   mechanically to a configurable order ([`verify`]), plus the expression
//!   parser and report types behind the `normord` command-line tool.
//!
//! All arithmetic is exact: coefficients are rational functions of the
//! declared parameters over arbitrary-precision rationals ([`scalars`]).
//! Nothing is floating point and every check is an exact structural
//! comparison.

pub mod combinat;
pub mod error;
pub mod ncalg;
pub mod oracle;
pub mod render;
pub mod scalars;
pub mod series;
pub mod verify;
pub mod viskov;

pub use error::{Error, Result};
