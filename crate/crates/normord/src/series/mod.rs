//! Truncated formal power series in `t`, with commutative (`ASeries`) and
//! noncommutative (`TSeries`) coefficients, exponentials, logarithms,
//! scalar and polynomial powers, and the Baker–Campbell–Hausdorff series.

mod aseries;
mod bch;
mod tseries;

pub use aseries::ASeries;
pub use bch::{bch_log, dynkin_series, free_xy, nested_commutator};
pub use tseries::{exp_element, exp_pow_b, lift, Divergence, TSeries};
