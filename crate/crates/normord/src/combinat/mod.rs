//! Commutative polynomial utilities and counting families.

mod numbers;
mod unipoly;

pub use numbers::{
    bessel_poly, bracket_eval, falling_factorial_poly, frak_f_series, gen_stirling,
    gen_stirling_binom_sum, gen_stirling_double_sum, lah, rising_factorial_poly, stirling1,
    stirling1_unsigned, stirling2, stirling2_closed,
};
pub use unipoly::UniPoly;
