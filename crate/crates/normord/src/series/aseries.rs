//! Truncated power series in `t` with commutative polynomial coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinat::UniPoly;
use crate::scalars::{ParamEnv, ParamRat, Rat};

/// A series `sum_k c_k t^k` truncated at `t^order`, where each `c_k` is a
/// commutative polynomial (rational exponents allowed) in one generator.
///
/// These carry the scalar-valued data of the calculus — solutions of the
/// scalar Cauchy problem and their integrals — before they are lifted into
/// a noncommutative algebra. Binary operations require equal truncation
/// orders; the constructors make that easy to arrange, so a mismatch is a
/// programming error and panics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ASeries {
    order: usize,
    coeffs: Vec<UniPoly>,
}

impl ASeries {
    /// Build from the low-order coefficients, padding with zeros.
    pub fn new(order: usize, mut coeffs: Vec<UniPoly>) -> Self {
        assert!(
            coeffs.len() <= order + 1,
            "more coefficients than the truncation order admits"
        );
        coeffs.resize(order + 1, UniPoly::zero());
        ASeries { order, coeffs }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> UniPoly) -> Self {
        ASeries {
            order,
            coeffs: (0..=order).map(|k| f(k)).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        ASeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        ASeries::new(order, vec![UniPoly::one()])
    }

    pub fn constant(order: usize, c: UniPoly) -> Self {
        ASeries::new(order, vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(order: usize, k: usize, c: UniPoly) -> Self {
        let mut coeffs = vec![UniPoly::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        ASeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &UniPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(UniPoly::is_zero)
    }

    fn check_order(&self, other: &ASeries) {
        assert_eq!(
            self.order, other.order,
            "series truncation orders differ"
        );
    }

    pub fn scale(&self, c: &ParamRat) -> ASeries {
        ASeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|u| u.scale(c)).collect(),
        }
    }

    /// Termwise integral from 0: the `t^{k+1}` coefficient is `c_k/(k+1)`;
    /// the old top coefficient falls outside the truncation and is dropped.
    pub fn integrate(&self) -> ASeries {
        let mut coeffs = vec![UniPoly::zero(); self.order + 1];
        for k in 0..self.order {
            coeffs[k + 1] = self.coeffs[k]
                .scale(&ParamRat::from_rat(Rat::new(1, k as i64 + 1)));
        }
        ASeries { order: self.order, coeffs }
    }

    /// Substitute `t -> c t`.
    pub fn scale_t(&self, c: &ParamRat) -> ASeries {
        let mut power = ParamRat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|u| {
                let scaled = u.scale(&power);
                power = &power * c;
                scaled
            })
            .collect();
        ASeries { order: self.order, coeffs }
    }

    /// Derivative with respect to `t`.
    pub fn differentiate(&self) -> ASeries {
        let mut coeffs = vec![UniPoly::zero(); self.order + 1];
        for k in 1..=self.order {
            coeffs[k - 1] = self.coeffs[k].scale(&ParamRat::from_int(k as i64));
        }
        ASeries { order: self.order, coeffs }
    }

    pub fn pow(&self, n: usize) -> ASeries {
        let mut acc = ASeries::one(self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn instantiate(&self, env: &ParamEnv) -> crate::error::Result<ASeries> {
        Ok(ASeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|u| u.instantiate(env))
                .collect::<crate::error::Result<_>>()?,
        })
    }

    pub fn to_string_with(&self, var: &str, latex: bool) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, u)| !u.is_zero())
            .map(|(k, u)| {
                let c = u.to_string_with(var, latex);
                match k {
                    0 => c,
                    1 => format!("({c})t"),
                    _ if latex => format!("({c})t^{{{k}}}"),
                    _ => format!("({c})t^{k}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for ASeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("A", false))
    }
}

impl Add for &ASeries {
    type Output = ASeries;
    fn add(self, rhs: &ASeries) -> ASeries {
        self.check_order(rhs);
        ASeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ASeries {
    type Output = ASeries;
    fn sub(self, rhs: &ASeries) -> ASeries {
        self.check_order(rhs);
        ASeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ASeries {
    type Output = ASeries;
    fn neg(self) -> ASeries {
        ASeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &ASeries {
    type Output = ASeries;
    fn mul(self, rhs: &ASeries) -> ASeries {
        self.check_order(rhs);
        let mut coeffs = vec![UniPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        ASeries { order: self.order, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_respects_truncation() {
        // (1 + A t)^2 at order 1 keeps only 1 + 2At.
        let x = ASeries::new(1, vec![UniPoly::one(), UniPoly::x()]);
        let sq = &x * &x;
        assert_eq!(sq.coeff(0), &UniPoly::one());
        assert_eq!(sq.coeff(1), &UniPoly::x().scale(&ParamRat::from_int(2)));
    }

    #[test]
    fn integration_shifts_and_divides() {
        // integral of sum_k eps^k A t^k / k! is A (e^{eps t} - 1)/eps:
        // coefficient of t^{k+1} is eps^k A / (k+1)!.
        let eps = ParamRat::symbol("epsilon");
        let x = ASeries::from_fn(4, |k| {
            UniPoly::x().scale(&eps.pow(k as i64).unwrap().scale(&Rat::factorial(k).recip().unwrap()))
        });
        let y = x.integrate();
        assert!(y.coeff(0).is_zero());
        for k in 0..4usize {
            let want = UniPoly::x().scale(
                &eps.pow(k as i64)
                    .unwrap()
                    .scale(&Rat::factorial(k + 1).recip().unwrap()),
            );
            assert_eq!(y.coeff(k + 1), &want);
        }
        assert!(ASeries::zero(3).integrate().is_zero());
        // integral of 1 is t.
        let one = ASeries::one(2);
        assert_eq!(one.integrate(), ASeries::monomial(2, 1, UniPoly::one()));
    }

    #[test]
    fn derivative_inverts_integration() {
        let x = ASeries::new(
            3,
            vec![UniPoly::zero(), UniPoly::x(), UniPoly::x().pow(2)],
        );
        assert_eq!(x.integrate().differentiate(), x);
    }

    #[test]
    fn t_rescaling() {
        let lam = ParamRat::symbol("lambda");
        let x = ASeries::from_fn(3, |_| UniPoly::one());
        let y = x.scale_t(&lam);
        for k in 0..=3 {
            assert_eq!(
                y.coeff(k),
                &UniPoly::constant(lam.pow(k as i64).unwrap())
            );
        }
    }

    #[test]
    fn rendering() {
        let x = ASeries::new(2, vec![UniPoly::one(), UniPoly::x()]);
        assert_eq!(x.to_string(), "1 + (A)t");
    }
}
