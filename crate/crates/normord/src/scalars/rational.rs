//! Arbitrary-precision rationals.
//!
//! `Rat` wraps `num::BigRational`, which already maintains the invariants we
//! need (fully reduced, denominator positive). The wrapper exists so the
//! rest of the crate sees one small, purposeful API: exact arithmetic,
//! factorials and binomials (including the generalized binomial with a
//! rational upper argument), perfect-square roots, and display.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n / d`; panics if `d == 0` (literal construction only).
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator in rational literal");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_big(n: BigInt, d: BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(n, d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if this is one and it fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        i64::try_from(self.numer().clone()).ok()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    /// Integer power, negative exponents allowed (error on `0^{-n}`).
    pub fn pow(&self, e: i64) -> Result<Rat> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = e.unsigned_abs().try_into().expect("exponent fits i32");
        let p = Rat(self.0.pow(m));
        if e < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }

    /// Exact square root if this is a perfect square of a rational.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let sn = n.sqrt();
        let sd = d.sqrt();
        if &(&sn * &sn) == n && &(&sd * &sd) == d {
            Some(Rat(BigRational::new(sn, sd)))
        } else {
            None
        }
    }

    /// `n!` as a rational.
    pub fn factorial(n: usize) -> Rat {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= BigInt::from(i);
        }
        Rat(BigRational::from_integer(acc))
    }

    /// Binomial coefficient for integer arguments; zero outside the triangle.
    pub fn binomial(n: usize, k: usize) -> Rat {
        if k > n {
            return Rat::zero();
        }
        let k = k.min(n - k);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..k {
            num *= BigInt::from(n - i);
            den *= BigInt::from(i + 1);
        }
        Rat(BigRational::new(num, den))
    }

    /// Generalized binomial `C(x, n) = x(x-1)...(x-n+1)/n!` for rational `x`.
    pub fn binomial_rat(x: &Rat, n: usize) -> Rat {
        let mut acc = Rat::one();
        for i in 0..n {
            acc = &acc * &(x - &Rat::from_int(i as i64));
        }
        &acc / &Rat::factorial(n)
    }

    /// Odd double factorial `(2k-1)!! = 1*3*5*...*(2k-1)`, with `(-1)!! = 1`.
    pub fn double_factorial_odd(k: usize) -> Rat {
        let mut acc = BigInt::one();
        for i in 1..=k {
            acc *= BigInt::from(2 * i - 1);
        }
        Rat(BigRational::from_integer(acc))
    }

    /// Render as LaTeX (`\frac{p}{q}` for non-integers).
    pub fn latex(&self) -> String {
        if self.is_integer() {
            format!("{}", self.numer())
        } else if self.is_negative() {
            format!("-\\frac{{{}}}{{{}}}", self.numer().abs(), self.denom())
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `p`, `-p`, `p/q`, `-p/q`.
impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            line: 1,
            col: 1,
            msg: format!("invalid rational `{s}`"),
        };
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s.trim(), None),
        };
        let n = BigInt::from_str(num_s).map_err(|_| parse_err())?;
        let d = match den_s {
            Some(ds) => BigInt::from_str(ds).map_err(|_| parse_err())?,
            None => BigInt::one(),
        };
        Rat::from_big(n, d).map_err(|_| parse_err())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rat {
    type Output = Rat;
    /// Panics on division by zero; use [`Rat::recip`] for checked division.
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        (&self).div(&rhs)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

/// Roots of `a x^2 + b x + c`, sorted ascending.
///
/// Errors: [`Error::DegreeError`] if `a == 0`, [`Error::IrrationalRoots`]
/// if the discriminant is negative or not a perfect rational square.
pub fn roots_of_quadratic(a: &Rat, b: &Rat, c: &Rat) -> Result<(Rat, Rat)> {
    if a.is_zero() {
        return Err(Error::DegreeError);
    }
    let four_ac = &(&Rat::from_int(4) * a) * c;
    let disc = &(b * b) - &four_ac;
    if disc.is_negative() {
        return Err(Error::IrrationalRoots);
    }
    let s = disc.sqrt_exact().ok_or(Error::IrrationalRoots)?;
    let two_a = &Rat::from_int(2) * a;
    let r1 = &(&(-b) - &s) / &two_a;
    let r2 = &(&(-b) + &s) / &two_a;
    if r1 <= r2 {
        Ok((r1, r2))
    } else {
        Ok((r2, r1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_ordering() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(-3, -6), Rat::new(1, 2));
        assert_eq!(Rat::new(3, -6), Rat::new(-1, 2));
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert_eq!(format!("{}", Rat::new(-7, 2)), "-7/2");
    }

    #[test]
    fn binomials() {
        assert_eq!(Rat::binomial(5, 2), Rat::from_int(10));
        assert_eq!(Rat::binomial(5, 6), Rat::zero());
        // C(1/2, 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(Rat::binomial_rat(&Rat::new(1, 2), 2), Rat::new(-1, 8));
        assert_eq!(Rat::binomial_rat(&Rat::new(1, 2), 0), Rat::one());
        assert_eq!(Rat::factorial(6), Rat::from_int(720));
        assert_eq!(Rat::double_factorial_odd(3), Rat::from_int(15));
        assert_eq!(Rat::double_factorial_odd(0), Rat::one());
    }

    #[test]
    fn sqrt_detection() {
        assert_eq!(Rat::new(9, 4).sqrt_exact(), Some(Rat::new(3, 2)));
        assert_eq!(Rat::from_int(2).sqrt_exact(), None);
        assert_eq!(Rat::from_int(-4).sqrt_exact(), None);
        assert_eq!(Rat::zero().sqrt_exact(), Some(Rat::zero()));
    }

    #[test]
    fn quadratic_roots() {
        // 4 + 3x - x^2 has roots -1 and 4 (as x^2 coefficient -1).
        let (r, rho) = roots_of_quadratic(
            &Rat::from_int(-1),
            &Rat::from_int(3),
            &Rat::from_int(4),
        )
        .unwrap();
        assert_eq!((r, rho), (Rat::from_int(-1), Rat::from_int(4)));
        assert_eq!(
            roots_of_quadratic(&Rat::zero(), &Rat::one(), &Rat::one()),
            Err(Error::DegreeError)
        );
        assert_eq!(
            roots_of_quadratic(&Rat::one(), &Rat::zero(), &Rat::one()),
            Err(Error::IrrationalRoots)
        );
        // double root: x^2 - 2x + 1
        let (r, rho) = roots_of_quadratic(
            &Rat::one(),
            &Rat::from_int(-2),
            &Rat::one(),
        )
        .unwrap();
        assert_eq!((r, rho), (Rat::one(), Rat::one()));
    }

    #[test]
    fn parse() {
        assert_eq!("3/4".parse::<Rat>().unwrap(), Rat::new(3, 4));
        assert_eq!("-2".parse::<Rat>().unwrap(), Rat::from_int(-2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }
}
