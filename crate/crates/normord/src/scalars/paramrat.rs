//! Rational functions of the parameters.
//!
//! A `ParamRat` is a quotient of two `ParamPoly`s kept in canonical form:
//! numerator and denominator coprime (divided by their gcd), denominator
//! monic under the graded-lex term order, and zero represented as `0/1`.
//! Two rational functions are equal exactly when their canonical forms
//! coincide, so `PartialEq` is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::parampoly::{gcd, ParamPoly, Symbol};
use super::rational::Rat;
use crate::error::{Error, Result};

/// Parameter bindings for instantiation, name -> rational value.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamEnv(BTreeMap<Symbol, Rat>);

impl ParamEnv {
    pub fn new() -> Self {
        ParamEnv(BTreeMap::new())
    }

    pub fn bind(mut self, name: &str, value: Rat) -> Self {
        self.0.insert(Symbol::new(name), value);
        self
    }

    pub fn insert(&mut self, name: &str, value: Rat) {
        self.0.insert(Symbol::new(name), value);
    }

    pub fn get(&self, name: &str) -> Option<&Rat> {
        self.0.get(&Symbol::new(name))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &Rat)> {
        self.0.iter()
    }

    pub(crate) fn map(&self) -> &BTreeMap<Symbol, Rat> {
        &self.0
    }
}

impl fmt::Display for ParamEnv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, v) in &self.0 {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{s}={v}")?;
        }
        Ok(())
    }
}

/// Canonical quotient of parameter polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamRat {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamRat {
    pub fn zero() -> Self {
        ParamRat {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Self {
        ParamRat {
            num: ParamPoly::one(),
            den: ParamPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ParamRat::from_rat(Rat::from_int(n))
    }

    pub fn from_rat(c: Rat) -> Self {
        ParamRat {
            num: ParamPoly::constant(c),
            den: ParamPoly::one(),
        }
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        ParamRat {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn symbol(name: &str) -> Self {
        ParamRat::from_poly(ParamPoly::symbol(name))
    }

    /// `num / den` in canonical form; errors if `den` is the zero polynomial.
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return ParamRat::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else if num.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        // Make the denominator monic by moving its leading coefficient
        // into the numerator.
        let lc = den.leading_coeff();
        if lc.is_one() {
            ParamRat { num, den }
        } else {
            let inv = lc.recip().expect("denominator nonzero");
            ParamRat {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, if parameter-free.
    pub fn as_rat(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(&n / &d) // canonical form guarantees d != 0
    }

    pub fn recip(&self) -> Result<ParamRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, rhs: &ParamRat) -> Result<ParamRat> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow(&self, e: i64) -> Result<ParamRat> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = ParamRat::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rat) -> ParamRat {
        if c.is_zero() {
            return ParamRat::zero();
        }
        ParamRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Every symbol occurring in numerator or denominator.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = self.num.symbols();
        out.extend(self.den.symbols());
        out.sort();
        out.dedup();
        out
    }

    /// Evaluate at `env`. Errors with [`Error::MissingBinding`] for an
    /// unbound symbol and [`Error::PoleAtEnv`] if the (reduced) denominator
    /// vanishes there.
    pub fn instantiate(&self, env: &ParamEnv) -> Result<Rat> {
        let d = self.den.instantiate(env.map())?;
        if d.is_zero() {
            return Err(Error::PoleAtEnv);
        }
        let n = self.num.instantiate(env.map())?;
        Ok(&n / &d)
    }

    /// Substitute rationals for the bound symbols, keeping the rest
    /// symbolic; errors only on a vanishing denominator.
    pub fn instantiate_partial(&self, env: &ParamEnv) -> Result<ParamRat> {
        let sub = |p: &ParamPoly| -> ParamPoly {
            let mut out = ParamPoly::zero();
            for (m, c) in p.terms() {
                let mut coeff = c.clone();
                let mut kept = Vec::new();
                // Rebuild the monomial, replacing bound symbols by values.
                for (sym, exp) in m.factors() {
                    match env.get(sym.name()) {
                        Some(v) => {
                            coeff *= &v.pow(exp as i64).expect("nonnegative exponent");
                        }
                        None => kept.push((sym, exp)),
                    }
                }
                let mono = super::parampoly::Monomial::from_factors(kept);
                out = &out + &ParamPoly::from_terms([(mono, coeff)]);
            }
            out
        };
        let num = sub(&self.num);
        let den = sub(&self.den);
        if den.is_zero() {
            return Err(Error::PoleAtEnv);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn latex(&self) -> String {
        if self.den.is_one() {
            let inner = self.num.latex();
            if self.num.terms().count() > 1 {
                format!("\\left({inner}\\right)")
            } else {
                inner
            }
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.latex(), self.den.latex())
        }
    }
}

impl Add for &ParamRat {
    type Output = ParamRat;
    fn add(self, rhs: &ParamRat) -> ParamRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return ParamRat::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        ParamRat::reduce(num, den)
    }
}

impl Sub for &ParamRat {
    type Output = ParamRat;
    fn sub(self, rhs: &ParamRat) -> ParamRat {
        self + &(-rhs)
    }
}

impl Neg for &ParamRat {
    type Output = ParamRat;
    fn neg(self) -> ParamRat {
        ParamRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &ParamRat {
    type Output = ParamRat;
    fn mul(self, rhs: &ParamRat) -> ParamRat {
        if self.is_zero() || rhs.is_zero() {
            return ParamRat::zero();
        }
        // Cross-reduce first to keep intermediate products small.
        let g1 = if self.num.is_constant() || rhs.den.is_constant() {
            ParamPoly::one()
        } else {
            gcd(&self.num, &rhs.den)
        };
        let g2 = if rhs.num.is_constant() || self.den.is_constant() {
            ParamPoly::one()
        } else {
            gcd(&rhs.num, &self.den)
        };
        let a = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1).expect("gcd divides")
        };
        let d = if g1.is_one() {
            rhs.den.clone()
        } else {
            rhs.den.div_exact(&g1).expect("gcd divides")
        };
        let b = if g2.is_one() {
            rhs.num.clone()
        } else {
            rhs.num.div_exact(&g2).expect("gcd divides")
        };
        let c = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2).expect("gcd divides")
        };
        ParamRat::reduce(&a * &b, &c * &d)
    }
}

impl Div for &ParamRat {
    type Output = ParamRat;
    /// Panics on a zero divisor; use [`ParamRat::try_div`] when the divisor
    /// is input-dependent.
    fn div(self, rhs: &ParamRat) -> ParamRat {
        self.try_div(rhs).expect("division by zero rational function")
    }
}

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let np = self.num.terms().count() > 1;
            let dp = self.den.terms().count() > 1;
            match (np, dp) {
                (false, false) => write!(f, "{}/{}", self.num, self.den),
                (true, false) => write!(f, "({})/{}", self.num, self.den),
                (false, true) => write!(f, "{}/({})", self.num, self.den),
                (true, true) => write!(f, "({})/({})", self.num, self.den),
            }
        }
    }
}
