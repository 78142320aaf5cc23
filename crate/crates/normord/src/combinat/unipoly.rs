//! Univariate polynomials with rational exponents.
//!
//! `UniPoly` is a finite map from exponents in Q to rational-function
//! coefficients, over one commuting indeterminate. Rational (and negative)
//! exponents are first-class: relation polynomials like `h*x^(1/2)` and
//! intermediate quotients like `F(h A^s t) / (h A^(s-1))` need them. The
//! indeterminate has no fixed name; `Display` writes `x` and callers pick
//! the letter when rendering in context.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::scalars::{ParamEnv, ParamRat, Rat};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    terms: BTreeMap<Rat, ParamRat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        UniPoly::constant(ParamRat::one())
    }

    pub fn constant(c: ParamRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Rat::zero(), c);
        }
        UniPoly { terms }
    }

    pub fn constant_rat(c: Rat) -> Self {
        UniPoly::constant(ParamRat::from_rat(c))
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        UniPoly::monomial(Rat::one(), ParamRat::one())
    }

    pub fn monomial(exp: Rat, coeff: ParamRat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        UniPoly { terms }
    }

    pub fn add_term(&mut self, exp: Rat, coeff: ParamRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = &*e.get() + &coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_zero())
    }

    pub fn as_constant(&self) -> Option<ParamRat> {
        if self.is_zero() {
            return Some(ParamRat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn coefficient(&self, exp: &Rat) -> ParamRat {
        self.terms.get(exp).cloned().unwrap_or_else(ParamRat::zero)
    }

    /// Highest exponent (None for the zero polynomial).
    pub fn degree(&self) -> Option<Rat> {
        self.terms.keys().next_back().cloned()
    }

    pub fn min_exponent(&self) -> Option<Rat> {
        self.terms.keys().next().cloned()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &ParamRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when every exponent is a nonnegative integer.
    pub fn has_natural_exponents(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.is_integer() && !e.is_negative())
    }

    pub fn scale(&self, c: &ParamRat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut out = UniPoly::zero();
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k * c);
        }
        out
    }

    /// Multiply by `x^delta` (shift all exponents).
    pub fn shift(&self, delta: &Rat) -> UniPoly {
        UniPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + delta, c.clone()))
                .collect(),
        }
    }

    /// Formal derivative: `d/dx x^q = q x^(q-1)` for every rational `q`.
    pub fn derivative(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e, c) in &self.terms {
            if e.is_zero() {
                continue;
            }
            out.add_term(e - &Rat::one(), c.scale(e));
        }
        out
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `c*x` for `x`: scales the coefficient of `x^q` by `c^q`,
    /// so every exponent must be an integer.
    pub fn scale_argument(&self, c: &ParamRat) -> Result<UniPoly> {
        let mut out = UniPoly::zero();
        for (e, k) in &self.terms {
            let q = e.to_i64().ok_or_else(|| {
                crate::error::Error::ExponentKind(format!(
                    "cannot scale the argument through exponent {e}"
                ))
            })?;
            out.add_term(e.clone(), k * &c.pow(q)?);
        }
        Ok(out)
    }

    /// Evaluate at a scalar; exponents must be nonnegative integers.
    pub fn eval(&self, x0: &ParamRat) -> Result<ParamRat> {
        let mut acc = ParamRat::zero();
        for (e, c) in &self.terms {
            let q = e.to_i64().filter(|q| *q >= 0).ok_or_else(|| {
                crate::error::Error::ExponentKind(format!(
                    "cannot evaluate at a scalar through exponent {e}"
                ))
            })?;
            acc = &acc + &(c * &x0.pow(q)?);
        }
        Ok(acc)
    }

    /// Bind parameters within every coefficient, keeping others symbolic.
    pub fn instantiate(&self, env: &ParamEnv) -> Result<UniPoly> {
        let mut out = UniPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.instantiate_partial(env)?);
        }
        Ok(out)
    }

    /// Render with an explicit variable letter.
    pub fn to_string_with(&self, var: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = crate::render::term_prefix(c, latex);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var_part = if e.is_zero() {
                String::new()
            } else if e.is_one() {
                var.to_string()
            } else if latex {
                format!("{var}^{{{}}}", e.latex())
            } else if e.is_integer() && !e.is_negative() {
                format!("{var}^{e}")
            } else {
                format!("{var}^({e})")
            };
            match (mag.as_str(), var_part.as_str()) {
                ("1", "") => out.push('1'),
                (m, "") => out.push_str(m),
                ("1", v) => out.push_str(v),
                (m, v) => {
                    out.push_str(m);
                    out.push_str(if latex { " " } else { "*" });
                    out.push_str(v);
                }
            }
        }
        out
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("x", false))
    }
}
