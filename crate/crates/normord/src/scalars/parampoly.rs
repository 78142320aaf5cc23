//! Multivariate polynomials in the session parameters.
//!
//! Terms are kept in a `BTreeMap` under the graded-lexicographic monomial
//! order (total degree first, then exponents compared symbol by symbol with
//! symbols ordered by name), so every polynomial has one canonical form and
//! a well-defined leading term. Symbols compare by name globally, which
//! keeps the order stable no matter when a parameter first appears.
//!
//! Division is exact leading-term division (enough for gcd cofactors), and
//! gcd is a primitive pseudo-remainder sequence, recursing on the number of
//! variables. Sizes here are small — a handful of parameters, modest
//! degrees — so the classical algorithms are the right tool.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::bigint::BigInt;
use num::{Integer, Zero};

use super::rational::Rat;
use crate::error::{Error, Result};

/// Interned parameter name; ordered and compared by the name itself.
#[derive(Clone)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for Symbol {}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.as_ref().cmp(other.0.as_ref())
    }
}

impl std::hash::Hash for Symbol {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Power product of parameters; exponents strictly positive, sorted by symbol.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when every exponent of `other` fits under `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (s, e) in &self.0 {
            let mut e = *e;
            if j < other.0.len() && other.0[j].0 < *s {
                return None; // divisor has a symbol self lacks
            }
            if j < other.0.len() && other.0[j].0 == *s {
                if other.0[j].1 > e {
                    return None;
                }
                e -= other.0[j].1;
                j += 1;
            }
            if e > 0 {
                out.push((s.clone(), e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Drop `var` from the power product, returning its exponent.
    fn split_var(&self, var: &Symbol) -> (u32, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for (s, e) in &self.0 {
            if s == var {
                exp = *e;
            } else {
                rest.push((s.clone(), *e));
            }
        }
        (exp, Monomial(rest))
    }

    /// Reinsert `var^exp` into a power product that does not contain `var`.
    fn with_var(&self, var: &Symbol, exp: u32) -> Monomial {
        if exp == 0 {
            return self.clone();
        }
        Monomial(vec![(var.clone(), exp)]).mul(self)
    }

    pub(crate) fn factors(&self) -> Vec<(Symbol, u32)> {
        self.0.clone()
    }

    pub(crate) fn from_factors(mut factors: Vec<(Symbol, u32)>) -> Monomial {
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        factors.retain(|(_, e)| *e > 0);
        Monomial(factors)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree, then the exponent of the
    /// alphabetically first symbol on which the monomials differ.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (sa, ea) = &self.0[i];
            let (sb, eb) = &other.0[j];
            match sa.cmp(sb) {
                // self has a power of an earlier symbol: lex-greater.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ea.cmp(eb) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                },
            }
        }
        match (i < self.0.len(), j < other.0.len()) {
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in the parameters with rational coefficients.
///
/// Invariant: no explicitly zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        ParamPoly { terms }
    }

    pub fn symbol(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(Symbol::new(name)), Rat::one());
        ParamPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut out = ParamPoly::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Leading (maximal) term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    /// All symbols that occur, sorted by name.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = Vec::new();
        for m in self.terms.keys() {
            for (s, _) in &m.0 {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate under `env`; every occurring symbol must be bound.
    pub fn instantiate(&self, env: &BTreeMap<Symbol, Rat>) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, e) in &m.0 {
                let b = env
                    .get(s)
                    .ok_or_else(|| Error::MissingBinding(s.name().to_string()))?;
                v *= &b.pow(*e as i64).expect("nonnegative exponent");
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// Exact division: `Some(q)` with `self = q * div`, or `None`.
    pub fn div_exact(&self, div: &ParamPoly) -> Option<ParamPoly> {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        let (dm, dc) = {
            let (m, c) = div.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = &rc / &dc;
            let mut t = ParamPoly::zero();
            t.add_term(qm.clone(), qc.clone());
            quot.add_term(qm, qc);
            rem = &rem - &(&t * div);
        }
        Some(quot)
    }

    /// Content over the rationals: gcd of numerators / lcm of denominators,
    /// signed so that dividing by it makes the leading coefficient positive.
    fn rat_content(&self) -> Rat {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::from(1);
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rat::one();
        }
        let content = Rat::from_big(num_gcd, den_lcm).expect("nonzero lcm");
        if self.leading_coeff().is_negative() {
            -&content
        } else {
            content
        }
    }

    /// Divide out the leading coefficient.
    pub fn monic(&self) -> ParamPoly {
        if self.is_zero() {
            return ParamPoly::zero();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip().expect("leading coefficient nonzero"))
    }

    /// Coefficients of `self` viewed as univariate in `var` (index = power).
    fn as_univariate(&self, var: &Symbol) -> Vec<ParamPoly> {
        let mut out: Vec<ParamPoly> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(var);
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, ParamPoly::zero());
            }
            out[e].add_term(rest, c.clone());
        }
        while out.last().map(ParamPoly::is_zero).unwrap_or(false) {
            out.pop();
        }
        out
    }

    fn from_univariate(coeffs: &[ParamPoly], var: &Symbol) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                out.add_term(m.with_var(var, e as u32), x.clone());
            }
        }
        out
    }

    pub fn latex(&self) -> String {
        crate::render::poly_to_string(self, true)
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::poly_to_string(self, false))
    }
}

/// Pseudo-remainder of `f` by `g`, both univariate coefficient vectors in
/// the same variable (`g` nonzero).
fn pseudo_rem(f: &[ParamPoly], g: &[ParamPoly]) -> Vec<ParamPoly> {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r: Vec<ParamPoly> = f.to_vec();
    while r.len() >= g.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r := lg * r - lr * x^(dr-dg) * g
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
        let shift = dr - dg;
        for (i, gc) in g.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&lr * gc);
        }
        while r.last().map(ParamPoly::is_zero).unwrap_or(false) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Gcd of a coefficient list (content of a univariate view).
fn poly_list_gcd(list: &[ParamPoly]) -> ParamPoly {
    let mut acc = ParamPoly::zero();
    for p in list {
        if p.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { p.clone() } else { gcd(&acc, p) };
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Monic gcd of two parameter polynomials (primitive PRS, recursing on the
/// variable set). `gcd(0, 0) = 0`; otherwise the result is monic under the
/// graded-lex order.
pub fn gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return ParamPoly::one();
    }
    // Main variable: alphabetically first symbol occurring in either.
    let mut vars = a.symbols();
    vars.extend(b.symbols());
    vars.sort();
    vars.dedup();
    let x = vars[0].clone();

    let fa = a.as_univariate(&x);
    let fb = b.as_univariate(&x);
    let cont_a = poly_list_gcd(&fa);
    let cont_b = poly_list_gcd(&fb);
    let cont = gcd(&cont_a, &cont_b);

    let primitive = |list: &[ParamPoly], c: &ParamPoly| -> Vec<ParamPoly> {
        list.iter()
            .map(|p| {
                if p.is_zero() {
                    ParamPoly::zero()
                } else {
                    p.div_exact(c).expect("content divides")
                }
            })
            .collect()
    };
    let mut r0 = primitive(&fa, &cont_a);
    let mut r1 = primitive(&fb, &cont_b);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        if r1.is_empty() {
            break;
        }
        if r1.len() == 1 {
            // Nonzero constant in x: the primitive parts are coprime.
            r0 = vec![ParamPoly::one()];
            break;
        }
        let rem = pseudo_rem(&r0, &r1);
        r0 = r1;
        r1 = if rem.is_empty() {
            Vec::new()
        } else {
            let c = poly_list_gcd(&rem);
            let mut pp = primitive(&rem, &c);
            // Strip rational content as well, to keep coefficients small.
            let whole = ParamPoly::from_univariate(&pp, &x);
            let rc = whole.rat_content();
            if !rc.is_one() {
                let inv = rc.recip().expect("content nonzero");
                pp = pp.iter().map(|p| p.scale(&inv)).collect();
            }
            pp
        };
    }
    let pp_gcd = ParamPoly::from_univariate(&r0, &x);
    (&cont * &pp_gcd).monic()
}
