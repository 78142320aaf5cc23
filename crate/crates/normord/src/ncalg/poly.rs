//! Polynomials in two noncommuting generators.
//!
//! `NCPoly` maps canonical words to rational-function coefficients. The
//! only product defined here is the free concatenation product; reduction
//! modulo a commutation relation lives on [`crate::ncalg::Algebra`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::scalars::{ParamEnv, ParamRat, Rat, Symbol};

use super::word::{Gen, NCWord};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPoly {
    terms: BTreeMap<NCWord, ParamRat>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        NCPoly::constant(ParamRat::one())
    }

    pub fn constant(c: ParamRat) -> Self {
        NCPoly::term(NCWord::one(), c)
    }

    pub fn gen(g: Gen) -> Self {
        NCPoly::term(NCWord::gen(g), ParamRat::one())
    }

    pub fn gen_pow(g: Gen, e: Rat) -> Self {
        NCPoly::term(NCWord::gen_pow(g, e), ParamRat::one())
    }

    pub fn term(w: NCWord, c: ParamRat) -> Self {
        let mut out = NCPoly::zero();
        out.add_term(w, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (NCWord, ParamRat)>>(terms: I) -> Self {
        let mut out = NCPoly::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: NCWord, c: ParamRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = &*e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &NCPoly, c: &ParamRat) {
        if c.is_zero() {
            return;
        }
        for (w, k) in &other.terms {
            self.add_term(w.clone(), k * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(w, c)| w.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_coeff(&self) -> ParamRat {
        self.coefficient(&NCWord::one())
    }

    pub fn coefficient(&self, w: &NCWord) -> ParamRat {
        self.terms.get(w).cloned().unwrap_or_else(ParamRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCWord, &ParamRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest total degree among the words (None when zero).
    pub fn max_degree(&self) -> Option<Rat> {
        self.terms.keys().map(|w| w.total_degree()).max()
    }

    pub fn scale(&self, c: &ParamRat) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        let mut out = NCPoly::zero();
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> NCPoly {
        self.scale(&ParamRat::from_rat(c.clone()))
    }

    /// Every word normal (`A`-block then `B`-block)?
    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(|w| w.is_normal())
    }

    pub fn is_antinormal(&self) -> bool {
        self.terms.keys().all(|w| w.is_antinormal())
    }

    /// Words containing the given generator at all.
    pub fn contains_gen(&self, g: Gen) -> bool {
        self.terms
            .keys()
            .any(|w| w.blocks().iter().any(|(bg, _)| *bg == g))
    }

    /// First word (in canonical order) containing the generator, if any.
    pub fn witness_with_gen(&self, g: Gen) -> Option<&NCWord> {
        self.terms
            .keys()
            .find(|w| w.blocks().iter().any(|(bg, _)| *bg == g))
    }

    /// Free concatenation product, dropping words of total degree > cap
    /// when one is given. The flag reports whether anything was dropped.
    pub fn mul_capped(&self, rhs: &NCPoly, cap: Option<usize>) -> (NCPoly, bool) {
        let mut out = NCPoly::zero();
        let mut truncated = false;
        let cap_rat = cap.map(|c| Rat::from_int(c as i64));
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let w = wa.concat(wb);
                if let Some(cap) = &cap_rat {
                    if w.total_degree() > *cap {
                        truncated = true;
                        continue;
                    }
                }
                out.add_term(w, ca * cb);
            }
        }
        (out, truncated)
    }

    /// Bind parameters in every coefficient, keeping others symbolic.
    pub fn instantiate(&self, env: &ParamEnv) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.instantiate_partial(env)?);
        }
        Ok(out)
    }

    pub fn symbols(&self) -> std::collections::BTreeSet<Symbol> {
        let mut out = std::collections::BTreeSet::new();
        for c in self.terms.values() {
            out.extend(c.symbols());
        }
        out
    }

    pub fn to_string_with(&self, letters: [char; 2], latex: bool) -> String {
        crate::render::ncpoly_to_string(self, letters, latex)
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Free concatenation product (no cap, no reduction).
impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.mul_capped(rhs, None).0
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(['A', 'B'], false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> NCPoly {
        NCPoly::gen(Gen::A)
    }

    fn b() -> NCPoly {
        NCPoly::gen(Gen::B)
    }

    #[test]
    fn free_product_keeps_order() {
        assert_eq!((&a() * &b()).to_string(), "AB");
        assert_eq!((&b() * &a()).to_string(), "BA");
        let s = &a() + &b();
        let sq = &s * &s;
        assert_eq!(sq.to_string(), "A^2 + AB + B^2 + BA");
    }

    #[test]
    fn cancellation() {
        let x = &(&a() * &b()) - &(&a() * &b());
        assert!(x.is_zero());
        let y = &(&a() + &b()) - &a();
        assert_eq!(y, b());
    }

    #[test]
    fn cap_truncates_and_flags() {
        let s = &(&a() * &a()) + &b(); // A^2 + B
        let (p, truncated) = s.mul_capped(&s, Some(2));
        assert!(truncated);
        assert_eq!(p.to_string(), "B^2");
        let (_, untruncated) = s.mul_capped(&s, Some(4));
        assert!(!untruncated);
    }

    #[test]
    fn coefficients_combine() {
        let mut p = NCPoly::zero();
        p.add_term(NCWord::gen(Gen::A), ParamRat::symbol("lambda"));
        p.add_term(NCWord::gen(Gen::A), ParamRat::from_int(1));
        assert_eq!(p.to_string(), "(lambda + 1)*A");
        let e = ParamEnv::new().bind("lambda", Rat::from_int(-1));
        assert!(p.instantiate(&e).unwrap().is_zero());
    }
}
