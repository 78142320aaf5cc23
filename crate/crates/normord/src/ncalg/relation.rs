//! Commutation relations `[B, A] = BA - AB = ...`.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinat::UniPoly;
use crate::error::{Error, Result};
use crate::scalars::{ParamEnv, Rat, Symbol};

use super::poly::NCPoly;
use super::word::{Gen, NCWord};

/// The defining datum of a two-generator algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Relation {
    /// No rewriting; `BA` stays `BA`.
    Free,
    /// `[B, A] = p(A)` — rational exponents allowed in `p`.
    LeftPoly(UniPoly),
    /// `[B, A] = p(B)` — rational exponents allowed in `p`.
    RightPoly(UniPoly),
    /// `[B, A] = q(A, B)` with `q` of total degree at most 2.
    Bivariate(NCPoly),
}

impl Relation {
    /// Validating constructor for the bivariate case.
    pub fn bivariate(q: NCPoly) -> Result<Relation> {
        let two = Rat::from_int(2);
        for (w, _) in q.terms() {
            if w.letters().is_none() {
                return Err(Error::ExponentKind(format!(
                    "bivariate relation term {w} must have positive integer exponents"
                )));
            }
            if w.total_degree() > two {
                return Err(Error::DegreeError);
            }
        }
        Ok(Relation::Bivariate(q))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Relation::Free => "free",
            Relation::LeftPoly(_) => "left",
            Relation::RightPoly(_) => "right",
            Relation::Bivariate(_) => "bivariate",
        }
    }

    /// Which generator may carry non-integer exponents (none for
    /// free/bivariate).
    fn rational_gen(&self) -> Option<Gen> {
        match self {
            Relation::Free | Relation::Bivariate(_) => None,
            Relation::LeftPoly(_) => Some(Gen::A),
            Relation::RightPoly(_) => Some(Gen::B),
        }
    }

    /// Check the exponent-kind constraints this relation imposes on a word.
    pub fn validate_word(&self, w: &NCWord) -> Result<()> {
        let rational = self.rational_gen();
        for (g, e) in w.blocks() {
            if Some(*g) == rational {
                continue;
            }
            if e.to_i64().filter(|n| *n > 0).is_none() {
                return Err(Error::ExponentKind(format!(
                    "exponent {e} on {g:?} is not a positive integer \
                     (relation kind: {})",
                    self.kind()
                )));
            }
        }
        Ok(())
    }

    pub fn validate_poly(&self, x: &NCPoly) -> Result<()> {
        for (w, _) in x.terms() {
            self.validate_word(w)?;
        }
        Ok(())
    }

    /// Bind parameters inside the relation's defining polynomial.
    pub fn instantiate(&self, env: &ParamEnv) -> Result<Relation> {
        Ok(match self {
            Relation::Free => Relation::Free,
            Relation::LeftPoly(p) => Relation::LeftPoly(p.instantiate(env)?),
            Relation::RightPoly(p) => Relation::RightPoly(p.instantiate(env)?),
            Relation::Bivariate(q) => Relation::Bivariate(q.instantiate(env)?),
        })
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        match self {
            Relation::Free => BTreeSet::new(),
            Relation::LeftPoly(p) | Relation::RightPoly(p) => {
                p.terms().flat_map(|(_, c)| c.symbols()).collect()
            }
            Relation::Bivariate(q) => q.symbols(),
        }
    }

    /// The commutator `[B, A]` as a polynomial (for display and checks).
    pub fn rhs_poly(&self) -> NCPoly {
        match self {
            Relation::Free => NCPoly::zero(),
            Relation::LeftPoly(p) => poly_of_gen(p, Gen::A),
            Relation::RightPoly(p) => poly_of_gen(p, Gen::B),
            Relation::Bivariate(q) => q.clone(),
        }
    }
}

/// Read a commutative polynomial as a one-generator `NCPoly`.
pub fn poly_of_gen(p: &UniPoly, g: Gen) -> NCPoly {
    let mut out = NCPoly::zero();
    for (e, c) in p.terms() {
        out.add_term(NCWord::gen_pow(g, e.clone()), c.clone());
    }
    out
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Free => write!(f, "free"),
            _ => write!(f, "[B,A] = {}", self.rhs_poly()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ParamRat;

    #[test]
    fn bivariate_validation() {
        let ok = NCPoly::from_terms([
            (
                NCWord::normal(Rat::from_int(2), Rat::zero()),
                ParamRat::symbol("lambda"),
            ),
            (
                NCWord::normal(Rat::zero(), Rat::from_int(2)),
                ParamRat::symbol("mu"),
            ),
        ]);
        assert!(Relation::bivariate(ok).is_ok());
        let too_big = NCPoly::gen_pow(Gen::A, Rat::from_int(3));
        assert_eq!(Relation::bivariate(too_big), Err(Error::DegreeError));
        let fractional = NCPoly::gen_pow(Gen::A, Rat::new(1, 2));
        assert!(matches!(
            Relation::bivariate(fractional),
            Err(Error::ExponentKind(_))
        ));
    }

    #[test]
    fn exponent_kinds() {
        let left = Relation::LeftPoly(UniPoly::one());
        let half_a = NCWord::gen_pow(Gen::A, Rat::new(1, 2));
        let half_b = NCWord::gen_pow(Gen::B, Rat::new(1, 2));
        assert!(left.validate_word(&half_a).is_ok());
        assert!(left.validate_word(&half_b).is_err());
        let right = Relation::RightPoly(UniPoly::one());
        assert!(right.validate_word(&half_a).is_err());
        assert!(right.validate_word(&half_b).is_ok());
        let free = Relation::Free;
        assert!(free.validate_word(&half_a).is_err());
        assert!(free
            .validate_word(&NCWord::from_letters(&[Gen::B, Gen::A]))
            .is_ok());
    }

    #[test]
    fn display() {
        let left = Relation::LeftPoly(&UniPoly::x().scale(&ParamRat::symbol("epsilon")) + &UniPoly::one());
        assert_eq!(left.to_string(), "[B,A] = epsilon*A + 1");
        assert_eq!(Relation::Free.to_string(), "free");
    }
}
