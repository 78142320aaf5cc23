//! The transpose anti-isomorphism between `[B, A] = p(A)` and
//! `[B, A] = p(B)` algebras.
//!
//! Reversing every word (`A -> D`, `B -> C`, products flipped) carries the
//! relation `BA - AB = p(A)` to `DC - CD = p(D)`. On normal forms this is
//! simply an exponent swap: `A^u B^v  ->  C^v D^u`, which is again a normal
//! word in the image algebra. The same recipe maps back, so applying the
//! map twice is the identity.

use crate::error::{Error, Result};

use super::algebra::{Algebra, Basis};
use super::poly::NCPoly;
use super::relation::Relation;
use super::word::NCWord;

/// Transpose `x` into the mirror algebra; returns the image polynomial
/// (already in normal form) together with the algebra it lives in.
///
/// Sources with a left-polynomial relation land in `[D, C] = p(D)` with
/// display letters `C`, `D`; right-polynomial sources land back in
/// `[B, A] = p(A)`. Other relations are not transposable.
pub fn l_map(x: &NCPoly, ctx: &Algebra) -> Result<(NCPoly, Algebra)> {
    let image = match ctx.relation() {
        Relation::LeftPoly(p) => Algebra::right_poly(p.clone()).with_letters(['C', 'D']),
        Relation::RightPoly(p) => Algebra::left_poly(p.clone()),
        other => {
            return Err(Error::Unsupported(format!(
                "the transpose map needs a univariate relation, not {}",
                other.kind()
            )))
        }
    };
    let image = image.with_cap(ctx.cap());
    let source = ctx.clone().with_basis(Basis::Normal);
    let ordered = source.normal_order(x)?;
    let mut out = NCPoly::zero();
    for (w, c) in ordered.terms() {
        let (u, v) = w
            .normal_exponents()
            .expect("normal ordering yields normal words");
        out.add_term(NCWord::normal(v, u), c.clone());
    }
    Ok((out, image))
}
