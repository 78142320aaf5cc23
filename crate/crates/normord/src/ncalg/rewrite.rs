//! One-pass normal ordering for the univariate relations.
//!
//! For `[B, A] = p(A)` the chain rule gives, for any rational exponent q,
//!
//! ```text
//! B · A^q = A^q · B + q · A^(q-1) p(A)
//! ```
//!
//! so prepending one `B` to an already-ordered polynomial keeps it ordered.
//! Each routine walks the blocks of the input word in the direction that
//! lets it absorb one block at a time into an ordered accumulator: a whole
//! block of the "free" generator at once, the other generator one letter at
//! a time. Every letter absorbed strictly reduces the number of unordered
//! pairs, so a single pass suffices — no search, no critical pairs.

use crate::combinat::UniPoly;
use crate::error::{Error, Result};
use crate::scalars::Rat;

use super::poly::NCPoly;
use super::word::{Gen, NCWord};

/// Order `x` as `Σ c · A^q B^n` under `[B, A] = p(A)`.
pub(crate) fn left_poly_normal(p: &UniPoly, x: &NCPoly) -> Result<NCPoly> {
    per_word(x, |w| {
        let mut acc = NCPoly::one();
        for (g, e) in w.blocks().iter().rev() {
            match g {
                Gen::A => acc = shift_normal_a(&acc, e),
                Gen::B => {
                    for _ in 0..int_exponent(e, Gen::B)? {
                        acc = prepend_b_normal(p, &acc);
                    }
                }
            }
        }
        Ok(acc)
    })
}

/// Order `x` as `Σ c · A^n B^q` under `[B, A] = p(B)`.
pub(crate) fn right_poly_normal(p: &UniPoly, x: &NCPoly) -> Result<NCPoly> {
    per_word(x, |w| {
        let mut acc = NCPoly::one();
        for (g, e) in w.blocks() {
            match g {
                Gen::B => acc = shift_normal_b(&acc, e),
                Gen::A => {
                    for _ in 0..int_exponent(e, Gen::A)? {
                        acc = append_a_normal(p, &acc);
                    }
                }
            }
        }
        Ok(acc)
    })
}

/// Order `x` as `Σ c · B^n A^q` under `[B, A] = p(A)`.
pub(crate) fn left_poly_antinormal(p: &UniPoly, x: &NCPoly) -> Result<NCPoly> {
    per_word(x, |w| {
        let mut acc = NCPoly::one();
        for (g, e) in w.blocks() {
            match g {
                Gen::A => acc = shift_anti_a(&acc, e),
                Gen::B => {
                    for _ in 0..int_exponent(e, Gen::B)? {
                        acc = append_b_anti(p, &acc);
                    }
                }
            }
        }
        Ok(acc)
    })
}

/// Order `x` as `Σ c · B^q A^n` under `[B, A] = p(B)`.
pub(crate) fn right_poly_antinormal(p: &UniPoly, x: &NCPoly) -> Result<NCPoly> {
    per_word(x, |w| {
        let mut acc = NCPoly::one();
        for (g, e) in w.blocks().iter().rev() {
            match g {
                Gen::B => acc = shift_anti_b(&acc, e),
                Gen::A => {
                    for _ in 0..int_exponent(e, Gen::A)? {
                        acc = prepend_a_anti(p, &acc);
                    }
                }
            }
        }
        Ok(acc)
    })
}

fn per_word<F>(x: &NCPoly, order_word: F) -> Result<NCPoly>
where
    F: Fn(&NCWord) -> Result<NCPoly>,
{
    let mut out = NCPoly::zero();
    for (w, c) in x.terms() {
        out.add_scaled(&order_word(w)?, c);
    }
    Ok(out)
}

fn int_exponent(e: &Rat, g: Gen) -> Result<i64> {
    e.to_i64().filter(|n| *n > 0).ok_or_else(|| {
        Error::ExponentKind(format!(
            "exponent {e} on {g:?} must be a positive integer to reorder"
        ))
    })
}

/// `A^e ·` (ordered `A^u B^v` terms): merge into the A-block.
fn shift_normal_a(acc: &NCPoly, e: &Rat) -> NCPoly {
    map_normal(acc, |u, v| NCWord::normal(e + &u, v))
}

/// `· B^e` on ordered terms: merge into the B-block.
fn shift_normal_b(acc: &NCPoly, e: &Rat) -> NCPoly {
    map_normal(acc, |u, v| NCWord::normal(u, &v + e))
}

/// `· A^e` on antinormal `B^v A^u` terms.
fn shift_anti_a(acc: &NCPoly, e: &Rat) -> NCPoly {
    map_anti(acc, |v, u| NCWord::antinormal(v, &u + e))
}

/// `B^e ·` on antinormal terms.
fn shift_anti_b(acc: &NCPoly, e: &Rat) -> NCPoly {
    map_anti(acc, |v, u| NCWord::antinormal(e + &v, u))
}

/// `B · A^u B^v = A^u B^(v+1) + u · A^(u-1) p(A) B^v`.
fn prepend_b_normal(p: &UniPoly, acc: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in acc.terms() {
        let (u, v) = w.normal_exponents().expect("accumulator stays ordered");
        out.add_term(NCWord::normal(u.clone(), &v + &Rat::one()), c.clone());
        if u.is_zero() {
            continue;
        }
        let cu = c.scale(&u);
        for (pe, pc) in p.terms() {
            out.add_term(
                NCWord::normal(&(&u - &Rat::one()) + pe, v.clone()),
                &cu * pc,
            );
        }
    }
    out
}

/// `A^u B^v · A = A^(u+1) B^v + v · A^u B^(v-1) p(B)`.
fn append_a_normal(p: &UniPoly, acc: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in acc.terms() {
        let (u, v) = w.normal_exponents().expect("accumulator stays ordered");
        out.add_term(NCWord::normal(&u + &Rat::one(), v.clone()), c.clone());
        if v.is_zero() {
            continue;
        }
        let cv = c.scale(&v);
        for (pe, pc) in p.terms() {
            out.add_term(
                NCWord::normal(u.clone(), &(&v - &Rat::one()) + pe),
                &cv * pc,
            );
        }
    }
    out
}

/// `B^v A^u · B = B^(v+1) A^u - u · B^v A^(u-1) p(A)`.
fn append_b_anti(p: &UniPoly, acc: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in acc.terms() {
        let (v, u) = w
            .antinormal_exponents()
            .expect("accumulator stays ordered");
        out.add_term(NCWord::antinormal(&v + &Rat::one(), u.clone()), c.clone());
        if u.is_zero() {
            continue;
        }
        let cu = -&c.scale(&u);
        for (pe, pc) in p.terms() {
            out.add_term(
                NCWord::antinormal(v.clone(), &(&u - &Rat::one()) + pe),
                &cu * pc,
            );
        }
    }
    out
}

/// `A · B^v A^u = B^v A^(u+1) - v · B^(v-1) p(B) A^u`.
fn prepend_a_anti(p: &UniPoly, acc: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in acc.terms() {
        let (v, u) = w
            .antinormal_exponents()
            .expect("accumulator stays ordered");
        out.add_term(NCWord::antinormal(v.clone(), &u + &Rat::one()), c.clone());
        if v.is_zero() {
            continue;
        }
        let cv = -&c.scale(&v);
        for (pe, pc) in p.terms() {
            out.add_term(
                NCWord::antinormal(&(&v - &Rat::one()) + pe, u.clone()),
                &cv * pc,
            );
        }
    }
    out
}

fn map_normal<F: Fn(Rat, Rat) -> NCWord>(acc: &NCPoly, f: F) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in acc.terms() {
        let (u, v) = w.normal_exponents().expect("accumulator stays ordered");
        out.add_term(f(u, v), c.clone());
    }
    out
}

fn map_anti<F: Fn(Rat, Rat) -> NCWord>(acc: &NCPoly, f: F) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in acc.terms() {
        let (v, u) = w
            .antinormal_exponents()
            .expect("accumulator stays ordered");
        out.add_term(f(v, u), c.clone());
    }
    out
}
