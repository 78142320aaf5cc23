//! Independent verification channel: the differential-operator
//! representation `A -> multiplication by x`, `B -> p(x) d/dx` acting on
//! exact rational polynomials.
//!
//! The bracket `[p(x)D, x] = p(x)` holds for every polynomial `p`, so this
//! gives a faithful model of `[B, A] = p(A)` that shares no code with the
//! rewriter or the series engine — any systematic bug in those shows up as
//! a disagreement when both sides of an identity are applied to test
//! monomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::UniPoly;
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, NCPoly, Relation};
use crate::scalars::Rat;
use crate::series::TSeries;

pub const DEFAULT_CAP: usize = 32;

/// Exact univariate polynomial over the rationals with a hard degree cap.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    coeffs: BTreeMap<usize, Rat>,
    cap: usize,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly {
            coeffs: BTreeMap::new(),
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_cap(cap: usize) -> Self {
        XPoly {
            coeffs: BTreeMap::new(),
            cap,
        }
    }

    pub fn monomial(degree: usize, c: Rat) -> Result<Self> {
        let mut p = XPoly::zero();
        p.add_term(degree, c)?;
        Ok(p)
    }

    pub fn x() -> Self {
        XPoly::monomial(1, Rat::one()).expect("degree 1 is under the cap")
    }

    pub fn constant(c: Rat) -> Self {
        XPoly::monomial(0, c).expect("degree 0 is under the cap")
    }

    pub fn one() -> Self {
        XPoly::constant(Rat::one())
    }

    pub fn add_term(&mut self, degree: usize, c: Rat) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if degree > self.cap {
            return Err(Error::DegreeCapExceeded { cap: self.cap });
        }
        let entry = self.coeffs.entry(degree).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
        Ok(())
    }

    pub fn coefficient(&self, degree: usize) -> Rat {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, c.clone())
                .expect("degrees already under both caps");
        }
        out
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> XPoly {
        if c.is_zero() {
            return XPoly::with_cap(self.cap);
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|(d, k)| (*d, k * c)).collect(),
            cap: self.cap,
        }
    }

    pub fn mul(&self, other: &XPoly) -> Result<XPoly> {
        let mut out = XPoly::with_cap(self.cap);
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &other.coeffs {
                out.add_term(d1 + d2, c1 * c2)?;
            }
        }
        Ok(out)
    }

    pub fn derivative(&self) -> XPoly {
        let mut out = XPoly::with_cap(self.cap);
        for (d, c) in &self.coeffs {
            if *d > 0 {
                out.add_term(d - 1, c * &Rat::from_int(*d as i64))
                    .expect("derivative lowers degree");
            }
        }
        out
    }

    /// Substitute: `self(g(x))`.
    pub fn compose(&self, g: &XPoly) -> Result<XPoly> {
        let mut out = XPoly::with_cap(self.cap);
        for (d, c) in &self.coeffs {
            let mut power = XPoly::one();
            for _ in 0..*d {
                power = power.mul(g)?;
            }
            for (pd, pc) in &power.coeffs {
                out.add_term(*pd, pc * c)?;
            }
        }
        Ok(out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (d, c) in self.coeffs.iter().rev() {
            acc = &acc + &(c * &x.pow(*d as i64).expect("nonnegative power"));
        }
        acc
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 if c.is_one() => "x".into(),
                1 => format!("{c}*x"),
                _ if c.is_one() => format!("x^{d}"),
                _ => format!("{c}*x^{d}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// A differential operator `sum c_{a,b} x^a (d/dx)^b` in canonical form
/// (all multiplications left of all derivatives).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DiffOp {
    terms: BTreeMap<(usize, usize), Rat>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        DiffOp::term(0, 0, Rat::one())
    }

    /// Multiplication by `x`.
    pub fn x_mul() -> Self {
        DiffOp::term(1, 0, Rat::one())
    }

    /// The derivative `d/dx`.
    pub fn d() -> Self {
        DiffOp::term(0, 1, Rat::one())
    }

    pub fn term(a: usize, b: usize, c: Rat) -> Self {
        let mut op = DiffOp::zero();
        op.add_term(a, b, c);
        op
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(*a, *b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> DiffOp {
        if c.is_zero() {
            return DiffOp::zero();
        }
        DiffOp {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// Operator composition, `self` applied after `other`; normal form is
    /// restored with `D^b x^c = sum_k C(b,k) (c)_k x^{c-k} D^{b-k}`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                for k in 0..=(*b1).min(*a2) {
                    // C(b1, k) * a2 (a2-1) ... (a2-k+1)
                    let mut falling = Rat::one();
                    for i in 0..k {
                        falling = &falling * &Rat::from_int((a2 - i) as i64);
                    }
                    let coeff = &(c1 * c2) * &(&Rat::binomial(*b1, k) * &falling);
                    out.add_term(a1 + a2 - k, b1 + b2 - k, coeff);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, f: &XPoly) -> Result<XPoly> {
        let mut out = XPoly::with_cap(f.cap);
        for ((a, b), c) in &self.terms {
            let mut g = f.clone();
            for _ in 0..*b {
                g = g.derivative();
            }
            for (d, k) in &g.coeffs {
                out.add_term(d + a, k * c)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let part = |sym: &str, e: usize| match e {
            0 => String::new(),
            1 => sym.to_string(),
            _ => format!("{sym}^{e}"),
        };
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let body = format!("{}{}", part("x", *a), part("D", *b));
                match (c.is_one(), body.is_empty()) {
                    (true, true) => "1".into(),
                    (true, false) => body,
                    (false, true) => format!("{c}"),
                    (false, false) => format!("{c}*{body}"),
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

fn exponent_as_usize(e: &Rat, what: &str) -> Result<usize> {
    match e.to_i64() {
        Some(n) if n >= 0 => Ok(n as usize),
        _ => Err(Error::ExponentKind(format!(
            "{what} exponent {e} is not a nonnegative integer"
        ))),
    }
}

fn constant_rat(c: &crate::scalars::ParamRat) -> Result<Rat> {
    c.as_rat().ok_or_else(|| {
        let sym = c
            .symbols()
            .first()
            .map(|s| s.to_string())
            .unwrap_or_default();
        Error::MissingBinding(sym)
    })
}

/// The operator `p(x) D` representing `B` under `[B, A] = p(A)`.
pub fn rep_of_b(p: &UniPoly) -> Result<DiffOp> {
    let mut op = DiffOp::zero();
    for (e, c) in p.terms() {
        let a = exponent_as_usize(e, "relation")?;
        op.add_term(a, 1, constant_rat(c)?);
    }
    Ok(op)
}

/// Represent a polynomial in the generators: `A` acts as multiplication
/// by `x` and `B` as `p(x) D`. All exponents must be nonnegative integers
/// and all coefficients concrete rationals.
pub fn rep_of(x: &NCPoly, p: &UniPoly) -> Result<DiffOp> {
    let b_op = rep_of_b(p)?;
    let mut out = DiffOp::zero();
    for (w, c) in x.terms() {
        let mut word_op = DiffOp::identity();
        for (g, e) in w.blocks() {
            let e = exponent_as_usize(e, "word")?;
            let gen_op = match g {
                crate::ncalg::Gen::A => DiffOp::x_mul(),
                crate::ncalg::Gen::B => b_op.clone(),
            };
            for _ in 0..e {
                word_op = word_op.compose(&gen_op);
            }
        }
        out = out.add(&word_op.scale(&constant_rat(c)?));
    }
    Ok(out)
}

/// Apply every coefficient of a series to a test polynomial, giving one
/// image polynomial per `t`-order. The series' algebra must carry a
/// left-polynomial relation with natural exponents (or be free with `p`
/// read as 0 — not representable, hence rejected).
pub fn series_apply(s: &TSeries, f: &XPoly) -> Result<Vec<XPoly>> {
    let p = representable_relation(s.ctx())?;
    s.coeffs()
        .iter()
        .map(|c| rep_of(c, &p)?.apply(f))
        .collect()
}

/// Extract the relation polynomial this oracle can model.
pub fn representable_relation(ctx: &Algebra) -> Result<UniPoly> {
    match ctx.relation() {
        Relation::LeftPoly(p) if p.has_natural_exponents() => Ok(p.clone()),
        other => Err(Error::Unsupported(format!(
            "no differential representation for relation `{other}`"
        ))),
    }
}

/// The generalized shift map: checks both
/// `f(x + g(x)) = sum_n g(x)^n f^(n)(x) / n!` (the `(e^{g(x)})^D` action)
/// and the composition variant `f(g(x)) = sum_n (g(x)-x)^n f^(n)(x)/n!`,
/// where the sums terminate once `n` exceeds `deg f`. Requires `g(0) = 0`
/// so the exponentials are well-formed; `n_max` bounds the expansion and
/// must reach `deg f` for exact agreement.
pub fn shift_check(g: &XPoly, f: &XPoly, n_max: usize) -> Result<bool> {
    if !g.coefficient(0).is_zero() {
        return Err(Error::ConstantTerm {
            expected: "0".into(),
            found: g.coefficient(0).to_string(),
        });
    }
    let taylor = |h: &XPoly| -> Result<XPoly> {
        let mut sum = XPoly::with_cap(f.cap);
        let mut h_pow = XPoly::one();
        let mut deriv = f.clone();
        for n in 0..=n_max {
            let term = h_pow.mul(&deriv)?.scale(&Rat::factorial(n).recip()?);
            sum = sum.add(&term);
            h_pow = h_pow.mul(h)?;
            deriv = deriv.derivative();
        }
        Ok(sum)
    };

    let shift_ok = {
        let direct = f.compose(&XPoly::x().add(g))?;
        taylor(g)? == direct
    };
    let compose_ok = {
        let direct = f.compose(g)?;
        taylor(&g.sub(&XPoly::x()))? == direct
    };
    Ok(shift_ok && compose_ok)
}
