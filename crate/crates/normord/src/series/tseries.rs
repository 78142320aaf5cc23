//! Truncated power series in `t` with noncommutative coefficients.

use std::fmt;

use crate::error::{Error, Result};
use crate::ncalg::{Algebra, Gen, NCPoly, NCWord};
use crate::scalars::{ParamEnv, ParamRat, Rat};

use super::aseries::ASeries;

/// A series `sum_k c_k t^k` truncated at `t^order` whose coefficients are
/// polynomials in the two generators, kept in the normal form of the
/// attached algebra.
///
/// Every constructor and operation re-establishes normal form, so equality
/// of two series over the same algebra is plain coefficientwise equality.
/// Binary operations insist on the same algebra and the same truncation
/// order and report `ContextMismatch` otherwise.
#[derive(Clone, PartialEq, Debug)]
pub struct TSeries {
    order: usize,
    coeffs: Vec<NCPoly>,
    ctx: Algebra,
}

impl TSeries {
    /// Build from low-order coefficients (padded with zeros), normal
    /// ordering each one.
    pub fn new(ctx: &Algebra, order: usize, mut coeffs: Vec<NCPoly>) -> Result<Self> {
        assert!(
            coeffs.len() <= order + 1,
            "more coefficients than the truncation order admits"
        );
        coeffs.resize(order + 1, NCPoly::zero());
        let coeffs = coeffs
            .iter()
            .map(|c| ctx.normal_order(c))
            .collect::<Result<_>>()?;
        Ok(TSeries {
            order,
            coeffs,
            ctx: ctx.clone(),
        })
    }

    pub fn from_fn(
        ctx: &Algebra,
        order: usize,
        mut f: impl FnMut(usize) -> NCPoly,
    ) -> Result<Self> {
        TSeries::new(ctx, order, (0..=order).map(|k| f(k)).collect())
    }

    pub fn zero(ctx: &Algebra, order: usize) -> Self {
        TSeries {
            order,
            coeffs: vec![NCPoly::zero(); order + 1],
            ctx: ctx.clone(),
        }
    }

    pub fn one(ctx: &Algebra, order: usize) -> Self {
        let mut coeffs = vec![NCPoly::zero(); order + 1];
        coeffs[0] = NCPoly::one();
        TSeries {
            order,
            coeffs,
            ctx: ctx.clone(),
        }
    }

    /// The monomial `p * t^k`.
    pub fn monomial(ctx: &Algebra, order: usize, k: usize, p: NCPoly) -> Result<Self> {
        let mut s = TSeries::zero(ctx, order);
        if k <= order {
            s.coeffs[k] = ctx.normal_order(&p)?;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ctx(&self) -> &Algebra {
        &self.ctx
    }

    pub fn coeff(&self, k: usize) -> &NCPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[NCPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(NCPoly::is_zero)
    }

    fn compatible(&self, other: &TSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::ContextMismatch(format!(
                "truncation orders {} and {} differ",
                self.order, other.order
            )));
        }
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(format!(
                "algebras `{}` and `{}` differ",
                self.ctx, other.ctx
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TSeries) -> Result<TSeries> {
        self.compatible(other)?;
        Ok(TSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            ctx: self.ctx.clone(),
        })
    }

    pub fn sub(&self, other: &TSeries) -> Result<TSeries> {
        self.compatible(other)?;
        Ok(TSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
            ctx: self.ctx.clone(),
        })
    }

    pub fn neg(&self) -> TSeries {
        TSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn scale(&self, c: &ParamRat) -> TSeries {
        TSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
            ctx: self.ctx.clone(),
        }
    }

    /// Cauchy product; every resulting coefficient is normal ordered.
    pub fn mul(&self, other: &TSeries) -> Result<TSeries> {
        self.compatible(other)?;
        let mut coeffs = vec![NCPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &self.ctx.mul(a, b)?;
            }
        }
        let coeffs = coeffs
            .iter()
            .map(|c| self.ctx.normal_order(c))
            .collect::<Result<_>>()?;
        Ok(TSeries {
            order: self.order,
            coeffs,
            ctx: self.ctx.clone(),
        })
    }

    /// Multiply every coefficient by `p` on the right (normal ordered).
    pub fn mul_poly(&self, p: &NCPoly) -> Result<TSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| self.ctx.mul_ordered(c, p))
            .collect::<Result<_>>()?;
        Ok(TSeries {
            order: self.order,
            coeffs,
            ctx: self.ctx.clone(),
        })
    }

    /// `exp` of a series with zero constant coefficient.
    pub fn exp(&self) -> Result<TSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0".into(),
                found: self.ctx.render(&self.coeffs[0], false),
            });
        }
        let mut result = TSeries::one(&self.ctx, self.order);
        let mut term = TSeries::one(&self.ctx, self.order);
        for n in 1..=self.order {
            term = term.mul(self)?.scale(&ParamRat::from_rat(Rat::new(1, n as i64)));
            result = result.add(&term)?;
        }
        Ok(result)
    }

    /// `log` of a series with constant coefficient 1.
    pub fn log(&self) -> Result<TSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: self.ctx.render(&self.coeffs[0], false),
            });
        }
        let y = self.sub(&TSeries::one(&self.ctx, self.order))?;
        let mut result = TSeries::zero(&self.ctx, self.order);
        let mut power = TSeries::one(&self.ctx, self.order);
        for n in 1..=self.order {
            power = power.mul(&y)?;
            let sign = if n % 2 == 1 { 1 } else { -1 };
            result = result.add(&power.scale(&ParamRat::from_rat(Rat::new(sign, n as i64))))?;
        }
        Ok(result)
    }

    /// Termwise integral from 0, as for `ASeries`.
    pub fn integrate(&self) -> TSeries {
        let mut coeffs = vec![NCPoly::zero(); self.order + 1];
        for k in 0..self.order {
            coeffs[k + 1] = self.coeffs[k].scale_rat(&Rat::new(1, k as i64 + 1));
        }
        TSeries {
            order: self.order,
            coeffs,
            ctx: self.ctx.clone(),
        }
    }

    /// Substitute `t -> c t`.
    pub fn scale_t(&self, c: &ParamRat) -> TSeries {
        let mut power = ParamRat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| {
                let scaled = p.scale(&power);
                power = &power * c;
                scaled
            })
            .collect();
        TSeries {
            order: self.order,
            coeffs,
            ctx: self.ctx.clone(),
        }
    }

    /// Scalar power `x^c` of a series with constant coefficient 1.
    ///
    /// Computed along two independent routes — the binomial series
    /// `sum_n (x-1)^n C(c, n)` and `exp(c log x)` — which are required to
    /// agree coefficient for coefficient; a divergence would mean the
    /// arithmetic itself is broken, so it panics rather than returning.
    pub fn pow_scalar(&self, c: &ParamRat) -> Result<TSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: self.ctx.render(&self.coeffs[0], false),
            });
        }
        let y = self.sub(&TSeries::one(&self.ctx, self.order))?;
        let mut binomial = TSeries::one(&self.ctx, self.order);
        let mut power = TSeries::one(&self.ctx, self.order);
        let mut falling = ParamRat::one();
        for n in 1..=self.order {
            power = power.mul(&y)?;
            // falling <- c (c-1) ... (c-n+1) / n!
            falling = &falling * &(c - &ParamRat::from_int(n as i64 - 1));
            falling = falling.scale(&Rat::new(1, n as i64));
            binomial = binomial.add(&power.scale(&falling))?;
        }
        let via_log = self.log()?.scale(c).exp()?;
        assert_eq!(
            binomial, via_log,
            "binomial and exp-log scalar powers diverged"
        );
        Ok(binomial)
    }

    /// `x^b` for a polynomial exponent: `sum_n (x-1)^n C(b, n)`, the
    /// factors in that order, with `C(b, n) = (b)_n / n!` expanded through
    /// signed Stirling numbers.
    pub fn pow_poly(&self, b: &NCPoly) -> Result<TSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1".into(),
                found: self.ctx.render(&self.coeffs[0], false),
            });
        }
        let y = self.sub(&TSeries::one(&self.ctx, self.order))?;
        let mut result = TSeries::one(&self.ctx, self.order);
        let mut power = TSeries::one(&self.ctx, self.order);
        for n in 1..=self.order {
            power = power.mul(&y)?;
            result = result.add(&power.mul_poly(&binomial_poly(b, n, &self.ctx)?)?)?;
        }
        Ok(result)
    }

    pub fn instantiate(&self, env: &ParamEnv) -> Result<TSeries> {
        let ctx = self.ctx.instantiate(env)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| ctx.normal_order(&c.instantiate(env)?))
            .collect::<Result<_>>()?;
        Ok(TSeries {
            order: self.order,
            coeffs,
            ctx,
        })
    }

    /// First coefficient (by ascending `t`-order, then word order) where
    /// the two series disagree, rendered for reporting; `None` means the
    /// series are equal through the truncation order.
    pub fn first_divergence(&self, other: &TSeries) -> Result<Option<Divergence>> {
        self.compatible(other)?;
        let letters = self.ctx.letters();
        for k in 0..=self.order {
            let diff = &self.coeffs[k] - &other.coeffs[k];
            let first = diff.terms().next().map(|(w, _)| w.clone());
            if let Some(w) = first {
                return Ok(Some(Divergence {
                    t_order: k,
                    word: w.to_string_with(letters, false),
                    lhs: self.coeffs[k].coefficient(&w).to_string(),
                    rhs: other.coeffs[k].coefficient(&w).to_string(),
                }));
            }
        }
        Ok(None)
    }

    pub fn to_string_with(&self, latex: bool) -> String {
        let letters = self.ctx.letters();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| {
                let c = p.to_string_with(letters, latex);
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

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(false))
    }
}

/// A reported mismatch between two series: the lowest `t`-order and the
/// first word (in canonical order) whose coefficients differ.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Divergence {
    pub t_order: usize,
    pub word: String,
    pub lhs: String,
    pub rhs: String,
}

/// `C(b, n) = b(b-1)...(b-n+1)/n!` for a polynomial `b`, via the signed
/// Stirling expansion of the falling factorial.
fn binomial_poly(b: &NCPoly, n: usize, ctx: &Algebra) -> Result<NCPoly> {
    let mut result = NCPoly::zero();
    let mut b_power = NCPoly::one();
    for k in 0..=n {
        let s = crate::combinat::stirling1(n, k as i64);
        if !s.is_zero() {
            result = &result + &b_power.scale_rat(&s);
        }
        if k < n {
            b_power = ctx.mul_ordered(&b_power, b)?;
        }
    }
    Ok(result.scale_rat(&Rat::factorial(n).recip().expect("n! is nonzero")))
}

/// The exponential `exp(x t)`: coefficient of `t^k` is
/// `normal_order(x^k)/k!`.
pub fn exp_element(x: &NCPoly, ctx: &Algebra, order: usize) -> Result<TSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut acc = NCPoly::one();
    for k in 0..=order {
        coeffs.push(acc.scale_rat(&Rat::factorial(k).recip().expect("k! is nonzero")));
        if k < order {
            acc = ctx.mul_ordered(&acc, x)?;
        }
    }
    TSeries::new(ctx, order, coeffs)
}

/// Interpret a commutative series as a noncommutative one in the given
/// generator.
pub fn lift(phi: &ASeries, g: Gen, ctx: &Algebra) -> Result<TSeries> {
    let coeffs = phi
        .coeffs()
        .iter()
        .map(|u| {
            let mut p = NCPoly::zero();
            for (e, c) in u.terms() {
                p.add_term(NCWord::gen_pow(g, e.clone()), c.clone());
            }
            p
        })
        .collect();
    TSeries::new(ctx, phi.order(), coeffs)
}

/// `(e^{phi(t)})^B := sum_n phi(t)^n B^n / n!` for a commutative series
/// `phi` in the generator `A` with zero constant term.
pub fn exp_pow_b(phi: &ASeries, ctx: &Algebra) -> Result<TSeries> {
    if !phi.coeff(0).is_zero() {
        return Err(Error::ConstantTerm {
            expected: "0".into(),
            found: phi.coeff(0).to_string_with("A", false),
        });
    }
    let order = phi.order();
    let mut coeffs = vec![NCPoly::zero(); order + 1];
    let mut phi_n = ASeries::one(order);
    for n in 0..=order {
        let inv_fact = Rat::factorial(n).recip().expect("n! is nonzero");
        let b_exp = Rat::from_int(n as i64);
        for k in n..=order {
            let u = phi_n.coeff(k);
            if u.is_zero() {
                continue;
            }
            for (e, c) in u.terms() {
                coeffs[k].add_term(
                    NCWord::normal(e.clone(), b_exp.clone()),
                    c.scale(&inv_fact),
                );
            }
        }
        if n < order {
            phi_n = &phi_n * phi;
        }
    }
    TSeries::new(ctx, order, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::UniPoly;
    use crate::ncalg::Basis;

    fn weyl_symbolic() -> Algebra {
        Algebra::left_poly(UniPoly::constant(ParamRat::symbol("alpha")))
    }

    fn weyl() -> Algebra {
        Algebra::left_poly(UniPoly::one())
    }

    /// Commutative toy algebra: [B, A] = 0.
    fn commutative() -> Algebra {
        Algebra::left_poly(UniPoly::zero())
    }

    fn a() -> NCPoly {
        NCPoly::gen(Gen::A)
    }

    fn b() -> NCPoly {
        NCPoly::gen(Gen::B)
    }

    #[test]
    fn cauchy_product() {
        // exp(At) exp(Bt) in a symbolic Weyl algebra: the t^2 coefficient
        // is A^2/2 + AB + B^2/2.
        let ctx = weyl_symbolic();
        let ea = exp_element(&a(), &ctx, 2).unwrap();
        let eb = exp_element(&b(), &ctx, 2).unwrap();
        let prod = ea.mul(&eb).unwrap();
        let mut want = NCPoly::term(
            NCWord::normal(Rat::from_int(2), Rat::zero()),
            ParamRat::from_rat(Rat::new(1, 2)),
        );
        want.add_term(NCWord::normal(Rat::one(), Rat::one()), ParamRat::one());
        want.add_term(
            NCWord::normal(Rat::zero(), Rat::from_int(2)),
            ParamRat::from_rat(Rat::new(1, 2)),
        );
        assert_eq!(prod.coeff(2), &want);
        // Multiplying by one changes nothing.
        assert_eq!(prod.mul(&TSeries::one(&ctx, 2)).unwrap(), prod);
        // (tA)(tB) = t^2 AB.
        let ta = TSeries::monomial(&ctx, 2, 1, a()).unwrap();
        let tb = TSeries::monomial(&ctx, 2, 1, b()).unwrap();
        let want = TSeries::monomial(&ctx, 2, 2, &a() * &b()).unwrap();
        assert_eq!(ta.mul(&tb).unwrap(), want);
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        let x = TSeries::one(&weyl(), 2);
        let y = TSeries::one(&weyl_symbolic(), 2);
        assert!(matches!(x.mul(&y), Err(Error::ContextMismatch(_))));
        let z = TSeries::one(&weyl(), 3);
        assert!(matches!(x.add(&z), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn exponentials() {
        // exp(t(A+B)) in Weyl p=1, order 2.
        let ctx = weyl();
        let x = TSeries::monomial(&ctx, 2, 1, &a() + &b()).unwrap();
        let e = x.exp().unwrap();
        assert_eq!(e.coeff(0), &NCPoly::one());
        assert_eq!(e.coeff(1), &(&a() + &b()));
        let sq = ctx.binomial_power(2).unwrap();
        assert_eq!(e.coeff(2), &sq.scale_rat(&Rat::new(1, 2)));
        // exp(0) = 1 and exp matches exp_element.
        assert_eq!(
            TSeries::zero(&ctx, 4).exp().unwrap(),
            TSeries::one(&ctx, 4)
        );
        assert_eq!(e, exp_element(&(&a() + &b()), &ctx, 2).unwrap());
        // Nonzero constant term is an error.
        assert!(matches!(
            TSeries::one(&ctx, 2).exp(),
            Err(Error::ConstantTerm { .. })
        ));
    }

    #[test]
    fn logarithms() {
        let ctx = weyl_symbolic();
        // Round trip through exp.
        let x = TSeries::new(
            &ctx,
            5,
            vec![NCPoly::zero(), a(), b()],
        )
        .unwrap();
        assert_eq!(x.exp().unwrap().log().unwrap(), x);
        // log(1) = 0.
        assert!(TSeries::one(&ctx, 3).log().unwrap().is_zero());
        assert!(matches!(
            TSeries::zero(&ctx, 3).log(),
            Err(Error::ConstantTerm { .. })
        ));
    }

    #[test]
    fn log_of_split_exponentials() {
        // log(e^{Xt} e^{Yt}) = t(X+Y) + t^2 (XY - YX)/2 + ... in the free
        // algebra on X, Y.
        let ctx = Algebra::free(2).with_letters(['X', 'Y']);
        let ex = exp_element(&a(), &ctx, 2).unwrap();
        let ey = exp_element(&b(), &ctx, 2).unwrap();
        let log = ex.mul(&ey).unwrap().log().unwrap();
        assert_eq!(log.coeff(1), &(&a() + &b()));
        let c = &(&a() * &b()) - &(&b() * &a());
        assert_eq!(log.coeff(2), &c.scale_rat(&Rat::new(1, 2)));
    }

    #[test]
    fn integration() {
        let ctx = weyl();
        assert_eq!(
            TSeries::one(&ctx, 2).integrate(),
            TSeries::monomial(&ctx, 2, 1, NCPoly::one()).unwrap()
        );
        assert!(TSeries::zero(&ctx, 2).integrate().is_zero());
    }

    #[test]
    fn scalar_powers() {
        // (1 + lambda A t)^{1/lambda} = 1 + At + (1-lambda) A^2 t^2/2 + ...
        let ctx = commutative();
        let lam = ParamRat::symbol("lambda");
        let x = TSeries::monomial(&ctx, 2, 1, a().scale(&lam))
            .unwrap()
            .add(&TSeries::one(&ctx, 2))
            .unwrap();
        let p = x.pow_scalar(&lam.recip().unwrap()).unwrap();
        assert_eq!(p.coeff(0), &NCPoly::one());
        assert_eq!(p.coeff(1), &a());
        let a2 = NCPoly::gen_pow(Gen::A, Rat::from_int(2));
        let half = ParamRat::from_rat(Rat::new(1, 2));
        assert_eq!(
            p.coeff(2),
            &a2.scale(&(&(&ParamRat::one() - &lam) * &half))
        );
        // x^1 = x.
        assert_eq!(x.pow_scalar(&ParamRat::one()).unwrap(), x);
        // ((1+t)^{1/2})^2 = 1 + t.
        let one_plus_t = TSeries::one(&ctx, 4)
            .add(&TSeries::monomial(&ctx, 4, 1, NCPoly::one()).unwrap())
            .unwrap();
        let root = one_plus_t
            .pow_scalar(&ParamRat::from_rat(Rat::new(1, 2)))
            .unwrap();
        assert_eq!(root.mul(&root).unwrap(), one_plus_t);
    }

    #[test]
    fn scalar_power_laws() {
        let ctx = weyl_symbolic();
        // x = 1 + t(A + B) + t^2 AB.
        let x = TSeries::new(
            &ctx,
            4,
            vec![NCPoly::one(), &a() + &b(), &a() * &b()],
        )
        .unwrap();
        let p = ParamRat::from_rat(Rat::new(2, 3));
        let q = ParamRat::from_rat(Rat::new(-1, 2));
        let xp = x.pow_scalar(&p).unwrap();
        let xq = x.pow_scalar(&q).unwrap();
        assert_eq!(
            xp.mul(&xq).unwrap(),
            x.pow_scalar(&(&p + &q)).unwrap()
        );
        assert_eq!(
            xp.pow_scalar(&q).unwrap(),
            x.pow_scalar(&(&p * &q)).unwrap()
        );
    }

    #[test]
    fn polynomial_powers_reproduce_the_b_exponential() {
        // (e^{At})^B = sum_n A^n B^n t^n / n!, under any relation; check in
        // a symbolic Weyl algebra through order 4.
        let ctx = weyl_symbolic();
        let x = exp_element(&a(), &ctx, 4).unwrap();
        let got = x.pow_poly(&b()).unwrap();
        let want = TSeries::from_fn(&ctx, 4, |k| {
            NCPoly::term(
                NCWord::normal(Rat::from_int(k as i64), Rat::from_int(k as i64)),
                ParamRat::from_rat(Rat::factorial(k).recip().unwrap()),
            )
        })
        .unwrap();
        assert_eq!(got, want);
        // b = 0 gives 1; b = 1 gives x back.
        assert_eq!(
            x.pow_poly(&NCPoly::zero()).unwrap(),
            TSeries::one(&ctx, 4)
        );
        assert_eq!(x.pow_poly(&NCPoly::one()).unwrap(), x);
        // For scalar exponents the two power operations agree.
        let c = ParamRat::from_rat(Rat::new(3, 2));
        let y = TSeries::new(&ctx, 4, vec![NCPoly::one(), &a() + &b()]).unwrap();
        assert_eq!(
            y.pow_poly(&NCPoly::constant(c.clone())).unwrap(),
            y.pow_scalar(&c).unwrap()
        );
    }

    #[test]
    fn b_exponential_from_commutative_data() {
        // phi = At: 1 + tAB + t^2 A^2B^2/2 + ...
        let ctx = weyl_symbolic();
        let phi = ASeries::monomial(3, 1, UniPoly::x());
        let got = exp_pow_b(&phi, &ctx).unwrap();
        let want = TSeries::from_fn(&ctx, 3, |k| {
            NCPoly::term(
                NCWord::normal(Rat::from_int(k as i64), Rat::from_int(k as i64)),
                ParamRat::from_rat(Rat::factorial(k).recip().unwrap()),
            )
        })
        .unwrap();
        assert_eq!(got, want);
        // phi = 0 gives 1.
        assert_eq!(
            exp_pow_b(&ASeries::zero(3), &ctx).unwrap(),
            TSeries::one(&ctx, 3)
        );
        // phi = At + eps A t^2/2 (the expansion of A(e^{eps t}-1)/eps):
        // t^2 coefficient is (eps AB + A^2B^2)/2.
        let eps = ParamRat::symbol("epsilon");
        let phi = ASeries::new(
            2,
            vec![
                UniPoly::zero(),
                UniPoly::x(),
                UniPoly::x().scale(&eps.scale(&Rat::new(1, 2))),
            ],
        );
        let got = exp_pow_b(&phi, &ctx).unwrap();
        let mut t2 = NCPoly::term(
            NCWord::normal(Rat::one(), Rat::one()),
            eps.scale(&Rat::new(1, 2)),
        );
        t2.add_term(
            NCWord::normal(Rat::from_int(2), Rat::from_int(2)),
            ParamRat::from_rat(Rat::new(1, 2)),
        );
        assert_eq!(got.coeff(2), &t2);
    }

    #[test]
    fn exponential_of_an_element() {
        // exp((A+B)t) in symbolic Weyl, order 2.
        let ctx = weyl_symbolic();
        let e = exp_element(&(&a() + &b()), &ctx, 2).unwrap();
        let mut t2 = NCPoly::term(
            NCWord::normal(Rat::from_int(2), Rat::zero()),
            ParamRat::from_rat(Rat::new(1, 2)),
        );
        t2.add_term(NCWord::normal(Rat::one(), Rat::one()), ParamRat::one());
        t2.add_term(
            NCWord::normal(Rat::zero(), Rat::from_int(2)),
            ParamRat::from_rat(Rat::new(1, 2)),
        );
        t2.add_term(
            NCWord::one(),
            ParamRat::symbol("alpha").scale(&Rat::new(1, 2)),
        );
        assert_eq!(e.coeff(2), &t2);
        // exp of zero is one.
        assert_eq!(
            exp_element(&NCPoly::zero(), &ctx, 3).unwrap(),
            TSeries::one(&ctx, 3)
        );
        // x = AB under [B,A] = h: t^2 coefficient (A^2B^2 + hAB)/2.
        let h = ParamRat::symbol("h");
        let ctx = Algebra::left_poly(UniPoly::constant(h.clone()));
        let e = exp_element(&(&a() * &b()), &ctx, 2).unwrap();
        let mut t2 = NCPoly::term(
            NCWord::normal(Rat::from_int(2), Rat::from_int(2)),
            ParamRat::from_rat(Rat::new(1, 2)),
        );
        t2.add_term(
            NCWord::normal(Rat::one(), Rat::one()),
            h.scale(&Rat::new(1, 2)),
        );
        assert_eq!(e.coeff(2), &t2);
    }

    #[test]
    fn lifting_commutative_series() {
        let ctx = weyl_symbolic();
        let phi = ASeries::new(2, vec![UniPoly::one(), UniPoly::x().pow(2)]);
        let lifted = lift(&phi, Gen::A, &ctx).unwrap();
        assert_eq!(lifted.coeff(0), &NCPoly::one());
        assert_eq!(
            lifted.coeff(1),
            &NCPoly::gen_pow(Gen::A, Rat::from_int(2))
        );
        // Lifting into B under an antinormal basis works the same way.
        let anti = Algebra::left_poly(UniPoly::one()).with_basis(Basis::Antinormal);
        let lifted = lift(&phi, Gen::B, &anti).unwrap();
        assert_eq!(
            lifted.coeff(1),
            &NCPoly::gen_pow(Gen::B, Rat::from_int(2))
        );
    }

    #[test]
    fn commuting_exponentials_multiply() {
        // exp(t(X+Y)) = exp(tX) exp(tY) when [X, Y] = 0: take X = A,
        // Y = A^2 in a symbolic Weyl algebra.
        let ctx = weyl_symbolic();
        let x = a();
        let y = NCPoly::gen_pow(Gen::A, Rat::from_int(2));
        let both = exp_element(&(&x + &y), &ctx, 6).unwrap();
        let split = exp_element(&x, &ctx, 6)
            .unwrap()
            .mul(&exp_element(&y, &ctx, 6).unwrap())
            .unwrap();
        assert_eq!(both, split);
    }

    #[test]
    fn rescaling_t() {
        let ctx = weyl();
        let lam = ParamRat::symbol("lambda");
        let e = exp_element(&a(), &ctx, 3).unwrap().scale_t(&lam);
        for k in 0..=3usize {
            let want = NCPoly::gen_pow(Gen::A, Rat::from_int(k as i64)).scale(
                &lam.pow(k as i64)
                    .unwrap()
                    .scale(&Rat::factorial(k).recip().unwrap()),
            );
            assert_eq!(e.coeff(k), &want);
        }
    }

    #[test]
    fn rendering() {
        let ctx = weyl();
        let x = TSeries::new(&ctx, 2, vec![NCPoly::one(), &a() + &b()]).unwrap();
        assert_eq!(x.to_string(), "1 + (A + B)t");
    }
}
