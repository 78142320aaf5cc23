//! Checks under genuinely bivariate relations, where normal forms come
//! from the grade-by-grade linear solver: the `[B,A] = eps(A+B) + lambda(A+B)^2`
//! family with its unsigned-Stirling binomial theorem, its `eps(A+B)`
//! degeneration, and the `lambda A^2 + mu B^2` relation whose normal form
//! has an explicit pole at `lambda mu = 1`.

use super::{ab_sum, free_pow, poly_eq, req, scalar_at, series_eq, witness};
use crate::combinat::{bracket_eval, stirling1_unsigned};
use crate::error::Error;
use crate::error::Result;
use crate::ncalg::{Algebra, Gen, NCPoly, NCWord, Relation};
use crate::scalars::{ParamEnv, ParamRat, Rat};
use crate::series::TSeries;
use crate::verify::support::{exp_gen, scalar_expm1_over};
use crate::verify::{Channel, Claim};

pub(super) fn bivariate_relation() -> Relation {
    let q = &ab_sum().scale(&ParamRat::symbol("epsilon"))
        + &free_pow(&ab_sum(), 2).scale(&ParamRat::symbol("lambda"));
    Relation::bivariate(q).expect("degree two in both generators")
}

pub(super) fn excedance_relation() -> Relation {
    Relation::bivariate(ab_sum().scale(&ParamRat::symbol("epsilon")))
        .expect("linear in both generators")
}

pub(super) fn rosengren_relation() -> Relation {
    Relation::bivariate(rosengren_rhs(ParamRat::symbol("lambda"), ParamRat::symbol("mu")))
        .expect("squares of both generators")
}

fn rosengren_rhs(lam: ParamRat, mu: ParamRat) -> NCPoly {
    let mut q = NCPoly::zero();
    q.add_term(NCWord::gen_pow(Gen::A, Rat::from_int(2)), lam);
    q.add_term(NCWord::gen_pow(Gen::B, Rat::from_int(2)), mu);
    q
}

/// The symmetric-argument kernel `(1 + lambda (A+B)(1 - e^{-eps t})/eps)^(1/lambda)`
/// built from scalar data.
fn symmetric_kernel(
    ctx: &Algebra,
    order: usize,
    eps: &Rat,
    lam: &ParamRat,
) -> Result<TSeries> {
    let g = scalar_expm1_over(&-eps, order); // (1 - e^{-eps t})/eps
    let sum = ab_sum();
    let inner = TSeries::from_fn(ctx, order, |n| {
        if n == 0 {
            NCPoly::one()
        } else {
            sum.scale(&(&scalar_at(&g, n) * lam))
        }
    })?;
    inner.pow_scalar(&lam.recip()?)
}

/// `[B,A] = eps(A+B) + lambda(A+B)^2`: the bracket-scaled binomial theorem
/// in unsigned Stirling numbers, the kernel form of `e^{At} e^{Bt}`, and
/// the `n = 2` case recovering the relation itself.
pub(super) fn build_bivariate(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let lam_pr = ParamRat::from_rat(lam.clone());
    let q = &ab_sum().scale_rat(&eps) + &free_pow(&ab_sum(), 2).scale_rat(&lam);
    let ctx = Algebra::bivariate(q.clone())?;

    let mut claims = Vec::new();
    for n in 0..=order {
        let lhs = ctx
            .binomial_power(n)?
            .scale(&bracket_eval(&lam_pr, n));
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            let outer = &stirling1_unsigned(n, k as i64) * &eps.pow((n - k) as i64)?;
            for j in 0..=k {
                rhs.add_term(
                    NCWord::normal(Rat::from_int(j as i64), Rat::from_int((k - j) as i64)),
                    ParamRat::from_rat(&outer * &Rat::binomial(k, j)),
                );
            }
        }
        claims.push(poly_eq(
            format!("[lambda]_{n} (A+B)^{n} via unsigned Stirling numbers"),
            false,
            &ctx,
            lhs,
            rhs,
        ));
    }

    claims.push(series_eq(
        "e^{At} e^{Bt} = (1 + lambda (A+B)(1-e^{-eps t})/eps)^(1/lambda)",
        false,
        exp_gen(&ctx, Gen::A, order).mul(&exp_gen(&ctx, Gen::B, order))?,
        symmetric_kernel(&ctx, order, &eps, &lam_pr)?,
    ));

    let lhs = ctx
        .binomial_power(2)?
        .scale_rat(&(&Rat::one() - &lam));
    let mut rhs = NCPoly::zero();
    rhs.add_term(NCWord::normal(Rat::from_int(2), Rat::zero()), ParamRat::from_int(1));
    rhs.add_term(NCWord::normal(Rat::one(), Rat::one()), ParamRat::from_int(2));
    rhs.add_term(NCWord::normal(Rat::zero(), Rat::from_int(2)), ParamRat::from_int(1));
    rhs.add_scaled(&ctx.normal_order(&ab_sum())?, &ParamRat::from_rat(eps.clone()));
    claims.push(poly_eq(
        "(1 - lambda)(A+B)^2 recovers the relation",
        false,
        &ctx,
        lhs,
        rhs,
    ));

    Ok(claims)
}

/// The linear symmetric relation `[B,A] = eps(A+B)`: the same binomial
/// theorem without bracket factors and a plain exponential kernel.
pub(super) fn build_excedance(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let ctx = Algebra::bivariate(ab_sum().scale_rat(&eps))?;

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            let outer = &stirling1_unsigned(n, k as i64) * &eps.pow((n - k) as i64)?;
            for j in 0..=k {
                rhs.add_term(
                    NCWord::normal(Rat::from_int(j as i64), Rat::from_int((k - j) as i64)),
                    ParamRat::from_rat(&outer * &Rat::binomial(k, j)),
                );
            }
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} via unsigned Stirling numbers"),
            false,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));
    }

    let g = scalar_expm1_over(&-&eps, order);
    let sum = ab_sum();
    let arg = TSeries::from_fn(&ctx, order, |n| {
        if n == 0 {
            NCPoly::zero()
        } else {
            sum.scale(&scalar_at(&g, n))
        }
    })?;
    claims.push(series_eq(
        "e^{At} e^{Bt} = exp((A+B)(1-e^{-eps t})/eps)",
        false,
        exp_gen(&ctx, Gen::A, order).mul(&exp_gen(&ctx, Gen::B, order))?,
        arg.exp()?,
    ));

    Ok(claims)
}

/// `[B,A] = lambda A^2 + mu B^2`: the closed normal form of `B^2 A` with
/// its `1 - lambda mu` denominator, checked symbolically and at the given
/// parameters; at `lambda mu = 1` the normal form must fail at grade 3.
pub(super) fn build_rosengren(env: &ParamEnv, _order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let lam_s = ParamRat::symbol("lambda");
    let mu_s = ParamRat::symbol("mu");
    let sym_ctx = Algebra::bivariate(rosengren_rhs(lam_s.clone(), mu_s.clone()))?;
    let b2a = NCPoly::term(
        NCWord::from_blocks([(Gen::B, Rat::from_int(2)), (Gen::A, Rat::one())]),
        ParamRat::from_int(1),
    );

    let expected = |lam: &ParamRat, mu: &ParamRat| -> Result<NCPoly> {
        let denom = (&ParamRat::from_int(1) - &(lam * mu)).recip()?;
        let two = ParamRat::from_int(2);
        let mut rhs = NCPoly::zero();
        rhs.add_term(
            NCWord::normal(Rat::from_int(3), Rat::zero()),
            &(&two * &(lam * lam)) * &denom,
        );
        rhs.add_term(
            NCWord::normal(Rat::from_int(2), Rat::one()),
            &(&two * lam) * &denom,
        );
        rhs.add_term(
            NCWord::normal(Rat::one(), Rat::from_int(2)),
            &(&ParamRat::from_int(1) + &(lam * mu)) * &denom,
        );
        rhs.add_term(
            NCWord::normal(Rat::zero(), Rat::from_int(3)),
            &(&two * mu) * &denom,
        );
        Ok(rhs)
    };

    let mut claims = vec![poly_eq(
        "the normal form of B^2 A, with symbolic coefficients",
        false,
        &sym_ctx,
        sym_ctx.normal_order(&b2a)?,
        expected(&lam_s, &mu_s)?,
    )];

    let lam = req(env, "lambda")?;
    let mu = req(env, "mu")?;
    let lam_pr = ParamRat::from_rat(lam.clone());
    let mu_pr = ParamRat::from_rat(mu.clone());
    let ctx = Algebra::bivariate(rosengren_rhs(lam_pr.clone(), mu_pr.clone()))?;

    if &lam * &mu == Rat::one() {
        let (pass, detail) = match ctx.normal_order(&b2a) {
            Err(Error::NoNormalForm { grade, witness }) => (
                grade == 3,
                format!("failed at grade {grade} with witness {witness}"),
            ),
            Err(e) => (false, format!("unexpected error: {e}")),
            Ok(p) => (
                false,
                format!("unexpectedly solvable: {}", ctx.render(&p, false)),
            ),
        };
        claims.push(witness(
            "at lambda mu = 1 the grade-3 normal form does not exist",
            Channel::Rewriter,
            pass,
            detail,
        ));
    } else {
        claims.push(poly_eq(
            format!("the normal form of B^2 A at lambda = {lam}, mu = {mu}"),
            false,
            &ctx,
            ctx.normal_order(&b2a)?,
            expected(&lam_pr, &mu_pr)?,
        ));
    }

    Ok(claims)
}
