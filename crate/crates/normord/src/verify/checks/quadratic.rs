//! Checks for relations `[B, A] = alpha + epsilon A - lambda A^2` and their
//! degenerate corollaries: the binomial theorems driven by the linear
//! recurrence `x_{n+2} = epsilon x_{n+1} + alpha x_n`, the kernel built
//! from the roots of `-X^2 + epsilon X + alpha`, and the closed-form
//! kernels of the affine, linear, constant, and pure-square cases.

use super::{
    ab_sum, gen_poly, integrality_witness, mono, mono_sym, poly_eq, quadratic_data, req,
    scalar_at, series_eq,
};
use crate::combinat::{bracket_eval, stirling2, UniPoly};
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, Gen, NCPoly, NCWord, Relation};
use crate::scalars::{ParamEnv, ParamRat, Rat};
use crate::series::{exp_element, lift, ASeries, TSeries};
use crate::verify::support::{
    exp_gen, phi_series, scalar_cosh, scalar_exp, scalar_expm1_over, scalar_sinh, uv_sequences,
};
use crate::verify::Claim;
use crate::viskov::{phi_gamma, CauchyProblem};

pub(super) fn general_relation() -> Relation {
    Relation::LeftPoly(
        &(&mono_sym("alpha", 0) + &mono_sym("epsilon", 1)) - &mono_sym("lambda", 2),
    )
}

pub(super) fn monic_relation() -> Relation {
    Relation::LeftPoly(&(&mono_sym("alpha", 0) + &mono_sym("epsilon", 1)) - &mono(Rat::one(), 2))
}

pub(super) fn eps0_relation() -> Relation {
    Relation::LeftPoly(&mono_sym("alpha", 0) - &mono_sym("lambda", 2))
}

pub(super) fn alpha0_relation() -> Relation {
    Relation::LeftPoly(&mono_sym("epsilon", 1) - &mono_sym("lambda", 2))
}

pub(super) fn affine_relation() -> Relation {
    Relation::LeftPoly(&mono_sym("alpha", 0) + &mono_sym("epsilon", 1))
}

pub(super) fn berry_relation() -> Relation {
    Relation::LeftPoly(-&mono_sym("lambda", 2))
}

pub(super) fn sack_relation() -> Relation {
    Relation::LeftPoly(mono_sym("epsilon", 1))
}

pub(super) fn glauber_relation() -> Relation {
    Relation::LeftPoly(mono_sym("alpha", 0))
}

fn quadratic_poly(alpha: &Rat, eps: &Rat, lam: &Rat) -> UniPoly {
    &(&mono(alpha.clone(), 0) + &mono(eps.clone(), 1)) - &mono(lam.clone(), 2)
}

/// The monic case `lambda = 1`: binomial theorem from the two-term
/// recurrence, its resummation, the root kernel, and the way the `t^2`
/// coefficient recovers the relation.
pub(super) fn build_mono(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let one = Rat::one();
    let (alpha, eps, r, rho) = quadratic_data(env, &one)?;
    let p = quadratic_poly(&alpha, &eps, &one);
    let ctx = Algebra::left_poly(p.clone());
    let (u, v) = uv_sequences(
        &ParamRat::from_rat(alpha.clone()),
        &ParamRat::from_rat(eps.clone()),
        order,
    );

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            let c = ParamRat::from_rat(Rat::binomial(n, k));
            let tail = Rat::from_int((n - k) as i64);
            rhs.add_term(NCWord::gen_pow(Gen::B, tail.clone()), &c * &v[k]);
            rhs.add_term(NCWord::normal(Rat::one(), tail), &c * &u[k]);
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} = sum_k C(n,k)(v_k + u_k A) B^(n-k)"),
            true,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));
    }

    let kernel = lift(&phi_series(&r, &rho, order), Gen::A, &ctx)?;
    let split = kernel.mul(&exp_gen(&ctx, Gen::B, order))?;

    let rows = TSeries::from_fn(&ctx, order, |n| {
        let mut c = NCPoly::zero();
        for k in 0..=n {
            let s = ParamRat::from_rat(&Rat::binomial(n, k) / &Rat::factorial(n));
            let tail = Rat::from_int((n - k) as i64);
            c.add_term(NCWord::gen_pow(Gen::B, tail.clone()), &s * &v[k]);
            c.add_term(NCWord::normal(Rat::one(), tail), &s * &u[k]);
        }
        c
    })?;
    claims.push(series_eq(
        "the binomial rows resum to the kernel times e^{Bt}",
        false,
        rows,
        split.clone(),
    ));
    claims.push(series_eq(
        "exp((A+B)t) = Phi(t) e^{Bt}",
        true,
        exp_element(&ab_sum(), &ctx, order)?,
        split.clone(),
    ));

    let mut symmetric = NCPoly::zero();
    symmetric.add_term(
        NCWord::normal(Rat::from_int(2), Rat::zero()),
        ParamRat::from_int(1),
    );
    symmetric.add_term(NCWord::normal(Rat::one(), Rat::one()), ParamRat::from_int(2));
    symmetric.add_term(
        NCWord::normal(Rat::zero(), Rat::from_int(2)),
        ParamRat::from_int(1),
    );
    let recovered = &split.coeff(2).scale(&ParamRat::from_int(2)) - &symmetric;
    claims.push(poly_eq(
        "the t^2 coefficient of the split returns the commutator",
        true,
        &ctx,
        recovered,
        gen_poly(&p, Gen::A),
    ));

    Ok(claims)
}

/// The general leading coefficient: `exp((A+B)t)` equals
/// `Phi(lambda t)^(1/lambda) e^{Bt}`, the explicit two-root form of the
/// same kernel, and the integrated flow exponent.
pub(super) fn build_general(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let lam = req(env, "lambda")?;
    let (alpha, eps, r, rho) = quadratic_data(env, &lam)?;
    let p = quadratic_poly(&alpha, &eps, &lam);
    let ctx = Algebra::left_poly(p.clone());
    let lam_pr = ParamRat::from_rat(lam.clone());
    let ebt = exp_gen(&ctx, Gen::B, order);

    let phi_l = phi_series(&r, &rho, order).scale_t(&lam_pr);
    let kernel = lift(&phi_l, Gen::A, &ctx)?.pow_scalar(&lam_pr.recip()?)?;
    let mut claims = vec![series_eq(
        "exp((A+B)t) = Phi(lambda t)^(1/lambda) e^{Bt}",
        true,
        exp_element(&ab_sum(), &ctx, order)?,
        kernel.mul(&ebt)?,
    )];

    if r != rho {
        let c = &lam * &(&rho - &r);
        let g = scalar_expm1_over(&c, order).scale(&lam_pr); // (e^{ct} - 1)/(rho - r)
        let shifted = &NCPoly::gen(Gen::A) - &NCPoly::constant(ParamRat::from_rat(r.clone()));
        let inner = TSeries::from_fn(&ctx, order, |n| {
            if n == 0 {
                NCPoly::one()
            } else {
                shifted.scale(&scalar_at(&g, n))
            }
        })?;
        let leading = lift(&scalar_exp(&r, order), Gen::A, &ctx)?;
        claims.push(series_eq(
            "the kernel in the explicit two-root form",
            true,
            exp_element(&ab_sum(), &ctx, order)?,
            leading
                .mul(&inner.pow_scalar(&lam_pr.recip()?)?)?
                .mul(&ebt)?,
        ));
    }

    let cp = CauchyProblem::new(p, UniPoly::one(), UniPoly::x(), order);
    let (_phi_flow, gamma) = phi_gamma(&cp);
    claims.push(series_eq(
        "the integrated flow exponent rebuilds the kernel",
        false,
        lift(&gamma, Gen::A, &ctx)?.exp()?,
        kernel,
    ));

    Ok(claims)
}

/// No linear term: the hyperbolic kernel
/// `(cosh(wt) + A sinh(wt)/r)^(1/lambda)` with `r^2 = alpha/lambda` and
/// `w = lambda r`. For positive parameters this is the familiar
/// `w = sqrt(lambda alpha)`, `1/r = sqrt(lambda/alpha)` form; taking the
/// signed `w = lambda r` keeps the identity exact when both parameters
/// are negative.
pub(super) fn build_eps0(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let lam = req(env, "lambda")?;
    let alpha = req(env, "alpha")?;
    let p = &mono(alpha.clone(), 0) - &mono(lam.clone(), 2);
    let ctx = Algebra::left_poly(p);
    let lam_pr = ParamRat::from_rat(lam.clone());

    let r = (&alpha / &lam).sqrt_exact().ok_or_else(|| {
        Error::Unsupported(format!(
            "alpha/lambda = {} is not a rational square",
            &alpha / &lam
        ))
    })?;
    let w = &lam * &r;
    let ratio = r.recip()?;

    let ch = scalar_cosh(&w, order);
    let sh = scalar_sinh(&w, order);
    let ratio_pr = ParamRat::from_rat(ratio.clone());
    let hyperbolic = ASeries::from_fn(order, |n| {
        &ch.coeff(n).clone()
            + &UniPoly::monomial(Rat::one(), &scalar_at(&sh, n) * &ratio_pr)
    });
    let kernel = lift(&hyperbolic, Gen::A, &ctx)?.pow_scalar(&lam_pr.recip()?)?;
    let phi_l = phi_series(&-&r, &r, order).scale_t(&lam_pr);
    Ok(vec![
        series_eq(
            "exp((A+B)t) = (cosh(wt) + A sinh(wt)/r)^(1/lambda) e^{Bt}",
            true,
            exp_element(&ab_sum(), &ctx, order)?,
            kernel.mul(&exp_gen(&ctx, Gen::B, order))?,
        ),
        series_eq(
            "the hyperbolic kernel equals the root kernel",
            false,
            kernel,
            lift(&phi_l, Gen::A, &ctx)?.pow_scalar(&lam_pr.recip()?)?,
        ),
    ])
}

/// No constant term: both Stirling-driven binomial theorems and the
/// kernel `(1 + lambda A (e^{epsilon t} - 1)/epsilon)^(1/lambda)`.
pub(super) fn build_alpha0(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let p = &mono(eps.clone(), 1) - &mono(lam.clone(), 2);
    let ctx = Algebra::left_poly(p);
    let lam_pr = ParamRat::from_rat(lam.clone());

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            for j in 0..=k {
                let c = &Rat::binomial(n, k)
                    * &(&stirling2(k, j as i64) * &eps.pow((k - j) as i64)?);
                let coeff = &ParamRat::from_rat(c) * &bracket_eval(&lam_pr, j);
                rhs.add_term(
                    NCWord::normal(Rat::from_int(j as i64), Rat::from_int((n - k) as i64)),
                    coeff,
                );
            }
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} grouped by B-degree"),
            true,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));

        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            for j in 0..=k {
                let c = &eps.pow((n - k) as i64)?
                    * &(&Rat::binomial(n, j) * &stirling2(n - j, (k - j) as i64));
                let coeff = &ParamRat::from_rat(c) * &bracket_eval(&lam_pr, k - j);
                rhs.add_term(
                    NCWord::normal(Rat::from_int((k - j) as i64), Rat::from_int(j as i64)),
                    coeff,
                );
            }
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} grouped by A-degree"),
            true,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));
    }

    let g = scalar_expm1_over(&eps, order);
    let a = NCPoly::gen(Gen::A);
    let inner = TSeries::from_fn(&ctx, order, |n| {
        if n == 0 {
            NCPoly::one()
        } else {
            a.scale(&(&scalar_at(&g, n) * &lam_pr))
        }
    })?;
    claims.push(series_eq(
        "exp((A+B)t) = (1 + lambda A (e^{eps t}-1)/eps)^(1/lambda) e^{Bt}",
        true,
        exp_element(&ab_sum(), &ctx, order)?,
        inner
            .pow_scalar(&lam_pr.recip()?)?
            .mul(&exp_gen(&ctx, Gen::B, order))?,
    ));

    if eps.is_integer() && lam.is_integer() {
        claims.push(integrality_witness(&ctx, order)?);
    }
    Ok(claims)
}

/// The affine relation: a three-factor split with a scalar leading factor.
pub(super) fn build_ore(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let alpha = req(env, "alpha")?;
    let eps = req(env, "epsilon")?;
    let ctx = Algebra::left_poly(&mono(alpha.clone(), 0) + &mono(eps.clone(), 1));

    // (alpha/eps)((e^{eps t} - 1)/eps - t) = sum_{n>=2} alpha eps^{n-2} t^n / n!
    let leading_arg = ASeries::from_fn(order, |n| {
        if n < 2 {
            UniPoly::zero()
        } else {
            UniPoly::constant_rat(
                &(&alpha * &eps.pow((n - 2) as i64).expect("natural power")) / &Rat::factorial(n),
            )
        }
    });
    let f1 = lift(&leading_arg, Gen::A, &ctx)?.exp()?;

    let g = scalar_expm1_over(&eps, order);
    let a = NCPoly::gen(Gen::A);
    let middle = TSeries::from_fn(&ctx, order, |n| {
        if n == 0 {
            NCPoly::zero()
        } else {
            a.scale(&scalar_at(&g, n))
        }
    })?;
    let f2 = middle.exp()?;

    Ok(vec![series_eq(
        "exp((A+B)t) splits into scalar, A, and B factors",
        true,
        exp_element(&ab_sum(), &ctx, order)?,
        f1.mul(&f2)?.mul(&exp_gen(&ctx, Gen::B, order))?,
    )])
}

/// The affine relation again, solved the other way around: `e^{At} e^{Bt}`
/// as a single exponential with a correction term against `[B, A]`.
pub(super) fn build_zass(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let alpha = req(env, "alpha")?;
    let eps = req(env, "epsilon")?;
    let p = &mono(alpha.clone(), 0) + &mono(eps.clone(), 1);
    let ctx = Algebra::left_poly(p.clone());
    let eps_pr = ParamRat::from_rat(eps.clone());

    // m(t) = (e^{eps t} - 1)/t, so 1/eps (m/eps)^{-1} - 1/eps equals
    // t/(e^{eps t} - 1) - 1/eps: the correction factor, vanishing at 0.
    let m = TSeries::from_fn(&ctx, order, |n| {
        NCPoly::constant(ParamRat::from_rat(
            &eps.pow((n + 1) as i64).expect("natural power") / &Rat::factorial(n + 1),
        ))
    })?;
    let inv_eps = eps_pr.recip()?;
    let correction = m
        .scale(&inv_eps)
        .pow_scalar(&ParamRat::from_int(-1))?
        .scale(&inv_eps)
        .sub(&TSeries::one(&ctx, order).scale(&inv_eps))?;

    let pa = gen_poly(&p, Gen::A);
    let exponent = TSeries::from_fn(&ctx, order, |n| match n {
        0 => NCPoly::zero(),
        1 => ab_sum(),
        n => pa.scale(&correction.coeff(n - 1).constant_coeff()),
    })?;

    Ok(vec![series_eq(
        "e^{At} e^{Bt} is a single corrected exponential",
        true,
        exp_gen(&ctx, Gen::A, order).mul(&exp_gen(&ctx, Gen::B, order))?,
        exponent.exp()?,
    )])
}

/// The pure square: bracket-factorial binomial theorem and the kernel
/// `(1 + lambda A t)^(1/lambda)`.
pub(super) fn build_berry(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let lam = req(env, "lambda")?;
    let ctx = Algebra::left_poly(mono(-&lam, 2));
    let lam_pr = ParamRat::from_rat(lam.clone());

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            let coeff =
                &ParamRat::from_rat(Rat::binomial(n, k)) * &bracket_eval(&lam_pr, k);
            rhs.add_term(
                NCWord::normal(Rat::from_int(k as i64), Rat::from_int((n - k) as i64)),
                coeff,
            );
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} = sum_k C(n,k) [lambda]_k A^k B^(n-k)"),
            true,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));
    }

    let a = NCPoly::gen(Gen::A);
    let inner = TSeries::from_fn(&ctx, order, |n| match n {
        0 => NCPoly::one(),
        1 => a.scale(&lam_pr),
        _ => NCPoly::zero(),
    })?;
    claims.push(series_eq(
        "exp((A+B)t) = (1 + lambda A t)^(1/lambda) e^{Bt}",
        true,
        exp_element(&ab_sum(), &ctx, order)?,
        inner
            .pow_scalar(&lam_pr.recip()?)?
            .mul(&exp_gen(&ctx, Gen::B, order))?,
    ));
    Ok(claims)
}

/// The linear relation: Stirling binomial theorems and the substitution
/// kernel `exp(A (e^{epsilon t} - 1)/epsilon)`.
pub(super) fn build_sack(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let ctx = Algebra::left_poly(mono(eps.clone(), 1));

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            for j in 0..=k {
                let c = &Rat::binomial(n, k)
                    * &(&stirling2(k, j as i64) * &eps.pow((k - j) as i64)?);
                rhs.add_term(
                    NCWord::normal(Rat::from_int(j as i64), Rat::from_int((n - k) as i64)),
                    ParamRat::from_rat(c),
                );
            }
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} grouped by B-degree"),
            true,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));

        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            for j in 0..=k {
                let c = &eps.pow((n - k) as i64)?
                    * &(&Rat::binomial(n, j) * &stirling2(n - j, (k - j) as i64));
                rhs.add_term(
                    NCWord::normal(Rat::from_int((k - j) as i64), Rat::from_int(j as i64)),
                    ParamRat::from_rat(c),
                );
            }
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} grouped by A-degree"),
            true,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));
    }

    let g = scalar_expm1_over(&eps, order);
    let a = NCPoly::gen(Gen::A);
    let arg = TSeries::from_fn(&ctx, order, |n| {
        if n == 0 {
            NCPoly::zero()
        } else {
            a.scale(&scalar_at(&g, n))
        }
    })?;
    claims.push(series_eq(
        "exp((A+B)t) = exp(A (e^{eps t}-1)/eps) e^{Bt}",
        true,
        exp_element(&ab_sum(), &ctx, order)?,
        arg.exp()?.mul(&exp_gen(&ctx, Gen::B, order))?,
    ));

    if eps.is_integer() {
        claims.push(integrality_witness(&ctx, order)?);
    }
    Ok(claims)
}

/// The constant relation: the Gaussian pairing expansion and the
/// `e^{alpha t^2/2}` split.
pub(super) fn build_glauber(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let alpha = req(env, "alpha")?;
    let ctx = Algebra::left_poly(mono(alpha.clone(), 0));
    let half_alpha = &alpha / &Rat::from_int(2);

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for i in 0..=n / 2 {
            let pairings = &(&Rat::factorial(n) * &half_alpha.pow(i as i64)?)
                / &(&Rat::factorial(i) * &Rat::factorial(n - 2 * i));
            for k in 0..=n - 2 * i {
                rhs.add_term(
                    NCWord::normal(
                        Rat::from_int(k as i64),
                        Rat::from_int((n - 2 * i - k) as i64),
                    ),
                    ParamRat::from_rat(&pairings * &Rat::binomial(n - 2 * i, k)),
                );
            }
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} via the pairing expansion"),
            true,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));
    }

    let gauss = TSeries::monomial(
        &ctx,
        order,
        2,
        NCPoly::constant(ParamRat::from_rat(half_alpha.clone())),
    )?;
    claims.push(series_eq(
        "exp((A+B)t) = e^{alpha t^2/2} e^{At} e^{Bt}",
        true,
        exp_element(&ab_sum(), &ctx, order)?,
        gauss
            .exp()?
            .mul(&exp_gen(&ctx, Gen::A, order))?
            .mul(&exp_gen(&ctx, Gen::B, order))?,
    ));
    Ok(claims)
}
