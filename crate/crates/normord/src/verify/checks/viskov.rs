//! Checks of the conjugation-flow solver over a grid of relations and
//! generators: `exp((f(A)B + g(A))t)` splits through the solution of
//! `alpha' = p(alpha) f(alpha)`, and the mirrored statement holds under
//! `[B, A] = p(B)`. The `(f, g) = (1, x)` and `(x, 0)` columns reproduce
//! the splitting kernel and the base-to-the-B disentangling kernel.

use super::{ab_sum, mono, req, scalar_at, series_eq, witness};
use crate::combinat::UniPoly;
use crate::error::Result;
use crate::ncalg::{Algebra, Gen, NCPoly, NCWord, Relation};
use crate::scalars::{ParamEnv, ParamRat, Rat};
use crate::series::{exp_element, exp_pow_b, lift, TSeries};
use crate::verify::support::{exp_gen, frak_phi, scalar_expm1_over, t_series};
use crate::verify::{Channel, Claim};
use crate::viskov::{phi_gamma, viskov_antinormal_sides, viskov_sides, CauchyProblem};

pub(super) fn representative_relation() -> Relation {
    Relation::LeftPoly(&UniPoly::one() + &mono(Rat::one(), 2))
}

pub(super) fn representative_antinormal_relation() -> Relation {
    Relation::RightPoly(&UniPoly::one() + &mono(Rat::one(), 2))
}

/// The relation polynomials the flow checks range over.
fn p_grid(env: &ParamEnv) -> Result<Vec<UniPoly>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let h = req(env, "h")?;
    Ok(vec![
        UniPoly::one(),
        &UniPoly::one() + &mono(Rat::one(), 2),
        mono(eps, 1),
        mono(-&lam, 2),
        mono(h, 3),
    ])
}

fn fg_grid() -> Vec<(&'static str, UniPoly, UniPoly)> {
    vec![
        ("f = 1, g = 0", UniPoly::one(), UniPoly::zero()),
        ("f = x, g = 0", UniPoly::x(), UniPoly::zero()),
        ("f = 1, g = x", UniPoly::one(), UniPoly::x()),
        ("f = x, g = x^2", UniPoly::x(), mono(Rat::one(), 2)),
    ]
}

/// Every cell of the grid: `exp((f(A)B + g(A))t)` equals the flow's
/// split form under `[B, A] = p(A)`.
pub(super) fn build_normal(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    for p in p_grid(env)? {
        for (fg, f, g) in fg_grid() {
            let cp = CauchyProblem::new(p.clone(), f, g, order);
            let (lhs, rhs) = viskov_sides(&cp)?;
            claims.push(series_eq(
                format!("the flow splits the exponential for p = {p}, {fg}"),
                true,
                lhs,
                rhs,
            ));
        }
    }
    Ok(claims)
}

/// The mirrored grid: `exp((A f(B) + g(B))t)` under `[B, A] = p(B)`.
pub(super) fn build_antinormal(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    for p in p_grid(env)? {
        for (fg, f, g) in fg_grid() {
            let cp = CauchyProblem::new(p.clone(), f, g, order).with_initial(Gen::B);
            let (lhs, rhs) = viskov_antinormal_sides(&cp)?;
            claims.push(series_eq(
                format!("the mirrored flow splits the exponential for p = {p}, {fg}"),
                false,
                lhs,
                rhs,
            ));
        }
    }
    Ok(claims)
}

/// The `(f, g) = (1, x)` column: the flow time is `t`, the integrated
/// exponent is the splitting kernel, and the linear and pure-square rows
/// specialize to their closed-form kernels.
pub(super) fn build_ei(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let h = req(env, "h")?;

    let ps = vec![
        UniPoly::one(),
        mono(eps.clone(), 1),
        mono(-&lam, 2),
        mono(h.clone(), 3),
        UniPoly::monomial(Rat::new(1, 2), ParamRat::from_rat(h.clone())),
    ];

    let mut claims = Vec::new();
    for (i, p) in ps.into_iter().enumerate() {
        let cp = CauchyProblem::new(p.clone(), UniPoly::one(), UniPoly::x(), order);
        let (phi, gamma) = phi_gamma(&cp);
        claims.push(witness(
            format!("the flow time is t for p = {p}"),
            Channel::Series,
            phi == t_series(order),
            format!("phi = {}", phi.to_string_with("t", false)),
        ));

        let ctx = Algebra::left_poly(p.clone());
        let kernel = lift(&gamma, Gen::A, &ctx)?.exp()?;
        claims.push(series_eq(
            format!("exp((A+B)t) splits through the integrated flow for p = {p}"),
            p.has_natural_exponents(),
            exp_element(&ab_sum(), &ctx, order)?,
            kernel.mul(&exp_gen(&ctx, Gen::B, order))?,
        ));

        match i {
            // p = eps A: the substitution kernel exp(A (e^{eps t}-1)/eps).
            1 => {
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
                    "the flow kernel is the substitution kernel for p = eps A",
                    false,
                    kernel.clone(),
                    arg.exp()?,
                ));
            }
            // p = -lambda A^2: the kernel (1 + lambda A t)^(1/lambda).
            2 => {
                let lam_pr = ParamRat::from_rat(lam.clone());
                let a = NCPoly::gen(Gen::A);
                let inner = TSeries::from_fn(&ctx, order, |n| match n {
                    0 => NCPoly::one(),
                    1 => a.scale(&lam_pr),
                    _ => NCPoly::zero(),
                })?;
                claims.push(series_eq(
                    "the flow kernel is (1 + lambda A t)^(1/lambda) for p = -lambda A^2",
                    false,
                    kernel.clone(),
                    inner.pow_scalar(&lam_pr.recip()?)?,
                ));
            }
            _ => {}
        }
    }
    Ok(claims)
}

/// The `(f, g) = (x, 0)` column: `exp(ABt)` is the flow exponent raised
/// to the `B`, and for monomial relations that exponent is the
/// disentangling series.
pub(super) fn build_product(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let h = req(env, "h")?;

    let ps = vec![
        UniPoly::one(),
        mono(eps, 1),
        mono(-&lam, 2),
        mono(h.clone(), 3),
    ];
    let ab = NCPoly::term(NCWord::from_letters(&[Gen::A, Gen::B]), ParamRat::from_int(1));

    let mut claims = Vec::new();
    for p in ps {
        let cp = CauchyProblem::new(p.clone(), UniPoly::x(), UniPoly::zero(), order);
        let (phi, _) = phi_gamma(&cp);
        let ctx = Algebra::left_poly(p.clone());
        claims.push(series_eq(
            format!("exp(ABt) is the flow exponent to the B for p = {p}"),
            true,
            exp_element(&ab, &ctx, order)?,
            exp_pow_b(&phi, &ctx)?,
        ));
    }

    for s in [0i64, 1, 2] {
        let p = UniPoly::monomial(Rat::from_int(s), ParamRat::from_rat(h.clone()));
        let cp = CauchyProblem::new(p, UniPoly::x(), UniPoly::zero(), order);
        let (phi, _) = phi_gamma(&cp);
        let want = frak_phi(&Rat::from_int(s), &h, order);
        claims.push(witness(
            format!("the flow exponent is the disentangling exponent for p = {h} x^{s}"),
            Channel::Series,
            phi == want,
            format!(
                "flow gives {}, the disentangling series is {}",
                phi.to_string_with("t", false),
                want.to_string_with("t", false)
            ),
        ));
    }
    Ok(claims)
}

/// The mirrored `(1, x)` column under `[B, A] = p(B)`:
/// `exp((A+B)t) = e^{At} exp(gamma(B, t))`.
pub(super) fn build_ei_antinormal(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let h = req(env, "h")?;

    let ps = vec![
        UniPoly::one(),
        mono(eps, 1),
        mono(-&lam, 2),
        mono(h.clone(), 3),
        UniPoly::monomial(Rat::new(1, 2), ParamRat::from_rat(h)),
    ];

    let mut claims = Vec::new();
    for p in ps {
        let cp = CauchyProblem::new(p.clone(), UniPoly::one(), UniPoly::x(), order)
            .with_initial(Gen::B);
        let (_, gamma) = phi_gamma(&cp);
        let ctx = Algebra::right_poly(p.clone());
        let kernel = lift(&gamma, Gen::B, &ctx)?.exp()?;
        claims.push(series_eq(
            format!("exp((A+B)t) = e^{{At}} exp(integrated flow in B) for p = {p}"),
            false,
            exp_element(&ab_sum(), &ctx, order)?,
            exp_gen(&ctx, Gen::A, order).mul(&kernel)?,
        ));
    }
    Ok(claims)
}

/// The mirrored `(x, 0)` column: `exp(ABt) = sum_n A^n phi(B, t)^n / n!`,
/// the base-`e^A` power of the flow exponent.
pub(super) fn build_product_antinormal(
    env: &ParamEnv,
    order: usize,
    _seed: u64,
) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let h = req(env, "h")?;

    let ps = vec![UniPoly::one(), mono(eps, 1), mono(-&lam, 2), mono(h, 3)];
    let ab = NCPoly::term(NCWord::from_letters(&[Gen::A, Gen::B]), ParamRat::from_int(1));

    let mut claims = Vec::new();
    for p in ps {
        let cp = CauchyProblem::new(p.clone(), UniPoly::x(), UniPoly::zero(), order)
            .with_initial(Gen::B);
        let (phi, _) = phi_gamma(&cp);
        let ctx = Algebra::right_poly(p.clone());

        let mut rhs = TSeries::zero(&ctx, order);
        for n in 0..=order {
            let head = NCPoly::gen_pow(Gen::A, Rat::from_int(n as i64))
                .scale(&ParamRat::from_rat(Rat::factorial(n).recip()?));
            let tail = lift(&phi.pow(n), Gen::B, &ctx)?;
            rhs = rhs.add(&TSeries::monomial(&ctx, order, 0, head)?.mul(&tail)?)?;
        }
        claims.push(series_eq(
            format!("exp(ABt) expands over A-powers of the flow exponent for p = {p}"),
            false,
            exp_element(&ab, &ctx, order)?,
            rhs,
        ));
    }
    Ok(claims)
}
