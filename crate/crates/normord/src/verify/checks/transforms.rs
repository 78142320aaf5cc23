//! Deriving new exponential identities from a base identity.
//!
//! Every relation `[B,A] = p(A)` admits a kernel `Psi(t)` with
//! `e^{(A+B)t} = Psi(t) e^{Bt}`. Three transported identities follow:
//!
//! * **symmetry** — under `[B,A] = p(B)`: `e^{(A+B)t} = e^{At} Psi_B(t)`,
//!   where `Psi_B` is the same kernel with `B` substituted for `A`;
//! * **antinormal** — under `[B,A] = -p(A)`: `e^{(A+B)t} = e^{Bt} Psi(t)`.
//!   The right-hand side is produced mechanically by pushing the base
//!   identity through the order-reversal map and renaming the letters,
//!   which lands in exactly this mirrored algebra;
//! * **bch** — under `[B,A] = -p(A+B)`: `e^{At} e^{Bt} = Psi_{A+B}(t)`,
//!   the kernel evaluated at `A + B`.

use super::{ab_sum, free_pow, mono, req, series_eq};
use crate::combinat::UniPoly;
use crate::error::{Error, Result};
use crate::ncalg::{l_map, Algebra, Gen, NCPoly, Relation};
use crate::scalars::{ParamEnv, ParamRat};
use crate::series::{exp_element, lift, TSeries};
use crate::verify::support::{
    exp_gen, psi_series, pure_series, scalar_expm1_over, swap_generators,
};
use crate::verify::{Claim, TransformMode};

/// The relation a transform mode sends `[B,A] = p(A)` to.
pub(crate) fn transformed_relation(p: &UniPoly, mode: TransformMode) -> Result<Relation> {
    match mode {
        TransformMode::Symmetry => Ok(Relation::RightPoly(p.clone())),
        TransformMode::Antinormal => Ok(Relation::LeftPoly(-p)),
        TransformMode::Bch => {
            if !p.has_natural_exponents() {
                return Err(Error::NotTransformable(
                    "substituting A+B needs natural exponents".into(),
                ));
            }
            let deg = p.degree().and_then(|d| d.to_i64()).unwrap_or(0);
            if deg > 2 {
                return Err(Error::NotTransformable(
                    "substituting A+B needs degree at most two".into(),
                ));
            }
            let x = ab_sum();
            let mut q = NCPoly::zero();
            for (e, c) in p.terms() {
                let n = e.to_i64().expect("natural exponent") as usize;
                q.add_scaled(&free_pow(&x, n), &-c);
            }
            crate::verify::parse::classify(q)
        }
    }
}

/// The claims of the transported identity, for an instantiated base
/// relation polynomial.
pub(crate) fn transformed_claims(
    p: &UniPoly,
    mode: TransformMode,
    order: usize,
) -> Result<Vec<Claim>> {
    let base_ctx = Algebra::left_poly(p.clone());
    let psi = psi_series(&base_ctx, order)?;
    match mode {
        TransformMode::Symmetry => {
            let psi_a = pure_series(&psi)?;
            let ctx = Algebra::new(transformed_relation(p, mode)?);
            let lhs = exp_element(&ab_sum(), &ctx, order)?;
            let rhs = exp_gen(&ctx, Gen::A, order).mul(&lift(&psi_a, Gen::B, &ctx)?)?;
            Ok(vec![series_eq(
                "mirrored split of exp((A+B)t)",
                false,
                lhs,
                rhs,
            )])
        }
        TransformMode::Antinormal => {
            let ctx = Algebra::new(transformed_relation(p, mode)?);
            let oracle = p.has_natural_exponents();
            let base_lhs = exp_element(&ab_sum(), &base_ctx, order)?;
            let base_rhs = psi.mul(&exp_gen(&base_ctx, Gen::B, order))?;
            let direct = exp_element(&ab_sum(), &ctx, order)?;
            Ok(vec![
                series_eq(
                    "order reversal fixes exp((A+B)t)",
                    oracle,
                    direct.clone(),
                    transport(&base_lhs, &base_ctx, &ctx)?,
                ),
                series_eq(
                    "reversed split of exp((A+B)t)",
                    oracle,
                    direct,
                    transport(&base_rhs, &base_ctx, &ctx)?,
                ),
            ])
        }
        TransformMode::Bch => {
            let psi_a = pure_series(&psi)?;
            let ctx = Algebra::new(transformed_relation(p, mode)?);
            let lhs = exp_gen(&ctx, Gen::A, order).mul(&exp_gen(&ctx, Gen::B, order))?;
            let sum = ab_sum();
            let mut coeffs = Vec::with_capacity(order + 1);
            for n in 0..=order {
                let mut acc = NCPoly::zero();
                for (e, c) in psi_a.coeff(n).terms() {
                    let j = e
                        .to_i64()
                        .ok_or_else(|| Error::Unsupported("kernel exponent".into()))?
                        as usize;
                    acc.add_scaled(&ctx.pow_ordered(&sum, j)?, c);
                }
                coeffs.push(acc);
            }
            let rhs = TSeries::new(&ctx, order, coeffs)?;
            Ok(vec![series_eq(
                "resummed product as a kernel in A+B",
                false,
                lhs,
                rhs,
            )])
        }
    }
}

/// Push every series coefficient through the order-reversal map, rename
/// the image letters back to `A`, `B`, and normal-order in the target
/// algebra.
fn transport(s: &TSeries, from: &Algebra, to: &Algebra) -> Result<TSeries> {
    let mut coeffs = Vec::with_capacity(s.order() + 1);
    for k in 0..=s.order() {
        let (image, _) = l_map(s.coeff(k), from)?;
        coeffs.push(swap_generators(&image));
    }
    TSeries::new(to, s.order(), coeffs)
}

// ---------------------------------------------------------------------
// Catalog entries that pin the transported identities to closed forms.
// ---------------------------------------------------------------------

/// Mirror of the linear-commutator identity, with its closed form
/// `e^{(A+B)t} = e^{At} e^{B (e^{eps t}-1)/eps}` under `[B,A] = eps B`.
pub(super) fn build_similar_symmetry(
    env: &ParamEnv,
    order: usize,
    _seed: u64,
) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let p = mono(eps.clone(), 1);
    let mut claims = transformed_claims(&p, TransformMode::Symmetry, order)?;

    let ctx = Algebra::right_poly(p);
    let g = scalar_expm1_over(&eps, order);
    let elt = TSeries::from_fn(&ctx, order, |n| {
        let c = g.coeff(n).as_constant().expect("scalar series");
        NCPoly::gen(Gen::B).scale(&c)
    })?;
    let lhs = exp_element(&ab_sum(), &ctx, order)?;
    let rhs = exp_gen(&ctx, Gen::A, order).mul(&elt.exp()?)?;
    claims.push(series_eq(
        "closed form: e^{At} e^{B(e^{eps t}-1)/eps}",
        false,
        lhs,
        rhs,
    ));
    Ok(claims)
}

/// Reversal of the pure-quadratic identity, with its closed form
/// `e^{(A+B)t} = e^{Bt} (1 + lambda A t)^{1/lambda}` under
/// `[B,A] = +lambda A^2`.
pub(super) fn build_similar_antinormal(
    env: &ParamEnv,
    order: usize,
    _seed: u64,
) -> Result<Vec<Claim>> {
    let lam = req(env, "lambda")?;
    let base = mono(-&lam, 2);
    let mut claims = transformed_claims(&base, TransformMode::Antinormal, order)?;

    let ctx = Algebra::left_poly(mono(lam.clone(), 2));
    let kernel = TSeries::monomial(
        &ctx,
        order,
        1,
        NCPoly::gen(Gen::A).scale(&ParamRat::from_rat(lam.clone())),
    )?
    .add(&TSeries::one(&ctx, order))?
    .pow_scalar(&ParamRat::from_rat(lam.recip()?))?;
    let lhs = exp_element(&ab_sum(), &ctx, order)?;
    let rhs = exp_gen(&ctx, Gen::B, order).mul(&kernel)?;
    claims.push(series_eq(
        "closed form: e^{Bt} (1 + lambda A t)^{1/lambda}",
        true,
        lhs,
        rhs,
    ));
    Ok(claims)
}

/// Resummation of the linear-minus-quadratic identity (with the linear
/// coefficient negated), which lands on the relation
/// `[B,A] = eps(A+B) + lambda(A+B)^2` and the closed form
/// `e^{At} e^{Bt} = (1 + lambda (A+B)(1-e^{-eps t})/eps)^{1/lambda}`.
pub(super) fn build_similar_bch(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let base = &mono(-&eps, 1) - &mono(lam.clone(), 2);
    let mut claims = transformed_claims(&base, TransformMode::Bch, order)?;

    let ctx = Algebra::new(transformed_relation(&base, TransformMode::Bch)?);
    let g = scalar_expm1_over(&-&eps, order);
    let sum = ab_sum();
    let inner = TSeries::from_fn(&ctx, order, |n| {
        if n == 0 {
            NCPoly::one()
        } else {
            let c = g.coeff(n).as_constant().expect("scalar series");
            sum.scale(&(&c * &ParamRat::from_rat(lam.clone())))
        }
    })?;
    let kernel = inner.pow_scalar(&ParamRat::from_rat(lam.recip()?))?;
    let lhs = exp_gen(&ctx, Gen::A, order).mul(&exp_gen(&ctx, Gen::B, order))?;
    claims.push(series_eq(
        "closed form: (1 + lambda (A+B)(1-e^{-eps t})/eps)^{1/lambda}",
        false,
        lhs,
        kernel,
    ));
    Ok(claims)
}
