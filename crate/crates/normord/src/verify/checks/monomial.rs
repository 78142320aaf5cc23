//! Checks under monomial relations `[B, A] = h A^s`: the generalized
//! Stirling expansion of `(AB)^n`, its exponential form, the binomial
//! theorems one exponent up, the Lah-number case at exponent `1/2`, and
//! the Bessel-polynomial kernel of the cubic relation.

use super::{ab_sum, gen_poly, mono, poly_eq, req, series_eq, witness};
use crate::combinat::{bessel_poly, gen_stirling, lah, UniPoly};
use crate::error::Result;
use crate::ncalg::{Algebra, Gen, NCPoly, NCWord, Relation};
use crate::scalars::{ParamEnv, ParamRat, Rat};
use crate::series::{exp_element, exp_pow_b, lift, TSeries};
use crate::verify::support::{exp_gen, frak_phi};
use crate::verify::{Channel, Claim};

pub(super) fn mss_relation() -> Relation {
    Relation::LeftPoly(UniPoly::monomial(Rat::one(), ParamRat::symbol("h")))
}

pub(super) fn monomial_bt_relation() -> Relation {
    Relation::LeftPoly(UniPoly::monomial(Rat::from_int(2), ParamRat::symbol("h")))
}

pub(super) fn lah_relation() -> Relation {
    Relation::LeftPoly(UniPoly::monomial(
        Rat::new(1, 2),
        ParamRat::symbol("h").scale(&Rat::from_int(2)),
    ))
}

pub(super) fn bessel_relation() -> Relation {
    Relation::LeftPoly(UniPoly::monomial(Rat::from_int(3), ParamRat::symbol("h")))
}

/// `(AB)^n = sum_k S_s(n,k) h^(n-k) A^(s(n-k)+k) B^k` under `[B, A] = h A^s`.
pub(super) fn build_mss_product(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let s = req(env, "s")?;
    let h = req(env, "h")?;
    let ctx = Algebra::left_poly(UniPoly::monomial(s.clone(), ParamRat::from_rat(h.clone())));
    let natural = s.is_integer() && !s.is_negative();

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            let c = gen_stirling(&s, n, k as i64);
            if c.is_zero() {
                continue;
            }
            let a_exp = &(&s * &Rat::from_int((n - k) as i64)) + &Rat::from_int(k as i64);
            rhs.add_term(
                NCWord::normal(a_exp, Rat::from_int(k as i64)),
                ParamRat::from_rat(&c * &h.pow((n - k) as i64)?),
            );
        }
        claims.push(poly_eq(
            format!("(AB)^{n} via generalized Stirling numbers"),
            natural,
            &ctx,
            ctx.product_power(n)?,
            rhs,
        ));
    }

    if s == Rat::new(1, 2) {
        let two = Rat::from_int(2);
        let mut fail = None;
        'lah: for n in 0..=order {
            for k in 0..=(n as i64) {
                let scaled = &gen_stirling(&s, n, k) * &two.pow(n as i64 - k)?;
                let l = lah(n, k);
                if scaled != l {
                    fail = Some(format!(
                        "2^(n-k) times the half-index number at ({n},{k}): {scaled}, Lah {l}"
                    ));
                    break 'lah;
                }
            }
        }
        claims.push(witness(
            "the half-index coefficients are rescaled Lah numbers",
            Channel::Rewriter,
            fail.is_none(),
            fail.unwrap_or_default(),
        ));
    }
    Ok(claims)
}

/// `exp(ABt)` equals the disentangling exponent raised to the `B`.
pub(super) fn build_mss_exp(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let s = req(env, "s")?;
    let h = req(env, "h")?;
    let ctx = Algebra::left_poly(UniPoly::monomial(s.clone(), ParamRat::from_rat(h.clone())));
    let ab = NCPoly::term(NCWord::from_letters(&[Gen::A, Gen::B]), ParamRat::from_int(1));
    Ok(vec![series_eq(
        "exp(ABt) is the disentangling exponent to the B",
        s.is_integer() && !s.is_negative(),
        exp_element(&ab, &ctx, order)?,
        exp_pow_b(&frak_phi(&s, &h, order), &ctx)?,
    )])
}

/// Both binomial theorems under `[B, A] = h A^(s+1)`, plus the kernel
/// split through the disentangling exponent of index `s`.
pub(super) fn build_monomial_bt(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let s = req(env, "s")?;
    let h = req(env, "h")?;
    let ctx = Algebra::left_poly(UniPoly::monomial(
        &s + &Rat::one(),
        ParamRat::from_rat(h.clone()),
    ));
    let natural = s.is_integer();

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            for j in 0..=k {
                let c = gen_stirling(&s, k, j as i64);
                if c.is_zero() {
                    continue;
                }
                let coeff = &(&Rat::binomial(n, k) * &c) * &h.pow((k - j) as i64)?;
                let a_exp = &(&s * &Rat::from_int((k - j) as i64)) + &Rat::from_int(j as i64);
                rhs.add_term(
                    NCWord::normal(a_exp, Rat::from_int((n - k) as i64)),
                    ParamRat::from_rat(coeff),
                );
            }
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} grouped by B-degree"),
            natural,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));

        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            for j in 0..=k {
                let c = gen_stirling(&s, n - j, (k - j) as i64);
                if c.is_zero() {
                    continue;
                }
                let coeff = &(&h.pow((n - k) as i64)? * &Rat::binomial(n, j)) * &c;
                let a_exp =
                    &(&s * &Rat::from_int((n - k) as i64)) + &Rat::from_int((k - j) as i64);
                rhs.add_term(
                    NCWord::normal(a_exp, Rat::from_int(j as i64)),
                    ParamRat::from_rat(coeff),
                );
            }
        }
        claims.push(poly_eq(
            format!("(A+B)^{n} grouped by A-degree"),
            natural,
            &ctx,
            ctx.binomial_power(n)?,
            rhs,
        ));
    }

    let kernel = lift(&frak_phi(&s, &h, order), Gen::A, &ctx)?.exp()?;
    claims.push(series_eq(
        "exp((A+B)t) splits through the disentangling exponent",
        natural,
        exp_element(&ab_sum(), &ctx, order)?,
        kernel.mul(&exp_gen(&ctx, Gen::B, order))?,
    ));
    Ok(claims)
}

/// `(AB)^n = sum_k L(n,k) h^(n-k) A^((n+k)/2) B^k` under `[B, A] = 2h A^(1/2)`.
pub(super) fn build_lah(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let h = req(env, "h")?;
    let ctx = Algebra::left_poly(UniPoly::monomial(
        Rat::new(1, 2),
        ParamRat::from_rat(&h * &Rat::from_int(2)),
    ));

    let mut claims = Vec::new();
    for n in 0..=order {
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            let c = lah(n, k as i64);
            if c.is_zero() {
                continue;
            }
            rhs.add_term(
                NCWord::normal(Rat::new((n + k) as i64, 2), Rat::from_int(k as i64)),
                ParamRat::from_rat(&c * &h.pow((n - k) as i64)?),
            );
        }
        claims.push(poly_eq(
            format!("(AB)^{n} via Lah numbers"),
            false,
            &ctx,
            ctx.product_power(n)?,
            rhs,
        ));
    }
    Ok(claims)
}

/// The cubic relation `[B, A] = h A^3`: the kernel coefficient of
/// `t^n/n!` is `A^n y_(n-1)(hA)` with `y` the Bessel polynomials, whose
/// coefficients have a double-factorial closed form.
pub(super) fn build_bessel(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let h = req(env, "h")?;
    let p = mono(h.clone(), 3);
    let ctx = Algebra::left_poly(p);
    let h_pr = ParamRat::from_rat(h.clone());

    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(NCPoly::one());
    for n in 1..=order {
        let y = bessel_poly(n - 1).scale_argument(&h_pr)?;
        let lifted = y.shift(&Rat::from_int(n as i64));
        coeffs.push(gen_poly(&lifted, Gen::A).scale_rat(&(&Rat::one() / &Rat::factorial(n))));
    }
    let kernel = TSeries::new(&ctx, order, coeffs)?;
    let mut claims = vec![series_eq(
        "the kernel coefficients are Bessel polynomials",
        true,
        exp_element(&ab_sum(), &ctx, order)?,
        kernel.mul(&exp_gen(&ctx, Gen::B, order))?,
    )];

    let two = Rat::from_int(2);
    let mut fail = None;
    'closed: for n in 1..=12usize {
        for k in 0..=n {
            let want = &Rat::binomial(n - 1 + k, 2 * k) * &Rat::double_factorial_odd(k);
            let got = gen_stirling(&two, n, (n - k) as i64);
            if got != want {
                fail = Some(format!(
                    "index (n, n-k) = ({n},{}): recurrence {got}, closed form {want}",
                    n - k
                ));
                break 'closed;
            }
        }
    }
    claims.push(witness(
        "the quadratic-index coefficients have the double-factorial form",
        Channel::Rewriter,
        fail.is_none(),
        fail.unwrap_or_default(),
    ));
    Ok(claims)
}
