//! Foundational checks: the Stirling families and their cross-links, the
//! exponent laws of scalar powers, the falling-factorial regrouping of the
//! diagonal sum, chain and Leibniz rules for the commutator, the transpose
//! anti-homomorphism, the composition flow on polynomials, the bracket
//! series of `log(e^{At} e^{Bt})`, and the existence and shape of the
//! splitting kernel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ab_sum, free_pow, gen_poly, mono, poly_eq, req, series_eq, witness};
use crate::combinat::{
    falling_factorial_poly, frak_f_series, gen_stirling, gen_stirling_binom_sum,
    gen_stirling_double_sum, lah, rising_factorial_poly, stirling1, stirling1_unsigned, stirling2,
    stirling2_closed, UniPoly,
};
use crate::error::Result;
use crate::ncalg::{l_map, Algebra, Gen, NCPoly, NCWord, Relation};
use crate::oracle::{rep_of, series_apply, shift_check, XPoly};
use crate::scalars::{ParamEnv, ParamRat, Rat};
use crate::series::{bch_log, dynkin_series, exp_element, nested_commutator};
use crate::verify::support::{exp_gen, psi_b_witness, psi_series};
use crate::verify::{Channel, Claim};

pub(super) fn weyl_relation() -> Relation {
    Relation::LeftPoly(UniPoly::one())
}

/// Drop every exponent above `max` (series arithmetic on polynomials).
fn truncate(p: &UniPoly, max: usize) -> UniPoly {
    let cap = Rat::from_int(max as i64);
    let mut out = UniPoly::zero();
    for (e, c) in p.terms() {
        if *e <= cap {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}

/// The (necessarily rational) coefficient of `t^n` in a concrete polynomial.
fn rat_coeff(p: &UniPoly, n: usize) -> Rat {
    p.coefficient(&Rat::from_int(n as i64))
        .as_rat()
        .expect("generating functions carry concrete coefficients")
}

/// Recurrence vs. closed form vs. exponential generating function for the
/// Stirling families, plus the composition and rescaling identities tying
/// the generalized family to Lah numbers.
pub(super) fn build_stirling_identities(
    _env: &ParamEnv,
    order: usize,
    _seed: u64,
) -> Result<Vec<Claim>> {
    let n_max = order;
    let mut claims = Vec::new();

    // Second kind: triangle recurrence against the alternating sum.
    let mut fail = None;
    'second: for n in 0..=n_max {
        for k in 0..=(n as i64) {
            let r = stirling2(n, k);
            let c = stirling2_closed(n, k);
            if r != c {
                fail = Some(format!("S({n},{k}): recurrence {r}, closed sum {c}"));
                break 'second;
            }
        }
    }
    claims.push(witness(
        "second kind: recurrence matches the alternating closed sum",
        Channel::Rewriter,
        fail.is_none(),
        fail.unwrap_or_default(),
    ));

    // Second kind: coefficients of (e^t - 1)^k / k!.
    let f2 = frak_f_series(&Rat::zero(), n_max);
    let mut f_pow = UniPoly::one();
    let mut fail = None;
    'gf2: for k in 0..=n_max {
        if k > 0 {
            f_pow = truncate(&(&f_pow * &f2), n_max);
        }
        for n in 0..=n_max {
            let want = &(&stirling2(n, k as i64) * &Rat::factorial(k)) / &Rat::factorial(n);
            let got = rat_coeff(&f_pow, n);
            if got != want {
                fail = Some(format!(
                    "coefficient of t^{n} in (e^t - 1)^{k}: {got}, expected {want}"
                ));
                break 'gf2;
            }
        }
    }
    claims.push(witness(
        "second kind: recurrence matches the generating function",
        Channel::Rewriter,
        fail.is_none(),
        fail.unwrap_or_default(),
    ));

    // First kind, both signs: coefficients of the rising and falling
    // factorial polynomials.
    let mut fail = None;
    'first: for n in 0..=n_max {
        let rising = rising_factorial_poly(n);
        let falling = falling_factorial_poly(n);
        for k in 0..=(n as i64) {
            let e = Rat::from_int(k);
            let unsigned = rising
                .coefficient(&e)
                .as_rat()
                .expect("factorial polynomials are concrete");
            let signed = falling
                .coefficient(&e)
                .as_rat()
                .expect("factorial polynomials are concrete");
            if unsigned != stirling1_unsigned(n, k) || signed != stirling1(n, k) {
                fail = Some(format!(
                    "x^{k} in the degree-{n} factorial polynomials: {unsigned} / {signed}"
                ));
                break 'first;
            }
        }
    }
    claims.push(witness(
        "first kind: recurrence matches the factorial-polynomial coefficients",
        Channel::Rewriter,
        fail.is_none(),
        fail.unwrap_or_default(),
    ));

    // First kind unsigned: coefficients of (-log(1 - t))^k / k!.
    let f1 = frak_f_series(&Rat::one(), n_max);
    let mut f_pow = UniPoly::one();
    let mut fail = None;
    'gf1: for k in 0..=n_max {
        if k > 0 {
            f_pow = truncate(&(&f_pow * &f1), n_max);
        }
        for n in 0..=n_max {
            let want =
                &(&stirling1_unsigned(n, k as i64) * &Rat::factorial(k)) / &Rat::factorial(n);
            let got = rat_coeff(&f_pow, n);
            if got != want {
                fail = Some(format!(
                    "coefficient of t^{n} in (-log(1-t))^{k}: {got}, expected {want}"
                ));
                break 'gf1;
            }
        }
    }
    claims.push(witness(
        "first kind: recurrence matches the generating function",
        Channel::Rewriter,
        fail.is_none(),
        fail.unwrap_or_default(),
    ));

    // Lah numbers as the composition of the two kinds, and as the
    // half-index generalized family rescaled by powers of two.
    let half = Rat::new(1, 2);
    let two = Rat::from_int(2);
    let mut fail = None;
    'lah: for n in 0..=n_max.min(12) {
        for k in 0..=(n as i64) {
            let mut sum = Rat::zero();
            for j in k..=(n as i64) {
                sum = &sum + &(&stirling1_unsigned(n, j) * &stirling2(j as usize, k));
            }
            let l = lah(n, k);
            if sum != l {
                fail = Some(format!("sum_j c(n,j) S(j,k) at ({n},{k}): {sum}, Lah {l}"));
                break 'lah;
            }
            let scaled = &gen_stirling(&half, n, k)
                * &two.pow(n as i64 - k).expect("nonnegative power of two");
            if scaled != l {
                fail = Some(format!(
                    "2^(n-k) by the half-index number at ({n},{k}): {scaled}, Lah {l}"
                ));
                break 'lah;
            }
        }
    }
    claims.push(witness(
        "Lah numbers compose the two kinds and rescale the half-index family",
        Channel::Rewriter,
        fail.is_none(),
        fail.unwrap_or_default(),
    ));

    // Generalized family: recurrence against the generating function
    // F_s(t)^k / k! for a spread of indices, including non-integers.
    let indices = [
        Rat::zero(),
        Rat::one(),
        Rat::from_int(2),
        Rat::new(1, 2),
        Rat::from_int(-1),
    ];
    let gf_n = n_max.min(10);
    let mut fail = None;
    'gen: for s in &indices {
        let f = frak_f_series(s, gf_n);
        let mut f_pow = UniPoly::one();
        for k in 0..=5usize {
            if k > 0 {
                f_pow = truncate(&(&f_pow * &f), gf_n);
            }
            for n in 0..=gf_n {
                let want =
                    &(&gen_stirling(s, n, k as i64) * &Rat::factorial(k)) / &Rat::factorial(n);
                let got = rat_coeff(&f_pow, n);
                if got != want {
                    fail = Some(format!(
                        "s = {s}: coefficient of t^{n} in F_s^{k}: {got}, expected {want}"
                    ));
                    break 'gen;
                }
            }
        }
    }
    claims.push(witness(
        "generalized family: recurrence matches the generating function",
        Channel::Rewriter,
        fail.is_none(),
        fail.unwrap_or_default(),
    ));

    // Generalized family: the two summation formulas, wherever their
    // denominators stay away from zero.
    let mut fail = None;
    let mut covered = 0usize;
    'sums: for s in &indices {
        for n in 0..=gf_n {
            for k in 0..=(n as i64) {
                let want = gen_stirling(s, n, k);
                if let Ok(v) = gen_stirling_double_sum(s, n, k) {
                    covered += 1;
                    if v != want {
                        fail = Some(format!(
                            "double sum at s = {s}, ({n},{k}): {v}, recurrence {want}"
                        ));
                        break 'sums;
                    }
                }
                if let Ok(v) = gen_stirling_binom_sum(s, n, k) {
                    covered += 1;
                    if v != want {
                        fail = Some(format!(
                            "binomial sum at s = {s}, ({n},{k}): {v}, recurrence {want}"
                        ));
                        break 'sums;
                    }
                }
            }
        }
    }
    let pass = fail.is_none() && covered > 0;
    claims.push(witness(
        "generalized family: summation formulas agree where defined",
        Channel::Rewriter,
        pass,
        fail.unwrap_or_else(|| {
            if covered == 0 {
                "no index admitted either summation formula".into()
            } else {
                String::new()
            }
        }),
    ));

    Ok(claims)
}

/// Scalar powers of `e^{(A+B)t}` obey the exponent laws.
pub(super) fn build_expo_laws(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let b = ParamRat::from_rat(req(env, "b")?);
    let c = ParamRat::from_rat(req(env, "c")?);
    let ctx = Algebra::left_poly(UniPoly::one());
    let s = exp_element(&ab_sum(), &ctx, order)?;
    let sb = s.pow_scalar(&b)?;
    let sc = s.pow_scalar(&c)?;
    Ok(vec![
        series_eq(
            "the b-th and c-th powers multiply to the (b+c)-th power",
            true,
            sb.mul(&sc)?,
            s.pow_scalar(&(&b + &c))?,
        ),
        series_eq(
            "the c-th power of the b-th power is the (bc)-th power",
            true,
            sb.pow_scalar(&c)?,
            s.pow_scalar(&(&b * &c))?,
        ),
    ])
}

/// `sum_n A^n B^n / n! = sum_k (e^A - 1)^k ff_k(B) / k!` in the free
/// algebra, compared through total degree `order`.
pub(super) fn build_e_ab(_env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let cap = order.max(4);
    let ctx = Algebra::free(cap);

    let mut lhs = NCPoly::zero();
    let mut n = 0usize;
    while 2 * n <= cap {
        let e = Rat::from_int(n as i64);
        lhs.add_term(
            NCWord::normal(e.clone(), e),
            ParamRat::from_rat(Rat::factorial(n).recip()?),
        );
        n += 1;
    }

    let mut exp_m1 = NCPoly::zero();
    for m in 1..=cap {
        exp_m1.add_term(
            NCWord::gen_pow(Gen::A, Rat::from_int(m as i64)),
            ParamRat::from_rat(Rat::factorial(m).recip()?),
        );
    }

    let mut rhs = NCPoly::zero();
    let mut e_pow = NCPoly::one();
    for k in 0..=cap {
        if k > 0 {
            e_pow = e_pow.mul_capped(&exp_m1, Some(cap)).0;
        }
        let ff = gen_poly(&falling_factorial_poly(k), Gen::B);
        let term = e_pow.mul_capped(&ff, Some(cap)).0;
        rhs.add_scaled(&term, &ParamRat::from_rat(Rat::factorial(k).recip()?));
    }

    Ok(vec![poly_eq(
        "the diagonal exponential sum regroups by falling factorials",
        false,
        &ctx,
        lhs,
        rhs,
    )])
}

fn quadratic_poly(alpha: &Rat, eps: &Rat, lam: &Rat) -> UniPoly {
    &(&mono(alpha.clone(), 0) + &mono(eps.clone(), 1)) - &mono(lam.clone(), 2)
}

/// `[B, f(A)] = [B, A] f'(A)` for a spread of `f`, including a fractional
/// power.
pub(super) fn build_chain(env: &ParamEnv, _order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let alpha = req(env, "alpha")?;
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let p = quadratic_poly(&alpha, &eps, &lam);
    let ctx = Algebra::left_poly(p.clone());
    let b = NCPoly::gen(Gen::B);

    let half_x = UniPoly::monomial(Rat::new(1, 2), ParamRat::from_int(1));
    let fs = [
        mono(Rat::one(), 2),
        mono(Rat::one(), 3),
        &mono(Rat::one(), 4) + &mono(Rat::from_int(2), 2),
        half_x,
    ];

    let mut claims = Vec::new();
    for f in &fs {
        let lhs = ctx.commutator(&b, &gen_poly(f, Gen::A))?;
        let rhs = gen_poly(&(&p * &f.derivative()), Gen::A);
        claims.push(poly_eq(
            format!("[B, f(A)] is [B, A] f'(A) for f = {f}"),
            f.has_natural_exponents(),
            &ctx,
            lhs,
            ctx.normal_order(&rhs)?,
        ));
    }
    Ok(claims)
}

/// The two iterated-adjoint expansions of `B^n A` and `A B^n`.
pub(super) fn build_leibniz(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let alpha = req(env, "alpha")?;
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let ctx = Algebra::left_poly(quadratic_poly(&alpha, &eps, &lam));
    let a = NCPoly::gen(Gen::A);

    let mut claims = Vec::new();
    for n in 0..=order {
        let en = Rat::from_int(n as i64);
        let lhs = ctx.normal_order(&NCPoly::term(
            NCWord::from_blocks([(Gen::B, en.clone()), (Gen::A, Rat::one())]),
            ParamRat::from_int(1),
        ))?;
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            let adk = ctx.adjoint_pow(k, &a)?;
            let tail = NCPoly::gen_pow(Gen::B, Rat::from_int((n - k) as i64));
            rhs.add_scaled(
                &ctx.mul(&adk, &tail)?,
                &ParamRat::from_rat(Rat::binomial(n, k)),
            );
        }
        claims.push(poly_eq(
            format!("B^{n} A expands through iterated adjoints"),
            true,
            &ctx,
            lhs,
            rhs,
        ));

        let lhs = ctx.normal_order(&NCPoly::term(
            NCWord::from_blocks([(Gen::A, Rat::one()), (Gen::B, en)]),
            ParamRat::from_int(1),
        ))?;
        let mut rhs = NCPoly::zero();
        for k in 0..=n {
            let adk = ctx.adjoint_pow(k, &a)?;
            let head = NCPoly::gen_pow(Gen::B, Rat::from_int((n - k) as i64));
            let sign = if k % 2 == 0 { Rat::one() } else { -&Rat::one() };
            rhs.add_scaled(
                &ctx.mul(&head, &adk)?,
                &ParamRat::from_rat(&Rat::binomial(n, k) * &sign),
            );
        }
        claims.push(poly_eq(
            format!("A B^{n} expands through iterated adjoints"),
            true,
            &ctx,
            lhs,
            rhs,
        ));
    }
    Ok(claims)
}

fn random_poly(rng: &mut ChaCha8Rng) -> NCPoly {
    let mut out = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let u = Rat::from_int(rng.gen_range(0..=2));
        let v = Rat::from_int(rng.gen_range(0..=2));
        let mut c = 0i64;
        while c == 0 {
            c = rng.gen_range(-3..=3);
        }
        let word = if rng.gen_bool(0.5) {
            NCWord::normal(u, v)
        } else {
            NCWord::antinormal(v, u)
        };
        out.add_term(word, ParamRat::from_int(c));
    }
    out
}

/// The transpose map reverses products: `L(xy) = L(y) L(x)`.
pub(super) fn build_l_map(env: &ParamEnv, _order: usize, seed: u64) -> Result<Vec<Claim>> {
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let a = NCPoly::gen(Gen::A);
    let b = NCPoly::gen(Gen::B);
    let ab = NCPoly::term(NCWord::from_letters(&[Gen::A, Gen::B]), ParamRat::from_int(1));
    let ba = NCPoly::term(NCWord::from_letters(&[Gen::B, Gen::A]), ParamRat::from_int(1));

    let rels = [
        ("1".to_string(), UniPoly::one()),
        (format!("{eps} A"), mono(eps.clone(), 1)),
        (format!("-{lam} A^2"), mono(-&lam, 2)),
    ];

    let mut claims = Vec::new();
    for (i, (lbl, p)) in rels.iter().enumerate() {
        let ctx = Algebra::left_poly(p.clone());
        let mut pairs = vec![
            (a.clone(), b.clone()),
            (ab.clone(), ba.clone()),
            (&a + &b, &a - &b),
            (free_pow(&ab_sum(), 2), ab.clone()),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        for _ in 0..6 {
            pairs.push((random_poly(&mut rng), random_poly(&mut rng)));
        }
        for (j, (x, y)) in pairs.iter().enumerate() {
            let (l_xy, image) = l_map(&ctx.mul(x, y)?, &ctx)?;
            let (lx, _) = l_map(x, &ctx)?;
            let (ly, _) = l_map(y, &ctx)?;
            let rhs = image.mul(&ly, &lx)?;
            claims.push(poly_eq(
                format!("transpose reverses pair {j} under [B,A] = {lbl}"),
                false,
                &image,
                l_xy,
                rhs,
            ));
        }
    }
    Ok(claims)
}

/// The substitution flow `e^{(g(x) - x) d/dx}`-style check: the Taylor
/// shift machinery sends `f` to `f(g)` for polynomial `g` with `g(0) = 0`.
pub(super) fn build_umbral(_env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let gs = [
        ("x^2", XPoly::monomial(2, Rat::one())?),
        ("x + x^3", XPoly::x().add(&XPoly::monomial(3, Rat::one())?)),
    ];
    let fs = [
        ("1", XPoly::one()),
        ("x", XPoly::x()),
        ("x^2", XPoly::monomial(2, Rat::one())?),
        ("x^3", XPoly::monomial(3, Rat::one())?),
    ];
    let mut claims = Vec::new();
    for (gl, g) in &gs {
        for (fl, f) in &fs {
            let ok = shift_check(g, f, order)?;
            claims.push(witness(
                format!("the shift flow sends {fl} to its value at {gl}"),
                Channel::Oracle,
                ok,
                if ok {
                    String::new()
                } else {
                    format!("Taylor routes disagree for f = {fl}, g = {gl}")
                },
            ));
        }
    }
    Ok(claims)
}

/// `log(e^{At} e^{Bt})` agrees with the Dynkin bracket series, and its
/// low-order coefficients match the tabulated bracket polynomials.
pub(super) fn build_bchd(_env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    use Gen::{A, B};
    let dyn_s = dynkin_series(order)?;
    let log_s = bch_log(order)?;
    let ctx = dyn_s.ctx().clone();

    let mut claims = vec![series_eq(
        "the logarithm of e^{At} e^{Bt} is the bracket series",
        false,
        log_s,
        dyn_s.clone(),
    )];

    let nc = |letters: &[Gen]| nested_commutator(&ctx, letters);
    let mut tabulated: Vec<(usize, NCPoly)> = vec![
        (1, ab_sum()),
        (2, nc(&[A, B])?.scale_rat(&Rat::new(1, 2))),
        (
            3,
            (&nc(&[A, A, B])? + &nc(&[B, B, A])?).scale_rat(&Rat::new(1, 12)),
        ),
        (4, nc(&[B, A, A, B])?.scale_rat(&Rat::new(-1, 24))),
    ];
    if order >= 5 {
        let t720 = (&nc(&[B, B, B, B, A])? + &nc(&[A, A, A, A, B])?).scale_rat(&Rat::new(-1, 720));
        let t360 = (&nc(&[A, B, B, B, A])? + &nc(&[B, A, A, A, B])?).scale_rat(&Rat::new(1, 360));
        let t120 = (&nc(&[B, A, B, A, B])? + &nc(&[A, B, A, B, A])?).scale_rat(&Rat::new(1, 120));
        tabulated.push((5, &(&t720 + &t360) + &t120));
    }
    for (n, expected) in tabulated {
        if n > order {
            break;
        }
        claims.push(poly_eq(
            format!("the t^{n} coefficient is the tabulated bracket polynomial"),
            false,
            &ctx,
            dyn_s.coeff(n).clone(),
            ctx.normal_order(&expected)?,
        ));
    }
    Ok(claims)
}

/// Under `[B, A] = p(A)` the kernel `Psi = e^{(A+B)t} e^{-Bt}` is B-free,
/// starts at `1 + At`, and rebuilds the exponential; under relations that
/// involve `B` it does not stay B-free.
pub(super) fn build_exist(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let alpha = req(env, "alpha")?;
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;
    let h = req(env, "h")?;

    let ps = [
        ("1".to_string(), UniPoly::one()),
        (format!("{eps} A"), mono(eps.clone(), 1)),
        (
            format!("{alpha} + {eps} A - {lam} A^2"),
            quadratic_poly(&alpha, &eps, &lam),
        ),
        (format!("{h} A^3"), mono(h.clone(), 3)),
        (
            format!("{h} A^(1/2)"),
            UniPoly::monomial(Rat::new(1, 2), ParamRat::from_rat(h.clone())),
        ),
    ];

    let mut claims = Vec::new();
    for (lbl, p) in &ps {
        let ctx = Algebra::left_poly(p.clone());
        let psi = psi_series(&ctx, order)?;
        let wtn = psi_b_witness(&psi);
        claims.push(witness(
            format!("the kernel is B-free under [B,A] = {lbl}"),
            Channel::Series,
            wtn.is_none(),
            wtn.map(|(k, w)| format!("coefficient of t^{k} contains {w}"))
                .unwrap_or_default(),
        ));
        claims.push(poly_eq(
            format!("the kernel starts at 1 under [B,A] = {lbl}"),
            false,
            &ctx,
            psi.coeff(0).clone(),
            NCPoly::one(),
        ));
        claims.push(poly_eq(
            format!("the kernel has derivative A at t = 0 under [B,A] = {lbl}"),
            false,
            &ctx,
            psi.coeff(1).clone(),
            NCPoly::gen(Gen::A),
        ));
        claims.push(series_eq(
            format!("the kernel rebuilds exp((A+B)t) under [B,A] = {lbl}"),
            false,
            exp_element(&ab_sum(), &ctx, order)?,
            psi.mul(&exp_gen(&ctx, Gen::B, order))?,
        ));
    }

    let rctx = Algebra::right_poly(mono(eps.clone(), 1));
    let rpsi = psi_series(&rctx, order)?;
    claims.push(witness(
        format!("the kernel keeps B under [B,A] = {eps} B"),
        Channel::Series,
        psi_b_witness(&rpsi).is_some(),
        "every coefficient came out B-free",
    ));

    let bctx = Algebra::bivariate(ab_sum().scale_rat(&eps))?;
    let bpsi = psi_series(&bctx, order)?;
    claims.push(witness(
        format!("the kernel keeps B under [B,A] = {eps} (A+B)"),
        Channel::Series,
        psi_b_witness(&bpsi).is_some(),
        "every coefficient came out B-free",
    ));

    Ok(claims)
}

/// Scaling the `A` slot raises the kernel to the matching scalar power:
/// `e^{(cA+B)t} = Psi(t)^c e^{Bt}`.
pub(super) fn build_psi_lambda(env: &ParamEnv, order: usize, _seed: u64) -> Result<Vec<Claim>> {
    let c = req(env, "c")?;
    let eps = req(env, "epsilon")?;
    let h = req(env, "h")?;

    let ps = [
        ("1".to_string(), UniPoly::one()),
        (format!("{eps} A"), mono(eps.clone(), 1)),
        (format!("{h} A^3"), mono(h.clone(), 3)),
    ];

    let mut claims = Vec::new();
    for (lbl, p) in &ps {
        let ctx = Algebra::left_poly(p.clone());
        let psi = psi_series(&ctx, order)?;
        let scaled = &NCPoly::gen(Gen::A).scale_rat(&c) + &NCPoly::gen(Gen::B);
        claims.push(series_eq(
            format!("exp((cA+B)t) is the c-th kernel power times e^{{Bt}} under [B,A] = {lbl}"),
            true,
            exp_element(&scaled, &ctx, order)?,
            psi.pow_scalar(&ParamRat::from_rat(c.clone()))?
                .mul(&exp_gen(&ctx, Gen::B, order))?,
        ));
    }
    Ok(claims)
}

/// The differential-operator representation confirms the rewriter: the
/// normal-ordered powers equal the free powers as operators, and the
/// exponential series acts like the operator exponential on monomials.
pub(super) fn build_oracle_concordance(
    env: &ParamEnv,
    order: usize,
    _seed: u64,
) -> Result<Vec<Claim>> {
    let alpha = req(env, "alpha")?;
    let eps = req(env, "epsilon")?;
    let lam = req(env, "lambda")?;

    let rels = [
        ("1".to_string(), UniPoly::one()),
        (format!("{alpha}"), mono(alpha.clone(), 0)),
        (
            format!("{alpha} + {eps} A"),
            &mono(alpha.clone(), 0) + &mono(eps.clone(), 1),
        ),
        (
            format!("{eps} A - {lam} A^2"),
            &mono(eps.clone(), 1) - &mono(lam.clone(), 2),
        ),
    ];

    let ab = NCPoly::term(NCWord::from_letters(&[Gen::A, Gen::B]), ParamRat::from_int(1));
    let mut claims = Vec::new();
    for (lbl, p) in &rels {
        let ctx = Algebra::left_poly(p.clone());
        for n in 0..=order {
            claims.push(poly_eq(
                format!("(A+B)^{n} rewrites to the same operator, [B,A] = {lbl}"),
                true,
                &ctx,
                ctx.binomial_power(n)?,
                free_pow(&ab_sum(), n),
            ));
        }
        for n in 0..=order.min(4) {
            claims.push(poly_eq(
                format!("(AB)^{n} rewrites to the same operator, [B,A] = {lbl}"),
                true,
                &ctx,
                ctx.product_power(n)?,
                free_pow(&ab, n),
            ));
        }

        let s = exp_element(&ab_sum(), &ctx, order)?;
        for m in 0..=6usize {
            let f = XPoly::monomial(m, Rat::one())?;
            let cols = series_apply(&s, &f)?;
            let mut ok = true;
            let mut detail = String::new();
            for (k, col) in cols.iter().enumerate() {
                let direct = rep_of(&free_pow(&ab_sum(), k), p)?
                    .apply(&f)?
                    .scale(&Rat::factorial(k).recip()?);
                if *col != direct {
                    ok = false;
                    detail = format!(
                        "t^{k} applied to x^{m}: series route {col}, operator route {direct}"
                    );
                    break;
                }
            }
            claims.push(witness(
                format!("the series acts on x^{m} like the operator exponential, [B,A] = {lbl}"),
                Channel::Oracle,
                ok,
                detail,
            ));
        }
    }
    Ok(claims)
}
