//! Series building blocks shared by the identity catalog.
//!
//! The quadratic-commutator identities are all phrased in terms of two
//! linear-recursive sequences `u`, `v` and the kernel series `Phi`; the
//! existence lemma is phrased through `Psi(t) = e^{(A+B)t} e^{-Bt}`.
//! This module also collects the small scalar series (exponentials,
//! hyperbolics, `(e^{ct}-1)/c`, ...) that the closed-form right-hand
//! sides are assembled from.

use crate::combinat::UniPoly;
use crate::error::Result;
use crate::ncalg::{Algebra, Gen, NCPoly, NCWord};
use crate::scalars::{ParamRat, Rat};
use crate::series::{exp_element, ASeries, TSeries};

/// The sequences `u_0 = 0, u_1 = 1` and `v_0 = 1, v_1 = 0`, both following
/// `x_{n+2} = eps x_{n+1} + alpha x_n`, returned up to and including index
/// `n`. They satisfy `v_{n+1} = alpha u_n` and `u_{n+1} = v_n + eps u_n`,
/// and carry the binomial coefficients of the monic quadratic commutator.
pub fn uv_sequences(alpha: &ParamRat, eps: &ParamRat, n: usize) -> (Vec<ParamRat>, Vec<ParamRat>) {
    let mut u = Vec::with_capacity(n + 1);
    let mut v = Vec::with_capacity(n + 1);
    u.push(ParamRat::zero());
    v.push(ParamRat::one());
    if n >= 1 {
        u.push(ParamRat::one());
        v.push(ParamRat::zero());
    }
    for k in 2..=n {
        u.push(&(eps * &u[k - 1]) + &(alpha * &u[k - 2]));
        v.push(&(eps * &v[k - 1]) + &(alpha * &v[k - 2]));
    }
    (u, v)
}

/// The kernel `Phi_A(t, r, rho)` truncated at `t^order`, as a series whose
/// coefficients are polynomials in `A`:
///
/// * `r != rho`: `(rho e^{rt} - r e^{rho t})/(rho - r) + A (e^{rho t} - e^{rt})/(rho - r)`
/// * `r == rho`: `(1 - rt) e^{rt} + A t e^{rt}`
///
/// In both branches the coefficient of `t^n/n!` works out to `v_n + u_n A`.
pub fn phi_series(r: &Rat, rho: &Rat, order: usize) -> ASeries {
    let x = UniPoly::x();
    if r == rho {
        // (1 - rt) e^{rt} + A t e^{rt}
        ASeries::from_fn(order, |n| {
            let rn = r.pow(n as i64).expect("integer power");
            let fact = Rat::factorial(n);
            // t^n coefficient of (1 - rt)e^{rt}: r^n/n! - r·r^{n-1}/(n-1)!
            let mut scalar = &rn / &fact;
            if n >= 1 {
                scalar = &scalar - &(&rn / &Rat::factorial(n - 1));
            }
            let mut c = UniPoly::constant_rat(scalar);
            if n >= 1 {
                // t^n coefficient of A t e^{rt}: A r^{n-1}/(n-1)!
                let lin = &r.pow((n - 1) as i64).expect("integer power") / &Rat::factorial(n - 1);
                c = &c + &x.scale(&ParamRat::from_rat(lin));
            }
            c
        })
    } else {
        let gap = rho - r;
        ASeries::from_fn(order, |n| {
            let rn = r.pow(n as i64).expect("integer power");
            let rhon = rho.pow(n as i64).expect("integer power");
            let fact = Rat::factorial(n);
            let scalar = &(&(&(rho * &rn) - &(r * &rhon)) / &gap) / &fact;
            let lin = &(&(&rhon - &rn) / &gap) / &fact;
            &UniPoly::constant_rat(scalar) + &x.scale(&ParamRat::from_rat(lin))
        })
    }
}

/// `Psi(t) = e^{(A+B)t} e^{-Bt}` in the given algebra, truncated at
/// `t^order`. When the commutator is a polynomial in `A` alone, every
/// coefficient is a polynomial in `A` alone; otherwise some coefficient
/// retains a `B` (see [`psi_b_witness`]).
pub fn psi_series(ctx: &Algebra, order: usize) -> Result<TSeries> {
    let a_plus_b = &NCPoly::gen(Gen::A) + &NCPoly::gen(Gen::B);
    let lhs = exp_element(&a_plus_b, ctx, order)?;
    let e_minus_bt = TSeries::from_fn(ctx, order, |k| {
        let c = Rat::new(if k % 2 == 0 { 1 } else { -1 }, 1);
        NCPoly::gen_pow(Gen::B, Rat::from_int(k as i64)).scale(&ParamRat::from_rat(&c / &Rat::factorial(k)))
    })?;
    lhs.mul(&e_minus_bt)
}

/// First coefficient of `Psi` that still contains the generator `B`,
/// reported as `(t-order, word)`; `None` when `Psi` is `B`-free.
pub fn psi_b_witness(psi: &TSeries) -> Option<(usize, String)> {
    for (k, c) in psi.coeffs().iter().enumerate() {
        if let Some(w) = c.witness_with_gen(Gen::B) {
            return Some((k, w.to_string_with(psi.ctx().letters(), false)));
        }
    }
    None
}

/// View a series whose coefficients are polynomials in `A` alone as an
/// [`ASeries`]; errors when some coefficient still contains `B`.
pub fn pure_series(ts: &TSeries) -> Result<ASeries> {
    let mut coeffs = Vec::with_capacity(ts.order() + 1);
    for c in ts.coeffs() {
        let mut u = UniPoly::zero();
        for (w, coeff) in c.terms() {
            match w.blocks() {
                [] => u.add_term(Rat::zero(), coeff.clone()),
                [(Gen::A, e)] => u.add_term(e.clone(), coeff.clone()),
                _ => {
                    return Err(crate::error::Error::Unsupported(format!(
                        "coefficient is not a polynomial in {} alone: {}",
                        ts.ctx().letters()[0],
                        w.to_string_with(ts.ctx().letters(), false)
                    )))
                }
            }
        }
        coeffs.push(u);
    }
    Ok(ASeries::new(ts.order(), coeffs))
}

/// `e^{ct}` as a constant-coefficient series.
pub fn scalar_exp(c: &Rat, order: usize) -> ASeries {
    ASeries::from_fn(order, |n| {
        UniPoly::constant_rat(&c.pow(n as i64).expect("integer power") / &Rat::factorial(n))
    })
}

/// `(e^{ct} - 1)/c` as a constant-coefficient series; defined for every
/// `c` (the division cancels termwise), with value `t` at `c = 0`.
pub fn scalar_expm1_over(c: &Rat, order: usize) -> ASeries {
    ASeries::from_fn(order, |n| {
        if n == 0 {
            UniPoly::zero()
        } else {
            UniPoly::constant_rat(&c.pow(n as i64 - 1).expect("integer power") / &Rat::factorial(n))
        }
    })
}

/// `cosh(wt)` as a constant-coefficient series.
pub fn scalar_cosh(w: &Rat, order: usize) -> ASeries {
    ASeries::from_fn(order, |n| {
        if n % 2 == 0 {
            UniPoly::constant_rat(&w.pow(n as i64).expect("integer power") / &Rat::factorial(n))
        } else {
            UniPoly::zero()
        }
    })
}

/// `sinh(wt)` as a constant-coefficient series.
pub fn scalar_sinh(w: &Rat, order: usize) -> ASeries {
    ASeries::from_fn(order, |n| {
        if n % 2 == 1 {
            UniPoly::constant_rat(&w.pow(n as i64).expect("integer power") / &Rat::factorial(n))
        } else {
            UniPoly::zero()
        }
    })
}

/// `e^{Gt}` for a single generator `G`, i.e. the series with coefficient
/// `G^k/k!` at `t^k`.
pub fn exp_gen(ctx: &Algebra, g: Gen, order: usize) -> TSeries {
    TSeries::from_fn(ctx, order, |k| {
        NCPoly::gen_pow(g, Rat::from_int(k as i64))
            .scale(&ParamRat::from_rat(Rat::factorial(k).recip().expect("nonzero factorial")))
    })
    .expect("powers of one generator are already ordered")
}

/// The identity series `phi(t) = t`.
pub fn t_series(order: usize) -> ASeries {
    ASeries::monomial(order, 1, UniPoly::one())
}

/// The disentangling exponent `F_s(h A^s t)/(h A^{s-1})` of the monomial
/// commutator: its `t^n` coefficient is `c_n h^{n-1} A^{s(n-1)+1}` where
/// `F_s(t) = sum c_n t^n` is the generalized-Stirling exponential
/// generating kernel. Termwise the division by `h A^{s-1}` is exact, so
/// the expression is defined for all `s`.
pub fn frak_phi(s: &Rat, h: &Rat, order: usize) -> ASeries {
    let kernel = crate::combinat::frak_f_series(s, order);
    ASeries::from_fn(order, |n| {
        if n == 0 {
            return UniPoly::zero();
        }
        let c = kernel.coefficient(&Rat::from_int(n as i64));
        if c.is_zero() {
            return UniPoly::zero();
        }
        let scale = c.scale(&h.pow(n as i64 - 1).expect("integer power"));
        let exponent = &(s * &Rat::from_int(n as i64 - 1)) + &Rat::one();
        UniPoly::monomial(exponent, scale)
    })
}

/// Swap the two generators in every word: `A^i ... B^j` becomes
/// `B^i ... A^j`. A relation-preserving renaming, used when transporting
/// an identity to the algebra with the mirrored commutator.
pub fn swap_generators(p: &NCPoly) -> NCPoly {
    NCPoly::from_terms(p.terms().map(|(w, c)| {
        let blocks: Vec<(Gen, Rat)> = w.blocks().iter().map(|(g, e)| (g.other(), e.clone())).collect();
        (NCWord::from_blocks(blocks), c.clone())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Relation;
    use crate::scalars::ParamEnv;

    fn pr(n: i64, d: i64) -> ParamRat {
        ParamRat::from_rat(Rat::new(n, d))
    }

    #[test]
    fn uv_first_terms_and_cross_links() {
        // u2 = eps, v2 = alpha; symbolic alpha, eps.
        let alpha = ParamRat::symbol("alpha");
        let eps = ParamRat::symbol("epsilon");
        let (u, v) = uv_sequences(&alpha, &eps, 5);
        assert_eq!(u[2], eps);
        assert_eq!(v[2], alpha);
        for n in 0..5 {
            assert_eq!(v[n + 1], &alpha * &u[n]);
            assert_eq!(u[n + 1], &v[n] + &(&eps * &u[n]));
        }
    }

    #[test]
    fn uv_closed_forms() {
        // r=1, rho=2: alpha = -2, eps = 3; u_n = 2^n - 1, v_n = 2 - 2^n... via
        // (rho r^n - r rho^n)/(rho - r).
        let (u, v) = uv_sequences(&pr(-2, 1), &pr(3, 1), 6);
        for n in 0..=6 {
            let pow2 = 1i64 << n;
            assert_eq!(u[n], pr(pow2 - 1, 1), "u_{n}");
            assert_eq!(v[n], pr(2 - pow2, 1), "v_{n}");
        }
        assert_eq!(u[3], pr(7, 1));

        // double root r = rho = 1: alpha = -1, eps = 2; u_n = n, v_n = 1 - n.
        let (u, v) = uv_sequences(&pr(-1, 1), &pr(2, 1), 6);
        for n in 0..=6 {
            assert_eq!(u[n], pr(n as i64, 1));
            assert_eq!(v[n], pr(1 - n as i64, 1));
        }
        assert_eq!(u[3], pr(3, 1));
    }

    #[test]
    fn phi_matches_uv_in_both_branches() {
        for (r, rho) in [
            (Rat::from_int(1), Rat::from_int(2)),
            (Rat::from_int(3), Rat::from_int(3)),
            (Rat::new(1, 2), Rat::new(-1, 3)),
            (Rat::zero(), Rat::zero()),
        ] {
            let alpha = ParamRat::from_rat(-(&(&r * &rho)));
            let eps = ParamRat::from_rat(&r + &rho);
            let (u, v) = uv_sequences(&alpha, &eps, 6);
            let phi = phi_series(&r, &rho, 6);
            for n in 0..=6 {
                let mut expected = UniPoly::constant(v[n].clone());
                expected = &expected + &UniPoly::x().scale(&u[n]);
                let fact = ParamRat::from_rat(Rat::factorial(n).recip().unwrap());
                expected = expected.scale(&fact);
                assert_eq!(phi.coeff(n), &expected, "t^{n} at r={r}, rho={rho}");
            }
        }
    }

    #[test]
    fn phi_degenerate_instances() {
        // r = rho = 0 collapses to 1 + At.
        let phi = phi_series(&Rat::zero(), &Rat::zero(), 4);
        assert_eq!(phi.coeff(0), &UniPoly::one());
        assert_eq!(phi.coeff(1), &UniPoly::x());
        assert!(phi.coeff(2).is_zero());
        assert!(phi.coeff(3).is_zero());

        // r=1, rho=2: t^2 coefficient is (v2 + u2 A)/2 = (-2 + 3A)/2.
        let phi = phi_series(&Rat::from_int(1), &Rat::from_int(2), 4);
        let mut expected = UniPoly::constant(pr(-1, 1));
        expected = &expected + &UniPoly::x().scale(&pr(3, 2));
        assert_eq!(phi.coeff(2), &expected);
    }

    #[test]
    fn psi_weyl_and_jordan() {
        // Weyl p = alpha: Psi = e^{alpha t^2/2} e^{At}.
        let ctx = Algebra::left_poly(UniPoly::constant(ParamRat::symbol("alpha")));
        let env = ParamEnv::new().bind("alpha", Rat::from_int(3));
        let ctx = ctx.instantiate(&env).unwrap();
        let psi = psi_series(&ctx, 4).unwrap();
        assert!(psi_b_witness(&psi).is_none());
        // t^2 coefficient: alpha/2 + A^2/2.
        let mut expected = NCPoly::constant(pr(3, 2));
        expected.add_term(NCWord::gen_pow(Gen::A, Rat::from_int(2)), pr(1, 2));
        assert_eq!(psi.coeff(2), &expected);

        // commuting p = 0: Psi = e^{At}.
        let ctx = Algebra::left_poly(UniPoly::zero());
        let psi = psi_series(&ctx, 5).unwrap();
        for k in 0..=5 {
            let expected = NCPoly::gen_pow(Gen::A, Rat::from_int(k as i64))
                .scale(&ParamRat::from_rat(Rat::factorial(k).recip().unwrap()));
            assert_eq!(psi.coeff(k), &expected);
        }

        // Jordan p = -lambda A^2 at lambda = 2: Psi = (1 + 2At)^{1/2}.
        let mut p = UniPoly::zero();
        p.add_term(Rat::from_int(2), pr(-2, 1));
        let ctx = Algebra::left_poly(p);
        let psi = psi_series(&ctx, 4).unwrap();
        assert!(psi_b_witness(&psi).is_none());
        let one_plus = TSeries::from_fn(&ctx, 4, |k| match k {
            0 => NCPoly::one(),
            1 => NCPoly::gen(Gen::A).scale(&pr(2, 1)),
            _ => NCPoly::zero(),
        })
        .unwrap();
        let direct = one_plus.pow_scalar(&pr(1, 2)).unwrap();
        assert_eq!(psi, direct);
    }

    #[test]
    fn psi_witness_detects_b_dependence() {
        // [B, A] = eps B: the relation depends on B and so must Psi.
        let mut p = UniPoly::zero();
        p.add_term(Rat::one(), pr(1, 1));
        let ctx = Algebra::right_poly(p);
        let psi = psi_series(&ctx, 4).unwrap();
        let witness = psi_b_witness(&psi);
        assert!(witness.is_some());
        assert!(witness.unwrap().0 >= 2);

        // [B, A] = eps(A + B), bivariate: same verdict.
        let mut q = NCPoly::gen(Gen::A);
        q = &q + &NCPoly::gen(Gen::B);
        let ctx = Algebra::bivariate(q).unwrap();
        let psi = psi_series(&ctx, 4).unwrap();
        assert!(psi_b_witness(&psi).is_some());
    }

    #[test]
    fn scalar_series_shapes() {
        let e = scalar_exp(&Rat::from_int(2), 4);
        assert_eq!(e.coeff(3), &UniPoly::constant(pr(8, 6)));
        let m = scalar_expm1_over(&Rat::from_int(3), 4);
        assert!(m.coeff(0).is_zero());
        assert_eq!(m.coeff(1), &UniPoly::one());
        assert_eq!(m.coeff(2), &UniPoly::constant(pr(3, 2)));
        // c = 0 degenerates to t.
        let t = scalar_expm1_over(&Rat::zero(), 4);
        assert_eq!(t, t_series(4));
        // cosh^2 - sinh^2 = 1.
        let c = scalar_cosh(&Rat::from_int(2), 6);
        let s = scalar_sinh(&Rat::from_int(2), 6);
        let diff = &(&c * &c) - &(&s * &s);
        assert_eq!(diff, ASeries::one(6));
    }

    #[test]
    fn frak_phi_known_cases() {
        // s = -1: A t + h t^2/2, the divisionless Weyl exponent.
        let phi = frak_phi(&Rat::from_int(-1), &Rat::from_int(3), 4);
        assert_eq!(phi.coeff(1), &UniPoly::x());
        assert_eq!(phi.coeff(2), &UniPoly::constant(pr(3, 2)));
        assert!(phi.coeff(3).is_zero());

        // s = 0: A (e^{ht} - 1)/h, coefficient A h^{n-1}/n!.
        let phi = frak_phi(&Rat::zero(), &Rat::from_int(2), 4);
        assert_eq!(phi.coeff(3), &UniPoly::x().scale(&pr(4, 6)));

        // s = 1: -log(1 - hAt)/1, coefficient h^{n-1} A^n / n.
        let phi = frak_phi(&Rat::one(), &Rat::from_int(2), 4);
        assert_eq!(
            phi.coeff(3),
            &UniPoly::monomial(Rat::from_int(3), pr(4, 3))
        );
    }

    #[test]
    fn generator_swap_mirrors_relations() {
        let mut p = NCPoly::gen_pow(Gen::A, Rat::from_int(2));
        p.add_term(NCWord::normal(Rat::one(), Rat::from_int(3)), pr(5, 1));
        let q = swap_generators(&p);
        assert_eq!(q.coefficient(&NCWord::gen_pow(Gen::B, Rat::from_int(2))), pr(1, 1));
        assert_eq!(q.coefficient(&NCWord::antinormal(Rat::one(), Rat::from_int(3))), pr(5, 1));
        assert_eq!(swap_generators(&q), p);
    }

    #[test]
    fn psi_respects_relation_kind() {
        // LEFT_POLY over all template kinds stays B-free.
        for p in [
            UniPoly::constant(pr(1, 1)),
            UniPoly::x().scale(&pr(2, 1)),
            UniPoly::monomial(Rat::new(1, 2), pr(1, 1)),
        ] {
            let ctx = Algebra::new(Relation::LeftPoly(p));
            let psi = psi_series(&ctx, 4).unwrap();
            assert!(psi_b_witness(&psi).is_none());
        }
    }
}
