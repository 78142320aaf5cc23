//! Formal Cauchy-problem solver and the disentangling identity
//! `exp((f(A)B + g(A))t) = e^{gamma(t)} (e^{phi(t)})^B` built on it,
//! together with the mirrored (antinormal) version reached through the
//! transpose map.

use crate::combinat::UniPoly;
use crate::error::Result;
use crate::ncalg::{l_map, poly_of_gen, Algebra, Gen, NCPoly};
use crate::scalars::{ParamRat, Rat};
use crate::series::{exp_element, exp_pow_b, lift, ASeries, Divergence, TSeries};

/// Data of the scalar Cauchy problem `da/dt = p(a) f(a)`, `a(0) = A`,
/// together with the source term `g` and the truncation order for the
/// identity built from its solution.
#[derive(Clone, Debug)]
pub struct CauchyProblem {
    pub p: UniPoly,
    pub f: UniPoly,
    pub g: UniPoly,
    pub initial: Gen,
    pub order: usize,
}

impl CauchyProblem {
    pub fn new(p: UniPoly, f: UniPoly, g: UniPoly, order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        CauchyProblem {
            p,
            f,
            g,
            initial: Gen::A,
            order,
        }
    }

    pub fn with_initial(mut self, g: Gen) -> Self {
        self.initial = g;
        self
    }
}

/// Substitute a series with constant term `A` into a polynomial with
/// rational exponents: each monomial `c x^q` becomes
/// `c A^q sum_n C(q, n) ((alpha - A)/A)^n`, a finite sum order by order
/// because `alpha - A` has no constant term.
pub fn compose(u: &UniPoly, alpha: &ASeries) -> ASeries {
    let order = alpha.order();
    let abar = alpha - &ASeries::constant(order, UniPoly::x());
    debug_assert!(abar.coeff(0).is_zero(), "series must start at A");
    let z = &abar
        * &ASeries::constant(
            order,
            UniPoly::monomial(Rat::from_int(-1), ParamRat::one()),
        );
    let mut z_pows = Vec::with_capacity(order + 1);
    z_pows.push(ASeries::one(order));
    for n in 1..=order {
        z_pows.push(&z_pows[n - 1] * &z);
    }
    let mut out = ASeries::zero(order);
    for (q, c) in u.terms() {
        for (n, zn) in z_pows.iter().enumerate() {
            let binom = Rat::binomial_rat(q, n);
            if binom.is_zero() {
                continue;
            }
            let head = ASeries::constant(order, UniPoly::monomial(q.clone(), c.scale(&binom)));
            out = &out + &(&head * zn);
        }
    }
    out
}

/// Solve `da/dt = p(a) f(a)`, `a(0) = A`, order by order:
/// the `t^{k+1}` coefficient is the `t^k` coefficient of `p(a) f(a)`
/// divided by `k + 1`.
pub fn solve_alpha(cp: &CauchyProblem) -> ASeries {
    let order = cp.order;
    let mut alpha = ASeries::constant(order, UniPoly::x());
    for k in 0..order {
        let rhs = &compose(&cp.p, &alpha) * &compose(&cp.f, &alpha);
        let next = rhs
            .coeff(k)
            .scale(&ParamRat::from_rat(Rat::new(1, k as i64 + 1)));
        alpha = &alpha + &ASeries::monomial(order, k + 1, next);
    }
    alpha
}

/// `phi = integral of f(alpha)`, `gamma = integral of g(alpha)`.
pub fn phi_gamma(cp: &CauchyProblem) -> (ASeries, ASeries) {
    let alpha = solve_alpha(cp);
    (
        compose(&cp.f, &alpha).integrate(),
        compose(&cp.g, &alpha).integrate(),
    )
}

/// The truncated residual `a' - p(a) f(a)` vanishes identically below the
/// truncation order; the construction guarantees it, and this rechecks it.
pub fn ode_residual_ok(cp: &CauchyProblem, alpha: &ASeries) -> bool {
    let rhs = &compose(&cp.p, alpha) * &compose(&cp.f, alpha);
    let residual = &alpha.differentiate() - &rhs;
    residual
        .coeffs()
        .iter()
        .take(cp.order)
        .all(UniPoly::is_zero)
}

/// Both sides of the disentangling identity under `[B, A] = p(A)`:
/// left, `exp((f(A)B + g(A))t)`; right, `e^{gamma(t)} (e^{phi(t)})^B`.
pub fn viskov_sides(cp: &CauchyProblem) -> Result<(TSeries, TSeries)> {
    let ctx = Algebra::left_poly(cp.p.clone());
    let x = &(&poly_of_gen(&cp.f, Gen::A) * &NCPoly::gen(Gen::B)) + &poly_of_gen(&cp.g, Gen::A);
    let lhs = exp_element(&x, &ctx, cp.order)?;
    let (phi, gamma) = phi_gamma(cp);
    let rhs = lift(&gamma, Gen::A, &ctx)?
        .exp()?
        .mul(&exp_pow_b(&phi, &ctx)?)?;
    Ok((lhs, rhs))
}

/// Check the identity; `None` means both sides agree through the order.
pub fn viskov_check(cp: &CauchyProblem) -> Result<Option<Divergence>> {
    let (lhs, rhs) = viskov_sides(cp)?;
    lhs.first_divergence(&rhs)
}

/// Both sides of the mirrored identity under `[B, A] = p(B)`:
/// left, `exp((A f(B) + g(B))t)` ordered directly in the mirror algebra;
/// right, the transpose image of `e^{gamma(t)} (e^{phi(t)})^B` computed
/// under `[B, A] = p(A)`. Agreement is exactly the statement that the
/// transpose map carries one identity to the other.
pub fn viskov_antinormal_sides(cp: &CauchyProblem) -> Result<(TSeries, TSeries)> {
    let source = Algebra::left_poly(cp.p.clone());
    let (phi, gamma) = phi_gamma(cp);
    let normal_rhs = lift(&gamma, Gen::A, &source)?
        .exp()?
        .mul(&exp_pow_b(&phi, &source)?)?;

    let mut image_ctx = None;
    let mut coeffs = Vec::with_capacity(cp.order + 1);
    for c in normal_rhs.coeffs() {
        let (img, ctx) = l_map(c, &source)?;
        coeffs.push(img);
        image_ctx = Some(ctx);
    }
    let image_ctx = image_ctx.expect("series has at least the constant coefficient");
    let rhs = TSeries::new(&image_ctx, cp.order, coeffs)?;

    let x = &(&NCPoly::gen(Gen::A) * &poly_of_gen(&cp.f, Gen::B)) + &poly_of_gen(&cp.g, Gen::B);
    let lhs = exp_element(&x, &image_ctx, cp.order)?;
    Ok((lhs, rhs))
}

/// Check the mirrored identity; `None` means agreement through the order.
pub fn viskov_antinormal_check(cp: &CauchyProblem) -> Result<Option<Divergence>> {
    let (lhs, rhs) = viskov_antinormal_sides(cp)?;
    lhs.first_divergence(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str) -> ParamRat {
        ParamRat::symbol(name)
    }

    #[test]
    fn constant_growth() {
        // a' = 1: a = A + t.
        let cp = CauchyProblem::new(UniPoly::one(), UniPoly::one(), UniPoly::zero(), 4);
        let alpha = solve_alpha(&cp);
        assert_eq!(alpha.coeff(0), &UniPoly::x());
        assert_eq!(alpha.coeff(1), &UniPoly::one());
        assert!(alpha.coeff(2).is_zero());
        assert!(ode_residual_ok(&cp, &alpha));
    }

    #[test]
    fn exponential_growth() {
        // a' = eps a: a = A e^{eps t}.
        let eps = sym("epsilon");
        let cp = CauchyProblem::new(
            UniPoly::x().scale(&eps),
            UniPoly::one(),
            UniPoly::zero(),
            5,
        );
        let alpha = solve_alpha(&cp);
        for k in 0..=5usize {
            let want = UniPoly::x().scale(
                &eps.pow(k as i64)
                    .unwrap()
                    .scale(&Rat::factorial(k).recip().unwrap()),
            );
            assert_eq!(alpha.coeff(k), &want);
        }
        assert!(ode_residual_ok(&cp, &alpha));
    }

    #[test]
    fn geometric_growth() {
        // a' = -lambda a^2: a = sum (-lambda)^k A^{k+1} t^k.
        let lam = sym("lambda");
        let cp = CauchyProblem::new(
            -&UniPoly::x().pow(2).scale(&lam),
            UniPoly::one(),
            UniPoly::zero(),
            5,
        );
        let alpha = solve_alpha(&cp);
        for k in 0..=5usize {
            let want = UniPoly::monomial(
                Rat::from_int(k as i64 + 1),
                (-&lam).pow(k as i64).unwrap(),
            );
            assert_eq!(alpha.coeff(k), &want);
        }
        assert!(ode_residual_ok(&cp, &alpha));
    }

    #[test]
    fn fractional_relation() {
        // a' = h a^(1/2): a = (A^(1/2) + ht/2)^2 = A + h A^(1/2) t + h^2 t^2/4.
        let h = sym("h");
        let cp = CauchyProblem::new(
            UniPoly::monomial(Rat::new(1, 2), h.clone()),
            UniPoly::one(),
            UniPoly::zero(),
            3,
        );
        let alpha = solve_alpha(&cp);
        assert_eq!(alpha.coeff(1), &UniPoly::monomial(Rat::new(1, 2), h.clone()));
        assert_eq!(
            alpha.coeff(2),
            &UniPoly::constant((&h * &h).scale(&Rat::new(1, 4)))
        );
        assert!(alpha.coeff(3).is_zero());
        assert!(ode_residual_ok(&cp, &alpha));
    }

    #[test]
    fn integrals_of_the_flow() {
        // p = 1, f = 1, g = 0: phi = t, gamma = 0.
        let cp = CauchyProblem::new(UniPoly::one(), UniPoly::one(), UniPoly::zero(), 4);
        let (phi, gamma) = phi_gamma(&cp);
        assert_eq!(phi, ASeries::monomial(4, 1, UniPoly::one()));
        assert!(gamma.is_zero());

        // p = h, f = x, g = 0: phi = A(e^{ht} - 1)/h.
        let h = sym("h");
        let cp = CauchyProblem::new(
            UniPoly::constant(h.clone()),
            UniPoly::x(),
            UniPoly::zero(),
            4,
        );
        let (phi, _) = phi_gamma(&cp);
        assert!(phi.coeff(0).is_zero());
        for k in 0..4usize {
            let want = UniPoly::x().scale(
                &h.pow(k as i64)
                    .unwrap()
                    .scale(&Rat::factorial(k + 1).recip().unwrap()),
            );
            assert_eq!(phi.coeff(k + 1), &want);
        }

        // p = x^2, f = 1, g = x: gamma = -log(1 - At) = sum A^k t^k / k.
        let cp = CauchyProblem::new(
            UniPoly::x().pow(2),
            UniPoly::one(),
            UniPoly::x(),
            5,
        );
        let (_, gamma) = phi_gamma(&cp);
        assert!(gamma.coeff(0).is_zero());
        for k in 1..=5usize {
            let want = UniPoly::monomial(
                Rat::from_int(k as i64),
                ParamRat::from_rat(Rat::new(1, k as i64)),
            );
            assert_eq!(gamma.coeff(k), &want);
        }
    }

    #[test]
    fn closed_form_flow_gives_the_same_integrals() {
        // phi depends on p, f only through alpha: feeding the closed-form
        // alpha = A e^{eps t} into f = x reproduces phi_gamma's output.
        let eps = sym("epsilon");
        let cp = CauchyProblem::new(
            UniPoly::x().scale(&eps),
            UniPoly::x(),
            UniPoly::zero(),
            5,
        );
        // For f(x) = x the flow is a' = eps a^2... no: p(a)f(a) = eps a * a.
        // Use f = 1 instead so the closed form stays exponential.
        let cp = CauchyProblem { f: UniPoly::one(), ..cp };
        let closed = ASeries::from_fn(5, |k| {
            UniPoly::x().scale(
                &eps.pow(k as i64)
                    .unwrap()
                    .scale(&Rat::factorial(k).recip().unwrap()),
            )
        });
        assert_eq!(solve_alpha(&cp), closed);
        let (phi, _) = phi_gamma(&cp);
        assert_eq!(phi, compose(&cp.f, &closed).integrate());
    }

    #[test]
    fn disentangling_weyl_like_relations() {
        // p = 1 + x^2, f = 1, g = 0 at order 5.
        let cp = CauchyProblem::new(
            &UniPoly::one() + &UniPoly::x().pow(2),
            UniPoly::one(),
            UniPoly::zero(),
            5,
        );
        assert_eq!(viskov_check(&cp).unwrap(), None);
    }

    #[test]
    fn disentangling_with_linear_f() {
        // p = eps x, f = x, g = 0 at order 5.
        let eps = sym("epsilon");
        let cp = CauchyProblem::new(
            UniPoly::x().scale(&eps),
            UniPoly::x(),
            UniPoly::zero(),
            5,
        );
        assert_eq!(viskov_check(&cp).unwrap(), None);
    }

    #[test]
    fn disentangling_with_source_term() {
        // p = 1, f = x, g = x^2 at order 4.
        let cp = CauchyProblem::new(UniPoly::one(), UniPoly::x(), UniPoly::x().pow(2), 4);
        assert_eq!(viskov_check(&cp).unwrap(), None);
    }

    #[test]
    fn vanishing_f_reduces_to_a_plain_exponential() {
        // f = 0: both sides are exp(g(A) t) regardless of p.
        let cp = CauchyProblem::new(
            &UniPoly::one() + &UniPoly::x().pow(2),
            UniPoly::zero(),
            UniPoly::x().pow(2),
            4,
        );
        let (lhs, rhs) = viskov_sides(&cp).unwrap();
        assert_eq!(lhs, rhs);
        let ctx = Algebra::left_poly(cp.p.clone());
        let plain = exp_element(&poly_of_gen(&cp.g, Gen::A), &ctx, 4).unwrap();
        assert_eq!(lhs, plain);
    }

    #[test]
    fn fractional_disentangling() {
        // p = h x^(1/2), f = 1, g = 0 at order 4 exercises the rational
        // exponent path end to end.
        let cp = CauchyProblem::new(
            UniPoly::monomial(Rat::new(1, 2), sym("h")),
            UniPoly::one(),
            UniPoly::zero(),
            4,
        );
        assert_eq!(viskov_check(&cp).unwrap(), None);
    }

    #[test]
    fn mirrored_identity() {
        // p = 1 and p = eps x, f = 1, g = 0 at order 4, through the
        // transpose map.
        for p in [UniPoly::one(), UniPoly::x().scale(&sym("epsilon"))] {
            let cp = CauchyProblem::new(p, UniPoly::one(), UniPoly::zero(), 4)
                .with_initial(Gen::B);
            assert_eq!(viskov_antinormal_check(&cp).unwrap(), None);
        }
    }

    #[test]
    fn mirrored_identity_without_b() {
        // f = 0 mirrors to exp(g(D) t).
        let cp = CauchyProblem::new(
            UniPoly::one(),
            UniPoly::zero(),
            UniPoly::x(),
            3,
        )
        .with_initial(Gen::B);
        let (lhs, rhs) = viskov_antinormal_sides(&cp).unwrap();
        assert_eq!(lhs, rhs);
    }
}
