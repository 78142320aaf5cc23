//! The check catalog.
//!
//! Each entry names an identity, its relation template, default
//! parameter environments, a default truncation order, and the channels
//! it is verified on. Builders turn one environment into a list of
//! [`Claim`]s; the driver in the parent module evaluates them.

mod bivariate;
mod monomial;
mod quadratic;
mod structural;
mod transforms;
mod viskov;

pub(crate) use transforms::{transformed_claims, transformed_relation};

use super::Claim;
use crate::combinat::UniPoly;
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, Gen, NCPoly, NCWord, Relation};
use crate::scalars::{ParamEnv, ParamRat, Rat};
use crate::series::{ASeries, TSeries};
use crate::verify::Channel;

/// One catalog entry.
pub(crate) struct CheckDef {
    pub name: &'static str,
    pub summary: &'static str,
    /// Default truncation order (`t`-order for series claims, maximum
    /// exponent for polynomial claims).
    pub order: usize,
    /// Largest order a caller may request.
    pub max_order: usize,
    pub channels: &'static [Channel],
    /// Built-in environments: lists of `(name, numerator, denominator)`.
    pub envs: &'static [&'static [(&'static str, i64, i64)]],
    /// The symbolic relation the check lives under (a representative one
    /// for checks that range over a grid of relations).
    pub template: fn() -> Relation,
    pub build: fn(&ParamEnv, usize, u64) -> Result<Vec<Claim>>,
    /// Whether the check is a normal-form exponential identity that the
    /// transform modes apply to.
    pub transformable: bool,
}

pub(crate) fn find(name: &str) -> Option<&'static CheckDef> {
    CATALOG.iter().find(|d| d.name == name)
}

// ---------------------------------------------------------------------
// Shared helpers for the builders.
// ---------------------------------------------------------------------

/// Fetch a required parameter.
pub(crate) fn req(env: &ParamEnv, name: &str) -> Result<Rat> {
    env.get(name)
        .cloned()
        .ok_or_else(|| Error::MissingBinding(name.to_string()))
}

/// `A + B`.
pub(crate) fn ab_sum() -> NCPoly {
    &NCPoly::gen(Gen::A) + &NCPoly::gen(Gen::B)
}

/// A univariate polynomial as a polynomial in the generator `g`.
pub(crate) fn gen_poly(p: &UniPoly, g: Gen) -> NCPoly {
    let mut out = NCPoly::zero();
    for (e, c) in p.terms() {
        out.add_term(NCWord::gen_pow(g, e.clone()), c.clone());
    }
    out
}

/// Product in the free algebra (no rewriting, no cap).
pub(crate) fn free_pow(x: &NCPoly, n: usize) -> NCPoly {
    let mut acc = NCPoly::one();
    for _ in 0..n {
        acc = acc.mul_capped(x, None).0;
    }
    acc
}

/// `c x^e` with a rational coefficient.
pub(crate) fn mono(c: Rat, e: i64) -> UniPoly {
    UniPoly::monomial(Rat::from_int(e), ParamRat::from_rat(c))
}

/// `c x^e` with a symbolic coefficient.
pub(crate) fn mono_sym(name: &str, e: i64) -> UniPoly {
    UniPoly::monomial(Rat::from_int(e), ParamRat::symbol(name))
}

/// The coefficient of `t^n` in a series whose coefficients are constants.
pub(crate) fn scalar_at(s: &ASeries, n: usize) -> ParamRat {
    s.coeff(n)
        .as_constant()
        .expect("a scalar series has constant coefficients")
}

pub(crate) fn series_eq(
    label: impl Into<String>,
    oracle: bool,
    lhs: TSeries,
    rhs: TSeries,
) -> Claim {
    Claim::Series {
        label: label.into(),
        oracle,
        lhs,
        rhs,
    }
}

pub(crate) fn poly_eq(
    label: impl Into<String>,
    oracle: bool,
    ctx: &Algebra,
    lhs: NCPoly,
    rhs: NCPoly,
) -> Claim {
    Claim::Poly {
        label: label.into(),
        oracle,
        ctx: ctx.clone(),
        lhs,
        rhs,
    }
}

pub(crate) fn witness(
    label: impl Into<String>,
    channel: Channel,
    pass: bool,
    detail: impl Into<String>,
) -> Claim {
    Claim::Witness {
        label: label.into(),
        channel,
        pass,
        detail: detail.into(),
    }
}

/// Read the quadratic data `p(x) = alpha + epsilon x - lam x^2` from an
/// environment: either the roots `r`, `rho` directly (then
/// `alpha = -lam r rho`, `epsilon = lam (r + rho)`) or `alpha`/`epsilon`,
/// solving `-lam x^2 + epsilon x + alpha = 0` for the roots.
pub(crate) fn quadratic_data(env: &ParamEnv, lam: &Rat) -> Result<(Rat, Rat, Rat, Rat)> {
    if let (Some(r), Some(rho)) = (env.get("r"), env.get("rho")) {
        let alpha = -&(lam * &(r * rho));
        let eps = lam * &(r + rho);
        Ok((alpha, eps, r.clone(), rho.clone()))
    } else {
        let alpha = req(env, "alpha")?;
        let eps = req(env, "epsilon")?;
        let (r, rho) = crate::scalars::roots_of_quadratic(&-lam, &eps, &alpha)?;
        Ok((alpha, eps, r, rho))
    }
}

/// Claim that every coefficient of `(A+B)^n`, `n <= n_max`, is an
/// integer — the binomial coefficients of an integer environment.
pub(crate) fn integrality_witness(ctx: &Algebra, n_max: usize) -> Result<Claim> {
    for n in 0..=n_max {
        let bp = ctx.binomial_power(n)?;
        for (w, c) in bp.terms() {
            let val = c
                .as_rat()
                .ok_or_else(|| Error::ContextMismatch("expected a concrete coefficient".into()))?;
            if !val.is_integer() {
                return Ok(witness(
                    "integer parameters give integer expansion coefficients",
                    Channel::Rewriter,
                    false,
                    format!(
                        "coefficient of {} in (A+B)^{n} is {val}",
                        w.to_string_with(ctx.letters(), false)
                    ),
                ));
            }
        }
    }
    Ok(witness(
        "integer parameters give integer expansion coefficients",
        Channel::Rewriter,
        true,
        String::new(),
    ))
}

// ---------------------------------------------------------------------
// The catalog.
// ---------------------------------------------------------------------

use Channel::{Oracle, Rewriter, Series};

pub(crate) static CATALOG: &[CheckDef] = &[
    CheckDef {
        name: "stirling-identities",
        summary: "Stirling/Lah recurrences vs closed forms vs generating functions",
        order: 20,
        max_order: 24,
        channels: &[Rewriter],
        envs: &[],
        template: || Relation::Free,
        build: structural::build_stirling_identities,
        transformable: false,
    },
    CheckDef {
        name: "prop-expo-laws",
        summary: "scalar-exponent power laws on a unit-constant-term series",
        order: 8,
        max_order: 10,
        channels: &[Series, Oracle],
        envs: &[
            &[("b", 2, 1), ("c", 3, 1)],
            &[("b", 1, 2), ("c", -1, 3)],
            &[("b", -2, 1), ("c", 5, 2)],
        ],
        template: structural::weyl_relation,
        build: structural::build_expo_laws,
        transformable: false,
    },
    CheckDef {
        name: "prop-eAB",
        summary: "sum of A^n B^n / n! as a falling-factorial expansion in the free algebra",
        order: 8,
        max_order: 10,
        channels: &[Rewriter],
        envs: &[],
        template: || Relation::Free,
        build: structural::build_e_ab,
        transformable: false,
    },
    CheckDef {
        name: "lemma-chain",
        summary: "[B, f(A)] = [B,A] f'(A) when the commutator is a polynomial in A",
        order: 6,
        max_order: 8,
        channels: &[Rewriter, Oracle],
        envs: &[
            &[("alpha", 1, 1), ("epsilon", 2, 1), ("lambda", 3, 1)],
            &[("alpha", -2, 1), ("epsilon", 1, 1), ("lambda", 1, 2)],
            &[("alpha", 0, 1), ("epsilon", 3, 1), ("lambda", -1, 1)],
        ],
        template: quadratic::general_relation,
        build: structural::build_chain,
        transformable: false,
    },
    CheckDef {
        name: "lemma-leibniz",
        summary: "B^n A and A B^n expanded through iterated adjoints",
        order: 6,
        max_order: 8,
        channels: &[Rewriter, Oracle],
        envs: &[
            &[("alpha", 1, 1), ("epsilon", 2, 1), ("lambda", 3, 1)],
            &[("alpha", -2, 1), ("epsilon", 1, 1), ("lambda", 1, 2)],
            &[("alpha", 0, 1), ("epsilon", 3, 1), ("lambda", -1, 1)],
        ],
        template: quadratic::general_relation,
        build: structural::build_leibniz,
        transformable: false,
    },
    CheckDef {
        name: "thm-L",
        summary: "the order-reversal map is an anti-homomorphism onto the mirrored algebra",
        order: 4,
        max_order: 6,
        channels: &[Rewriter],
        envs: &[
            &[("epsilon", 2, 1), ("lambda", 3, 1)],
            &[("epsilon", 1, 1), ("lambda", -1, 1)],
            &[("epsilon", 1, 2), ("lambda", 2, 1)],
        ],
        template: || Relation::LeftPoly(mono_sym("epsilon", 1)),
        build: structural::build_l_map,
        transformable: false,
    },
    CheckDef {
        name: "umbral-example",
        summary: "composition operator: exp((g(x)-x) d/dx)-style shift acting as f -> f(g)",
        order: 6,
        max_order: 8,
        channels: &[Oracle],
        envs: &[],
        template: structural::weyl_relation,
        build: structural::build_umbral,
        transformable: false,
    },
    CheckDef {
        name: "bchd-vs-log",
        summary: "log(e^{At} e^{Bt}) in the free algebra vs the Lie-bracket series",
        order: 5,
        max_order: 6,
        channels: &[Series],
        envs: &[],
        template: || Relation::Free,
        build: structural::build_bchd,
        transformable: false,
    },
    CheckDef {
        name: "lemma-exist",
        summary: "Psi = e^{(A+B)t} e^{-Bt} is B-free exactly when [B,A] is",
        order: 6,
        max_order: 8,
        channels: &[Series],
        envs: &[
            &[("alpha", 1, 1), ("epsilon", 2, 1), ("lambda", 3, 1), ("h", 1, 1)],
            &[("alpha", -1, 1), ("epsilon", 1, 2), ("lambda", 1, 1), ("h", 2, 1)],
            &[("alpha", 2, 1), ("epsilon", -1, 1), ("lambda", -2, 1), ("h", 1, 2)],
        ],
        template: quadratic::general_relation,
        build: structural::build_exist,
        transformable: false,
    },
    CheckDef {
        name: "prop-psi-lambda",
        summary: "e^{(cA+B)t} = Psi(t)^c e^{Bt} for scalar multiples of A",
        order: 6,
        max_order: 8,
        channels: &[Series, Oracle],
        envs: &[
            &[("c", 2, 1), ("epsilon", 1, 1), ("h", 1, 1)],
            &[("c", 1, 2), ("epsilon", -1, 1), ("h", 2, 1)],
            &[("c", -1, 1), ("epsilon", 2, 1), ("h", 1, 2)],
        ],
        template: || Relation::LeftPoly(mono_sym("epsilon", 1)),
        build: structural::build_psi_lambda,
        transformable: false,
    },
    CheckDef {
        name: "thm-quadratic-mono",
        summary: "monic quadratic commutator: recursive binomial expansion and kernel split",
        order: 8,
        max_order: 10,
        channels: &[Rewriter, Series, Oracle],
        envs: &[
            &[("alpha", -2, 1), ("epsilon", 3, 1)],
            &[("r", 2, 1), ("rho", -1, 1)],
            &[("alpha", -1, 1), ("epsilon", 2, 1)],
            &[("alpha", 6, 1), ("epsilon", -1, 1)],
        ],
        template: quadratic::monic_relation,
        build: quadratic::build_mono,
        transformable: true,
    },
    CheckDef {
        name: "thm-quadratic-general",
        summary: "general quadratic commutator: kernel split with a scalar exponent",
        order: 8,
        max_order: 8,
        channels: &[Series, Oracle],
        envs: &[
            &[("r", 1, 1), ("rho", 2, 1), ("lambda", 2, 1)],
            &[("r", -1, 1), ("rho", 3, 1), ("lambda", 1, 2)],
            &[("r", 2, 1), ("rho", 2, 1), ("lambda", 3, 1)],
            &[("r", 1, 1), ("rho", -2, 1), ("lambda", -2, 1)],
        ],
        template: quadratic::general_relation,
        build: quadratic::build_general,
        transformable: true,
    },
    CheckDef {
        name: "cor-eps0",
        summary: "pure quadratic-with-constant commutator: hyperbolic kernel",
        order: 8,
        max_order: 10,
        channels: &[Series, Oracle],
        envs: &[
            &[("lambda", 1, 1), ("alpha", 4, 1)],
            &[("lambda", 4, 1), ("alpha", 1, 1)],
            &[("lambda", 1, 4), ("alpha", 1, 1)],
            &[("lambda", -1, 1), ("alpha", -4, 1)],
        ],
        template: quadratic::eps0_relation,
        build: quadratic::build_eps0,
        transformable: true,
    },
    CheckDef {
        name: "cor-alpha0",
        summary: "linear-minus-quadratic commutator: Stirling-bracket binomial expansions",
        order: 8,
        max_order: 10,
        channels: &[Rewriter, Series, Oracle],
        envs: &[
            &[("epsilon", 2, 1), ("lambda", 3, 1)],
            &[("epsilon", 1, 1), ("lambda", -2, 1)],
            &[("epsilon", 1, 2), ("lambda", 1, 3)],
            &[("epsilon", 1, 1), ("lambda", 1, 1)],
        ],
        template: quadratic::alpha0_relation,
        build: quadratic::build_alpha0,
        transformable: true,
    },
    CheckDef {
        name: "cor-ore",
        summary: "affine commutator: three-factor exponential split",
        order: 8,
        max_order: 10,
        channels: &[Series, Oracle],
        envs: &[
            &[("alpha", 1, 1), ("epsilon", 1, 1)],
            &[("alpha", 2, 1), ("epsilon", -1, 1)],
            &[("alpha", 1, 2), ("epsilon", 3, 1)],
            &[("alpha", -3, 1), ("epsilon", 2, 1)],
        ],
        template: quadratic::affine_relation,
        build: quadratic::build_ore,
        transformable: true,
    },
    CheckDef {
        name: "example-zass",
        summary: "affine commutator: single-exponential form of e^{At} e^{Bt}",
        order: 8,
        max_order: 10,
        channels: &[Series, Oracle],
        envs: &[
            &[("alpha", 1, 1), ("epsilon", 1, 1)],
            &[("alpha", 2, 1), ("epsilon", -1, 1)],
            &[("alpha", 1, 2), ("epsilon", 3, 1)],
            &[("alpha", -3, 1), ("epsilon", 2, 1)],
        ],
        template: quadratic::affine_relation,
        build: quadratic::build_zass,
        transformable: false,
    },
    CheckDef {
        name: "cor-berry",
        summary: "pure quadratic commutator: bracket-power binomial expansion",
        order: 8,
        max_order: 10,
        channels: &[Rewriter, Series, Oracle],
        envs: &[
            &[("lambda", 2, 1)],
            &[("lambda", 1, 2)],
            &[("lambda", -1, 1)],
            &[("lambda", 1, 1)],
        ],
        template: quadratic::berry_relation,
        build: quadratic::build_berry,
        transformable: true,
    },
    CheckDef {
        name: "cor-sack",
        summary: "linear commutator: Stirling binomial expansion and exponential kernel",
        order: 8,
        max_order: 10,
        channels: &[Rewriter, Series, Oracle],
        envs: &[
            &[("epsilon", 1, 1)],
            &[("epsilon", 2, 1)],
            &[("epsilon", -1, 1)],
            &[("epsilon", 1, 2)],
        ],
        template: quadratic::sack_relation,
        build: quadratic::build_sack,
        transformable: true,
    },
    CheckDef {
        name: "cor-glauber",
        summary: "constant commutator: Gaussian factor joining the exponentials",
        order: 8,
        max_order: 10,
        channels: &[Rewriter, Series, Oracle],
        envs: &[
            &[("alpha", 3, 1)],
            &[("alpha", 1, 1)],
            &[("alpha", -2, 1)],
            &[("alpha", 1, 2)],
        ],
        template: quadratic::glauber_relation,
        build: quadratic::build_glauber,
        transformable: true,
    },
    CheckDef {
        name: "prop-similar-symmetry",
        summary: "mirrored identity: [B,A] = eps B splits with the kernel on the right",
        order: 6,
        max_order: 8,
        channels: &[Series],
        envs: &[
            &[("epsilon", 1, 1)],
            &[("epsilon", 2, 1)],
            &[("epsilon", -1, 1)],
            &[("epsilon", 1, 2)],
        ],
        template: || Relation::RightPoly(mono_sym("epsilon", 1)),
        build: transforms::build_similar_symmetry,
        transformable: false,
    },
    CheckDef {
        name: "prop-similar-antinormal",
        summary: "reversed identity: [B,A] = +lambda A^2 splits with the kernel on the right",
        order: 6,
        max_order: 8,
        channels: &[Series, Oracle],
        envs: &[
            &[("lambda", 2, 1)],
            &[("lambda", 1, 2)],
            &[("lambda", -1, 1)],
            &[("lambda", 1, 1)],
        ],
        template: || Relation::LeftPoly(mono_sym("lambda", 2)),
        build: transforms::build_similar_antinormal,
        transformable: false,
    },
    CheckDef {
        name: "prop-similar-bch",
        summary: "resummed identity: e^{At} e^{Bt} as a kernel in A+B",
        order: 6,
        max_order: 6,
        channels: &[Series],
        envs: &[
            &[("epsilon", 1, 1), ("lambda", 2, 1)],
            &[("epsilon", 2, 1), ("lambda", 3, 1)],
            &[("epsilon", -1, 1), ("lambda", -1, 3)],
            &[("epsilon", 1, 2), ("lambda", -2, 1)],
        ],
        template: bivariate::bivariate_relation,
        build: transforms::build_similar_bch,
        transformable: false,
    },
    CheckDef {
        name: "thm-bivariate",
        summary: "commutator quadratic in A+B: Stirling-cycle binomial expansion",
        order: 6,
        max_order: 6,
        channels: &[Rewriter, Series],
        envs: &[
            &[("epsilon", 1, 1), ("lambda", 2, 1)],
            &[("epsilon", 2, 1), ("lambda", 3, 1)],
            &[("epsilon", -1, 1), ("lambda", -1, 1)],
            &[("epsilon", 1, 3), ("lambda", -1, 2)],
        ],
        template: bivariate::bivariate_relation,
        build: bivariate::build_bivariate,
        transformable: false,
    },
    CheckDef {
        name: "cor-excedance",
        summary: "commutator linear in A+B: interleaving-count binomial expansion",
        order: 6,
        max_order: 6,
        channels: &[Rewriter, Series],
        envs: &[
            &[("epsilon", 1, 1)],
            &[("epsilon", 2, 1)],
            &[("epsilon", -1, 1)],
            &[("epsilon", 1, 2)],
        ],
        template: bivariate::excedance_relation,
        build: bivariate::build_excedance,
        transformable: false,
    },
    CheckDef {
        name: "rosengren",
        summary: "two-sided quadratic commutator: grade-3 normal form and its pole",
        order: 4,
        max_order: 6,
        channels: &[Rewriter],
        envs: &[
            &[("lambda", 1, 1), ("mu", 1, 1)],
            &[("lambda", 1, 1), ("mu", 2, 1)],
            &[("lambda", -1, 1), ("mu", 1, 2)],
            &[("lambda", 2, 1), ("mu", 3, 1)],
        ],
        template: bivariate::rosengren_relation,
        build: bivariate::build_rosengren,
        transformable: false,
    },
    CheckDef {
        name: "viskov-normal",
        summary: "flow solution of exp((f(A)B + g(A))t) over a grid of data",
        order: 6,
        max_order: 6,
        channels: &[Series, Oracle],
        envs: &[
            &[("epsilon", 2, 1), ("lambda", 3, 1), ("h", 1, 1)],
            &[("epsilon", 1, 1), ("lambda", 1, 2), ("h", -1, 1)],
            &[("epsilon", -1, 1), ("lambda", 2, 1), ("h", 1, 2)],
        ],
        template: viskov::representative_relation,
        build: viskov::build_normal,
        transformable: false,
    },
    CheckDef {
        name: "viskov-antinormal",
        summary: "flow solution of exp((A f(B) + g(B))t) over a grid of data",
        order: 6,
        max_order: 6,
        channels: &[Series],
        envs: &[
            &[("epsilon", 2, 1), ("lambda", 3, 1), ("h", 1, 1)],
            &[("epsilon", 1, 1), ("lambda", 1, 2), ("h", -1, 1)],
            &[("epsilon", -1, 1), ("lambda", 2, 1), ("h", 1, 2)],
        ],
        template: viskov::representative_antinormal_relation,
        build: viskov::build_antinormal,
        transformable: false,
    },
    CheckDef {
        name: "viskov-ei",
        summary: "the flow at f = 1, g = x reproduces the kernel split of e^{(A+B)t}",
        order: 6,
        max_order: 6,
        channels: &[Series, Oracle],
        envs: &[
            &[("epsilon", 2, 1), ("lambda", 3, 1), ("h", 1, 1)],
            &[("epsilon", 1, 1), ("lambda", 1, 2), ("h", -1, 1)],
            &[("epsilon", -1, 1), ("lambda", 2, 1), ("h", 1, 2)],
        ],
        template: viskov::representative_relation,
        build: viskov::build_ei,
        transformable: false,
    },
    CheckDef {
        name: "viskov-product",
        summary: "the flow at f = x, g = 0 gives e^{ABt} as a base-to-the-B kernel",
        order: 6,
        max_order: 6,
        channels: &[Series, Oracle],
        envs: &[
            &[("epsilon", 2, 1), ("lambda", 3, 1), ("h", 1, 1)],
            &[("epsilon", 1, 1), ("lambda", 1, 2), ("h", -1, 1)],
            &[("epsilon", -1, 1), ("lambda", 2, 1), ("h", 1, 2)],
        ],
        template: viskov::representative_relation,
        build: viskov::build_product,
        transformable: false,
    },
    CheckDef {
        name: "viskov-ei-antinormal",
        summary: "mirrored flow at f = 1, g = x splits e^{(A+B)t} with the kernel on the right",
        order: 6,
        max_order: 6,
        channels: &[Series],
        envs: &[
            &[("epsilon", 2, 1), ("lambda", 3, 1), ("h", 1, 1)],
            &[("epsilon", 1, 1), ("lambda", 1, 2), ("h", -1, 1)],
            &[("epsilon", -1, 1), ("lambda", 2, 1), ("h", 1, 2)],
        ],
        template: viskov::representative_antinormal_relation,
        build: viskov::build_ei_antinormal,
        transformable: false,
    },
    CheckDef {
        name: "viskov-product-antinormal",
        summary: "mirrored flow at f = x, g = 0 gives e^{ABt} with powers of A outside",
        order: 6,
        max_order: 6,
        channels: &[Series],
        envs: &[
            &[("epsilon", 2, 1), ("lambda", 3, 1), ("h", 1, 1)],
            &[("epsilon", 1, 1), ("lambda", 1, 2), ("h", -1, 1)],
            &[("epsilon", -1, 1), ("lambda", 2, 1), ("h", 1, 2)],
        ],
        template: viskov::representative_antinormal_relation,
        build: viskov::build_product_antinormal,
        transformable: false,
    },
    CheckDef {
        name: "mss-product",
        summary: "(AB)^n under a monomial commutator via generalized Stirling numbers",
        order: 6,
        max_order: 8,
        channels: &[Rewriter, Oracle],
        envs: &[
            &[("s", 0, 1), ("h", 2, 1)],
            &[("s", 1, 1), ("h", 1, 1)],
            &[("s", 2, 1), ("h", -1, 1)],
            &[("s", 1, 2), ("h", 2, 1)],
            &[("s", 1, 1), ("h", 1, 2)],
        ],
        template: monomial::mss_relation,
        build: monomial::build_mss_product,
        transformable: false,
    },
    CheckDef {
        name: "mss-exp",
        summary: "e^{ABt} under a monomial commutator as a disentangled kernel to the B",
        order: 6,
        max_order: 6,
        channels: &[Series, Oracle],
        envs: &[
            &[("s", 0, 1), ("h", 2, 1)],
            &[("s", 1, 1), ("h", 1, 1)],
            &[("s", 2, 1), ("h", -1, 1)],
            &[("s", 1, 2), ("h", 2, 1)],
        ],
        template: monomial::mss_relation,
        build: monomial::build_mss_exp,
        transformable: false,
    },
    CheckDef {
        name: "thm-monomial-bt",
        summary: "binomial expansions and kernel split under [B,A] = h A^{s+1}",
        order: 6,
        max_order: 8,
        channels: &[Rewriter, Series, Oracle],
        envs: &[
            &[("s", -1, 1), ("h", 1, 1)],
            &[("s", 0, 1), ("h", 2, 1)],
            &[("s", 1, 1), ("h", -1, 1)],
            &[("s", 2, 1), ("h", 1, 2)],
        ],
        template: monomial::monomial_bt_relation,
        build: monomial::build_monomial_bt,
        transformable: false,
    },
    CheckDef {
        name: "example-lah",
        summary: "(AB)^n under [B,A] = 2h sqrt(A) with Lah-number coefficients",
        order: 6,
        max_order: 8,
        channels: &[Rewriter],
        envs: &[&[("h", 1, 1)], &[("h", 2, 1)], &[("h", -1, 1)]],
        template: monomial::lah_relation,
        build: monomial::build_lah,
        transformable: false,
    },
    CheckDef {
        name: "example-bessel",
        summary: "cubic commutator: kernel coefficients are Bessel polynomials",
        order: 6,
        max_order: 6,
        channels: &[Rewriter, Series, Oracle],
        envs: &[&[("h", 1, 1)], &[("h", -1, 1)], &[("h", 1, 2)]],
        template: monomial::bessel_relation,
        build: monomial::build_bessel,
        transformable: false,
    },
    CheckDef {
        name: "oracle-concordance",
        summary: "rewriter outputs agree with the differential-operator model on x^m",
        order: 6,
        max_order: 6,
        channels: &[Oracle],
        envs: &[
            &[("alpha", 3, 1), ("epsilon", 2, 1), ("lambda", 1, 1)],
            &[("alpha", 1, 1), ("epsilon", -1, 1), ("lambda", 2, 1)],
            &[("alpha", 1, 2), ("epsilon", 1, 1), ("lambda", 1, 3)],
        ],
        template: quadratic::general_relation,
        build: structural::build_oracle_concordance,
        transformable: false,
    },
];
