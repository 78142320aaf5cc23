//! Shared generators and property drivers for the integration tests.
//!
//! Polynomials are described by an exponent-agnostic [`PolySpec`] first
//! and realized against a concrete algebra second, so one sampled value
//! can be replayed against every relation with the exponent discipline
//! each relation allows (half-integer powers of `A` under a univariate
//! relation, single letters under a bivariate one).

#![allow(dead_code)]

use normord::ncalg::{l_map, Algebra, Gen, NCPoly, NCWord, Relation};
use normord::scalars::{ParamEnv, ParamRat, Rat};
use normord::series::TSeries;
use normord::verify::parse_relation;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// One monomial: alternating generator blocks with abstract exponent
/// codes `1..=6`, and a rational coefficient `num/den`.
#[derive(Clone, Debug)]
pub struct TermSpec {
    /// `(is_b, code)` per block.
    pub blocks: Vec<(bool, u8)>,
    pub num: i8,
    pub den: u8,
}

pub type PolySpec = Vec<TermSpec>;

/// Parse a relation and bind its parameters to fixed rationals, so the
/// property sweeps run on exact numeric coefficients rather than
/// dragging rational-function arithmetic through thousands of rewrites.
/// The values stay off the singular sets: the conjugation-invariant
/// relations degenerate only at `lambda = 1/k` (here `lambda = 2`) and
/// at `lambda * mu` a positive unit (here the product is `-2`).
fn bound_algebra(src: &str) -> Algebra {
    let ctx = Algebra::new(parse_relation(src).expect("relation parses"));
    let mut env = ParamEnv::new();
    env.insert("alpha", Rat::from_int(2));
    env.insert("epsilon", Rat::from_int(3));
    env.insert("lambda", Rat::from_int(2));
    env.insert("mu", Rat::from_int(-1));
    env.insert("h", Rat::from_int(3));
    ctx.instantiate(&env).expect("numeric instantiation")
}

/// The relations the ordering properties quantify over.
pub fn ordering_relations() -> Vec<(&'static str, Algebra)> {
    [
        "1",
        "alpha + epsilon A - lambda A^2",
        "h A^2",
        "h A^(1/2)",
        "epsilon (A + B) + lambda (A + B)^2",
        "lambda A^2 + mu B^2",
    ]
    .iter()
    .map(|src| (*src, bound_algebra(src)))
    .collect()
}

/// The relations the transpose map is tested under.
pub fn transpose_relations() -> Vec<(&'static str, Algebra)> {
    ["1", "epsilon A", "-lambda A^2"]
        .iter()
        .map(|src| (*src, bound_algebra(src)))
        .collect()
}

/// Turn a spec into a polynomial legal for `ctx`. Under a univariate
/// relation the `A`-exponent code means `code/2` (so `1/2..=3` in half
/// steps); everywhere else codes map to `1..=3`. Bivariate words are
/// flattened to letters and capped at total degree 3.
pub fn realize(spec: &PolySpec, ctx: &Algebra) -> NCPoly {
    let relation = ctx.relation();
    let mut out = NCPoly::zero();
    for term in spec {
        let coeff = ParamRat::from_rat(Rat::new(term.num as i64, term.den as i64));
        let word = match relation {
            Relation::Bivariate(_) => {
                let mut letters = Vec::new();
                for &(is_b, code) in &term.blocks {
                    let g = if is_b { Gen::B } else { Gen::A };
                    for _ in 0..natural(code) {
                        if letters.len() < 3 {
                            letters.push(g);
                        }
                    }
                }
                NCWord::from_letters(&letters)
            }
            _ => NCWord::from_blocks(term.blocks.iter().map(|&(is_b, code)| {
                if is_b {
                    (Gen::B, Rat::from_int(natural(code)))
                } else {
                    // Half-integer exponents exercise the chain-rule
                    // branch of the univariate rewriter.
                    (Gen::A, Rat::new(code as i64, 2))
                }
            })),
        };
        out.add_term(word, coeff);
    }
    out
}

fn natural(code: u8) -> i64 {
    ((code as i64) + 1) / 2
}

pub fn sample_spec(rng: &mut ChaCha8Rng) -> PolySpec {
    let terms = rng.gen_range(1..=3);
    (0..terms)
        .map(|_| TermSpec {
            blocks: (0..rng.gen_range(0..=3usize))
                .map(|_| (rng.gen_bool(0.5), rng.gen_range(1..=6)))
                .collect(),
            num: rng.gen_range(-3..=3),
            den: rng.gen_range(1..=3),
        })
        .collect()
}

/// `normal_order` lands on the normal basis and is a projection.
pub fn check_idempotence(label: &str, ctx: &Algebra, x: &NCPoly) -> Result<(), String> {
    let once = ctx
        .normal_order(x)
        .map_err(|e| format!("[{label}] ordering {}: {e}", ctx.render(x, false)))?;
    for (w, _) in once.terms() {
        if !w.is_normal() {
            return Err(format!(
                "[{label}] non-normal word {} survived ordering of {}",
                w,
                ctx.render(x, false)
            ));
        }
    }
    let twice = ctx
        .normal_order(&once)
        .map_err(|e| format!("[{label}] re-ordering: {e}"))?;
    if once != twice {
        return Err(format!(
            "[{label}] ordering is not idempotent on {}: {} vs {}",
            ctx.render(x, false),
            ctx.render(&once, false),
            ctx.render(&twice, false)
        ));
    }
    Ok(())
}

/// Ordering the free product equals ordering the product of orderings.
pub fn check_multiplicativity(
    label: &str,
    ctx: &Algebra,
    x: &NCPoly,
    y: &NCPoly,
) -> Result<(), String> {
    let direct = ctx
        .normal_order(&(x * y))
        .map_err(|e| format!("[{label}] ordering product: {e}"))?;
    let nx = ctx.normal_order(x).map_err(|e| format!("[{label}] {e}"))?;
    let ny = ctx.normal_order(y).map_err(|e| format!("[{label}] {e}"))?;
    let via = ctx
        .normal_order(&(&nx * &ny))
        .map_err(|e| format!("[{label}] ordering ordered product: {e}"))?;
    if direct != via {
        return Err(format!(
            "[{label}] ordering is not multiplicative on {} and {}",
            ctx.render(x, false),
            ctx.render(y, false)
        ));
    }
    Ok(())
}

/// The transpose map reverses products: `L(xy) = L(y) L(x)`.
pub fn check_transpose_pair(
    label: &str,
    ctx: &Algebra,
    x: &NCPoly,
    y: &NCPoly,
) -> Result<(), String> {
    let (lxy, image) = l_map(&(x * y), ctx).map_err(|e| format!("[{label}] L(xy): {e}"))?;
    let (lx, _) = l_map(x, ctx).map_err(|e| format!("[{label}] L(x): {e}"))?;
    let (ly, _) = l_map(y, ctx).map_err(|e| format!("[{label}] L(y): {e}"))?;
    let reversed = image
        .normal_order(&(&ly * &lx))
        .map_err(|e| format!("[{label}] ordering L(y)L(x): {e}"))?;
    if lxy != reversed {
        return Err(format!(
            "[{label}] L(xy) != L(y)L(x) for x = {}, y = {}",
            ctx.render(x, false),
            ctx.render(y, false)
        ));
    }
    Ok(())
}

/// The algebras the series round-trips run over.
pub fn series_relations() -> Vec<(&'static str, Algebra)> {
    ["1", "epsilon A"]
        .iter()
        .map(|src| (*src, bound_algebra(src)))
        .collect()
}

/// A series with the given constant coefficient and small random
/// natural-exponent coefficients above it.
pub fn sample_series(
    rng: &mut ChaCha8Rng,
    ctx: &Algebra,
    order: usize,
    constant: NCPoly,
) -> TSeries {
    TSeries::from_fn(ctx, order, |k| {
        if k == 0 {
            return constant.clone();
        }
        let mut c = NCPoly::zero();
        for _ in 0..rng.gen_range(1..=2usize) {
            let word = NCWord::from_blocks([
                (Gen::A, Rat::from_int(rng.gen_range(0..=1))),
                (Gen::B, Rat::from_int(rng.gen_range(0..=1))),
            ]);
            c.add_term(
                word,
                ParamRat::from_rat(Rat::new(rng.gen_range(-2..=2), rng.gen_range(1..=2))),
            );
        }
        c
    })
    .expect("sampled series is legal")
}

/// `log(exp(s)) == s` and `exp(log(u)) == u` at the sampled arguments.
pub fn check_exp_log(
    label: &str,
    ctx: &Algebra,
    order: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    let s = sample_series(rng, ctx, order, NCPoly::zero());
    let back = s
        .exp()
        .and_then(|e| e.log())
        .map_err(|e| format!("[{label}] log(exp: {e}"))?;
    if let Some(d) = s.first_divergence(&back).map_err(|e| e.to_string())? {
        return Err(format!("[{label}] log(exp(s)) != s at t^{}", d.t_order));
    }
    let u = sample_series(rng, ctx, order, NCPoly::one());
    let forth = u
        .log()
        .and_then(|l| l.exp())
        .map_err(|e| format!("[{label}] exp(log: {e}"))?;
    if let Some(d) = u.first_divergence(&forth).map_err(|e| e.to_string())? {
        return Err(format!("[{label}] exp(log(u)) != u at t^{}", d.t_order));
    }
    Ok(())
}

/// Scalar powers: the binomial route (checked internally against the
/// exp-log route on every call) must also satisfy the exponent laws.
pub fn check_pow_scalar(
    label: &str,
    ctx: &Algebra,
    order: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    let u = sample_series(rng, ctx, order, NCPoly::one());
    let c1 = ParamRat::from_rat(Rat::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
    let c2 = ParamRat::from_rat(Rat::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
    let p1 = u.pow_scalar(&c1).map_err(|e| format!("[{label}] {e}"))?;
    let p2 = u.pow_scalar(&c2).map_err(|e| format!("[{label}] {e}"))?;
    let sum = u
        .pow_scalar(&(&c1 + &c2))
        .map_err(|e| format!("[{label}] {e}"))?;
    let product = p1.mul(&p2).map_err(|e| format!("[{label}] {e}"))?;
    if let Some(d) = sum.first_divergence(&product).map_err(|e| e.to_string())? {
        return Err(format!(
            "[{label}] u^c1 u^c2 != u^(c1+c2) at t^{} for c1 = {c1}, c2 = {c2}",
            d.t_order
        ));
    }
    let square = u
        .pow_scalar(&ParamRat::from_int(2))
        .map_err(|e| format!("[{label}] {e}"))?;
    let direct = u.mul(&u).map_err(|e| format!("[{label}] {e}"))?;
    if square.first_divergence(&direct).map_err(|e| e.to_string())?.is_some() {
        return Err(format!("[{label}] u^2 != u * u"));
    }
    Ok(())
}
