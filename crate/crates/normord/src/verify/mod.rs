//! A catalog of named identity checks, each verified through independent
//! channels.
//!
//! Every check states an identity — a binomial expansion, a product
//! expansion, or an equality of exponential series — under a commutator
//! relation, and verifies it at one or more parameter environments. Three
//! channels are available:
//!
//! * **rewriter** — both sides are normal-ordered polynomials and must be
//!   identical term by term;
//! * **series** — both sides are truncated series in `t` whose
//!   coefficients are normal-ordered polynomials, compared order by
//!   order;
//! * **oracle** — when the relation has a faithful model as differential
//!   operators on polynomials, both sides are applied to the test
//!   functions `x^m` for `m <= 6` and the resulting polynomials must
//!   agree. This route never touches the rewriting engine, so agreement
//!   is evidence against a structural bug rather than a reproduced one.
//!
//! [`run_check`] runs one catalog entry; [`run_suite`] runs many in
//! parallel with a deterministic report order; [`transform_check`]
//! derives a new check from an existing normal-form exponential identity
//! by mirroring, reversal, or resummation of the two exponentials.

mod checks;
mod parse;
mod support;

pub use parse::{parse_expr, parse_rat, parse_relation, parse_unipoly};
pub use support::{phi_series, psi_b_witness, psi_series, uv_sequences};

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::combinat::UniPoly;
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, NCPoly, Relation};
use crate::oracle::{rep_of, representable_relation, series_apply, XPoly};
use crate::scalars::{ParamEnv, Rat};
use crate::series::{Divergence, TSeries};

/// An independent route for checking a claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Channel {
    /// Term-by-term equality of normal-ordered polynomials.
    Rewriter,
    /// Order-by-order equality of truncated `t`-series.
    Series,
    /// Agreement of both sides as differential operators applied to
    /// `x^m`.
    Oracle,
}

impl std::fmt::Display for Channel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Channel::Rewriter => "rewriter",
            Channel::Series => "series",
            Channel::Oracle => "oracle",
        })
    }
}

/// How to derive a new exponential identity from a base check whose
/// relation is a polynomial in the first generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformMode {
    /// Swap the roles of the generators: `[B,A] = p(B)` with the series
    /// factor moved to the right of `e^{At}`.
    Symmetry,
    /// Negate the relation and move the series factor to the right of
    /// `e^{Bt}`; the transported coefficients are produced by the
    /// order-reversal map.
    Antinormal,
    /// Substitute `A + B` into the negated relation, turning the split
    /// of `e^{(A+B)t}` into a product formula for `e^{At} e^{Bt}`.
    Bch,
}

impl std::fmt::Display for TransformMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TransformMode::Symmetry => "symmetry",
            TransformMode::Antinormal => "antinormal",
            TransformMode::Bch => "bch",
        })
    }
}

/// A single verifiable claim produced by a check builder.
pub(crate) enum Claim {
    /// Two truncated `t`-series that must agree order by order. `oracle`
    /// marks whether the ambient relation has a differential-operator
    /// model, enabling the oracle channel.
    Series {
        label: String,
        oracle: bool,
        lhs: TSeries,
        rhs: TSeries,
    },
    /// Two polynomials that must agree term by term in the given
    /// context.
    Poly {
        label: String,
        oracle: bool,
        ctx: Algebra,
        lhs: NCPoly,
        rhs: NCPoly,
    },
    /// An outcome established by the builder itself (an expected
    /// structural failure, a combinatorial identity, a boolean oracle),
    /// counted on the named channel.
    Witness {
        label: String,
        channel: Channel,
        pass: bool,
        detail: String,
    },
}

/// One runnable check: a named identity, the relation it lives under,
/// the truncation order, one parameter environment, and the channels to
/// verify on.
pub struct IdentityCheck {
    pub name: String,
    pub relation: Relation,
    pub order: usize,
    pub env: ParamEnv,
    pub channels: Vec<Channel>,
    kind: CheckKind,
}

enum CheckKind {
    Catalog(&'static checks::CheckDef),
    Transformed { p: UniPoly, mode: TransformMode },
}

/// The outcome of one check at one environment.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    #[serde(rename = "check")]
    pub name: String,
    pub relation: String,
    pub params: BTreeMap<String, String>,
    pub order: usize,
    pub pass: bool,
    pub first_failure: Option<Divergence>,
    pub elapsed_ms: u64,
    pub seed: u64,
}

impl IdentityCheck {
    /// Build the claims and verify them on every enabled channel.
    pub fn run(&self, seed: u64) -> Report {
        let start = Instant::now();
        let claims = match &self.kind {
            CheckKind::Catalog(def) => (def.build)(&self.env, self.order, seed),
            CheckKind::Transformed { p, mode } => p
                .instantiate(&self.env)
                .and_then(|p| checks::transformed_claims(&p, *mode, self.order)),
        };
        let (pass, first_failure) = match claims {
            Ok(claims) => evaluate(&claims, &self.channels),
            Err(e) => (false, Some(error_divergence(&e))),
        };
        Report {
            name: self.name.clone(),
            relation: self.relation.to_string(),
            params: self
                .env
                .iter()
                .map(|(s, v)| (s.to_string(), v.to_string()))
                .collect(),
            order: self.order,
            pass,
            first_failure,
            elapsed_ms: start.elapsed().as_millis() as u64,
            seed,
        }
    }
}

/// Names of all catalog checks, in catalog order.
pub fn catalog_names() -> Vec<&'static str> {
    checks::CATALOG.iter().map(|d| d.name).collect()
}

/// One-line description of a catalog check, if the name is known.
pub fn check_summary(name: &str) -> Option<&'static str> {
    checks::find(name).map(|d| d.summary)
}

/// Instantiate a catalog check at the given environment (or at its
/// built-in environments when none is given) and run it. Returns one
/// report per environment.
pub fn run_check(
    name: &str,
    env: Option<&ParamEnv>,
    order: Option<usize>,
    seed: u64,
) -> Result<Vec<Report>> {
    let def = checks::find(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    Ok(instances(def, env, order, seed)
        .iter()
        .map(|c| c.run(seed))
        .collect())
}

/// Derive a new exponential-identity check from a catalog entry whose
/// relation is a polynomial in the first generator. The derived check
/// keeps the base check's first built-in environment and runs on the
/// series channel (plus the oracle channel where the target relation
/// has a differential-operator model).
pub fn transform_check(base: &str, mode: TransformMode) -> Result<IdentityCheck> {
    let def = checks::find(base).ok_or_else(|| Error::UnknownCheck(base.to_string()))?;
    if !def.transformable {
        return Err(Error::NotTransformable(format!(
            "{base} is not a normal-form exponential identity"
        )));
    }
    let Relation::LeftPoly(p) = (def.template)() else {
        return Err(Error::NotTransformable(format!(
            "{base} does not have a relation in the first generator alone"
        )));
    };
    let relation = checks::transformed_relation(&p, mode)?;
    let env = def
        .envs
        .first()
        .map(|bindings| build_env(bindings))
        .unwrap_or_default();
    let mut channels = vec![Channel::Series];
    if mode == TransformMode::Antinormal && p.has_natural_exponents() {
        channels.push(Channel::Oracle);
    }
    Ok(IdentityCheck {
        name: format!("{mode}({base})"),
        relation,
        order: def.order.min(6),
        env,
        channels,
        kind: CheckKind::Transformed { p, mode },
    })
}

/// Configuration for [`run_suite`].
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    /// Checks to run; empty means the whole catalog.
    pub names: Vec<String>,
    /// Truncation-order override (clamped per check).
    pub order: Option<usize>,
    /// Parameter override; merged over each check's first built-in
    /// environment, replacing the built-in environment list.
    pub env: Option<ParamEnv>,
    /// Seed for the randomized claims; recorded in every report.
    pub seed: u64,
}

/// Run a set of catalog checks in parallel. Reports come back in a
/// deterministic order: catalog order, then environment order within
/// each check.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<Report>> {
    let defs: Vec<&'static checks::CheckDef> = if cfg.names.is_empty() {
        checks::CATALOG.iter().collect()
    } else {
        cfg.names
            .iter()
            .map(|n| checks::find(n).ok_or_else(|| Error::UnknownCheck(n.clone())))
            .collect::<Result<_>>()?
    };
    let jobs: Vec<IdentityCheck> = defs
        .iter()
        .flat_map(|def| instances(def, cfg.env.as_ref(), cfg.order, cfg.seed))
        .collect();

    let slots: Vec<Mutex<Option<Report>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(jobs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs.len() {
                    break;
                }
                let report = jobs[i].run(cfg.seed);
                *slots[i].lock().expect("report slot") = Some(report);
            });
        }
    });
    Ok(slots
        .into_iter()
        .map(|m| m.into_inner().expect("report slot").expect("report written"))
        .collect())
}

/// The checks a suite run produces for one catalog entry: one per
/// built-in environment, or a single merged environment when the caller
/// supplies bindings.
fn instances(
    def: &'static checks::CheckDef,
    env: Option<&ParamEnv>,
    order: Option<usize>,
    seed: u64,
) -> Vec<IdentityCheck> {
    let _ = seed;
    let order = order.map(|o| o.min(def.max_order)).unwrap_or(def.order);
    let envs: Vec<ParamEnv> = match env {
        Some(overrides) => {
            let mut merged = def.envs.first().map(|b| build_env(b)).unwrap_or_default();
            for (s, v) in overrides.iter() {
                merged.insert(s.name(), v.clone());
            }
            vec![merged]
        }
        None if def.envs.is_empty() => vec![ParamEnv::default()],
        None => def.envs.iter().map(|b| build_env(b)).collect(),
    };
    envs.into_iter()
        .map(|env| IdentityCheck {
            name: def.name.to_string(),
            relation: (def.template)(),
            order,
            env,
            channels: def.channels.to_vec(),
            kind: CheckKind::Catalog(def),
        })
        .collect()
}

fn build_env(bindings: &[(&str, i64, i64)]) -> ParamEnv {
    let mut env = ParamEnv::default();
    for (name, n, d) in bindings {
        env.insert(name, Rat::new(*n, *d));
    }
    env
}

fn error_divergence(e: &Error) -> Divergence {
    Divergence {
        t_order: 0,
        word: "<error>".to_string(),
        lhs: e.to_string(),
        rhs: String::new(),
    }
}

/// Verify every claim on every enabled channel, in order; the first
/// failing claim stops the scan.
fn evaluate(claims: &[Claim], channels: &[Channel]) -> (bool, Option<Divergence>) {
    let on = |c: Channel| channels.contains(&c);
    for claim in claims {
        let outcome = check_claim(claim, &on);
        match outcome {
            Ok(None) => {}
            Ok(Some(d)) => return (false, Some(d)),
            Err(e) => return (false, Some(error_divergence(&e))),
        }
    }
    (true, None)
}

fn check_claim(claim: &Claim, on: &dyn Fn(Channel) -> bool) -> Result<Option<Divergence>> {
    match claim {
        Claim::Series {
            label,
            oracle,
            lhs,
            rhs,
        } => {
            if on(Channel::Series) {
                if let Some(d) = lhs.first_divergence(rhs)? {
                    return Ok(Some(tag(d, Channel::Series, label)));
                }
            }
            if *oracle && on(Channel::Oracle) {
                if let Some(d) = oracle_series(label, lhs, rhs)? {
                    return Ok(Some(d));
                }
            }
            Ok(None)
        }
        Claim::Poly {
            label,
            oracle,
            ctx,
            lhs,
            rhs,
        } => {
            if on(Channel::Rewriter) {
                if let Some(d) = poly_divergence(label, ctx, lhs, rhs)? {
                    return Ok(Some(d));
                }
            }
            if *oracle && on(Channel::Oracle) {
                if let Some(d) = oracle_poly(label, ctx, lhs, rhs)? {
                    return Ok(Some(d));
                }
            }
            Ok(None)
        }
        Claim::Witness {
            label,
            channel,
            pass,
            detail,
        } => {
            if on(*channel) && !pass {
                return Ok(Some(Divergence {
                    t_order: 0,
                    word: format!("[{channel}] {label}"),
                    lhs: detail.clone(),
                    rhs: String::new(),
                }));
            }
            Ok(None)
        }
    }
}

fn tag(mut d: Divergence, channel: Channel, label: &str) -> Divergence {
    d.word = format!("[{channel}] {label}: {}", d.word);
    d
}

/// First word (in canonical order) where two normal-ordered polynomials
/// differ.
fn poly_divergence(
    label: &str,
    ctx: &Algebra,
    lhs: &NCPoly,
    rhs: &NCPoly,
) -> Result<Option<Divergence>> {
    let lhs = ctx.normal_order(lhs)?;
    let rhs = ctx.normal_order(rhs)?;
    let diff = &lhs - &rhs;
    let Some((w, _)) = diff.terms().next() else {
        return Ok(None);
    };
    Ok(Some(Divergence {
        t_order: 0,
        word: format!(
            "[{}] {label}: {}",
            Channel::Rewriter,
            w.to_string_with(ctx.letters(), false)
        ),
        lhs: lhs.coefficient(w).to_string(),
        rhs: rhs.coefficient(w).to_string(),
    }))
}

/// Apply both series to `x^m` for `m <= 6` through the
/// differential-operator model and compare the resulting polynomial
/// tables.
fn oracle_series(label: &str, lhs: &TSeries, rhs: &TSeries) -> Result<Option<Divergence>> {
    for m in 0..=6usize {
        let f = XPoly::monomial(m, Rat::one())?;
        let la = series_apply(lhs, &f)?;
        let ra = series_apply(rhs, &f)?;
        for k in 0..la.len().max(ra.len()) {
            let zero = XPoly::zero();
            let l = la.get(k).unwrap_or(&zero);
            let r = ra.get(k).unwrap_or(&zero);
            if l != r {
                return Ok(Some(Divergence {
                    t_order: k,
                    word: format!("[{}] {label}: applied to x^{m}", Channel::Oracle),
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                }));
            }
        }
    }
    Ok(None)
}

/// Compare both polynomials as differential operators.
fn oracle_poly(
    label: &str,
    ctx: &Algebra,
    lhs: &NCPoly,
    rhs: &NCPoly,
) -> Result<Option<Divergence>> {
    let p = representable_relation(ctx)?;
    let lo = rep_of(lhs, &p)?;
    let ro = rep_of(rhs, &p)?;
    if lo != ro {
        return Ok(Some(Divergence {
            t_order: 0,
            word: format!("[{}] {label}: as differential operators", Channel::Oracle),
            lhs: lo.to_string(),
            rhs: ro.to_string(),
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            run_check("no-such-check", None, None, 0),
            Err(Error::UnknownCheck(_))
        ));
        assert!(matches!(
            transform_check("no-such-check", TransformMode::Symmetry),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn catalog_is_nonempty_and_named_uniquely() {
        let names = catalog_names();
        assert!(names.len() >= 30);
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "duplicate catalog names");
        for name in names {
            assert!(check_summary(name).is_some());
        }
    }

    #[test]
    fn reports_serialize_with_the_fixed_schema() {
        let report = Report {
            name: "example".into(),
            relation: "[B,A] = 1".into(),
            params: BTreeMap::new(),
            order: 4,
            pass: true,
            first_failure: None,
            elapsed_ms: 1,
            seed: 7,
        };
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["check"], "example");
        assert_eq!(json["pass"], true);
        assert!(json["first_failure"].is_null());
        let failure = Divergence {
            t_order: 3,
            word: "AB".into(),
            lhs: "1".into(),
            rhs: "2".into(),
        };
        let json = serde_json::to_value(&failure).unwrap();
        assert_eq!(json["t_order"], 3);
        assert_eq!(json["word"], "AB");
    }
}
