//! Command-line front end: Stirling-family numbers, normal ordering
//! under a chosen commutator relation, binomial and product-power
//! expansions, exponential-identity kernels, the BCH series, the
//! operator Cauchy problem, and the identity-check catalog.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use normord::combinat::{gen_stirling, lah, stirling1, stirling1_unsigned, stirling2};
use normord::ncalg::{Algebra, Basis, Gen};
use normord::scalars::{ParamEnv, Rat};
use normord::series::{bch_log, Divergence, TSeries};
use normord::verify::{
    parse_expr, parse_rat, parse_relation, parse_unipoly, psi_b_witness, psi_series, run_suite,
    Report, SuiteConfig,
};
use normord::viskov::{
    phi_gamma, solve_alpha, viskov_antinormal_check, viskov_check, CauchyProblem,
};
use normord::{Error, Result};

#[derive(Parser)]
#[command(
    name = "normord",
    version,
    about = "Exact normal ordering and identity verification for two-generator algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum StirlingKind {
    /// Signed Stirling numbers of the first kind.
    S1,
    /// Unsigned Stirling numbers of the first kind.
    S1u,
    /// Stirling numbers of the second kind.
    S2,
    /// Lah numbers.
    Lah,
    /// Generalized Stirling numbers at exponent `s` (requires --s).
    Gen,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum BasisArg {
    /// Every `A` to the left of every `B`.
    #[default]
    Normal,
    /// Every `B` to the left of every `A`.
    Antinormal,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a Stirling-family number.
    Stirling {
        #[arg(long, value_enum)]
        kind: StirlingKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: i64,
        /// Exponent for the generalized numbers, e.g. `1/2`.
        #[arg(long, required_if_eq("kind", "gen"))]
        s: Option<String>,
    },

    /// Reorder an expression in A and B under `[B,A] = RELATION`.
    NormalOrder {
        /// Expression to reorder, e.g. `"B A^2 + 3 A B"`.
        expr: String,
        /// The commutator polynomial, e.g. `"epsilon A - lambda A^2"`.
        #[arg(long)]
        relation: String,
        #[arg(long, value_enum, default_value_t)]
        basis: BasisArg,
        /// Total-degree cap on intermediate words.
        #[arg(long)]
        max_degree: Option<usize>,
    },

    /// Expand `(A+B)^n` in normal order.
    Binomial {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        relation: String,
    },

    /// Expand `(AB)^n` in normal order.
    ProductPower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        relation: String,
    },

    /// The kernel `Psi(t)` with `exp((A+B)t) = Psi(t) exp(Bt)`, printed
    /// one `t`-coefficient per line.
    ExpIdentity {
        #[arg(long)]
        relation: String,
        #[arg(long)]
        order: usize,
    },

    /// The series `log(exp(Xt) exp(Yt))` in the free algebra.
    Bch {
        #[arg(long)]
        order: usize,
    },

    /// Solve the flow problem for `exp((f(A)B + g(A))t)` and test the
    /// resulting product form.
    Viskov {
        /// Commutator polynomial `p` with `[B,A] = p(A)`.
        #[arg(long)]
        p: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        order: usize,
        /// Mirror the problem: initial value `B`, kernel on the left.
        #[arg(long)]
        antinormal: bool,
    },

    /// Run named identity checks, or the whole catalog.
    Verify {
        /// A catalog entry to run; repeatable.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Run the complete catalog (the default when no --check is given).
        #[arg(long, value_parser = ["all"])]
        suite: Option<String>,
        /// Truncation-order override, clamped per check.
        #[arg(long)]
        order: Option<usize>,
        /// Parameter override as NAME=VALUE; repeatable. Replaces each
        /// check's built-in environment list.
        #[arg(long = "param", value_parser = param_value)]
        params: Vec<(String, Rat)>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn param_value(s: &str) -> std::result::Result<(String, Rat), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let value = parse_rat(value.trim()).map_err(|e| e.to_string())?;
    Ok((name.trim().to_string(), value))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::UnknownCheck(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

/// Dispatch; `Ok(false)` means the command ran but a check failed.
fn run(cli: &Cli) -> Result<bool> {
    let latex = cli.format == Format::Latex;
    match &cli.command {
        Command::Stirling { kind, n, k, s } => {
            let value = match kind {
                StirlingKind::S1 => stirling1(*n, *k),
                StirlingKind::S1u => stirling1_unsigned(*n, *k),
                StirlingKind::S2 => stirling2(*n, *k),
                StirlingKind::Lah => lah(*n, *k),
                StirlingKind::Gen => {
                    let s = parse_rat(s.as_deref().expect("required by clap"))?;
                    gen_stirling(&s, *n, *k)
                }
            };
            match cli.format {
                Format::Text => println!("{value}"),
                Format::Latex => println!("{}", value.latex()),
                Format::Json => println!("{}", json!({ "value": value.to_string() })),
            }
            Ok(true)
        }

        Command::NormalOrder {
            expr,
            relation,
            basis,
            max_degree,
        } => {
            let mut ctx = Algebra::new(parse_relation(relation)?);
            if matches!(basis, BasisArg::Antinormal) {
                ctx = ctx.with_basis(Basis::Antinormal);
            }
            if max_degree.is_some() {
                ctx = ctx.with_cap(*max_degree);
            }
            let ordered = ctx.normal_order(&parse_expr(expr)?)?;
            print_poly(cli.format, &ctx, &ordered);
            Ok(true)
        }

        Command::Binomial { n, relation } => {
            let ctx = Algebra::new(parse_relation(relation)?);
            let p = ctx.binomial_power(*n)?;
            print_poly(cli.format, &ctx, &p);
            Ok(true)
        }

        Command::ProductPower { n, relation } => {
            let ctx = Algebra::new(parse_relation(relation)?);
            let p = ctx.product_power(*n)?;
            print_poly(cli.format, &ctx, &p);
            Ok(true)
        }

        Command::ExpIdentity { relation, order } => {
            let ctx = Algebra::new(parse_relation(relation)?);
            let psi = psi_series(&ctx, *order)?;
            let witness = psi_b_witness(&psi);
            match cli.format {
                Format::Json => {
                    let coeffs: Vec<String> =
                        (0..=*order).map(|k| ctx.render(psi.coeff(k), false)).collect();
                    println!(
                        "{}",
                        json!({ "coefficients": coeffs, "pure": witness.is_none() })
                    );
                }
                _ => {
                    print_series(&psi, *order, latex);
                    if let Some((k, word)) = witness {
                        println!("note: the t^{k} coefficient retains B ({word}); no kernel in A alone exists");
                    }
                }
            }
            Ok(true)
        }

        Command::Bch { order } => {
            let z = bch_log(*order)?;
            match cli.format {
                Format::Json => {
                    let coeffs: Vec<String> = (0..=*order)
                        .map(|k| z.ctx().render(z.coeff(k), false))
                        .collect();
                    println!("{}", json!({ "coefficients": coeffs }));
                }
                _ => print_series(&z, *order, latex),
            }
            Ok(true)
        }

        Command::Viskov {
            p,
            f,
            g,
            order,
            antinormal,
        } => {
            let mut cp = CauchyProblem::new(
                parse_unipoly(p)?,
                parse_unipoly(f)?,
                parse_unipoly(g)?,
                *order,
            );
            let var = if *antinormal { "B" } else { "A" };
            if *antinormal {
                cp = cp.with_initial(Gen::B);
            }
            let alpha = solve_alpha(&cp);
            let (phi, gamma) = phi_gamma(&cp);
            let failure = if *antinormal {
                viskov_antinormal_check(&cp)?
            } else {
                viskov_check(&cp)?
            };
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "alpha": alpha.to_string_with(var, false),
                        "phi": phi.to_string_with(var, false),
                        "gamma": gamma.to_string_with(var, false),
                        "pass": failure.is_none(),
                        "first_failure": failure,
                    })
                ),
                _ => {
                    println!("alpha: {}", alpha.to_string_with(var, latex));
                    println!("phi:   {}", phi.to_string_with(var, latex));
                    println!("gamma: {}", gamma.to_string_with(var, latex));
                    match &failure {
                        None => println!("identity: pass"),
                        Some(d) => println!("identity: FAIL {}", divergence_line(d)),
                    }
                }
            }
            Ok(failure.is_none())
        }

        Command::Verify {
            checks,
            suite,
            order,
            params,
            seed,
        } => {
            let names = if suite.is_some() { Vec::new() } else { checks.clone() };
            let env = if params.is_empty() {
                None
            } else {
                let mut env = ParamEnv::new();
                for (name, value) in params {
                    env.insert(name, value.clone());
                }
                Some(env)
            };
            let reports = run_suite(&SuiteConfig {
                names,
                order: *order,
                env,
                seed: *seed,
            })?;
            let all_pass = reports.iter().all(|r| r.pass);
            if cli.format == Format::Json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
            } else {
                for r in &reports {
                    println!("{}", report_line(r));
                }
                println!(
                    "{} of {} reports passed",
                    reports.iter().filter(|r| r.pass).count(),
                    reports.len()
                );
            }
            Ok(all_pass)
        }
    }
}

fn print_poly(format: Format, ctx: &Algebra, p: &normord::ncalg::NCPoly) {
    match format {
        Format::Text => println!("{}", ctx.render(p, false)),
        Format::Latex => println!("{}", ctx.render(p, true)),
        Format::Json => println!("{}", json!({ "result": ctx.render(p, false) })),
    }
}

fn print_series(s: &TSeries, order: usize, latex: bool) {
    for k in 0..=order {
        if latex {
            println!("t^{{{k}}}: {}", s.ctx().render(s.coeff(k), true));
        } else {
            println!("t^{k}: {}", s.ctx().render(s.coeff(k), false));
        }
    }
}

fn divergence_line(d: &Divergence) -> String {
    format!(
        "at t^{} on {}: lhs {} vs rhs {}",
        d.t_order, d.word, d.lhs, d.rhs
    )
}

fn report_line(r: &Report) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut line = format!(
        "{}  {:<28} order {:<2} [{}]  {} ms",
        if r.pass { "pass" } else { "FAIL" },
        r.name,
        r.order,
        params.join(", "),
        r.elapsed_ms
    );
    if let Some(d) = &r.first_failure {
        line.push_str(&format!("\n      {}", divergence_line(d)));
    }
    line
}
