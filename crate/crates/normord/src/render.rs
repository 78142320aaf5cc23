//! Plain-text and LaTeX rendering helpers shared across the crate.
//!
//! Every algebraic type implements `Display` for terminal output; the
//! `latex` renderings are used by the CLI's `--format latex` mode. Greek
//! parameter names are translated to the corresponding LaTeX commands.

use crate::ncalg::NCPoly;
use crate::scalars::{ParamPoly, ParamRat, Rat};

const GREEK: &[&str] = &[
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "iota", "kappa", "lambda", "mu", "nu", "xi", "pi", "rho", "sigma", "tau",
    "upsilon", "phi", "chi", "psi", "omega",
];

/// LaTeX form of a parameter name (`lambda` -> `\lambda`, `h` -> `h`).
pub fn symbol_latex(name: &str) -> String {
    if GREEK.contains(&name) {
        format!("\\{name}")
    } else {
        name.to_string()
    }
}

/// Coefficient prefix for a term: empty / `-` for 1 and -1, otherwise the
/// magnitude followed by the separator.
fn coeff_prefix(c: &Rat, sep: &str, latex: bool) -> (bool, String) {
    let neg = c.is_negative();
    let mag = c.abs();
    let body = if mag.is_one() {
        String::new()
    } else if latex {
        format!("{}{sep}", mag.latex())
    } else {
        format!("{mag}{sep}")
    };
    (neg, body)
}

/// Render a parameter polynomial, terms in descending canonical order.
pub fn poly_to_string(p: &ParamPoly, latex: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (i, (m, c)) in terms.iter().rev().enumerate() {
        let unit = m.is_unit();
        let (neg, prefix) = coeff_prefix(c, if latex { " " } else { "*" }, latex);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if unit {
            // Pure constant: always print the magnitude.
            let mag = c.abs();
            out.push_str(&if latex { mag.latex() } else { mag.to_string() });
        } else {
            out.push_str(&prefix);
            if latex {
                for (s, e) in m.factors() {
                    if e == 1 {
                        out.push_str(&symbol_latex(s.name()));
                    } else {
                        out.push_str(&format!("{}^{{{e}}}", symbol_latex(s.name())));
                    }
                }
            } else {
                out.push_str(&m.to_string());
            }
        }
    }
    out
}

/// Sign and magnitude of a term coefficient, for assembling sums. The
/// magnitude comes back as `"1"` when the coefficient is ±1 so callers can
/// elide it next to a nontrivial monomial part.
pub(crate) fn term_prefix(c: &ParamRat, latex: bool) -> (bool, String) {
    if let Some(r) = c.as_rat() {
        let neg = r.is_negative();
        let mag = r.abs();
        (neg, if latex { mag.latex() } else { mag.to_string() })
    } else if c.denominator().is_one() && c.numerator().terms().count() == 1 {
        // Single-term polynomial: pull the sign out of its coefficient.
        let (m, k) = c.numerator().terms().next().unwrap();
        let neg = k.is_negative();
        let mono = ParamRat::from_poly(ParamPoly::from_terms([(m.clone(), k.abs())]));
        (neg, if latex { mono.latex() } else { mono.to_string() })
    } else if latex {
        (false, c.latex())
    } else {
        (false, format!("({c})"))
    }
}

/// Render a noncommutative polynomial with the given generator letters,
/// terms in descending canonical order.
pub fn ncpoly_to_string(p: &NCPoly, letters: [char; 2], latex: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (i, (w, c)) in terms.iter().rev().enumerate() {
        let (neg, mag) = term_prefix(c, latex);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if w.is_one() {
            out.push_str(&mag);
        } else {
            let ws = w.to_string_with(letters, latex);
            if mag == "1" {
                out.push_str(&ws);
            } else {
                out.push_str(&mag);
                out.push_str(if latex { " " } else { "*" });
                out.push_str(&ws);
            }
        }
    }
    out
}
