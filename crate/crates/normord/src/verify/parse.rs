//! Parser for polynomial expressions in the two generators.
//!
//! Grammar:
//!
//! ```text
//! expr     := term {("+"|"-") term}
//! term     := factor {("*")? factor}
//! factor   := base ["^" exponent]
//! base     := RATIONAL | SYMBOL | "(" expr ")"
//! exponent := RATIONAL | "(" ["-"] RATIONAL ["/" RATIONAL] ")"
//! ```
//!
//! `A` and `B` are the generators; lowercase identifiers are parameters.
//! Juxtaposition and `*` both denote the noncommutative product and
//! preserve the source order of the factors. Exponents on `A` may be any
//! rational; exponents on `B` must be natural numbers.

use crate::combinat::UniPoly;
use crate::error::{Error, Result};
use crate::ncalg::{Gen, NCPoly, Relation};
use crate::scalars::{ParamRat, Rat};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Number(Rat),
    Ident(String),
    Eof,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn err_at(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

impl Lexer {
    fn new(src: &str) -> Result<Lexer> {
        let mut toks = Vec::new();
        let mut line = 1usize;
        let mut col = 1usize;
        let chars: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (tline, tcol) = (line, col);
            let advance = |i: &mut usize, col: &mut usize| {
                *i += 1;
                *col += 1;
            };
            match c {
                '\n' => {
                    i += 1;
                    line += 1;
                    col = 1;
                }
                c if c.is_whitespace() => advance(&mut i, &mut col),
                '+' => {
                    toks.push((Tok::Plus, tline, tcol));
                    advance(&mut i, &mut col);
                }
                '-' => {
                    toks.push((Tok::Minus, tline, tcol));
                    advance(&mut i, &mut col);
                }
                '*' => {
                    toks.push((Tok::Star, tline, tcol));
                    advance(&mut i, &mut col);
                }
                '^' => {
                    toks.push((Tok::Caret, tline, tcol));
                    advance(&mut i, &mut col);
                }
                '(' => {
                    toks.push((Tok::LParen, tline, tcol));
                    advance(&mut i, &mut col);
                }
                ')' => {
                    toks.push((Tok::RParen, tline, tcol));
                    advance(&mut i, &mut col);
                }
                '/' => {
                    // Only meaningful inside a rational literal, which the
                    // digit branch consumes; a bare slash is an error.
                    return Err(err_at(tline, tcol, "unexpected '/'"));
                }
                c if c.is_ascii_digit() => {
                    let mut num = String::new();
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        num.push(chars[i]);
                        advance(&mut i, &mut col);
                    }
                    let n: i64 = num
                        .parse()
                        .map_err(|_| err_at(tline, tcol, "integer literal out of range"))?;
                    // A following '/' digits... extends the literal to a
                    // rational, since the grammar has no division operator.
                    if i < chars.len() && chars[i] == '/' {
                        let mut j = i + 1;
                        let mut den = String::new();
                        while j < chars.len() && chars[j].is_ascii_digit() {
                            den.push(chars[j]);
                            j += 1;
                        }
                        if den.is_empty() {
                            return Err(err_at(line, col, "expected digits after '/'"));
                        }
                        let d: i64 = den
                            .parse()
                            .map_err(|_| err_at(tline, tcol, "integer literal out of range"))?;
                        if d == 0 {
                            return Err(err_at(tline, tcol, "zero denominator"));
                        }
                        col += 1 + den.len();
                        i = j;
                        toks.push((Tok::Number(Rat::new(n, d)), tline, tcol));
                    } else {
                        toks.push((Tok::Number(Rat::from_int(n)), tline, tcol));
                    }
                }
                // Uppercase letters are generator names and lex one at a
                // time, so juxtaposed generators like `AB` read as the
                // product A*B rather than as a single identifier.
                c if c.is_ascii_uppercase() => {
                    toks.push((Tok::Ident(c.to_string()), tline, tcol));
                    advance(&mut i, &mut col);
                }
                c if c.is_ascii_lowercase() || c == '_' => {
                    let mut name = String::new();
                    while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                        name.push(chars[i]);
                        advance(&mut i, &mut col);
                    }
                    toks.push((Tok::Ident(name), tline, tcol));
                }
                other => return Err(err_at(tline, tcol, format!("unexpected character '{other}'"))),
            }
        }
        toks.push((Tok::Eof, line, col));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = self.toks[self.pos];
        (l, c)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            let (l, c) = self.here();
            Err(err_at(l, c, format!("expected {what}")))
        }
    }
}

/// What the variable of a parsed expression may be.
enum Mode {
    /// Generators `A`, `B`; lowercase identifiers are parameters.
    Generators,
    /// The single variable `x`; `A`/`B` are rejected, other identifiers
    /// are parameters.
    Univariate,
}

struct Parser {
    lx: Lexer,
    mode: Mode,
}

impl Parser {
    fn parse_expr(&mut self) -> Result<NCPoly> {
        let mut acc;
        // Leading sign.
        let negate = match self.lx.peek() {
            Tok::Minus => {
                self.lx.bump();
                true
            }
            Tok::Plus => {
                self.lx.bump();
                false
            }
            _ => false,
        };
        acc = self.parse_term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.lx.peek() {
                Tok::Plus => {
                    self.lx.bump();
                    let t = self.parse_term()?;
                    acc = &acc + &t;
                }
                Tok::Minus => {
                    self.lx.bump();
                    let t = self.parse_term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<NCPoly> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.lx.peek() {
                Tok::Star => {
                    self.lx.bump();
                    let f = self.parse_factor()?;
                    acc = free_mul(&acc, &f);
                }
                // Juxtaposition: a new factor begins immediately.
                Tok::Number(_) | Tok::Ident(_) | Tok::LParen => {
                    let f = self.parse_factor()?;
                    acc = free_mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<NCPoly> {
        let (bline, bcol) = self.lx.here();
        let base = self.parse_base()?;
        if *self.lx.peek() != Tok::Caret {
            return Ok(base);
        }
        self.lx.bump();
        let exp = self.parse_exponent()?;
        // Exponentiation applies to a single word or a scalar.
        if exp.is_integer() && !exp.is_negative() {
            let n = exp.to_i64().expect("small natural exponent") as u32;
            let mut acc = NCPoly::one();
            for _ in 0..n {
                acc = free_mul(&acc, &base);
            }
            return Ok(acc);
        }
        // Fractional or negative exponents only make sense on a single
        // generator (rational powers of sums are not polynomials).
        if base.num_terms() == 1 {
            let (w, c) = base.terms().next().expect("one term");
            if c.is_one() {
                if let [(g, e)] = w.blocks() {
                    if e.is_one() {
                        if *g == Gen::B {
                            return Err(Error::ExponentKind(format!(
                                "exponent {exp} on {}: powers of the second generator must be natural",
                                'B'
                            )));
                        }
                        return Ok(NCPoly::gen_pow(*g, exp));
                    }
                }
            }
        }
        Err(err_at(
            bline,
            bcol,
            format!("exponent {exp} requires a single generator base"),
        ))
    }

    fn parse_base(&mut self) -> Result<NCPoly> {
        let (l, c) = self.lx.here();
        match self.lx.bump() {
            Tok::Number(r) => Ok(NCPoly::constant(ParamRat::from_rat(r))),
            Tok::Ident(name) => self.ident_poly(&name, l, c),
            Tok::LParen => {
                let e = self.parse_expr()?;
                self.lx.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(err_at(l, c, "expected a number, identifier, or '('")),
        }
    }

    fn ident_poly(&self, name: &str, l: usize, c: usize) -> Result<NCPoly> {
        match self.mode {
            Mode::Generators => match name {
                "A" => Ok(NCPoly::gen(Gen::A)),
                "B" => Ok(NCPoly::gen(Gen::B)),
                _ if name.chars().next().is_some_and(|ch| ch.is_lowercase() || ch == '_') => {
                    Ok(NCPoly::constant(ParamRat::symbol(name)))
                }
                _ => Err(err_at(
                    l,
                    c,
                    format!("unknown generator '{name}' (generators are A and B)"),
                )),
            },
            Mode::Univariate => match name {
                "x" => Ok(NCPoly::gen(Gen::A)),
                "A" | "B" => Err(err_at(
                    l,
                    c,
                    format!("'{name}' is not allowed here; use the variable 'x'"),
                )),
                _ if name.chars().next().is_some_and(|ch| ch.is_lowercase() || ch == '_') => {
                    Ok(NCPoly::constant(ParamRat::symbol(name)))
                }
                _ => Err(err_at(l, c, format!("unknown identifier '{name}'"))),
            },
        }
    }

    fn parse_exponent(&mut self) -> Result<Rat> {
        let (l, c) = self.lx.here();
        match self.lx.bump() {
            Tok::Number(r) => Ok(r),
            Tok::LParen => {
                let negate = if *self.lx.peek() == Tok::Minus {
                    self.lx.bump();
                    true
                } else {
                    false
                };
                let (l2, c2) = self.lx.here();
                let r = match self.lx.bump() {
                    Tok::Number(r) => r,
                    _ => return Err(err_at(l2, c2, "expected a rational exponent")),
                };
                self.lx.expect(Tok::RParen, "')'")?;
                Ok(if negate { -&r } else { r })
            }
            _ => Err(err_at(l, c, "expected an exponent")),
        }
    }

    fn finish(&mut self, value: NCPoly) -> Result<NCPoly> {
        if *self.lx.peek() == Tok::Eof {
            Ok(value)
        } else {
            let (l, c) = self.lx.here();
            Err(err_at(l, c, "unexpected trailing input"))
        }
    }
}

/// Product in source order with no rewriting and no cap.
fn free_mul(a: &NCPoly, b: &NCPoly) -> NCPoly {
    a.mul_capped(b, None).0
}

/// Parse an expression in the generators `A`, `B` with lowercase
/// parameters. Errors carry the line and column of the offending token.
pub fn parse_expr(src: &str) -> Result<NCPoly> {
    let mut p = Parser {
        lx: Lexer::new(src)?,
        mode: Mode::Generators,
    };
    let e = p.parse_expr()?;
    let e = p.finish(e)?;
    for (w, _) in e.terms() {
        for (g, exp) in w.blocks() {
            if *g == Gen::B && !(exp.is_integer() && !exp.is_negative()) {
                return Err(Error::ExponentKind(format!(
                    "exponent {exp} on B: powers of the second generator must be natural"
                )));
            }
        }
    }
    Ok(e)
}

/// Parse a commutator polynomial and classify it: pure-`A` expressions
/// (including constants) define a relation `[B,A] = p(A)`, pure-`B`
/// expressions define `[B,A] = p(B)`, and anything mixing the two is a
/// bivariate relation (which must have natural exponents and total degree
/// at most two).
pub fn parse_relation(src: &str) -> Result<Relation> {
    classify(parse_expr(src)?)
}

/// Classify a commutator polynomial into the relation kind it defines.
pub(crate) fn classify(e: NCPoly) -> Result<Relation> {
    if !e.contains_gen(Gen::B) {
        return Ok(Relation::LeftPoly(unipoly_of(&e, Gen::A)?));
    }
    if !e.contains_gen(Gen::A) {
        return Ok(Relation::RightPoly(unipoly_of(&e, Gen::B)?));
    }
    Relation::bivariate(e)
}

/// Parse a univariate polynomial in the variable `x` (lowercase
/// identifiers are parameters), as used for the Cauchy-problem data.
pub fn parse_unipoly(src: &str) -> Result<UniPoly> {
    let mut p = Parser {
        lx: Lexer::new(src)?,
        mode: Mode::Univariate,
    };
    let e = p.parse_expr()?;
    let e = p.finish(e)?;
    unipoly_of(&e, Gen::A)
}

/// Parse a rational literal with optional sign, e.g. `-3/4`.
pub fn parse_rat(src: &str) -> Result<Rat> {
    let s = src.trim();
    let (negate, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let mut lx = Lexer::new(rest)?;
    let (l, c) = lx.here();
    let r = match lx.bump() {
        Tok::Number(r) => r,
        _ => return Err(err_at(l, c, "expected a rational number")),
    };
    if *lx.peek() != Tok::Eof {
        let (l, c) = lx.here();
        return Err(err_at(l, c, "unexpected trailing input"));
    }
    Ok(if negate { -&r } else { r })
}

/// View a polynomial whose words are all powers of one generator as a
/// univariate polynomial.
fn unipoly_of(e: &NCPoly, g: Gen) -> Result<UniPoly> {
    let mut p = UniPoly::zero();
    for (w, c) in e.terms() {
        match w.blocks() {
            [] => p.add_term(Rat::zero(), c.clone()),
            [(wg, exp)] if *wg == g => p.add_term(exp.clone(), c.clone()),
            _ => {
                return Err(Error::Unsupported(format!(
                    "expected a polynomial in one generator, found the word {}",
                    w.to_string_with(['A', 'B'], false)
                )))
            }
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::NCWord;
    use crate::scalars::ParamEnv;

    #[test]
    fn parses_relations_with_classification() {
        let r = parse_relation("alpha + epsilon*A - lambda*A^2").unwrap();
        assert_eq!(r.kind(), "left");
        let r = parse_relation("epsilon*B").unwrap();
        assert_eq!(r.kind(), "right");
        let r = parse_relation("lambda*A^2 + mu*B^2").unwrap();
        assert_eq!(r.kind(), "bivariate");
        let r = parse_relation("3/2").unwrap();
        assert_eq!(r.kind(), "left");
    }

    #[test]
    fn juxtaposition_preserves_order() {
        let ab = parse_expr("A B").unwrap();
        let ba = parse_expr("B A").unwrap();
        assert_ne!(ab, ba);
        assert_eq!(ab, parse_expr("A*B").unwrap());
        let w = parse_expr("2 A^2 B A").unwrap();
        let expected = NCPoly::from_terms([(
            NCWord::from_blocks([
                (Gen::A, Rat::from_int(2)),
                (Gen::B, Rat::one()),
                (Gen::A, Rat::one()),
            ]),
            ParamRat::from_int(2),
        )]);
        assert_eq!(w, expected);
    }

    #[test]
    fn rational_exponents_on_a_only() {
        let h = parse_expr("h*A^(1/2)").unwrap();
        assert_eq!(
            h,
            NCPoly::from_terms([(
                NCWord::gen_pow(Gen::A, Rat::new(1, 2)),
                ParamRat::symbol("h")
            )])
        );
        let na = parse_expr("A^(-1)").unwrap();
        assert_eq!(na, NCPoly::gen_pow(Gen::A, Rat::from_int(-1)));
        assert!(matches!(
            parse_expr("B^(1/2)"),
            Err(Error::ExponentKind(_))
        ));
    }

    #[test]
    fn print_parse_round_trip() {
        for src in [
            "A^2 + AB + B^2 + BA",
            "2*A - 3/4*B",
            "alpha + epsilon*A",
            "A^(1/2)B",
        ] {
            let p = parse_expr(src).unwrap();
            let printed = p.to_string_with(['A', 'B'], false);
            let reparsed = parse_expr(&printed).unwrap();
            assert_eq!(p, reparsed, "round-trip of {src} via {printed}");
        }
    }

    #[test]
    fn error_positions() {
        match parse_expr("A + ?") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!((line, col), (1, 5));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_expr("(A + B") {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_expr("A +\nC") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!((line, col), (2, 1));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn unipoly_and_rationals() {
        let p = parse_unipoly("1 + x^2").unwrap();
        assert_eq!(p.coefficient(&Rat::from_int(2)), ParamRat::from_int(1));
        let p = parse_unipoly("epsilon*x - lambda*x^2").unwrap();
        let env = ParamEnv::new()
            .bind("epsilon", Rat::from_int(2))
            .bind("lambda", Rat::from_int(3));
        let q = p.instantiate(&env).unwrap();
        assert_eq!(q.coefficient(&Rat::one()), ParamRat::from_int(2));
        assert!(parse_unipoly("A + x").is_err());

        assert_eq!(parse_rat("-3/4").unwrap(), Rat::new(-3, 4));
        assert_eq!(parse_rat("7").unwrap(), Rat::from_int(7));
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn parenthesized_groups_multiply_in_order() {
        let p = parse_expr("(A + B)(A - B)").unwrap();
        let mut expected = NCPoly::gen_pow(Gen::A, Rat::from_int(2));
        expected.add_term(NCWord::normal(Rat::one(), Rat::one()), -&ParamRat::one());
        expected.add_term(NCWord::antinormal(Rat::one(), Rat::one()), ParamRat::one());
        expected.add_term(NCWord::gen_pow(Gen::B, Rat::from_int(2)), -&ParamRat::one());
        assert_eq!(p, expected);
    }
}
