//! A two-generator algebra: a commutation relation plus ordering policy.

use std::cell::RefCell;
use std::fmt;

use crate::combinat::UniPoly;
use crate::error::{Error, Result};
use crate::scalars::{ParamEnv, ParamRat};

use super::bivariate::{bivariate_normal_order, GradeTable};
use super::poly::NCPoly;
use super::relation::Relation;
use super::rewrite;
use super::word::{Gen, NCWord};

/// Which side the `A`-powers are collected on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Basis {
    /// `A`-powers to the left: normal forms `A^i B^j`.
    #[default]
    Normal,
    /// `B`-powers to the left: normal forms `B^j A^i`.
    Antinormal,
}

/// Relation, target basis, and optional total-degree cap for products.
///
/// The bivariate grade tables are memoized per instance, so an `Algebra`
/// is cheap to query repeatedly but is not `Sync`; each worker thread gets
/// its own (cheaply cloned) instance.
#[derive(Clone, Debug)]
pub struct Algebra {
    relation: Relation,
    basis: Basis,
    cap: Option<usize>,
    letters: [char; 2],
    tables: RefCell<Vec<GradeTable>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.relation == other.relation && self.basis == other.basis && self.cap == other.cap
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(relation: Relation) -> Self {
        Algebra {
            relation,
            basis: Basis::Normal,
            cap: None,
            letters: ['A', 'B'],
            tables: RefCell::new(Vec::new()),
        }
    }

    /// Free algebra truncated at the given total degree.
    pub fn free(cap: usize) -> Self {
        Algebra::new(Relation::Free).with_cap(Some(cap))
    }

    /// `[B, A] = p(A)`.
    pub fn left_poly(p: UniPoly) -> Self {
        Algebra::new(Relation::LeftPoly(p))
    }

    /// `[B, A] = p(B)`.
    pub fn right_poly(p: UniPoly) -> Self {
        Algebra::new(Relation::RightPoly(p))
    }

    /// `[B, A] = q(A, B)`, validating the degree and exponent bounds.
    pub fn bivariate(q: NCPoly) -> Result<Self> {
        Ok(Algebra::new(Relation::bivariate(q)?))
    }

    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn with_cap(mut self, cap: Option<usize>) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_letters(mut self, letters: [char; 2]) -> Self {
        self.letters = letters;
        self
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    pub fn letters(&self) -> [char; 2] {
        self.letters
    }

    /// Bind relation parameters; the memo table starts fresh.
    pub fn instantiate(&self, env: &ParamEnv) -> Result<Algebra> {
        Ok(Algebra {
            relation: self.relation.instantiate(env)?,
            basis: self.basis,
            cap: self.cap,
            letters: self.letters,
            tables: RefCell::new(Vec::new()),
        })
    }

    /// Rewrite `x` into the target basis: every word becomes `A^i B^j`
    /// (normal) or `B^j A^i` (antinormal), with coefficients in the
    /// two-sided ideal sense uniquely determined by the relation.
    pub fn normal_order(&self, x: &NCPoly) -> Result<NCPoly> {
        self.relation.validate_poly(x)?;
        match (&self.relation, self.basis) {
            (Relation::Free, _) => Ok(x.clone()),
            (Relation::LeftPoly(p), Basis::Normal) => rewrite::left_poly_normal(p, x),
            (Relation::LeftPoly(p), Basis::Antinormal) => rewrite::left_poly_antinormal(p, x),
            (Relation::RightPoly(p), Basis::Normal) => rewrite::right_poly_normal(p, x),
            (Relation::RightPoly(p), Basis::Antinormal) => rewrite::right_poly_antinormal(p, x),
            (Relation::Bivariate(q), Basis::Normal) => {
                let mut tables = self.tables.borrow_mut();
                bivariate_normal_order(q, x, &mut tables)
            }
            (Relation::Bivariate(_), Basis::Antinormal) => Err(Error::Unsupported(
                "antinormal ordering under a bivariate relation".into(),
            )),
        }
    }

    /// Free concatenation product, truncated at the degree cap; the flag
    /// reports whether any word was dropped.
    pub fn mul_flagged(&self, x: &NCPoly, y: &NCPoly) -> Result<(NCPoly, bool)> {
        self.relation.validate_poly(x)?;
        self.relation.validate_poly(y)?;
        Ok(x.mul_capped(y, self.cap))
    }

    /// Free concatenation product (truncated, flag discarded).
    pub fn mul(&self, x: &NCPoly, y: &NCPoly) -> Result<NCPoly> {
        Ok(self.mul_flagged(x, y)?.0)
    }

    /// Product followed by normal ordering.
    pub fn mul_ordered(&self, x: &NCPoly, y: &NCPoly) -> Result<NCPoly> {
        let p = self.mul(x, y)?;
        self.normal_order(&p)
    }

    /// `normal_order(x^n)`, ordering after each factor to keep terms small.
    pub fn pow_ordered(&self, x: &NCPoly, n: usize) -> Result<NCPoly> {
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = self.mul_ordered(&acc, x)?;
        }
        Ok(acc)
    }

    /// `[x, y] = normal_order(xy - yx)`.
    pub fn commutator(&self, x: &NCPoly, y: &NCPoly) -> Result<NCPoly> {
        let xy = self.mul(x, y)?;
        let yx = self.mul(y, x)?;
        self.normal_order(&(&xy - &yx))
    }

    /// Iterated adjoint `ad_B^k(x) = [B, [B, ... [B, x]]]`.
    pub fn adjoint_pow(&self, k: usize, x: &NCPoly) -> Result<NCPoly> {
        let b = NCPoly::gen(Gen::B);
        let mut acc = self.normal_order(x)?;
        for _ in 0..k {
            acc = self.commutator(&b, &acc)?;
        }
        Ok(acc)
    }

    /// `normal_order((A + B)^n)`.
    pub fn binomial_power(&self, n: usize) -> Result<NCPoly> {
        let s = &NCPoly::gen(Gen::A) + &NCPoly::gen(Gen::B);
        self.pow_ordered(&s, n)
    }

    /// `normal_order((AB)^n)`.
    pub fn product_power(&self, n: usize) -> Result<NCPoly> {
        let ab = NCPoly::term(
            NCWord::from_letters(&[Gen::A, Gen::B]),
            ParamRat::one(),
        );
        self.pow_ordered(&ab, n)
    }

    pub fn render(&self, x: &NCPoly, latex: bool) -> String {
        x.to_string_with(self.letters, latex)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.relation)?;
        if self.basis == Basis::Antinormal {
            write!(f, " (antinormal)")?;
        }
        if let Some(cap) = self.cap {
            write!(f, " (degree cap {cap})")?;
        }
        Ok(())
    }
}

/// Sum of all `C(i+j, i)` interleavings of `i` copies of `A` and `j`
/// copies of `B`, each with coefficient 1. Summed over `i + j = n` this is
/// the free expansion of `(A + B)^n`.
pub fn all_orderings(i: usize, j: usize) -> NCPoly {
    fn rec(i: usize, j: usize, prefix: &mut Vec<Gen>, out: &mut NCPoly) {
        if i == 0 && j == 0 {
            out.add_term(NCWord::from_letters(prefix), ParamRat::one());
            return;
        }
        if i > 0 {
            prefix.push(Gen::A);
            rec(i - 1, j, prefix, out);
            prefix.pop();
        }
        if j > 0 {
            prefix.push(Gen::B);
            rec(i, j - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = NCPoly::zero();
    rec(i, j, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rat;

    fn a() -> NCPoly {
        NCPoly::gen(Gen::A)
    }

    fn b() -> NCPoly {
        NCPoly::gen(Gen::B)
    }

    fn ba() -> NCPoly {
        &b() * &a()
    }

    /// `[B, A] = alpha` (symbolic Weyl relation).
    fn weyl_symbolic() -> Algebra {
        Algebra::left_poly(UniPoly::constant(ParamRat::symbol("alpha")))
    }

    /// `[B, A] = 1`.
    fn weyl() -> Algebra {
        Algebra::left_poly(UniPoly::one())
    }

    #[test]
    fn defining_relation() {
        let alg = weyl_symbolic();
        let got = alg.normal_order(&ba()).unwrap();
        assert_eq!(got.to_string(), "AB + alpha");
    }

    #[test]
    fn repeated_rewriting() {
        // B^2 A^2 with [B, A] = 1.
        let x = &(&b() * &b()) * &(&a() * &a());
        let got = weyl().normal_order(&x).unwrap();
        assert_eq!(got.to_string(), "A^2B^2 + 4*AB + 2");
    }

    #[test]
    fn fractional_exponent_block() {
        // B * A^(1/2) with [B, A] = h A^(1/2)  ->  A^(1/2) B + h/2.
        let p = UniPoly::monomial(Rat::new(1, 2), ParamRat::symbol("h"));
        let alg = Algebra::left_poly(p);
        let x = &b() * &NCPoly::gen_pow(Gen::A, Rat::new(1, 2));
        let got = alg.normal_order(&x).unwrap();
        let mut want = NCPoly::term(
            NCWord::normal(Rat::new(1, 2), Rat::one()),
            ParamRat::one(),
        );
        want.add_term(NCWord::one(), ParamRat::symbol("h").scale(&Rat::new(1, 2)));
        assert_eq!(got, want);
    }

    #[test]
    fn normal_ordering_is_idempotent_and_linear() {
        let alg = weyl_symbolic();
        let x = &(&ba() * &ba()) + &(&a() * &b()).scale(&ParamRat::from_int(3));
        let once = alg.normal_order(&x).unwrap();
        let twice = alg.normal_order(&once).unwrap();
        assert_eq!(once, twice);
        assert!(once.is_normal());
    }

    #[test]
    fn commutators() {
        // [B, A] under [B,A] = eps*A is eps*A; [A, A] = 0; [B, A^2] = 2 eps A^2.
        let eps = ParamRat::symbol("epsilon");
        let alg = Algebra::left_poly(UniPoly::x().scale(&eps));
        assert_eq!(
            alg.commutator(&b(), &a()).unwrap(),
            a().scale(&eps)
        );
        assert!(alg.commutator(&a(), &a()).unwrap().is_zero());
        let a2 = &a() * &a();
        assert_eq!(
            alg.commutator(&b(), &a2).unwrap(),
            a2.scale(&eps.scale(&Rat::from_int(2)))
        );
    }

    #[test]
    fn adjoint_powers() {
        // ad_B(A) is the relation polynomial itself.
        let p = &(&UniPoly::constant(ParamRat::symbol("alpha"))
            + &UniPoly::x().scale(&ParamRat::symbol("epsilon")))
            - &UniPoly::x().pow(2).scale(&ParamRat::symbol("lambda"));
        let alg = Algebra::left_poly(p.clone());
        let expected = super::super::relation::poly_of_gen(&p, Gen::A);
        assert_eq!(alg.adjoint_pow(1, &a()).unwrap(), expected);
        // ad_B^2(A) = eps^2 A under [B, A] = eps A.
        let eps = ParamRat::symbol("epsilon");
        let shift = Algebra::left_poly(UniPoly::x().scale(&eps));
        assert_eq!(
            shift.adjoint_pow(2, &a()).unwrap(),
            a().scale(&(&eps * &eps))
        );
        // The adjoint is a derivation: it kills constants.
        assert!(alg.adjoint_pow(1, &NCPoly::one()).unwrap().is_zero());
    }

    #[test]
    fn interleavings() {
        assert_eq!(all_orderings(2, 1).to_string(), "A^2B + ABA + BA^2");
        assert_eq!(all_orderings(0, 3).to_string(), "B^3");
        assert_eq!(all_orderings(1, 1).to_string(), "AB + BA");
        // Sum over k of all_orderings(k, n-k) = free (A+B)^n.
        let n = 4;
        let mut total = NCPoly::zero();
        for k in 0..=n {
            total = &total + &all_orderings(k, n - k);
        }
        let s = &a() + &b();
        let free = Algebra::free(8);
        let want = free.pow_ordered(&s, n).unwrap();
        assert_eq!(total, want);
    }

    #[test]
    fn binomial_powers() {
        let alg = weyl_symbolic();
        assert_eq!(
            alg.binomial_power(2).unwrap().to_string(),
            "A^2 + 2*AB + B^2 + alpha"
        );
        assert_eq!(
            alg.binomial_power(3).unwrap().to_string(),
            "A^3 + 3*A^2B + 3*AB^2 + B^3 + 3*alpha*A + 3*alpha*B"
        );
        // Jordan relation [B, A] = -lambda A^2 at n = 2.
        let jordan = Algebra::left_poly(
            -&UniPoly::x().pow(2).scale(&ParamRat::symbol("lambda")),
        );
        let got = jordan.binomial_power(2).unwrap();
        let lam = ParamRat::symbol("lambda");
        let mut want = NCPoly::term(
            NCWord::normal(Rat::from_int(2), Rat::zero()),
            &ParamRat::one() - &lam,
        );
        want.add_term(
            NCWord::normal(Rat::one(), Rat::one()),
            ParamRat::from_int(2),
        );
        want.add_term(NCWord::normal(Rat::zero(), Rat::from_int(2)), ParamRat::one());
        assert_eq!(got, want);
    }

    #[test]
    fn product_powers() {
        // [B, A] = h: (AB)^2 = A^2B^2 + h AB.
        let h = ParamRat::symbol("h");
        let alg = Algebra::left_poly(UniPoly::constant(h.clone()));
        let got = alg.product_power(2).unwrap();
        let mut want = NCPoly::term(
            NCWord::normal(Rat::from_int(2), Rat::from_int(2)),
            ParamRat::one(),
        );
        want.add_term(NCWord::normal(Rat::one(), Rat::one()), h.clone());
        assert_eq!(got, want);
        assert_eq!(alg.product_power(1).unwrap().to_string(), "AB");
        // [B, A] = h A^(1/2): the coefficients of (AB)^3 are the s = 1/2
        // generalized Stirling numbers, and at h = 2 they become Lah numbers.
        let alg = Algebra::left_poly(UniPoly::monomial(Rat::new(1, 2), h.clone()));
        let got = alg.product_power(3).unwrap();
        let mut want = NCPoly::zero();
        for k in 1..=3i64 {
            let s_half = crate::combinat::gen_stirling(&Rat::new(1, 2), 3, k);
            let coeff = h.pow(3 - k).unwrap().scale(&s_half);
            want.add_term(
                NCWord::normal(Rat::new(3 + k, 2), Rat::from_int(k)),
                coeff,
            );
        }
        assert_eq!(got, want);
        let env = ParamEnv::new().bind("h", Rat::from_int(2));
        let at_two = alg.instantiate(&env).unwrap().product_power(3).unwrap();
        for k in 1..=3i64 {
            let c = at_two
                .coefficient(&NCWord::normal(Rat::new(3 + k, 2), Rat::from_int(k)))
                .as_rat()
                .unwrap();
            assert_eq!(c, crate::combinat::lah(3, k));
        }
    }

    #[test]
    fn antinormal_bases() {
        // AB under [B, A] = 1, antinormal target: AB = BA - 1.
        let alg = weyl().with_basis(Basis::Antinormal);
        let x = &a() * &b();
        let got = alg.normal_order(&x).unwrap();
        assert_eq!(got.to_string(), "BA - 1");
        assert!(got.is_antinormal());
        // Round trip: reordering the result in the normal basis gives AB back.
        let back = weyl().normal_order(&got).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn right_poly_relations() {
        // [B, A] = eps B: BA = AB + eps B, so A B = B A - eps B antinormally.
        let eps = ParamRat::symbol("epsilon");
        let alg = Algebra::right_poly(UniPoly::x().scale(&eps));
        let got = alg.normal_order(&ba()).unwrap();
        let mut want = NCPoly::term(NCWord::normal(Rat::one(), Rat::one()), ParamRat::one());
        want.add_term(NCWord::gen(Gen::B), eps.clone());
        assert_eq!(got, want);
        let anti = Algebra::right_poly(UniPoly::x().scale(&eps)).with_basis(Basis::Antinormal);
        let got = anti.normal_order(&(&a() * &b())).unwrap();
        let mut want = NCPoly::term(
            NCWord::antinormal(Rat::one(), Rat::one()),
            ParamRat::one(),
        );
        want.add_term(NCWord::gen(Gen::B), -&eps);
        assert_eq!(got, want);
    }

    #[test]
    fn rosengren_relation() {
        // [B, A] = lambda A^2 + mu B^2: B^2 A has the closed normal form
        // (2 lambda^2 A^3 + 2 lambda A^2 B + (1 + lambda mu) A B^2 + 2 mu B^3)
        //   / (1 - lambda mu).
        let lam = ParamRat::symbol("lambda");
        let mu = ParamRat::symbol("mu");
        let q = NCPoly::from_terms([
            (NCWord::normal(Rat::from_int(2), Rat::zero()), lam.clone()),
            (NCWord::normal(Rat::zero(), Rat::from_int(2)), mu.clone()),
        ]);
        let alg = Algebra::bivariate(q).unwrap();
        let x = &(&b() * &b()) * &a();
        let got = alg.normal_order(&x).unwrap();

        let det = &ParamRat::one() - &(&lam * &mu);
        let coeff = |c: ParamRat| c.try_div(&det).unwrap();
        let want = NCPoly::from_terms([
            (
                NCWord::normal(Rat::from_int(3), Rat::zero()),
                coeff((&lam * &lam).scale(&Rat::from_int(2))),
            ),
            (
                NCWord::normal(Rat::from_int(2), Rat::one()),
                coeff(lam.scale(&Rat::from_int(2))),
            ),
            (
                NCWord::normal(Rat::one(), Rat::from_int(2)),
                coeff(&ParamRat::one() + &(&lam * &mu)),
            ),
            (
                NCWord::normal(Rat::zero(), Rat::from_int(3)),
                coeff(mu.scale(&Rat::from_int(2))),
            ),
        ]);
        assert_eq!(got, want);

        // The lambda mu = 1 instance has no normal form at grade 3.
        let env = ParamEnv::new()
            .bind("lambda", Rat::one())
            .bind("mu", Rat::one());
        let singular = alg.instantiate(&env).unwrap();
        match singular.normal_order(&x) {
            Err(Error::NoNormalForm { grade: 3, .. }) => {}
            other => panic!("expected NoNormalForm at grade 3, got {other:?}"),
        }
    }

    #[test]
    fn bivariate_degenerations_match_the_rewriter() {
        // q = eps A as a bivariate relation agrees with the direct
        // left-polynomial rewriter.
        let eps = ParamRat::symbol("epsilon");
        let biv = Algebra::bivariate(NCPoly::term(NCWord::gen(Gen::A), eps.clone())).unwrap();
        let uni = Algebra::left_poly(UniPoly::x().scale(&eps));
        let x = &(&b() * &b()) * &(&a() * &a());
        assert_eq!(
            biv.normal_order(&x).unwrap(),
            uni.normal_order(&x).unwrap()
        );
        // And q = mu B^2 agrees with the right-polynomial rewriter.
        let mu = ParamRat::symbol("mu");
        let biv = Algebra::bivariate(NCPoly::term(
            NCWord::gen_pow(Gen::B, Rat::from_int(2)),
            mu.clone(),
        ))
        .unwrap();
        let uni = Algebra::right_poly(UniPoly::x().pow(2).scale(&mu));
        assert_eq!(
            biv.normal_order(&x).unwrap(),
            uni.normal_order(&x).unwrap()
        );
    }

    #[test]
    fn free_mode_commutator_identity() {
        // [B, A] = (A+B)^2 - A^2 - 2AB - B^2 in the free algebra.
        let free = Algebra::free(8);
        let s = &a() + &b();
        let sq = free.pow_ordered(&s, 2).unwrap();
        let rest = &(&(&a() * &a()) + &(&a() * &b()).scale(&ParamRat::from_int(2)))
            + &(&b() * &b());
        assert_eq!(&sq - &rest, free.commutator(&b(), &a()).unwrap());
    }

    #[test]
    fn truncation_flag() {
        let free = Algebra::free(2);
        let s = &a() + &b();
        let sq = free.mul(&s, &s).unwrap();
        let (cubed, truncated) = free.mul_flagged(&sq, &s).unwrap();
        assert!(truncated);
        assert!(cubed.is_zero());
    }
}
