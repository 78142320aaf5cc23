//! Stirling, Lah, and related counting families.
//!
//! Each family has one primary implementation plus at least one independent
//! formula, so the test suite can cross-check them against each other and
//! against frozen values. The generalized family `gen_stirling` interpolates
//! between the classical triangles: parameter 0 gives Stirling subset
//! numbers, parameter 1 gives unsigned Stirling cycle numbers, and other
//! rational parameters arise when reordering powers of `A^s B`.

use crate::error::{Error, Result};
use crate::scalars::{ParamRat, Rat};

use super::unipoly::UniPoly;

/// Stirling subset number `S(n, k)` via the triangle recurrence
/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2(n: usize, k: i64) -> Rat {
    if k < 0 || k as usize > n {
        return Rat::zero();
    }
    let k = k as usize;
    // Row-by-row dynamic programming; rows stay tiny here.
    let mut row = vec![Rat::one()];
    for m in 1..=n {
        let mut next = vec![Rat::zero(); m + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += &(&Rat::from_int(j as i64) * v);
            next[j + 1] += v;
        }
        row = next;
    }
    row[k].clone()
}

/// `S(n, k)` by the inclusion-exclusion closed form
/// `(1/k!) sum_i (-1)^(k-i) C(k, i) i^n`.
pub fn stirling2_closed(n: usize, k: i64) -> Rat {
    if k < 0 || k as usize > n {
        return Rat::zero();
    }
    if n == 0 {
        return Rat::one(); // k == 0 here; the sum below would see 0^0
    }
    let k = k as usize;
    let mut acc = Rat::zero();
    for i in 0..=k {
        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
        let term = &Rat::binomial(k, i) * &Rat::from_int(i as i64).pow(n as i64).unwrap();
        acc += &(&Rat::from_int(sign) * &term);
    }
    &acc / &Rat::factorial(k)
}

/// Unsigned Stirling cycle number `c(n, k)` via
/// `c(n, k) = (n-1) c(n-1, k) + c(n-1, k-1)`.
pub fn stirling1_unsigned(n: usize, k: i64) -> Rat {
    if k < 0 || k as usize > n {
        return Rat::zero();
    }
    let k = k as usize;
    let mut row = vec![Rat::one()];
    for m in 1..=n {
        let mut next = vec![Rat::zero(); m + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += &(&Rat::from_int((m - 1) as i64) * v);
            next[j + 1] += v;
        }
        row = next;
    }
    row[k].clone()
}

/// Signed Stirling cycle number `s(n, k) = (-1)^(n-k) c(n, k)`, the
/// coefficient of `x^k` in the falling factorial `x(x-1)...(x-n+1)`.
pub fn stirling1(n: usize, k: i64) -> Rat {
    let c = stirling1_unsigned(n, k);
    if k >= 0 && (n as i64 - k) % 2 != 0 {
        -c
    } else {
        c
    }
}

/// Lah number `L(n, k) = C(n-1, k-1) n! / k!`, with `L(0, 0) = 1`.
pub fn lah(n: usize, k: i64) -> Rat {
    if n == 0 && k == 0 {
        return Rat::one();
    }
    if k <= 0 || k as usize > n {
        return Rat::zero();
    }
    let k = k as usize;
    &(&Rat::binomial(n - 1, k - 1) * &Rat::factorial(n)) / &Rat::factorial(k)
}

/// Generalized Stirling number with rational parameter `s`:
/// `sum_j c(n, j) S(j, k) s^(n-j) (1-s)^(j-k)`.
///
/// This form is valid for every rational `s`, including 0 and 1 (where it
/// collapses to the classical triangles via `0^0 = 1`).
pub fn gen_stirling(s: &Rat, n: usize, k: i64) -> Rat {
    if k < 0 || k as usize > n {
        return Rat::zero();
    }
    let k = k as usize;
    let one_minus_s = &Rat::one() - s;
    let mut acc = Rat::zero();
    for j in k..=n {
        let c = stirling1_unsigned(n, j as i64);
        if c.is_zero() {
            continue;
        }
        let sj = stirling2(j, k as i64);
        if sj.is_zero() {
            continue;
        }
        let sp = rat_pow_or_one(s, (n - j) as i64);
        let op = rat_pow_or_one(&one_minus_s, (j - k) as i64);
        acc += &(&(&c * &sj) * &(&sp * &op));
    }
    acc
}

/// `x^e` with the `0^0 = 1` convention used by the interpolation formulas.
fn rat_pow_or_one(x: &Rat, e: i64) -> Rat {
    if e == 0 {
        Rat::one()
    } else {
        x.pow(e).expect("nonnegative exponent")
    }
}

/// Independent double-sum form of `gen_stirling`, defined for `s` outside
/// `{0, 1}`:
/// `(1/k!) sum_j (-1)^(k-j) C(k, j) sum_i c(n, i) s^(n-i) j^i / (1-s)^(k-i)`.
pub fn gen_stirling_double_sum(s: &Rat, n: usize, k: i64) -> Result<Rat> {
    if s.is_zero() || s.is_one() {
        return Err(Error::Unsupported(
            "double-sum form needs parameter outside {0, 1}".into(),
        ));
    }
    if k < 0 || k as usize > n {
        return Ok(Rat::zero());
    }
    let k = k as usize;
    let one_minus_s = &Rat::one() - s;
    let mut acc = Rat::zero();
    for j in 0..=k {
        let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
        let mut inner = Rat::zero();
        for i in 0..=n {
            let c = stirling1_unsigned(n, i as i64);
            if c.is_zero() {
                continue;
            }
            let ji = rat_pow_or_one(&Rat::from_int(j as i64), i as i64);
            if ji.is_zero() {
                continue;
            }
            let sp = rat_pow_or_one(s, (n - i) as i64);
            let op = one_minus_s.pow(i as i64 - k as i64)?;
            inner += &(&(&c * &ji) * &(&sp * &op));
        }
        acc += &(&Rat::from_int(sign) * &(&Rat::binomial(k, j) * &inner));
    }
    Ok(&acc / &Rat::factorial(k))
}

/// Independent binomial-sum form of `gen_stirling`, defined for `s` outside
/// `{0, 1}`:
/// `n! s^n / (k! (1-s)^k) sum_j (-1)^(k-j) C(k, j) C(n + j(1/s - 1) - 1, n)`.
pub fn gen_stirling_binom_sum(s: &Rat, n: usize, k: i64) -> Result<Rat> {
    if s.is_zero() || s.is_one() {
        return Err(Error::Unsupported(
            "binomial-sum form needs parameter outside {0, 1}".into(),
        ));
    }
    if k < 0 || k as usize > n {
        return Ok(Rat::zero());
    }
    let k = k as usize;
    let shift = &s.recip()? - &Rat::one();
    let mut acc = Rat::zero();
    for j in 0..=k {
        let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
        let upper = &(&Rat::from_int(n as i64) + &(&Rat::from_int(j as i64) * &shift))
            - &Rat::one();
        let term = &Rat::binomial(k, j) * &Rat::binomial_rat(&upper, n);
        acc += &(&Rat::from_int(sign) * &term);
    }
    let front = &(&Rat::factorial(n) * &s.pow(n as i64)?)
        / &(&Rat::factorial(k) * &(&Rat::one() - s).pow(k as i64)?);
    Ok(&front * &acc)
}

/// Truncated exponential generating function of the `gen_stirling` column
/// `k = 1`, as a polynomial in `t` through `t^order`:
///
/// * parameter 0: `e^t - 1`, coefficients `1/n!`;
/// * parameter 1: `-log(1 - t)`, coefficients `1/n`;
/// * otherwise the coefficient of `t^n` is `-C(1 - 1/s, n) (-s)^n / (s - 1)`.
///
/// Its powers generate the whole family: the `t^n` coefficient of
/// `F^k / k!` is `gen_stirling(s, n, k) / n!` (see the tests).
pub fn frak_f_series(s: &Rat, order: usize) -> UniPoly {
    let mut out = UniPoly::zero();
    for n in 1..=order {
        let coeff = if s.is_zero() {
            Rat::factorial(n).recip().expect("n! is nonzero")
        } else if s.is_one() {
            Rat::from_int(n as i64).recip().expect("n is nonzero")
        } else {
            let b = Rat::binomial_rat(&(&Rat::one() - &s.recip().expect("s nonzero")), n);
            let p = (-s).pow(n as i64).expect("nonnegative exponent");
            &(-(&b * &p)) / &(s - &Rat::one())
        };
        out.add_term(Rat::from_int(n as i64), ParamRat::from_rat(coeff));
    }
    out
}

/// The bracket product `[x]_n = prod_{i=1}^{n-1} (1 - i x)`, with
/// `[x]_0 = [x]_1 = 1`. The argument may be symbolic.
pub fn bracket_eval(x: &ParamRat, n: usize) -> ParamRat {
    let mut acc = ParamRat::one();
    for i in 1..n {
        acc = &acc * &(&ParamRat::one() - &x.scale(&Rat::from_int(i as i64)));
    }
    acc
}

/// Bessel polynomial `y_n(x) = sum_k C(n+k, 2k) (2k-1)!! x^k`.
pub fn bessel_poly(n: usize) -> UniPoly {
    let mut out = UniPoly::zero();
    for k in 0..=n {
        let c = &Rat::binomial(n + k, 2 * k) * &Rat::double_factorial_odd(k);
        out.add_term(Rat::from_int(k as i64), ParamRat::from_rat(c));
    }
    out
}

/// Falling factorial `x (x-1) ... (x-n+1)` as a polynomial in `x`.
pub fn falling_factorial_poly(n: usize) -> UniPoly {
    let mut acc = UniPoly::one();
    for i in 0..n {
        acc = &acc * &(&UniPoly::x() - &UniPoly::constant_rat(Rat::from_int(i as i64)));
    }
    acc
}

/// Rising factorial `x (x+1) ... (x+n-1)` as a polynomial in `x`.
pub fn rising_factorial_poly(n: usize) -> UniPoly {
    let mut acc = UniPoly::one();
    for i in 0..n {
        acc = &acc * &(&UniPoly::x() + &UniPoly::constant_rat(Rat::from_int(i as i64)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling2_triangle() {
        // Row n = 5: 0, 1, 15, 25, 10, 1.
        let row: Vec<Rat> = (0..=5).map(|k| stirling2(5, k)).collect();
        let want: Vec<Rat> = [0, 1, 15, 25, 10, 1].iter().map(|&v| Rat::from_int(v)).collect();
        assert_eq!(row, want);
        assert_eq!(stirling2(0, 0), Rat::one());
        assert_eq!(stirling2(4, 5), Rat::zero());
        assert_eq!(stirling2(4, -1), Rat::zero());
    }

    #[test]
    fn stirling2_matches_closed_form() {
        for n in 0..=8 {
            for k in 0..=(n as i64) {
                assert_eq!(stirling2(n, k), stirling2_closed(n, k), "S({n},{k})");
            }
        }
    }

    #[test]
    fn stirling1_triangle() {
        // Unsigned row n = 5: 0, 24, 50, 35, 10, 1.
        let row: Vec<Rat> = (0..=5).map(|k| stirling1_unsigned(5, k)).collect();
        let want: Vec<Rat> = [0, 24, 50, 35, 10, 1].iter().map(|&v| Rat::from_int(v)).collect();
        assert_eq!(row, want);
        assert_eq!(stirling1(5, 2), Rat::from_int(-50));
        assert_eq!(stirling1(5, 3), Rat::from_int(35));
    }

    #[test]
    fn stirling_numbers_are_factorial_coefficients() {
        // Signed first kind: x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
        // Unsigned: x(x+1)...(x+n-1) = sum_k c(n,k) x^k.
        for n in 0..=7usize {
            let falling = falling_factorial_poly(n);
            let rising = rising_factorial_poly(n);
            for k in 0..=(n as i64) {
                let e = Rat::from_int(k);
                assert_eq!(falling.coefficient(&e).as_rat().unwrap(), stirling1(n, k));
                assert_eq!(
                    rising.coefficient(&e).as_rat().unwrap(),
                    stirling1_unsigned(n, k)
                );
            }
        }
    }

    #[test]
    fn stirling2_inverts_falling_factorials() {
        // sum_k S(n,k) (x)_k = x^n.
        for n in 0..=7usize {
            let mut acc = UniPoly::zero();
            for k in 0..=n {
                let base = falling_factorial_poly(k);
                acc = &acc + &base.scale(&ParamRat::from_rat(stirling2(n, k as i64)));
            }
            assert_eq!(acc, UniPoly::x().pow(n as u32), "n = {n}");
        }
    }

    #[test]
    fn lah_values_and_connection() {
        assert_eq!(lah(0, 0), Rat::one());
        assert_eq!(lah(3, 1), Rat::from_int(6));
        assert_eq!(lah(3, 2), Rat::from_int(6));
        assert_eq!(lah(3, 3), Rat::one());
        assert_eq!(lah(4, 2), Rat::from_int(36));
        assert_eq!(lah(4, 0), Rat::zero());
        // Lah numbers connect rising to falling factorials:
        // x(x+1)...(x+n-1) = sum_k L(n,k) (x)_k.
        for n in 0..=6usize {
            let mut acc = UniPoly::zero();
            for k in 0..=n {
                acc = &acc
                    + &falling_factorial_poly(k).scale(&ParamRat::from_rat(lah(n, k as i64)));
            }
            assert_eq!(acc, rising_factorial_poly(n), "n = {n}");
        }
    }

    #[test]
    fn gen_stirling_specializes_to_classical_triangles() {
        for n in 0..=7 {
            for k in 0..=(n as i64) {
                assert_eq!(gen_stirling(&Rat::zero(), n, k), stirling2(n, k));
                assert_eq!(gen_stirling(&Rat::one(), n, k), stirling1_unsigned(n, k));
            }
        }
    }

    #[test]
    fn gen_stirling_agrees_with_alternate_forms() {
        let params = [Rat::from_int(2), Rat::from_int(-1), Rat::new(1, 2), Rat::from_int(3)];
        for s in &params {
            for n in 0..=6 {
                for k in 0..=(n as i64) {
                    let primary = gen_stirling(s, n, k);
                    assert_eq!(
                        primary,
                        gen_stirling_double_sum(s, n, k).unwrap(),
                        "double sum at s={s}, n={n}, k={k}"
                    );
                    assert_eq!(
                        primary,
                        gen_stirling_binom_sum(s, n, k).unwrap(),
                        "binomial sum at s={s}, n={n}, k={k}"
                    );
                }
            }
        }
        assert!(gen_stirling_double_sum(&Rat::zero(), 3, 1).is_err());
        assert!(gen_stirling_binom_sum(&Rat::one(), 3, 1).is_err());
    }

    #[test]
    fn gen_stirling_at_minus_one_kills_low_columns() {
        // At parameter -1 the (3,1) entry vanishes; this is what makes the
        // inverse-power reordering series terminate early.
        assert_eq!(gen_stirling(&Rat::from_int(-1), 3, 1), Rat::zero());
        assert_eq!(gen_stirling(&Rat::from_int(-1), 2, 1), Rat::one());
        assert_eq!(gen_stirling(&Rat::from_int(-1), 3, 2), Rat::from_int(3));
    }

    #[test]
    fn gen_stirling_at_two_counts_bessel_coefficients() {
        // gen_stirling(2, n, n-k) = C(n-1+k, 2k) (2k-1)!!.
        let two = Rat::from_int(2);
        for n in 1..=7usize {
            for k in 0..=(n - 1) {
                let want = &Rat::binomial(n - 1 + k, 2 * k) * &Rat::double_factorial_odd(k);
                assert_eq!(gen_stirling(&two, n, (n - k) as i64), want, "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn frak_f_known_series() {
        // Parameter 2 through t^3: t + t^2/2 + t^3/2.
        let f = frak_f_series(&Rat::from_int(2), 3);
        let mut want = UniPoly::zero();
        want.add_term(Rat::from_int(1), ParamRat::from_rat(Rat::one()));
        want.add_term(Rat::from_int(2), ParamRat::from_rat(Rat::new(1, 2)));
        want.add_term(Rat::from_int(3), ParamRat::from_rat(Rat::new(1, 2)));
        assert_eq!(f, want);
        // Parameter 0 is e^t - 1; parameter 1 is -log(1 - t).
        let e = frak_f_series(&Rat::zero(), 5);
        let l = frak_f_series(&Rat::one(), 5);
        for n in 1..=5usize {
            let en = Rat::from_int(n as i64);
            assert_eq!(
                e.coefficient(&en).as_rat().unwrap(),
                Rat::factorial(n).recip().unwrap()
            );
            assert_eq!(l.coefficient(&en).as_rat().unwrap(), Rat::new(1, n as i64));
        }
    }

    #[test]
    fn frak_f_powers_generate_the_family() {
        // [t^n] F^k / k! = gen_stirling(s, n, k) / n!.
        let params = [Rat::zero(), Rat::one(), Rat::from_int(2), Rat::new(1, 2), Rat::from_int(-1)];
        for s in &params {
            let f = frak_f_series(s, 6);
            for k in 0..=6u32 {
                let fk = f.pow(k).scale(&ParamRat::from_rat(
                    Rat::factorial(k as usize).recip().unwrap(),
                ));
                for n in 0..=6usize {
                    let got = fk.coefficient(&Rat::from_int(n as i64)).as_rat().unwrap();
                    let want =
                        &gen_stirling(s, n, k as i64) / &Rat::factorial(n);
                    assert_eq!(got, want, "s={s}, n={n}, k={k}");
                }
            }
        }
    }

    #[test]
    fn bracket_product_expansion() {
        // [x]_3 = (1 - x)(1 - 2x) = 1 - 3x + 2x^2.
        let x = ParamRat::symbol("x");
        let b3 = bracket_eval(&x, 3);
        let want = &(&ParamRat::one() - &x.scale(&Rat::from_int(3)))
            + &(&x * &x).scale(&Rat::from_int(2));
        assert_eq!(b3, want);
        assert_eq!(bracket_eval(&x, 0), ParamRat::one());
        assert_eq!(bracket_eval(&x, 1), ParamRat::one());
        // Concrete argument: [2]_4 = (1-2)(1-4)(1-6) = -15.
        assert_eq!(bracket_eval(&ParamRat::from_int(2), 4), ParamRat::from_int(-15));
    }

    #[test]
    fn bessel_polynomials() {
        assert_eq!(bessel_poly(0), UniPoly::one());
        assert_eq!(bessel_poly(1).to_string(), "x + 1");
        assert_eq!(bessel_poly(2).to_string(), "3*x^2 + 3*x + 1");
        assert_eq!(bessel_poly(3).to_string(), "15*x^3 + 15*x^2 + 6*x + 1");
        // y_n satisfies x^2 y'' + (2x + 2) y' = n(n+1) y.
        for n in 0..=6usize {
            let y = bessel_poly(n);
            let d1 = y.derivative();
            let d2 = d1.derivative();
            let x2 = UniPoly::x().pow(2);
            let two_x_plus_2 = &UniPoly::x().scale(&ParamRat::from_int(2))
                + &UniPoly::constant_rat(Rat::from_int(2));
            let lhs = &(&x2 * &d2) + &(&two_x_plus_2 * &d1);
            let rhs = y.scale(&ParamRat::from_int((n * (n + 1)) as i64));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
