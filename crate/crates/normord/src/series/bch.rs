//! The Baker–Campbell–Hausdorff series, two ways: Dynkin's explicit
//! commutator sum and the direct logarithm of `e^{Xt} e^{Yt}`.

use crate::error::Result;
use crate::ncalg::{Algebra, Gen, NCPoly};
use crate::scalars::Rat;

use super::tseries::{exp_element, TSeries};

/// Free algebra on two letters rendered `X`, `Y`, truncated at `order`.
pub fn free_xy(order: usize) -> Algebra {
    Algebra::free(order).with_letters(['X', 'Y'])
}

/// Right-nested commutator `[z_1, [z_2, [... [z_{L-1}, z_L]]]]` of a word.
pub fn nested_commutator(ctx: &Algebra, letters: &[Gen]) -> Result<NCPoly> {
    let (last, rest) = letters
        .split_last()
        .expect("nested commutator of an empty word");
    let mut acc = NCPoly::gen(*last);
    for g in rest.iter().rev() {
        acc = ctx.commutator(&NCPoly::gen(*g), &acc)?;
    }
    Ok(acc)
}

/// Dynkin's series for `log(e^{Xt} e^{Yt})` in the free algebra: the `t^n`
/// coefficient is
///
/// ```text
/// sum over k >= 1 and (m_1,n_1),...,(m_k,n_k), m_i + n_i >= 1,
///     sum(m_i + n_i) = n, of
/// (-1)^(k-1) / (k n prod m_i! n_i!) [X^{m_1} Y^{n_1} ... X^{m_k} Y^{n_k}]
/// ```
///
/// with the right-nested bracket. Words whose final two letters coincide
/// contribute a vanishing innermost bracket and are skipped outright.
pub fn dynkin_series(order: usize) -> Result<TSeries> {
    let ctx = free_xy(order);
    let mut coeffs = vec![NCPoly::zero(); order + 1];

    // Walk every sequence of (m_i, n_i) pairs with total degree <= order,
    // keeping the expanded letter word and the running factorial product.
    fn walk(
        ctx: &Algebra,
        remaining: usize,
        k: usize,
        letters: &mut Vec<Gen>,
        fact_prod: &Rat,
        coeffs: &mut [NCPoly],
        order: usize,
    ) -> Result<()> {
        let n = order - remaining;
        if k > 0 && n > 0 {
            let last_two_equal =
                letters.len() >= 2 && letters[letters.len() - 1] == letters[letters.len() - 2];
            if !last_two_equal {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                let denom = fact_prod
                    .clone()
                    * Rat::from_int((k * n) as i64)
                    * Rat::from_int(sign);
                let bracket = nested_commutator(ctx, letters)?;
                coeffs[n] = &coeffs[n] + &bracket.scale_rat(&denom.recip()?);
            }
        }
        if remaining == 0 {
            return Ok(());
        }
        for m in 0..=remaining {
            for j in 0..=(remaining - m) {
                if m + j == 0 {
                    continue;
                }
                letters.extend(std::iter::repeat(Gen::A).take(m));
                letters.extend(std::iter::repeat(Gen::B).take(j));
                let f = fact_prod * &(Rat::factorial(m) * Rat::factorial(j));
                walk(ctx, remaining - m - j, k + 1, letters, &f, coeffs, order)?;
                letters.truncate(letters.len() - m - j);
            }
        }
        Ok(())
    }

    let mut letters = Vec::new();
    walk(
        &ctx,
        order,
        0,
        &mut letters,
        &Rat::one(),
        &mut coeffs,
        order,
    )?;
    TSeries::new(&ctx, order, coeffs)
}

/// `log(e^{Xt} e^{Yt})` computed head-on in the free algebra.
pub fn bch_log(order: usize) -> Result<TSeries> {
    let ctx = free_xy(order);
    let ex = exp_element(&NCPoly::gen(Gen::A), &ctx, order)?;
    let ey = exp_element(&NCPoly::gen(Gen::B), &ctx, order)?;
    ex.mul(&ey)?.log()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::{A as X, B as Y};

    #[test]
    fn low_order_coefficients() {
        let ctx = free_xy(4);
        let d = dynkin_series(4).unwrap();
        // t: X + Y.
        assert_eq!(d.coeff(1), &(&NCPoly::gen(X) + &NCPoly::gen(Y)));
        // t^2: [X, Y]/2.
        let want = nested_commutator(&ctx, &[X, Y])
            .unwrap()
            .scale_rat(&Rat::new(1, 2));
        assert_eq!(d.coeff(2), &want);
        // t^3: ([X,[X,Y]] + [Y,[Y,X]])/12.
        let want = (&nested_commutator(&ctx, &[X, X, Y]).unwrap()
            + &nested_commutator(&ctx, &[Y, Y, X]).unwrap())
            .scale_rat(&Rat::new(1, 12));
        assert_eq!(d.coeff(3), &want);
        // t^4: -[Y,[X,[X,Y]]]/24.
        let want = nested_commutator(&ctx, &[Y, X, X, Y])
            .unwrap()
            .scale_rat(&Rat::new(-1, 24));
        assert_eq!(d.coeff(4), &want);
    }

    #[test]
    fn dynkin_matches_the_logarithm() {
        assert_eq!(dynkin_series(4).unwrap(), bch_log(4).unwrap());
    }

    #[test]
    fn nested_brackets() {
        let ctx = free_xy(3);
        // [X, [X, Y]] = X^2Y - 2XYX + YX^2 in the free algebra.
        let got = nested_commutator(&ctx, &[X, X, Y]).unwrap();
        let x = NCPoly::gen(X);
        let y = NCPoly::gen(Y);
        let xy = &x * &y;
        let want = &(&(&x * &xy) - &(&xy * &x).scale_rat(&Rat::from_int(2)))
            + &(&(&y * &x) * &x);
        assert_eq!(got, want);
    }
}
