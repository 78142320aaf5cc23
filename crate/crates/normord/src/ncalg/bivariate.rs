//! Grade-by-grade normal ordering for bivariate relations.
//!
//! Under `[B, A] = q(A, B)` with `q` of total degree ≤ 2, replacing one
//! `BA` adjacency by `AB + q` can reintroduce non-normal words of the same
//! total degree, so pure rewriting chases its own tail. Instead, words are
//! ordered grade by grade: at total degree `n` the normal forms of all
//! non-normal degree-`n` words are unknowns; rewriting the leftmost `BA` of
//! each unknown once yields a square linear system over the coefficient
//! field whose constant side involves only normal degree-`n` words and
//! already-solved lower grades. The system is solved exactly; a singular
//! system is precisely the "no normal form" situation and is reported with
//! the grade and an offending word.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scalars::ParamRat;

use super::poly::NCPoly;
use super::word::{Gen, NCWord};

/// Map from non-normal words of one grade to their normal forms.
pub(crate) type GradeTable = HashMap<NCWord, NCPoly>;

/// Largest grade the solver will attempt; the table for grade `n` has
/// `2^n - n - 1` unknowns, so this bounds both memory and elimination time.
const MAX_GRADE: usize = 14;

/// Normal-order `x`, building grade tables as needed and caching them in
/// `tables` (keyed by grade).
pub(crate) fn bivariate_normal_order(
    q: &NCPoly,
    x: &NCPoly,
    tables: &mut Vec<GradeTable>,
) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    for (w, c) in x.terms() {
        if w.is_normal() {
            out.add_term(w.clone(), c.clone());
            continue;
        }
        let letters = w.letters().ok_or_else(|| {
            Error::ExponentKind(format!(
                "word {w} must have positive integer exponents under a bivariate relation"
            ))
        })?;
        ensure_grade(q, letters.len(), tables)?;
        out.add_scaled(&tables[letters.len()][w], c);
    }
    Ok(out)
}

fn ensure_grade(q: &NCPoly, n: usize, tables: &mut Vec<GradeTable>) -> Result<()> {
    if n > MAX_GRADE {
        return Err(Error::Unsupported(format!(
            "bivariate normal ordering beyond total degree {MAX_GRADE}"
        )));
    }
    while tables.len() <= n {
        let g = tables.len();
        let table = if g < 2 {
            GradeTable::new() // grades 0 and 1 have no non-normal words
        } else {
            solve_grade(q, g, tables)?
        };
        tables.push(table);
    }
    Ok(())
}

/// All length-`n` letter words that are not of the form `A^i B^j`.
fn non_normal_words(n: usize) -> Vec<Vec<Gen>> {
    let mut out = Vec::new();
    for bits in 0..(1u32 << n) {
        let word: Vec<Gen> = (0..n)
            .map(|i| {
                if bits & (1 << (n - 1 - i)) == 0 {
                    Gen::A
                } else {
                    Gen::B
                }
            })
            .collect();
        if word.windows(2).any(|p| p == [Gen::B, Gen::A]) {
            out.push(word);
        }
    }
    out
}

/// Build and solve the grade-`n` system. `tables` must already hold all
/// lower grades.
fn solve_grade(q: &NCPoly, n: usize, tables: &[GradeTable]) -> Result<GradeTable> {
    let unknowns = non_normal_words(n);
    let m = unknowns.len();
    let index: HashMap<NCWord, usize> = unknowns
        .iter()
        .enumerate()
        .map(|(i, ls)| (NCWord::from_letters(ls), i))
        .collect();

    // Rows of (I - M) and the NCPoly-valued right-hand side.
    let mut matrix: Vec<Vec<ParamRat>> = vec![vec![ParamRat::zero(); m]; m];
    let mut rhs: Vec<NCPoly> = vec![NCPoly::zero(); m];

    for (row, letters) in unknowns.iter().enumerate() {
        matrix[row][row] = ParamRat::one();
        let k = letters
            .windows(2)
            .position(|p| p == [Gen::B, Gen::A])
            .expect("word is non-normal");

        // One application of BA = AB + q at position k.
        let mut principal = letters.clone();
        principal.swap(k, k + 1);
        accumulate(
            &NCWord::from_letters(&principal),
            &ParamRat::one(),
            n,
            &index,
            &mut matrix[row],
            &mut rhs[row],
            tables,
        )?;
        for (mw, mc) in q.terms() {
            let mid = mw.letters().expect("validated bivariate relation");
            let mut spliced: Vec<Gen> = Vec::with_capacity(n - 2 + mid.len());
            spliced.extend_from_slice(&letters[..k]);
            spliced.extend_from_slice(&mid);
            spliced.extend_from_slice(&letters[k + 2..]);
            accumulate(
                &NCWord::from_letters(&spliced),
                mc,
                n,
                &index,
                &mut matrix[row],
                &mut rhs[row],
                tables,
            )?;
        }
    }

    let solution = solve_linear(matrix, rhs, &unknowns, n)?;
    Ok(index
        .into_iter()
        .map(|(w, i)| (w, solution[i].clone()))
        .collect())
}

/// Add `c * w` to the equation: into the matrix row if `w` is an unknown of
/// this grade, otherwise (normal or lower-grade) into the right-hand side.
fn accumulate(
    w: &NCWord,
    c: &ParamRat,
    n: usize,
    index: &HashMap<NCWord, usize>,
    row: &mut [ParamRat],
    rhs: &mut NCPoly,
    tables: &[GradeTable],
) -> Result<()> {
    if let Some(&j) = index.get(w) {
        // X_row = ... + c*X_j + ...  moves to the matrix as -c.
        row[j] = &row[j] - c;
        return Ok(());
    }
    if w.is_normal() {
        rhs.add_term(w.clone(), c.clone());
        return Ok(());
    }
    // Non-normal of strictly lower degree: its table exists already.
    let letters = w.letters().expect("integer exponents maintained");
    debug_assert!(letters.len() < n);
    rhs.add_scaled(&tables[letters.len()][w], c);
    Ok(())
}

/// Gauss-Jordan elimination over the rational-function field with
/// polynomial-valued right-hand sides.
fn solve_linear(
    mut matrix: Vec<Vec<ParamRat>>,
    mut rhs: Vec<NCPoly>,
    unknowns: &[Vec<Gen>],
    grade: usize,
) -> Result<Vec<NCPoly>> {
    let m = matrix.len();
    for col in 0..m {
        let pivot_row = (col..m)
            .find(|&r| !matrix[r][col].is_zero())
            .ok_or_else(|| Error::NoNormalForm {
                grade,
                witness: NCWord::from_letters(&unknowns[col]).to_string(),
            })?;
        matrix.swap(col, pivot_row);
        rhs.swap(col, pivot_row);

        let inv = matrix[col][col].recip().expect("pivot is nonzero");
        for x in matrix[col].iter_mut() {
            *x = &*x * &inv;
        }
        rhs[col] = rhs[col].scale(&inv);

        for r in 0..m {
            if r == col || matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col].clone();
            for c2 in col..m {
                let delta = &matrix[col][c2] * &factor;
                matrix[r][c2] = &matrix[r][c2] - &delta;
            }
            let correction = rhs[col].scale(&factor);
            rhs[r] = &rhs[r] - &correction;
        }
    }
    Ok(rhs)
}
