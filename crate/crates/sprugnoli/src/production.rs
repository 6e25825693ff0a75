//! Production matrices P = M⁻¹·M̄ (M̄ is M with its top row removed), the
//! striped structure of their columns, and the closed-form Z/A/B series for
//! Sprugnoli arrays.
//!
//! Row r of P regenerates row r+1 of M from row r: M_{r+1} = M_r · P. For a
//! family with column period m, every column k > 0 of P carries the stripe
//! numbered (k−1) mod m starting at row k−1, and column 0 carries the Z
//! sequence.

use crate::error::{Error, Result};
use crate::matrix::{SquareMatrix, TriMatrix};
use crate::rational::Rational;
use crate::series::Series;
use crate::sprugnoli::SprugnoliTriple;
use num::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductionStripes {
    pub period: usize,
    pub z: Vec<Rational>,
    pub stripes: Vec<Vec<Rational>>,
}

/// P = M⁻¹·M̄ computed from an (n+1)-dimensional M and reported at
/// dimension n: the last row of a truncated product is the one place
/// truncation could leak in, so it is dropped.
pub fn production_matrix(m: &TriMatrix) -> Result<SquareMatrix> {
    assert!(m.dim() >= 2, "need at least a 2x2 window");
    let inv = m.inverse()?;
    let n = m.dim() - 1;
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    // inv is triangular (k ≤ i) and M_{k+1,j} needs k+1 ≥ j
                    (j.saturating_sub(1)..=i)
                        .map(|k| inv.entry(i, k) * m.entry(k + 1, j))
                        .sum()
                })
                .collect()
        })
        .collect();
    let p = SquareMatrix::from_rows(rows);
    for i in 0..n {
        for j in i + 2..n {
            assert!(
                p.entry(i, j).is_zero(),
                "a production matrix has exactly one superdiagonal"
            );
        }
    }
    Ok(p)
}

/// Reads the Z column and the m stripes off P, verifying that every column
/// of the same residue class carries the same sequence and that everything
/// above the stripes is zero.
pub fn extract_stripes(p: &SquareMatrix, period: usize) -> Result<ProductionStripes> {
    assert!(period >= 1, "period must be at least 1");
    let dim = p.dim();
    let z: Vec<Rational> = (0..dim).map(|r| p.entry(r, 0).clone()).collect();
    let mut stripes: Vec<Vec<Rational>> = Vec::with_capacity(period);
    for j in 0..period {
        // first carrier column of stripe j
        let k = j + 1;
        if k < dim {
            stripes.push((j..dim).map(|r| p.entry(r, k).clone()).collect());
        } else {
            stripes.push(Vec::new());
        }
    }
    for k in 1..dim {
        let stripe = &stripes[(k - 1) % period];
        for r in 0..dim {
            let ok = if r + 1 < k {
                p.entry(r, k).is_zero()
            } else {
                *p.entry(r, k) == stripe[r + 1 - k]
            };
            if !ok {
                return Err(Error::NotStriped { period, row: r, col: k });
            }
        }
    }
    Ok(ProductionStripes { period, z, stripes })
}

/// Checks every row of M against the stripe recurrences:
/// t_{r+1,0} = Σ_j t_{r,j}·z_j and, for c ≥ 1 with stripe s = (c−1) mod m,
/// t_{r+1,c} = Σ_i t_{r,c−1+i}·s_i. Reports the first violating entry.
pub fn recurrence_check(m: &TriMatrix, s: &ProductionStripes) -> Result<()> {
    let dim = m.dim();
    assert!(s.z.len() >= dim - 1, "Z column too short for this matrix");
    for r in 0..dim - 1 {
        let from_z: Rational = (0..=r).map(|j| m.entry(r, j) * &s.z[j]).sum();
        if from_z != *m.entry(r + 1, 0) {
            return Err(Error::RecurrenceMismatch { row: r + 1, col: 0 });
        }
        for c in 1..=r + 1 {
            let stripe = &s.stripes[(c - 1) % s.period];
            let predicted: Rational = (0..=r + 1 - c)
                .map(|i| m.entry(r, c - 1 + i) * &stripe[i])
                .sum();
            if predicted != *m.entry(r + 1, c) {
                return Err(Error::RecurrenceMismatch { row: r + 1, col: c });
            }
        }
    }
    Ok(())
}

/// Closed forms for the Sprugnoli stripes, with (1, r1, r2) the inverse of
/// (1, f1, f2): A = (1,r1,r2)·(f1/x), B = ((1,r1,r2)·f2)/x and
/// Z = (1,r1,r2)·((1 − g(0)/g)/x). Returned as (Z, A, B) one order short of
/// the triple: f1/x ends one coefficient early.
pub fn ab_series_closed_form(t: &SprugnoliTriple) -> (Series, Series, Series) {
    let parts = t.inverse_parts();
    let n = t.order();
    let undo_full = SprugnoliTriple::associated(parts.r1.clone(), parts.r2.clone())
        .expect("(1, r1, r2) is a valid triple");
    let undo_short = SprugnoliTriple::associated(
        parts.r1.truncated(n - 1),
        parts.r2.truncated(n - 1),
    )
    .expect("(1, r1, r2) is a valid triple");
    let a = undo_short.apply(&t.f1().div_x());
    let b = undo_full.apply(t.f2()).div_x();
    let g0_over_g = t
        .g()
        .mul_inv()
        .expect("g has a nonzero constant term")
        .scale(t.g().coeff(0).unwrap());
    let z_arg = (&Series::one(n) - &g0_over_g).div_x();
    let z = undo_short.apply(&z_arg);
    (z, a, b)
}
