//! Two-branch polynomial recurrences: P_n = step_n(x)·P_{n-1} − P_{n-2},
//! with the linear step chosen by the parity of n.

use num::Zero;
use sprugnoli::rational::{int, Rational};
use sprugnoli::TriMatrix;

#[derive(Clone, Debug)]
pub struct PolyRecurrence {
    /// Linear step (constant, x-coefficient) applied when n is even.
    pub even_step: [Rational; 2],
    /// Linear step applied when n is odd.
    pub odd_step: [Rational; 2],
    /// Leading polynomials, ascending coefficients; the recurrence takes
    /// over at index seeds.len().
    pub seeds: Vec<Vec<Rational>>,
}

impl PolyRecurrence {
    /// P₀ = 1, then (x−1)·P_{n−1} − P_{n−2} for odd n and (x+1)·P_{n−1} −
    /// P_{n−2} for even n: the family whose coefficient array inverts to
    /// the triangle with first column A055879.
    pub fn pnorm() -> Self {
        PolyRecurrence {
            even_step: [int(1), int(1)],
            odd_step: [int(-1), int(1)],
            seeds: vec![vec![int(1)]],
        }
    }
}

fn linear_mul(step: &[Rational; 2], p: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i] += &step[0] * c;
        out[i + 1] += &step[1] * c;
    }
    out
}

fn poly_sub(a: &mut [Rational], b: &[Rational]) {
    for (i, c) in b.iter().enumerate() {
        a[i] -= c;
    }
}

/// Rows are the ascending coefficient vectors of P₀..P_{count−1}.
pub fn build_poly_recurrence(r: &PolyRecurrence, count: usize) -> TriMatrix {
    assert!(!r.seeds.is_empty(), "need at least one seed polynomial");
    let mut polys: Vec<Vec<Rational>> = r.seeds.iter().take(count).cloned().collect();
    for n in polys.len()..count {
        let step = if n % 2 == 0 { &r.even_step } else { &r.odd_step };
        let mut p = linear_mul(step, &polys[n - 1]);
        if n >= 2 {
            poly_sub(&mut p, &polys[n - 2]);
        }
        polys.push(p);
    }
    let rows = polys
        .into_iter()
        .map(|mut p| {
            p.resize(count, Rational::zero());
            p
        })
        .collect();
    TriMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_polynomials() {
        let m = build_poly_recurrence(&PolyRecurrence::pnorm(), 5);
        let expected = TriMatrix::from_int_rows(&[
            &[1],
            &[-1, 1],
            &[-2, 0, 1],
            &[3, -3, -1, 1],
            &[5, 0, -5, 0, 1],
        ]);
        assert_eq!(m, expected);
        assert_eq!(
            build_poly_recurrence(&PolyRecurrence::pnorm(), 1),
            TriMatrix::from_int_rows(&[&[1]])
        );
    }
}
