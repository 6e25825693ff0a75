//! Order-m tuples (g, f1, ..., f_{m-1}, fm) with fm supported on exponents
//! ≡ 1 (mod m). Column qm+r of the array expands
//! g · (x^{m−1}·fm)^q · f1···fr, so m = 2 is exactly the Sprugnoli case.
//!
//! No closed-form product or inverse is on record for m ≥ 3; the group
//! operations here work at matrix level, with a best-effort read-back of the
//! inverse tuple from the inverse matrix columns.

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::production::ProductionStripes;
use crate::rational::Rational;
use crate::series::Series;
use crate::sprugnoli::SprugnoliTriple;
use num::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralTuple {
    m: usize,
    g: Series,
    fs: Vec<Series>,
    fm: Series,
}

impl GeneralTuple {
    pub fn new(m: usize, g: Series, fs: Vec<Series>, fm: Series) -> Result<Self> {
        assert!(m >= 2, "the column period must be at least 2");
        assert_eq!(fs.len(), m - 1, "need exactly m-1 inner multipliers");
        if !g.in_f0() {
            return Err(Error::Membership(
                "first component must have a nonzero constant term".into(),
            ));
        }
        for (i, f) in fs.iter().enumerate() {
            if !f.in_f1() {
                return Err(Error::Membership(format!(
                    "multiplier f{} must have valuation exactly 1",
                    i + 1
                )));
            }
            assert_eq!(g.order(), f.order(), "components must share one truncation order");
        }
        if !fm.in_f1() {
            return Err(Error::Membership(
                "last component must have valuation exactly 1".into(),
            ));
        }
        for (j, c) in fm.coeffs().iter().enumerate() {
            if j % m != 1 && !c.is_zero() {
                return Err(Error::Membership(format!(
                    "last component must be supported on exponents = 1 mod {m}, found x^{j}"
                )));
            }
        }
        assert_eq!(g.order(), fm.order(), "components must share one truncation order");
        Ok(GeneralTuple { m, g, fs, fm })
    }

    pub fn identity(m: usize, order: usize) -> Self {
        GeneralTuple {
            m,
            g: Series::one(order),
            fs: vec![Series::x(order); m - 1],
            fm: Series::x(order),
        }
    }

    pub fn from_sprugnoli(t: &SprugnoliTriple) -> Self {
        GeneralTuple::new(2, t.g().clone(), vec![t.f1().clone()], t.f2().clone())
            .expect("a valid triple is a valid order-2 tuple")
    }

    pub fn period(&self) -> usize {
        self.m
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    /// f_i for 1 ≤ i ≤ m−1.
    pub fn f(&self, i: usize) -> &Series {
        &self.fs[i - 1]
    }

    pub fn fm(&self) -> &Series {
        &self.fm
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    fn shifted_fm(&self) -> Series {
        let mut s = self.fm.clone();
        for _ in 0..self.m - 1 {
            s = s.mul_x();
        }
        s
    }

    /// Column qm+r holds g·(x^{m−1}·fm)^q·f1···fr.
    pub fn build(&self, dim: usize) -> Result<TriMatrix> {
        let xfm = self.shifted_fm();
        let mut cols = Vec::with_capacity(dim);
        let mut base = self.g.clone();
        let mut cur = base.clone();
        for k in 0..dim {
            if k > 0 {
                if k % self.m == 0 {
                    base = base.mul(&xfm);
                    cur = base.clone();
                } else {
                    cur = cur.mul(&self.fs[k % self.m - 1]);
                }
            }
            cols.push(cur.clone());
        }
        TriMatrix::from_columns(&cols, dim)
    }

    /// Fundamental action by m-sections:
    /// Σ_r g·f1···fr·(section(h, m, r) ∘ x^{m−1}·fm).
    ///
    /// The r-th section can be short by one compressed coefficient; the
    /// valuation-r leading product never reads the unreliable slot, so the
    /// sum is exact at the tuple's order.
    pub fn apply(&self, h: &Series) -> Series {
        assert!(
            h.order() >= self.order(),
            "action needs h through the tuple's truncation order"
        );
        let xfm = self.shifted_fm();
        let mut lead = self.g.clone();
        let mut acc = Series::zero(self.order());
        for r in 0..self.m {
            if r > 0 {
                lead = lead.mul(&self.fs[r - 1]);
            }
            let sec = h
                .section(self.m, r)
                .compose(&xfm)
                .expect("x^{m-1}·fm has positive valuation");
            acc = &acc + &lead.mul(&sec);
        }
        acc
    }
}

/// Matrix-level product of two same-period tuples.
pub fn general_mul(a: &GeneralTuple, b: &GeneralTuple, dim: usize) -> Result<TriMatrix> {
    assert_eq!(a.period(), b.period(), "tuples must share the column period");
    Ok(a.build(dim)?.mul(&b.build(dim)?))
}

/// The exact inverse matrix together with the tuple read back off its
/// columns, when the inverse stays in the family at this window.
#[derive(Clone, Debug)]
pub struct GeneralInverse {
    pub matrix: TriMatrix,
    /// Read-back at order dim−m: column 0 gives g, column ratios give the
    /// inner multipliers, and column m over column 0 (shifted down m−1
    /// times) gives fm, which is m−1 coefficients shorter than the window.
    pub tuple: Option<GeneralTuple>,
    /// Whether the read-back tuple rebuilds the inverse matrix on the
    /// dim−m+1 window it can speak to.
    pub regenerates: bool,
}

pub fn general_inv(t: &GeneralTuple, dim: usize) -> Result<GeneralInverse> {
    let m = t.period();
    assert!(dim > m, "the window must exceed the column period");
    let matrix = t.build(dim)?.inverse()?;
    let short = dim - m;
    let down = |s: &Series, v: usize| {
        let mut s = s.clone();
        for _ in 0..v {
            s = s.div_x();
        }
        s
    };
    let read = || -> Result<GeneralTuple> {
        let g = matrix.column_series(0).truncated(short);
        let mut fs = Vec::with_capacity(m - 1);
        for i in 1..m {
            // column i over column i-1, the shared valuation cancelled
            let num = down(&matrix.column_series(i), i - 1);
            let den = down(&matrix.column_series(i - 1), i - 1);
            fs.push(num.mul(&den.mul_inv()?).truncated(short));
        }
        let base = matrix.column_series(m).mul(&matrix.column_series(0).mul_inv()?);
        GeneralTuple::new(m, g, fs, down(&base, m - 1).truncated(short))
    };
    match read() {
        Ok(tuple) => {
            let regenerates = tuple.build(short + 1)? == matrix.crop(short + 1);
            Ok(GeneralInverse { matrix, tuple: Some(tuple), regenerates })
        }
        Err(_) => Ok(GeneralInverse { matrix, tuple: None, regenerates: false }),
    }
}

/// Stripe sums Σ_j stripe_j[i] over the common window, with the positions of
/// the exact zeros. Period-m production matrices of these arrays show the
/// zeros recurring at every third position in the printed examples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripeSumPattern {
    pub sums: Vec<Rational>,
    pub zero_positions: Vec<usize>,
}

pub fn stripe_zero_pattern(s: &ProductionStripes) -> StripeSumPattern {
    let window = s.stripes.iter().map(|st| st.len()).min().unwrap_or(0);
    let sums: Vec<Rational> = (0..window)
        .map(|i| s.stripes.iter().map(|st| &st[i]).sum())
        .collect();
    let zero_positions = sums
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_zero())
        .map(|(i, _)| i)
        .collect();
    StripeSumPattern { sums, zero_positions }
}
