//! Ordinary Riordan pairs (g, f) and vertically stretched pairs (g, xf).
//!
//! Column k of a Riordan array holds g·f^k; the pairs form a group under
//! (g, f)·(u, v) = (g·u(f), v(f)). A stretched pair replaces f with a
//! valuation-2 multiplier xf, so column k starts at row 2k and the arrays
//! no longer form a group.

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanPair {
    g: Series,
    f: Series,
}

impl RiordanPair {
    pub fn new(g: Series, f: Series) -> Result<Self> {
        if !g.in_f0() {
            return Err(Error::Membership(
                "first component must have a nonzero constant term".into(),
            ));
        }
        if !f.in_f1() {
            return Err(Error::Membership(
                "second component must have valuation exactly 1".into(),
            ));
        }
        assert_eq!(g.order(), f.order(), "components must share one truncation order");
        Ok(RiordanPair { g, f })
    }

    pub fn identity(order: usize) -> Self {
        RiordanPair { g: Series::one(order), f: Series::x(order) }
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// Leading dim×dim block; needs dim ≤ order + 1 coefficients per column.
    pub fn build(&self, dim: usize) -> Result<TriMatrix> {
        let mut cols = Vec::with_capacity(dim);
        let mut col = self.g.clone();
        for _ in 0..dim {
            cols.push(col.clone());
            col = col.mul(&self.f);
        }
        TriMatrix::from_columns(&cols, dim)
    }

    /// Action on a column vector of coefficients: the array times h is g·h(f).
    pub fn apply(&self, h: &Series) -> Series {
        let hf = h.compose(&self.f).expect("f has positive valuation");
        self.g.mul(&hf)
    }

    /// Group law matching the matrix product: (g, f)·(u, v) = (g·u(f), v(f)).
    pub fn mul(&self, rhs: &RiordanPair) -> RiordanPair {
        let u_of_f = rhs.g.compose(&self.f).expect("f has positive valuation");
        let v_of_f = rhs.f.compose(&self.f).expect("f has positive valuation");
        RiordanPair { g: self.g.mul(&u_of_f), f: v_of_f }
    }

    /// Group inverse (1/g(f̄), f̄) with f̄ the compositional inverse of f.
    pub fn inv(&self) -> RiordanPair {
        let fbar = self.f.revert().expect("f has valuation exactly 1");
        let g_at = self.g.compose(&fbar).expect("f̄ has positive valuation");
        RiordanPair {
            g: g_at.mul_inv().expect("g has a nonzero constant term"),
            f: fbar,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StretchedPair {
    g: Series,
    xf: Series,
}

impl StretchedPair {
    pub fn new(g: Series, xf: Series) -> Result<Self> {
        if !g.in_f0() {
            return Err(Error::Membership(
                "first component must have a nonzero constant term".into(),
            ));
        }
        if !xf.in_fr(2) {
            return Err(Error::Membership(
                "stretched multiplier must have valuation exactly 2".into(),
            ));
        }
        assert_eq!(g.order(), xf.order(), "components must share one truncation order");
        Ok(StretchedPair { g, xf })
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn xf(&self) -> &Series {
        &self.xf
    }

    /// Column k holds g·(xf)^k, so it starts at row 2k.
    pub fn build(&self, dim: usize) -> Result<TriMatrix> {
        let mut cols = Vec::with_capacity(dim);
        let mut col = self.g.clone();
        for _ in 0..dim {
            cols.push(col.clone());
            col = col.mul(&self.xf);
        }
        TriMatrix::from_columns(&cols, dim)
    }

    pub fn apply(&self, h: &Series) -> Series {
        let hxf = h.compose(&self.xf).expect("xf has positive valuation");
        self.g.mul(&hxf)
    }
}
