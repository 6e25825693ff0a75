//! Double Riordan triples ⟨g; f1, f2⟩ with g even and f1, f2 odd.
//!
//! Columns alternate multipliers: col 0 = g, col 2m+1 = col 2m · f1,
//! col 2m+2 = col 2m+1 · f2. The group operations conceptually evaluate the
//! right factor at sqrt(f1·f2); everything here stays square-root-free by
//! working with parity sections composed at rho = f1·f2, which has
//! valuation 2, so all results are exact at the shared truncation order.

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleTriple {
    g: Series,
    f1: Series,
    f2: Series,
}

impl DoubleTriple {
    pub fn new(g: Series, f1: Series, f2: Series) -> Result<Self> {
        if !(g.in_f0() && g.is_even()) {
            return Err(Error::Membership(
                "first component must be even with a nonzero constant term".into(),
            ));
        }
        if !(f1.in_f1() && f1.is_odd()) {
            return Err(Error::Membership(
                "second component must be odd with valuation exactly 1".into(),
            ));
        }
        if !(f2.in_f1() && f2.is_odd()) {
            return Err(Error::Membership(
                "third component must be odd with valuation exactly 1".into(),
            ));
        }
        assert_eq!(g.order(), f1.order(), "components must share one truncation order");
        assert_eq!(g.order(), f2.order(), "components must share one truncation order");
        Ok(DoubleTriple { g, f1, f2 })
    }

    pub fn identity(order: usize) -> Self {
        DoubleTriple {
            g: Series::one(order),
            f1: Series::x(order),
            f2: Series::x(order),
        }
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f1(&self) -> &Series {
        &self.f1
    }

    pub fn f2(&self) -> &Series {
        &self.f2
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn build(&self, dim: usize) -> Result<TriMatrix> {
        let mut cols = Vec::with_capacity(dim);
        let mut col = self.g.clone();
        for k in 0..dim {
            cols.push(col.clone());
            col = col.mul(if k % 2 == 0 { &self.f1 } else { &self.f2 });
        }
        TriMatrix::from_columns(&cols, dim)
    }

    /// Group law matching the matrix product. With rho = f1·f2 and the right
    /// factor split into parity sections, the product triple is
    /// ⟨g·Ge(rho); f1·F1o(rho), f2·F2o(rho)⟩. The odd sections are one
    /// compressed coefficient short, but the leading multiplication by a
    /// valuation-1 series never reads the one unreliable top coefficient.
    pub fn mul(&self, rhs: &DoubleTriple) -> DoubleTriple {
        let rho = self.f1.mul(&self.f2);
        let at_rho = |s: Series| s.compose(&rho).expect("rho has positive valuation");
        DoubleTriple {
            g: self.g.mul(&at_rho(rhs.g.section(2, 0))),
            f1: self.f1.mul(&at_rho(rhs.f1.section(2, 1))),
            f2: self.f2.mul(&at_rho(rhs.f2.section(2, 1))),
        }
    }

    /// Group inverse. Reversion happens in the compressed domain of
    /// rho = f1·f2; components come back through parity-preserving aeration,
    /// so no square root is ever taken.
    pub fn inv(&self) -> DoubleTriple {
        let n = self.order();
        let rho = self.f1.mul(&self.f2);
        let rbar = rho.section(2, 0).revert().expect("rho has valuation exactly 2");
        let back = |s: &Series, r: usize| {
            let hat = s
                .section(2, r)
                .compose(&rbar)
                .expect("rbar has positive valuation");
            hat.mul_inv().expect("unit constant term").aerate(2, r, n)
        };
        DoubleTriple {
            g: back(&self.g, 0),
            f1: back(&self.f1, 1),
            f2: back(&self.f2, 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::gf;

    const N: usize = 12;

    fn sample_a() -> DoubleTriple {
        DoubleTriple::new(
            gf("1/(1-x^2)", N).unwrap(),
            gf("x*(1+x^2)", N).unwrap(),
            gf("x/(1-x^2)", N).unwrap(),
        )
        .unwrap()
    }

    fn sample_b() -> DoubleTriple {
        DoubleTriple::new(
            gf("1+2*x^2-x^4", N).unwrap(),
            gf("x/(1-x^4)", N).unwrap(),
            gf("x-x^3+2*x^5", N).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn membership_is_enforced() {
        // odd g
        assert!(DoubleTriple::new(
            gf("1+x", 8).unwrap(),
            gf("x", 8).unwrap(),
            gf("x", 8).unwrap()
        )
        .is_err());
        // even f1
        assert!(DoubleTriple::new(
            gf("1", 8).unwrap(),
            gf("x+x^2", 8).unwrap(),
            gf("x", 8).unwrap()
        )
        .is_err());
        // f2 of valuation 3
        assert!(DoubleTriple::new(
            gf("1", 8).unwrap(),
            gf("x", 8).unwrap(),
            gf("x^3", 8).unwrap()
        )
        .is_err());
    }

    #[test]
    fn columns_alternate_multipliers() {
        let a = sample_a();
        let m = a.build(9).unwrap();
        for k in 0..8 {
            let this = m.column_series(k);
            let mult = if k % 2 == 0 { a.f1() } else { a.f2() };
            let next = this.mul(&mult.truncated(8));
            assert_eq!(next, m.column_series(k + 1), "column {}", k + 1);
        }
    }

    #[test]
    fn product_matches_matrix_product() {
        let a = sample_a();
        let b = sample_b();
        let ab = a.mul(&b);
        assert_eq!(
            ab.build(12).unwrap(),
            a.build(12).unwrap().mul(&b.build(12).unwrap())
        );
        let id = DoubleTriple::identity(N);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
        // associativity on the samples
        let c = ab.clone();
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn inverse_matches_matrix_inverse() {
        for t in [sample_a(), sample_b()] {
            let inv = t.inv();
            assert_eq!(
                inv.build(12).unwrap(),
                t.build(12).unwrap().inverse().unwrap()
            );
            assert_eq!(t.mul(&inv), DoubleTriple::identity(N));
            assert_eq!(inv.mul(&t), DoubleTriple::identity(N));
        }
    }

    #[test]
    fn even_g_slice_is_a_subgroup() {
        let p = DoubleTriple::new(
            gf("1/(1-x^2)", N).unwrap(),
            gf("x", N).unwrap(),
            gf("x", N).unwrap(),
        )
        .unwrap();
        let q = DoubleTriple::new(
            gf("1+3*x^2+x^6", N).unwrap(),
            gf("x", N).unwrap(),
            gf("x", N).unwrap(),
        )
        .unwrap();
        let pq = p.mul(&q);
        assert_eq!(pq.g(), &p.g().mul(q.g()));
        assert_eq!(pq.f1(), &Series::x(N));
        assert_eq!(pq.f2(), &Series::x(N));
    }
}
