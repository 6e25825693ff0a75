//! Sprugnoli triples (g, f1, f2): g with a unit constant term, f1 of
//! valuation 1, f2 odd of valuation 1. Column k of the array expands
//! g · f1^(k mod 2) · (x·f2)^⌊k/2⌋, so consecutive columns alternately
//! multiply by f1 and by x·f2/f1.
//!
//! The group operations are presented in the literature through the formal
//! square root √(x·f2). Every occurrence here is eliminated by parity
//! bookkeeping: compositions happen at the even series x·f2 or x·r2, and
//! reversion runs in the compressed domain of (x·f2)'s even part. All
//! results stay inside rational coefficients and are exact at the shared
//! truncation order.

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::rational::Rational;
use crate::series::Series;
use num::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SprugnoliTriple {
    g: Series,
    f1: Series,
    f2: Series,
}

/// Everything the inverse computation produces along the way.
/// (1, r1, r2) is the inverse of (1, f1, f2); w, s1, s2 assemble the full
/// inverse triple, with s2 = r2 always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseParts {
    pub r1: Series,
    pub r2: Series,
    pub w: Series,
    pub s1: Series,
    pub s2: Series,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumsMode {
    Rows,
    Diagonals,
}

impl SprugnoliTriple {
    pub fn new(g: Series, f1: Series, f2: Series) -> Result<Self> {
        if !g.in_f0() {
            return Err(Error::Membership(
                "first component must have a nonzero constant term".into(),
            ));
        }
        if !f1.in_f1() {
            return Err(Error::Membership(
                "second component must have valuation exactly 1".into(),
            ));
        }
        if !f2.in_f1() || !f2.is_odd() {
            return Err(Error::Membership(
                "third component must be odd with valuation exactly 1".into(),
            ));
        }
        assert_eq!(g.order(), f1.order(), "components must share one truncation order");
        assert_eq!(g.order(), f2.order(), "components must share one truncation order");
        Ok(SprugnoliTriple { g, f1, f2 })
    }

    pub fn identity(order: usize) -> Self {
        SprugnoliTriple {
            g: Series::one(order),
            f1: Series::x(order),
            f2: Series::x(order),
        }
    }

    /// (g, x, x): acts by multiplying every row gf by g.
    pub fn appell(g: Series) -> Result<Self> {
        let n = g.order();
        SprugnoliTriple::new(g, Series::x(n), Series::x(n))
    }

    /// (1, f1, f2): the unit-g slice.
    pub fn associated(f1: Series, f2: Series) -> Result<Self> {
        let n = f1.order();
        SprugnoliTriple::new(Series::one(n), f1, f2)
    }

    /// (1, f1, x).
    pub fn only_f1(f1: Series) -> Result<Self> {
        let n = f1.order();
        SprugnoliTriple::new(Series::one(n), f1, Series::x(n))
    }

    /// (1, x, f2).
    pub fn only_f2(f2: Series) -> Result<Self> {
        let n = f2.order();
        SprugnoliTriple::new(Series::one(n), Series::x(n), f2)
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

    fn xf2(&self) -> Series {
        self.f2.mul_x()
    }

    /// Column schema g, g·f1, g·(xf2), g·f1·(xf2), g·(xf2)², ...
    pub fn build(&self, dim: usize) -> Result<TriMatrix> {
        let xf2 = self.xf2();
        let mut cols = Vec::with_capacity(dim);
        let mut base = self.g.clone();
        for k in 0..dim {
            if k % 2 == 0 {
                if k > 0 {
                    base = base.mul(&xf2);
                }
                cols.push(base.clone());
            } else {
                cols.push(base.mul(&self.f1));
            }
        }
        TriMatrix::from_columns(&cols, dim)
    }

    /// The even-column and odd-column halves, each zero on the other parity.
    /// The even half is the horizontal aeration of the stretched pair
    /// (g, xf2); the odd half aerates (g·f1, xf2) and starts with a zero row.
    pub fn aeration_split(&self, dim: usize) -> Result<(TriMatrix, TriMatrix)> {
        let xf2 = self.xf2();
        let zero = Series::zero(self.order());
        let mut even_cols = Vec::with_capacity(dim);
        let mut odd_cols = Vec::with_capacity(dim);
        let mut base = self.g.clone();
        for k in 0..dim {
            if k % 2 == 0 {
                if k > 0 {
                    base = base.mul(&xf2);
                }
                even_cols.push(base.clone());
                odd_cols.push(zero.clone());
            } else {
                even_cols.push(zero.clone());
                odd_cols.push(base.mul(&self.f1));
            }
        }
        Ok((
            TriMatrix::from_columns(&even_cols, dim)?,
            TriMatrix::from_columns(&odd_cols, dim)?,
        ))
    }

    /// Fundamental action: the array times the coefficient column of h is
    /// g·hᵉ(xf2) + g·f1·hᵒ(xf2).
    ///
    /// The odd bisection hᵒ is one compressed coefficient shorter than hᵉ,
    /// so its composition is unreliable in the very top slot; the factor
    /// g·f1 has valuation 1 and never reads that slot, keeping the sum exact.
    pub fn apply(&self, h: &Series) -> Series {
        assert!(
            h.order() >= self.order(),
            "action needs h through the triple's truncation order"
        );
        let xf2 = self.xf2();
        let he = h.section(2, 0).compose(&xf2).expect("xf2 has positive valuation");
        let ho = h.section(2, 1).compose(&xf2).expect("xf2 has positive valuation");
        &self.g.mul(&he) + &self.g.mul(&self.f1).mul(&ho)
    }

    /// Group law matching the matrix product. For a·(u, v1, v2):
    /// first = a·u, second = (a·(u·v1))/first, third = f2·v2ᵒ(x·f2).
    /// The third component is what (1/x)·√(xf2)·v2(√(xf2)) collapses to
    /// when v2 is odd, and is structurally odd again.
    pub fn mul(&self, rhs: &SprugnoliTriple) -> SprugnoliTriple {
        let first = self.apply(&rhs.g);
        let numer = self.apply(&rhs.g.mul(&rhs.f1));
        let second = numer.mul(&first.mul_inv().expect("g(0)·u(0) is nonzero"));
        let v2o = rhs
            .f2
            .section(2, 1)
            .compose(&self.xf2())
            .expect("xf2 has positive valuation");
        let third = self.f2.mul(&v2o);
        SprugnoliTriple::new(first, second, third).expect("the group is closed")
    }

    /// All inverse ingredients: r2 from reversion in the compressed domain,
    /// r1 from the linear solve, then w, s1 from the parity split of 1/g
    /// composed at x·r2.
    pub fn inverse_parts(&self) -> InverseParts {
        let r2 = compute_r2(&self.f2).expect("f2 was validated");
        let r1 = compute_r1(&self.f1, &r2).expect("f1 was validated");
        let xr2 = r2.mul_x();
        let gi = self.g.mul_inv().expect("g has a nonzero constant term");
        let gie = gi.section(2, 0).compose(&xr2).expect("xr2 has positive valuation");
        let gio = gi.section(2, 1).compose(&xr2).expect("xr2 has positive valuation");
        let w = &gie + &r1.mul(&gio);
        assert!(w.in_f0(), "w(0) = 1/g(0) must be a unit");
        let s1 = (&xr2.mul(&gio) + &r1.mul(&gie)).mul(&w.mul_inv().expect("w is a unit"));
        InverseParts { r1, r2: r2.clone(), w, s1, s2: r2 }
    }

    pub fn inv(&self) -> SprugnoliTriple {
        let parts = self.inverse_parts();
        SprugnoliTriple::new(parts.w, parts.s1, parts.s2).expect("the group is closed")
    }

    /// Row sums expand g(1+f1)/(1−x·f2); diagonal sums (n-th sum over
    /// t_{n−k,k}) expand g(1+x·f1)/(1−x³·f2). Both match the matrix sums at
    /// every index below the dimension.
    pub fn sums_gf(&self, mode: SumsMode) -> Series {
        let one = Series::one(self.order());
        match mode {
            SumsMode::Rows => {
                let den = (&one - &self.xf2()).mul_inv().expect("unit constant term");
                self.g.mul(&(&one + &self.f1)).mul(&den)
            }
            SumsMode::Diagonals => {
                let x3f2 = self.xf2().mul_x().mul_x();
                let den = (&one - &x3f2).mul_inv().expect("unit constant term");
                self.g.mul(&(&one + &self.f1.mul_x())).mul(&den)
            }
        }
    }
}

/// r2 is the odd series with x·r2 the compositional inverse of x·f2 in the
/// compressed (x²) domain: writing x·f2 = σ(x²), coeff(r2, 2i+1) is
/// coefficient i+1 of revert(σ). Even coefficients are zero by construction.
pub fn compute_r2(f2: &Series) -> Result<Series> {
    if !f2.in_f1() || !f2.is_odd() {
        return Err(Error::Membership(
            "r2 needs an odd series with valuation exactly 1".into(),
        ));
    }
    let n = f2.order();
    let odd = f2.section(2, 1);
    let mut sc = Vec::with_capacity(odd.order() + 2);
    sc.push(Rational::zero());
    sc.extend(odd.coeffs().iter().cloned());
    let sigma = Series::from_coeffs(sc);
    let sbar = sigma.revert()?;
    Ok(sbar.div_x().aerate(2, 1, n))
}

/// r1 = (x − f1ᵉ(x·r2)) / f1ᵒ(x·r2); the denominator has the unit constant
/// term coeff(f1, 1), and the valuation-1 numerator keeps the quotient exact
/// even though the odd bisection is one compressed coefficient short.
pub fn compute_r1(f1: &Series, r2: &Series) -> Result<Series> {
    if !f1.in_f1() {
        return Err(Error::Membership(
            "r1 needs a series with valuation exactly 1".into(),
        ));
    }
    let xr2 = r2.mul_x();
    let f1e = f1.section(2, 0).compose(&xr2)?;
    let f1o = f1.section(2, 1).compose(&xr2)?;
    let num = &Series::x(f1.order()) - &f1e;
    Ok(num.mul(&f1o.mul_inv()?))
}

/// When the compressed even part of x·f2 has a rational square root E,
/// f1 = √(x·f2) = x·E(x²) exists and (g, f1, f2) coincides with the ordinary
/// Riordan array (g, f1): every column is g·f1^k.
pub fn from_riordan_sqrt_case(g: &Series, f2: &Series) -> Result<SprugnoliTriple> {
    let root = f2.section(2, 1).sqrt()?;
    let f1 = root.aerate(2, 1, f2.order());
    SprugnoliTriple::new(g.clone(), f1, f2.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::gf;
    use crate::rational::int;
    use crate::riordan::{RiordanPair, StretchedPair};

    const N: usize = 12;

    fn example() -> SprugnoliTriple {
        SprugnoliTriple::new(
            gf("1/(1-x)", N).unwrap(),
            gf("x*(1+x)/(1-x)", N).unwrap(),
            gf("x/(1-x^2)", N).unwrap(),
        )
        .unwrap()
    }

    fn second_triple() -> SprugnoliTriple {
        SprugnoliTriple::new(
            gf("(1+2*x)/(1-4*x)", N).unwrap(),
            gf("x*(1+3*x)/(1-2*x)", N).unwrap(),
            gf("x*(1+x^2)/(1-x^2)", N).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn membership_is_enforced() {
        let x = || gf("x", 8).unwrap();
        assert!(SprugnoliTriple::new(x(), x(), x()).is_err());
        assert!(SprugnoliTriple::new(gf("1", 8).unwrap(), gf("x^2", 8).unwrap(), x()).is_err());
        // even contamination in f2
        assert!(SprugnoliTriple::new(gf("1", 8).unwrap(), x(), gf("x+x^2", 8).unwrap()).is_err());
        assert!(compute_r2(&gf("x+x^2", 8).unwrap()).is_err());
    }

    #[test]
    fn example_matrix_and_column_schema() {
        let m = example().build(9).unwrap();
        let expected = TriMatrix::from_int_rows(&[
            &[1],
            &[1, 1],
            &[1, 3, 1],
            &[1, 5, 1, 1],
            &[1, 7, 2, 3, 1],
            &[1, 9, 2, 6, 1, 1],
            &[1, 11, 3, 10, 3, 3, 1],
            &[1, 13, 3, 15, 3, 7, 1, 1],
            &[1, 15, 4, 21, 6, 13, 4, 3, 1],
        ]);
        assert_eq!(m, expected);
        assert_eq!(
            SprugnoliTriple::identity(8).build(9).unwrap(),
            TriMatrix::identity(9)
        );
        // column 2m expands g·(xf2)^m, column 2m+1 multiplies f1 on top
        let t = second_triple();
        let mt = t.build(9).unwrap();
        let mut even_col = t.g().clone();
        for m_ in 0..4usize {
            if m_ > 0 {
                even_col = even_col.mul(&t.f2().mul_x());
            }
            assert_eq!(mt.column_series(2 * m_), even_col.truncated(8));
            assert_eq!(
                mt.column_series(2 * m_ + 1),
                even_col.mul(t.f1()).truncated(8)
            );
        }
    }

    #[test]
    fn aeration_split_halves() {
        let t = example();
        let (even, odd) = t.aeration_split(9).unwrap();
        let expected_even = TriMatrix::from_int_rows(&[
            &[1],
            &[1, 0],
            &[1, 0, 1],
            &[1, 0, 1, 0],
            &[1, 0, 2, 0, 1],
            &[1, 0, 2, 0, 1, 0],
            &[1, 0, 3, 0, 3, 0, 1],
            &[1, 0, 3, 0, 3, 0, 1, 0],
            &[1, 0, 4, 0, 6, 0, 4, 0, 1],
        ]);
        let expected_odd = TriMatrix::from_int_rows(&[
            &[0],
            &[0, 1],
            &[0, 3, 0],
            &[0, 5, 0, 1],
            &[0, 7, 0, 3, 0],
            &[0, 9, 0, 6, 0, 1],
            &[0, 11, 0, 10, 0, 3, 0],
            &[0, 13, 0, 15, 0, 7, 0, 1],
            &[0, 15, 0, 21, 0, 13, 0, 3, 0],
        ]);
        assert_eq!(even, expected_even);
        assert_eq!(odd, expected_odd);
        // the two halves add back to the full array
        let full = t.build(9).unwrap();
        for i in 0..9 {
            for j in 0..=i {
                assert_eq!(even.entry(i, j) + odd.entry(i, j), *full.entry(i, j));
            }
        }
        // even half = horizontal aeration of the stretched pair (g, xf2)
        let stretched = StretchedPair::new(t.g().clone(), t.f2().mul_x()).unwrap();
        let sm = stretched.build(9).unwrap();
        for i in 0..9 {
            for k in 0..=i / 2 {
                assert_eq!(even.entry(i, 2 * k), sm.entry(i, k));
            }
        }
    }

    #[test]
    fn apply_is_the_matrix_action() {
        let t = example();
        let fib = gf("1/(1-x-x^2)", N).unwrap();
        let res = t.apply(&fib);
        assert_eq!(
            &res.coeffs()[..9],
            &[1, 2, 6, 11, 26, 45, 100, 170, 370].map(int)
        );
        let cf = gf("(1+x)*(1+x+x^3)/(1-5*x^2+5*x^4)", N).unwrap();
        assert_eq!(cf, res);
        let m = t.build(9).unwrap();
        assert_eq!(&res.coeffs()[..9], &m.mat_vec(&fib.coeffs()[..9])[..]);
        // identity action
        let h = gf("(2+x)/(1-3*x+x^2)", N).unwrap();
        assert_eq!(SprugnoliTriple::identity(N).apply(&h), h);
    }

    #[test]
    fn product_matches_matrix_product() {
        let a = example();
        let b = second_triple();
        assert_eq!(
            a.mul(&b).build(9).unwrap(),
            a.build(9).unwrap().mul(&b.build(9).unwrap())
        );
        assert_eq!(
            b.mul(&a).build(9).unwrap(),
            b.build(9).unwrap().mul(&a.build(9).unwrap())
        );
        let id = SprugnoliTriple::identity(N);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
        // (g,x,x)·(h,x,x) = (g·h, x, x)
        let p = SprugnoliTriple::appell(gf("1/(1-2*x)", N).unwrap()).unwrap();
        let q = SprugnoliTriple::appell(gf("1+5*x+x^3", N).unwrap()).unwrap();
        let pq = p.mul(&q);
        assert_eq!(pq.g(), &p.g().mul(q.g()));
        assert_eq!(pq, SprugnoliTriple::appell(p.g().mul(q.g())).unwrap());
        // canonical factorization (g,x,x)·(1,f1,f2) = (g,f1,f2)
        let factored = SprugnoliTriple::appell(a.g().clone())
            .unwrap()
            .mul(&SprugnoliTriple::associated(a.f1().clone(), a.f2().clone()).unwrap());
        assert_eq!(factored, a);
    }

    #[test]
    fn third_component_and_column_action_laws() {
        let a = example();
        let b = second_triple();
        let ab = a.mul(&b);
        // third(a·b) = f2 · v2ᵒ(x·f2), odd
        assert!(ab.f2().is_odd());
        let v2o = b.f2().section(2, 1).compose(&a.f2().mul_x()).unwrap();
        assert_eq!(ab.f2(), &a.f2().mul(&v2o));
        // a·(u·(x·v2)^m) = (a·u)·(x·third)^m for m = 1, 2, 3
        let au = a.apply(b.g());
        let xthird = ab.f2().mul_x();
        let xv2 = b.f2().mul_x();
        let mut lhs_arg = b.g().clone();
        let mut rhs = au;
        for m in 1..=3 {
            lhs_arg = lhs_arg.mul(&xv2);
            rhs = rhs.mul(&xthird);
            assert_eq!(a.apply(&lhs_arg), rhs, "column action at m={m}");
        }
    }

    #[test]
    fn r2_examples_and_lemma() {
        let n = N;
        let r2 = compute_r2(&gf("x/(1-x^2)", n).unwrap()).unwrap();
        assert_eq!(r2, gf("x/(1+x^2)", n).unwrap());
        assert_eq!(compute_r2(&Series::x(n)).unwrap(), Series::x(n));
        // surd case: f2 = x(1+x²)/(1−x²)
        let f2 = gf("x*(1+x^2)/(1-x^2)", n).unwrap();
        let r2h = compute_r2(&f2).unwrap();
        assert_eq!(r2h, gf("(sqrt(1+6*x^2+x^4)-x^2-1)/(2*x)", n).unwrap());
        // defining lemma r2 = x / f2ᵒ(x·r2)
        for r2x in [&r2, &r2h] {
            let f2_ = if r2x == &r2 {
                gf("x/(1-x^2)", n).unwrap()
            } else {
                f2.clone()
            };
            let f2o = f2_.section(2, 1).compose(&r2x.mul_x()).unwrap();
            assert_eq!(r2x.mul(&f2o), Series::x(n));
        }
    }

    #[test]
    fn r1_examples() {
        let r2 = compute_r2(&gf("x/(1-x^2)", N).unwrap()).unwrap();
        let r1 = compute_r1(&gf("x/(1+x)", N).unwrap(), &r2).unwrap();
        assert_eq!(r1, gf("x*(1+x)/(1+x^2)", N).unwrap());
        assert_eq!(
            compute_r1(&Series::x(N), &Series::x(N)).unwrap(),
            Series::x(N)
        );
        // (1, r1, r2) sends f1 back to x
        let undo = SprugnoliTriple::associated(r1, r2).unwrap();
        assert_eq!(undo.apply(&gf("x/(1+x)", N).unwrap()), Series::x(N));
        // surd case
        let f2 = gf("x*(1+x^2)/(1-x^2)", N).unwrap();
        let r2h = compute_r2(&f2).unwrap();
        let r1h = compute_r1(&gf("x*(1+3*x)/(1-2*x)", N).unwrap(), &r2h).unwrap();
        let cf = gf(
            "(5*(1+2*x)*sqrt(1+6*x^2+x^4)-(5+65*x^2+46*x^3))/(2*(5+42*x^2))",
            N,
        )
        .unwrap();
        assert_eq!(r1h, cf);
    }

    #[test]
    fn inverse_examples() {
        // (1/(1−x), x/(1+x), x/(1−x²))⁻¹ = ((1−x)/(1+x²), x/(1−x), x/(1+x²))
        let t = SprugnoliTriple::new(
            gf("1/(1-x)", N).unwrap(),
            gf("x/(1+x)", N).unwrap(),
            gf("x/(1-x^2)", N).unwrap(),
        )
        .unwrap();
        let parts = t.inverse_parts();
        assert_eq!(parts.w, gf("(1-x)/(1+x^2)", N).unwrap());
        assert_eq!(parts.s1, gf("x/(1-x)", N).unwrap());
        assert_eq!(parts.s2, gf("x/(1+x^2)", N).unwrap());
        assert_eq!(parts.s2, parts.r2);
        let inv = t.inv();
        // the forward array is the palindromic triangle; its inverse is the
        // signed variant, here obtained by exact matrix inversion
        let palindromic = TriMatrix::from_int_rows(&[
            &[1],
            &[1, 1],
            &[1, 0, 1],
            &[1, 1, 1, 1],
            &[1, 0, 2, 0, 1],
            &[1, 1, 2, 2, 1, 1],
            &[1, 0, 3, 0, 3, 0, 1],
            &[1, 1, 3, 3, 3, 3, 1, 1],
            &[1, 0, 4, 0, 6, 0, 4, 0, 1],
        ]);
        assert_eq!(t.build(9).unwrap(), palindromic);
        assert_eq!(inv.build(9).unwrap(), palindromic.inverse().unwrap());
        assert_eq!(
            inv.build(9).unwrap().mul(&t.build(9).unwrap()),
            TriMatrix::identity(9)
        );
        // identity and involution
        let id = SprugnoliTriple::identity(N);
        assert_eq!(id.inv(), id);
        let invol = SprugnoliTriple::new(
            gf("1/(1-x)", N).unwrap(),
            gf("-x/(1+x)", N).unwrap(),
            gf("-x/(1-x^2)", N).unwrap(),
        )
        .unwrap();
        assert_eq!(invol.inv(), invol);
        let mi = invol.build(12).unwrap();
        assert_eq!(mi.mul(&mi), TriMatrix::identity(12));
    }

    #[test]
    fn hard_inverse_round_trip() {
        let t = second_triple();
        let inv = t.inv();
        assert_eq!(
            inv.build(9).unwrap().mul(&t.build(9).unwrap()),
            TriMatrix::identity(9)
        );
        assert_eq!(t.inv().inv(), t);
        assert_eq!(t.mul(&inv), SprugnoliTriple::identity(N));
    }

    #[test]
    fn subgroup_closure() {
        let n = N;
        // (g,x,x)
        let a = SprugnoliTriple::appell(gf("1/(1-3*x)", n).unwrap()).unwrap();
        let b = SprugnoliTriple::appell(gf("1+x-x^2", n).unwrap()).unwrap();
        for t in [a.mul(&b), a.inv()] {
            assert_eq!(t.f1(), &Series::x(n));
            assert_eq!(t.f2(), &Series::x(n));
        }
        // (1,f1,f2)
        let a = SprugnoliTriple::associated(
            gf("x*(1+x)/(1-x)", n).unwrap(),
            gf("x/(1-x^2)", n).unwrap(),
        )
        .unwrap();
        let b = SprugnoliTriple::associated(
            gf("x/(1-2*x)", n).unwrap(),
            gf("x*(1+x^2)", n).unwrap(),
        )
        .unwrap();
        for t in [a.mul(&b), a.inv()] {
            assert_eq!(t.g(), &Series::one(n));
        }
        // (1,x,f2)
        let a = SprugnoliTriple::only_f2(gf("x/(1-x^2)", n).unwrap()).unwrap();
        let b = SprugnoliTriple::only_f2(gf("x+x^3+2*x^5", n).unwrap()).unwrap();
        for t in [a.mul(&b), a.inv()] {
            assert_eq!(t.g(), &Series::one(n));
            assert_eq!(t.f1(), &Series::x(n));
        }
        // (1,f1,x)
        let a = SprugnoliTriple::only_f1(gf("x*(1+x)/(1-x)", n).unwrap()).unwrap();
        let b = SprugnoliTriple::only_f1(gf("x/(1+2*x)", n).unwrap()).unwrap();
        for t in [a.mul(&b), a.inv()] {
            assert_eq!(t.g(), &Series::one(n));
            assert_eq!(t.f2(), &Series::x(n));
        }
        // closed-form inverse on the (1,f1,x) slice
        let f1 = gf("x*(1+x)/(1-x)", n).unwrap();
        let x2 = Series::monomial(int(1), 2, n);
        let f1e = f1.section(2, 0).compose(&x2).unwrap();
        let f1o = f1.section(2, 1).compose(&x2).unwrap();
        let s1 = (&Series::x(n) - &f1e).mul(&f1o.mul_inv().unwrap());
        assert_eq!(a.inv().f1(), &s1);
    }

    #[test]
    fn sums_in_both_modes() {
        let t = example();
        let m = t.build(9).unwrap();
        let rows = t.sums_gf(SumsMode::Rows);
        for n in 0..9 {
            let s: Rational = m.row(n).iter().sum();
            assert_eq!(s, *rows.coeff(n).unwrap(), "row {n}");
        }
        assert_eq!(&rows.coeffs()[..4], &[1, 2, 5, 8].map(int));
        let diags = t.sums_gf(SumsMode::Diagonals);
        for n in 0..9 {
            let s: Rational = (0..=n / 2).map(|k| m.entry(n - k, k).clone()).sum();
            assert_eq!(s, *diags.coeff(n).unwrap(), "diagonal {n}");
        }
        assert_eq!(
            &diags.coeffs()[..9],
            &[1, 1, 2, 4, 7, 9, 13, 17, 24].map(int)
        );
        // identity rows: (1+x)/(1−x²) = 1/(1−x)
        let id_rows = SprugnoliTriple::identity(N).sums_gf(SumsMode::Rows);
        assert_eq!(id_rows, gf("1/(1-x)", N).unwrap());
    }

    #[test]
    fn riordan_sqrt_case() {
        // f2 = x: f1 = x, plain Riordan (g, x)
        let g = gf("1/(1-2*x)", N).unwrap();
        let t = from_riordan_sqrt_case(&g, &Series::x(N)).unwrap();
        assert_eq!(t.f1(), &Series::x(N));
        // f2 = x/(1−x²): f1 = x/√(1−x²)
        let f2 = gf("x/(1-x^2)", N).unwrap();
        let t = from_riordan_sqrt_case(&g, &f2).unwrap();
        let rp = RiordanPair::new(g.clone(), t.f1().clone()).unwrap();
        assert_eq!(t.build(8).unwrap(), rp.build(8).unwrap());
        assert_eq!(t.f1(), &gf("x/sqrt(1-x^2)", N).unwrap());
        // the inverse's middle slot is the compositional inverse of f1
        let inv = t.inv();
        assert_eq!(inv.f1(), &t.f1().revert().unwrap());
        // no rational square root when the leading odd coefficient is not a square
        assert!(from_riordan_sqrt_case(&g, &gf("2*x", N).unwrap()).is_err());
    }
}
