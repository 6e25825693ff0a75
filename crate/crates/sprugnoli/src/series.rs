//! Truncated formal power series over the exact rationals.
//!
//! Every series carries coefficients of x^0 ..= x^order for a fixed
//! truncation order. Binary ring operations demand equal orders and panic
//! otherwise; shape-changing operations (section, sqrt, composition) state
//! the order of their result explicitly. Nothing here ever fabricates a
//! coefficient it cannot know exactly.

use crate::error::{Error, Result};
use crate::rational::Rational;
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series from explicit coefficients; the order is coeffs.len() - 1.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Series { coeffs }
    }

    /// Integer coefficients, order = ints.len() - 1. Test and fixture helper.
    pub fn from_ints(ints: &[i64]) -> Self {
        Self::from_coeffs(ints.iter().map(|&v| crate::rational::int(v)).collect())
    }

    /// A polynomial, zero-padded to the requested order. Padding is exact
    /// here because the argument is a polynomial by declaration, unlike a
    /// truncated series whose deeper coefficients are unknown.
    pub fn poly(ints: &[i64], order: usize) -> Self {
        assert!(ints.len() <= order + 1, "polynomial degree beyond truncation order");
        let mut coeffs: Vec<Rational> = ints.iter().map(|&v| crate::rational::int(v)).collect();
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    pub fn x(order: usize) -> Self {
        assert!(order >= 1, "x does not fit in a constant-only series");
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        assert!(k <= order, "monomial degree beyond truncation order");
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[k] = c;
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The functional [x^n].
    pub fn coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::CoeffOutOfRange { index: n, order: self.order() })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Smallest index with a nonzero coefficient; order + 1 when all vanish.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Unit: nonzero constant term.
    pub fn in_f0(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Zero constant term, nonzero linear term.
    pub fn in_f1(&self) -> bool {
        self.coeffs.len() > 1 && self.coeffs[0].is_zero() && !self.coeffs[1].is_zero()
    }

    /// Valuation exactly r (leading coefficient nonzero by definition).
    pub fn in_fr(&self, r: usize) -> bool {
        self.valuation() == r
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    fn check_order(&self, rhs: &Series, op: &str) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "{op} needs equal truncation orders ({} vs {})",
            self.order(),
            rhs.order()
        );
    }

    pub fn add(&self, rhs: &Series) -> Series {
        self.check_order(rhs, "add");
        Series::from_coeffs(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        self.check_order(rhs, "sub");
        Series::from_coeffs(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul(&self, rhs: &Series) -> Series {
        self.check_order(rhs, "mul");
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Reciprocal of a unit, by the standard convolution recurrence.
    pub fn mul_inv(&self) -> Result<Series> {
        if !self.in_f0() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = self.coeffs[0].recip();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !out[m - k].is_zero() {
                    acc += &self.coeffs[k] * &out[m - k];
                }
            }
            out[m] = -acc / &self.coeffs[0];
        }
        Ok(Series { coeffs: out })
    }

    /// self(inner), by Horner over truncated series. The result carries the
    /// inner's order and is exact up to
    /// min(inner.order, (self.order + 1) * valuation(inner) - 1); callers
    /// relying on the full order must feed an outer long enough, or multiply
    /// the result by something of compensating valuation.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if inner.valuation() == 0 {
            return Err(Error::CompositionUndefined);
        }
        let mut acc = Series::zero(inner.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse: the t with self(t) = x and t(0) = 0, computed
    /// coefficient by coefficient. [x^m] self(t) is linear in t_m with slope
    /// coeff(self, 1), so each step reads the defect off a composition
    /// truncated at m.
    pub fn revert(&self) -> Result<Series> {
        if !self.in_f1() {
            return Err(Error::ReversionUndefined);
        }
        let n = self.order();
        let mut t = Series::zero(n);
        t.coeffs[1] = self.coeffs[1].recip();
        for m in 2..=n {
            let partial = self.truncated(m).compose(&t.truncated(m))?;
            t.coeffs[m] = -(&partial.coeffs[m] / &self.coeffs[1]);
        }
        Ok(t)
    }

    /// Square root with positive leading coefficient. Needs even valuation 2v
    /// and a leading coefficient that is the square of a rational; the result
    /// has order self.order - v (deeper coefficients are not determined by a
    /// truncated radicand). The zero series is its own square root.
    pub fn sqrt(&self) -> Result<Series> {
        let v = self.valuation();
        if v > self.order() {
            return Ok(self.clone());
        }
        if v % 2 != 0 {
            return Err(Error::NoRationalSqrt("odd valuation"));
        }
        let lead = &self.coeffs[v];
        if lead.is_negative() {
            return Err(Error::NoRationalSqrt("negative leading coefficient"));
        }
        let ns = lead.numer().sqrt();
        let ds = lead.denom().sqrt();
        if &(&ns * &ns) != lead.numer() || &(&ds * &ds) != lead.denom() {
            return Err(Error::NoRationalSqrt("leading coefficient is not a rational square"));
        }
        // self = x^v * u with u a unit; r = sqrt(u) via r_m = (u_m - sum) / (2 r_0).
        let u_ord = self.order() - v;
        let mut r = vec![Rational::zero(); u_ord + 1];
        r[0] = Rational::new(ns, ds);
        let two_r0 = &r[0] + &r[0];
        for m in 1..=u_ord {
            let mut acc = self.coeffs[v + m].clone();
            for k in 1..m {
                acc -= &r[k] * &r[m - k];
            }
            r[m] = acc / &two_r0;
        }
        let half = v / 2;
        let mut out = vec![Rational::zero(); self.order() - half + 1];
        for (i, c) in r.into_iter().enumerate() {
            out[half + i] = c;
        }
        Ok(Series { coeffs: out })
    }

    /// Coefficient i of the result is coeff(self, m*i + r); the order shrinks
    /// to floor((order - r) / m). For m = 2 these are the compressed even
    /// (r = 0) and odd (r = 1) bisections h^e and h^o, with
    /// h(x) = h^e(x^2) + x h^o(x^2).
    pub fn section(&self, m: usize, r: usize) -> Series {
        assert!(m >= 1 && r < m, "section needs m >= 1 and r < m");
        let n = self.order();
        if n < r {
            return Series::zero(0);
        }
        let ord = (n - r) / m;
        Series::from_coeffs((0..=ord).map(|i| self.coeffs[m * i + r].clone()).collect())
    }

    /// Left inverse of section: coefficient m*i + r of the result is
    /// coeff(self, i), everything else 0. Panics if the target order asks for
    /// source coefficients beyond this truncation (they would be guesses).
    pub fn aerate(&self, m: usize, r: usize, target_order: usize) -> Series {
        assert!(m >= 1 && r < m, "aerate needs m >= 1 and r < m");
        let mut out = vec![Rational::zero(); target_order + 1];
        let mut i = 0;
        while m * i + r <= target_order {
            assert!(
                i <= self.order(),
                "aeration to order {target_order} needs coefficient {i} beyond truncation {}",
                self.order()
            );
            out[m * i + r] = self.coeffs[i].clone();
            i += 1;
        }
        Series { coeffs: out }
    }

    /// Prefix of the series at a smaller (or equal) order.
    pub fn truncated(&self, order: usize) -> Series {
        assert!(order <= self.order(), "truncated cannot extend a series");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Multiply by x at fixed order; the top coefficient falls off the end.
    pub(crate) fn mul_x(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Rational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.coeffs.len() - 1]);
        Series { coeffs }
    }

    /// Divide by x; the constant term must vanish. The order drops by one.
    pub(crate) fn div_x(&self) -> Series {
        assert!(self.coeffs[0].is_zero(), "div_x needs a vanishing constant term");
        assert!(self.coeffs.len() > 1, "div_x needs a positive order");
        Series { coeffs: self.coeffs[1..].to_vec() }
    }

}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}]", self)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl std::ops::Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl std::ops::Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl std::ops::Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl std::ops::Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

/// Truncated expansion of the Jacobi continued fraction
/// 1 / (1 - b0 x - l0 x^2 / (1 - b1 x - l1 x^2 / ...)), with both coefficient
/// lists repeated cyclically. Evaluated bottom-up from depth ceil(order/2)+1,
/// which pins coefficients 0..=order because each lambda level first
/// contributes at x^2 relative to its parent.
pub fn jacobi_cf(b: &[Rational], lam: &[Rational], order: usize) -> Result<Series> {
    assert!(!b.is_empty() && !lam.is_empty(), "cyclic coefficient lists must be nonempty");
    let depth = (order + 1) / 2 + 1;
    let mut f = Series::one(order);
    for j in (0..depth).rev() {
        let bj = &b[j % b.len()];
        let lj = &lam[j % lam.len()];
        let mut den = Series::one(order).sub(&Series::monomial(bj.clone(), 1, order));
        if order >= 2 {
            den = den.sub(&f.mul_x().mul_x().scale(lj));
        }
        // den always keeps constant term 1, so inversion cannot actually fail.
        f = den.mul_inv().map_err(|_| Error::SingularContinuedFraction)?;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    const N: usize = 12;

    fn geometric() -> Series {
        // 1/(1-x)
        Series::one(N).sub(&Series::x(N)).mul_inv().unwrap()
    }

    fn fibonacci() -> Series {
        // 1/(1-x-x^2)
        Series::poly(&[1, -1, -1], N).mul_inv().unwrap()
    }

    /// Independent convolution, no skipping tricks.
    fn conv_oracle(a: &Series, b: &Series) -> Vec<Rational> {
        let n = a.order();
        (0..=n)
            .map(|m| (0..=m).map(|k| a.coeffs()[k].clone() * &b.coeffs()[m - k]).sum())
            .collect()
    }

    /// Lagrange inversion: [x^n] revert(f) = (1/n) [x^{n-1}] (x/f)^n.
    fn lagrange_revert(f: &Series) -> Series {
        let n = f.order();
        let q = f.div_x().mul_inv().unwrap(); // x/f, one order short
        let mut out = vec![Rational::zero(); n + 1];
        for m in 1..=n {
            let mut p = Series::one(q.order());
            for _ in 0..m {
                p = p.mul(&q);
            }
            if m - 1 <= p.order() {
                out[m] = p.coeffs()[m - 1].clone() / int(m as i64);
            }
        }
        Series::from_coeffs(out)
    }

    fn ints(s: &Series, k: usize) -> Vec<Rational> {
        s.coeffs()[..k].to_vec()
    }

    fn expect_ints(s: &Series, want: &[i64]) {
        let got = ints(s, want.len());
        let want: Vec<Rational> = want.iter().map(|&v| int(v)).collect();
        assert_eq!(got, want, "series prefix mismatch: {s}");
    }

    #[test]
    fn coeff_extraction() {
        assert_eq!(*geometric().coeff(5).unwrap(), int(1));
        // x/(1-x)^2 = 0,1,2,3,...
        let g = geometric();
        let s = g.mul(&g).mul_x();
        assert_eq!(*s.coeff(3).unwrap(), int(3));
        assert_eq!(conv_oracle(&g, &g)[2], int(3));
        assert_eq!(*Series::zero(N).coeff(0).unwrap(), int(0));
        assert!(matches!(
            Series::one(3).coeff(4),
            Err(Error::CoeffOutOfRange { index: 4, order: 3 })
        ));
    }

    #[test]
    fn ring_ops() {
        let a = Series::poly(&[1, 1], N);
        let b = Series::poly(&[1, -1], N);
        expect_ints(&a.mul(&b), &[1, 0, -1, 0, 0]);
        let g = geometric();
        let sq = g.mul(&g);
        expect_ints(&sq, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(sq.coeffs(), &conv_oracle(&g, &g)[..]);
        assert_eq!(g.mul(&Series::one(N)), g);
    }

    #[test]
    #[should_panic(expected = "equal truncation orders")]
    fn mul_rejects_mixed_orders() {
        let _ = Series::one(4).mul(&Series::one(5));
    }

    #[test]
    fn reciprocals() {
        expect_ints(&geometric(), &[1, 1, 1, 1, 1]);
        assert_eq!(Series::one(N).mul_inv().unwrap(), Series::one(N));
        expect_ints(&fibonacci(), &[1, 1, 2, 3, 5, 8, 13, 21, 34]);
        assert!(matches!(Series::x(N).mul_inv(), Err(Error::NotInvertible)));
        let s = Series::poly(&[3, 1, -4, 2], N);
        assert_eq!(s.mul(&s.mul_inv().unwrap()), Series::one(N));
    }

    #[test]
    fn composition() {
        // 1/(1-x) at x/(1-x) gives (1-x)/(1-2x): 1,1,2,4,8,...
        let inner = geometric().mul_x();
        let c = geometric().compose(&inner).unwrap();
        expect_ints(&c, &[1, 1, 2, 4, 8, 16]);
        // term-by-term oracle: sum of outer_k * inner^k
        let outer = geometric();
        let mut acc = Series::zero(N);
        let mut p = Series::one(N);
        for k in 0..=N {
            acc = acc.add(&p.scale(&outer.coeffs()[k]));
            p = p.mul(&inner);
        }
        assert_eq!(c, acc);
        // identity inner
        let s = fibonacci();
        assert_eq!(s.compose(&Series::x(N)).unwrap(), s);
        assert!(matches!(s.compose(&Series::one(N)), Err(Error::CompositionUndefined)));
    }

    #[test]
    fn reversion() {
        // revert(x/(1-x)) = x/(1+x)
        let f = geometric().mul_x();
        let r = f.revert().unwrap();
        expect_ints(&r, &[0, 1, -1, 1, -1, 1]);
        assert_eq!(r, lagrange_revert(&f));
        // revert(x - x^2) = shifted Catalan
        let g = Series::poly(&[0, 1, -1], N);
        let r = g.revert().unwrap();
        expect_ints(&r, &[0, 1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(r, lagrange_revert(&g));
        assert_eq!(Series::x(N).revert().unwrap(), Series::x(N));
        // both composition directions recover x
        assert_eq!(g.compose(&r).unwrap(), Series::x(N));
        assert_eq!(r.compose(&g).unwrap(), Series::x(N));
        assert!(matches!(Series::one(N).revert(), Err(Error::ReversionUndefined)));
    }

    #[test]
    fn square_roots() {
        let s = Series::poly(&[1, 0, 6, 0, 1], N);
        let r = s.sqrt().unwrap();
        expect_ints(&r, &[1, 0, 3, 0, -4, 0, 12]);
        assert_eq!(r.mul(&r), s);
        // sqrt(x^2) = x, with the order dropping by the half-valuation
        let x2 = Series::monomial(int(1), 2, N);
        let r = x2.sqrt().unwrap();
        assert_eq!(r.order(), N - 1);
        assert_eq!(r, Series::x(N - 1));
        // (1 - sqrt(1-4x))/(2x) = Catalan numbers
        let s = Series::poly(&[1, -4], N);
        let half = Series::one(N).sub(&s.sqrt().unwrap());
        let cat = half.div_x().scale(&rat(1, 2));
        expect_ints(&cat, &[1, 1, 2, 5, 14, 42]);
        // Catalan recurrence oracle: c_{n+1} = sum c_k c_{n-k}
        for n in 0..cat.order() {
            let s: Rational =
                (0..=n).map(|k| cat.coeffs()[k].clone() * &cat.coeffs()[n - k]).sum();
            assert_eq!(s, cat.coeffs()[n + 1]);
        }
        assert!(Series::x(N).sqrt().is_err());
        assert!(Series::poly(&[2], N).sqrt().is_err());
        assert!(Series::poly(&[-1], N).sqrt().is_err());
        assert_eq!(Series::zero(N).sqrt().unwrap(), Series::zero(N));
    }

    #[test]
    fn sections_and_aerations() {
        let f = fibonacci();
        expect_ints(&f.section(2, 0), &[1, 2, 5, 13, 34]);
        expect_ints(&f.section(2, 1), &[1, 3, 8, 21, 55]);
        assert_eq!(f.section(2, 0).order(), N / 2);
        // (xg)^e = x * g^o and (xg)^o = g^e on the shared exact window
        let xf = f.mul_x();
        let xgo = f.section(2, 1).mul_x();
        assert_eq!(xf.section(2, 0).truncated(xgo.order()), xgo);
        let ge = f.section(2, 0);
        assert_eq!(xf.section(2, 1), ge.truncated(xf.section(2, 1).order()));
        // bisection partition
        let back = f
            .section(2, 0)
            .aerate(2, 0, N)
            .add(&f.section(2, 1).aerate(2, 1, N));
        assert_eq!(back, f);
        expect_ints(&Series::from_ints(&[1, 1, 1]).aerate(2, 0, 4), &[1, 0, 1, 0, 1]);
        expect_ints(
            &Series::from_ints(&[1, 1, 2, 3]).aerate(2, 1, 7),
            &[0, 1, 0, 1, 0, 2, 0, 3],
        );
        assert_eq!(f.aerate(2, 1, N).section(2, 1), f.truncated((N - 1) / 2));
        // three-part partition
        let parts: Vec<Series> = (0..3).map(|r| f.section(3, r).aerate(3, r, N)).collect();
        assert_eq!(parts[0].add(&parts[1]).add(&parts[2]), f);
    }

    #[test]
    fn parity_predicates() {
        assert!(Series::from_ints(&[1, 0, 2, 0, 3]).is_even());
        assert!(Series::from_ints(&[0, 1, 0, 2]).is_odd());
        assert!(Series::zero(4).is_even() && Series::zero(4).is_odd());
        assert!(!fibonacci().is_even());
        assert_eq!(Series::zero(4).valuation(), 5);
        assert_eq!(Series::monomial(int(7), 3, 8).valuation(), 3);
        assert!(geometric().in_f0());
        assert!(geometric().mul_x().in_f1());
        assert!(Series::monomial(int(1), 2, 8).in_fr(2));
    }

    #[test]
    fn jacobi_expansions() {
        let s = jacobi_cf(&[int(1), int(-1)], &[int(1)], N).unwrap();
        expect_ints(&s, &[1, 1, 2, 2, 5, 5, 15, 15, 51, 51]);
        let s = jacobi_cf(&[int(0)], &[int(0)], 8).unwrap();
        expect_ints(&s, &[1, 0, 0, 0]);
        // all-zero b with unit lambda gives the aerated Catalan numbers
        let s = jacobi_cf(&[int(0)], &[int(1)], 8).unwrap();
        expect_ints(&s, &[1, 0, 1, 0, 2, 0, 5, 0, 14]);
    }
}
