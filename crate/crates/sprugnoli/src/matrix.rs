//! Dense lower-triangular matrices of exact rationals, shared by every
//! array family, with exact product and forward-substitution inverse.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::Series;
use num::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct TriMatrix {
    dim: usize,
    rows: Vec<Vec<Rational>>,
}

impl TriMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut row = vec![Rational::zero(); dim];
                row[i] = Rational::one();
                row
            })
            .collect();
        TriMatrix { dim, rows }
    }

    /// Square storage; everything strictly above the diagonal must be zero.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let dim = rows.len();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} is not of width {dim}");
            for (j, v) in row.iter().enumerate().skip(i + 1) {
                assert!(v.is_zero(), "entry ({i},{j}) above the diagonal is nonzero");
            }
        }
        TriMatrix { dim, rows }
    }

    /// Rows from integer literals, ragged up to the diagonal. Fixture helper.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let full = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                assert!(row.len() <= i + 1, "row {i} extends past the diagonal");
                let mut r: Vec<Rational> = row.iter().map(|&v| crate::rational::int(v)).collect();
                r.resize(dim, Rational::zero());
                r
            })
            .collect();
        TriMatrix { dim, rows: full }
    }

    /// Entry (i, k) = [x^i] cols[k]. The columns must reach x^{dim-1}.
    pub fn from_columns(cols: &[Series], dim: usize) -> Result<Self> {
        assert_eq!(cols.len(), dim, "need one generating function per column");
        for col in cols {
            if col.order() + 1 < dim {
                return Err(Error::DimensionExceedsOrder { dim, order: col.order() });
            }
        }
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|k| {
                        let v = cols[k].coeffs()[i].clone();
                        assert!(
                            k <= i || v.is_zero(),
                            "column {k} has valuation below {k}; not triangular"
                        );
                        v
                    })
                    .collect()
            })
            .collect();
        Ok(TriMatrix { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Column j read back as a Series of order dim - 1.
    pub fn column_series(&self, j: usize) -> Series {
        Series::from_coeffs((0..self.dim).map(|i| self.rows[i][j].clone()).collect())
    }

    pub fn mul(&self, rhs: &TriMatrix) -> TriMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product needs equal dimensions");
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        // both factors are triangular, so k runs j..=i (empty when j > i)
                        (j..=i).map(|k| &self.rows[i][k] * &rhs.rows[k][j]).sum()
                    })
                    .collect()
            })
            .collect();
        TriMatrix { dim: self.dim, rows }
    }

    pub fn mat_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim, "vector length must match the dimension");
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact inverse by forward substitution down each column.
    pub fn inverse(&self) -> Result<TriMatrix> {
        for i in 0..self.dim {
            if self.rows[i][i].is_zero() {
                return Err(Error::SingularMatrix(i));
            }
        }
        let mut inv = vec![vec![Rational::zero(); self.dim]; self.dim];
        for j in 0..self.dim {
            inv[j][j] = self.rows[j][j].recip();
            for i in j + 1..self.dim {
                let mut acc = Rational::zero();
                for k in j..i {
                    if !self.rows[i][k].is_zero() && !inv[k][j].is_zero() {
                        acc += &self.rows[i][k] * &inv[k][j];
                    }
                }
                inv[i][j] = -acc / &self.rows[i][i];
            }
        }
        Ok(TriMatrix { dim: self.dim, rows: inv })
    }

    /// Leading principal submatrix.
    pub fn crop(&self, dim: usize) -> TriMatrix {
        assert!(dim <= self.dim, "crop cannot grow a matrix");
        TriMatrix {
            dim,
            rows: self.rows[..dim].iter().map(|r| r[..dim].to_vec()).collect(),
        }
    }
}

impl fmt::Debug for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TriMatrix(dim={})", self.dim)?;
        for row in &self.rows {
            writeln!(f, "  [{}]", row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))?;
        }
        Ok(())
    }
}

/// Square matrix without a triangularity constraint; production matrices
/// live here since they carry one superdiagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    rows: Vec<Vec<Rational>>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let dim = rows.len();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} is not of width {dim}");
        }
        SquareMatrix { dim, rows }
    }

    /// Rows from integer literals, zero-padded to the right.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let full = rows
            .iter()
            .map(|row| {
                assert!(row.len() <= dim, "row wider than the dimension");
                let mut r: Vec<Rational> = row.iter().map(|&v| crate::rational::int(v)).collect();
                r.resize(dim, Rational::zero());
                r
            })
            .collect();
        SquareMatrix { dim, rows: full }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn crop(&self, dim: usize) -> SquareMatrix {
        assert!(dim <= self.dim, "crop cannot grow a matrix");
        SquareMatrix {
            dim,
            rows: self.rows[..dim].iter().map(|r| r[..dim].to_vec()).collect(),
        }
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix(dim={})", self.dim)?;
        for row in &self.rows {
            writeln!(f, "  [{}]", row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))?;
        }
        Ok(())
    }
}
