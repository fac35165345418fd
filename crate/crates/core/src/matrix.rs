//! Dense matrices over a scalar backend, plus the exact column-echelon
//! machinery used by the rank and containment tests.

use crate::scalar::{Rat, Scalar};
use crate::Error;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut S {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "add {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + other.at(i, j).clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "mul {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<S> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.clone() * other.at(k, j).clone();
                    *out.at_mut(i, j) = out.at(i, j).clone() + t;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| s.clone() * self.at(i, j).clone())
    }

    pub fn trace(&self) -> Result<S, Error> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "trace of {}x{}",
                self.rows, self.cols
            )));
        }
        let mut t = S::zero();
        for i in 0..self.rows {
            t = t + self.at(i, i).clone();
        }
        Ok(t)
    }

    /// tr(self * other) without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> Result<S, Error> {
        if self.cols != other.rows || self.rows != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "trace of {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut t = S::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                t = t + self.at(i, j).clone() * other.at(j, i).clone();
            }
        }
        Ok(t)
    }

    /// Gauss-Jordan inverse. `None` when singular. Pivot selection takes the
    /// first entry that is nonzero at the backend's own notion of zero, so for
    /// floats this is suitable only for well-conditioned inputs.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Matrix<S> = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.at(col, col).clone().inv()?;
            for j in 0..n {
                *a.at_mut(col, j) = a.at(col, j).clone() * p.clone();
                *inv.at_mut(col, j) = inv.at(col, j).clone() * p.clone();
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for j in 0..n {
                    let t = f.clone() * a.at(col, j).clone();
                    *a.at_mut(r, j) = a.at(r, j).clone() - t;
                    let t = f.clone() * inv.at(col, j).clone();
                    *inv.at_mut(r, j) = inv.at(r, j).clone() - t;
                }
            }
        }
        Some(inv)
    }

    pub fn transpose_inverse(&self) -> Option<Self> {
        self.inverse().map(|m| m.transpose())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        *self.at(i, j) == S::one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    pub fn convert<T: Scalar>(&self) -> Matrix<T>
    where
        S: AsRat,
    {
        Matrix::from_fn(self.rows, self.cols, |i, j| T::from_rat(self.at(i, j).as_rat()))
    }
}

/// Scalars that expose an exact rational view; only the exact backend does.
pub trait AsRat {
    fn as_rat(&self) -> &Rat;
}

impl AsRat for Rat {
    fn as_rat(&self) -> &Rat {
        self
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incremental exact column-space basis in echelon form. Columns are reduced
/// against the stored pivots; a nonzero residual becomes a new pivot.
pub struct ColumnEchelon {
    len: usize,
    // (pivot row index, normalized column with 1 at the pivot row)
    pivots: Vec<(usize, Vec<Rat>)>,
}

impl ColumnEchelon {
    pub fn new(len: usize) -> Self {
        ColumnEchelon { len, pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `col` against the current basis; returns the residual.
    pub fn reduce(&self, col: &[Rat]) -> Vec<Rat> {
        assert_eq!(col.len(), self.len, "column length mismatch");
        let mut v = col.to_vec();
        for (prow, pcol) in &self.pivots {
            let c = v[*prow].clone();
            if num::Zero::is_zero(&c) {
                continue;
            }
            for (x, p) in v.iter_mut().zip(pcol.iter()) {
                *x -= c.clone() * p;
            }
        }
        v
    }

    /// Returns true when the column lies in the current span.
    pub fn contains(&self, col: &[Rat]) -> bool {
        self.reduce(col).iter().all(num::Zero::is_zero)
    }

    /// Insert a column; returns true when it increased the rank.
    pub fn insert(&mut self, col: &[Rat]) -> bool {
        let v = self.reduce(col);
        let Some(prow) = v.iter().position(|x| !num::Zero::is_zero(x)) else {
            return false;
        };
        let inv = v[prow].recip();
        let norm: Vec<Rat> = v.iter().map(|x| x * inv.clone()).collect();
        // keep the existing pivots reduced against the new one
        for (_, pcol) in &mut self.pivots {
            let c = pcol[prow].clone();
            if num::Zero::is_zero(&c) {
                continue;
            }
            for (x, n) in pcol.iter_mut().zip(norm.iter()) {
                *x -= c.clone() * n;
            }
        }
        self.pivots.push((prow, norm));
        true
    }
}

/// Exact rank of a set of columns.
pub fn column_rank(len: usize, cols: impl IntoIterator<Item = Vec<Rat>>) -> usize {
    let mut ech = ColumnEchelon::new(len);
    for c in cols {
        ech.insert(&c);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(rat_int).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn mul_and_trace() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, m(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(ab.trace().unwrap(), rat_int(5));
        assert!(a.mul(&Matrix::zero(3, 3)).is_err());
    }

    #[test]
    fn inverse_exact() {
        let a = m(vec![vec![1, -1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(*inv.at(0, 0), rat(1, 2));
        assert!(a.mul(&inv).unwrap().is_identity());
        let singular = m(vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn echelon_rank_and_containment() {
        let c1 = vec![rat_int(1), rat_int(0), rat_int(2)];
        let c2 = vec![rat_int(0), rat_int(1), rat_int(1)];
        let c3 = vec![rat_int(2), rat_int(3), rat_int(7)]; // 2*c1 + 3*c2
        let c4 = vec![rat_int(0), rat_int(0), rat_int(1)];
        let mut ech = ColumnEchelon::new(3);
        assert!(ech.insert(&c1));
        assert!(ech.insert(&c2));
        assert!(!ech.insert(&c3));
        assert!(ech.contains(&c3));
        assert!(!ech.contains(&c4));
        assert_eq!(ech.rank(), 2);
        assert_eq!(column_rank(3, vec![c1, c2, c3, c4]), 3);
    }
}
