use std::ops::Index;

use num_rational::BigRational;

use super::scalar::{rat, Field};
use crate::error::{dim_err, Error, Result};

/// Dense column vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<T> {
    entries: Vec<T>,
}

impl<T> Vector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Vector { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.entries.iter()
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.entries[i]
    }
}

impl<T> FromIterator<T> for Vector<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Vector::new(iter.into_iter().collect())
    }
}

impl<T> From<Vec<T>> for Vector<T> {
    fn from(entries: Vec<T>) -> Self {
        Vector::new(entries)
    }
}

/// Componentwise combination selector for [`pointwise`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointwiseKind {
    Product,
    Min,
}

impl<T: Field> Vector<T> {
    pub fn zeros(dim: usize) -> Self {
        Vector::new(vec![T::zero(); dim])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    fn check_same_dim(&self, other: &Self, op: &str) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(dim_err(format!("{op}: {} vs {}", self.dim(), other.dim())));
        }
        Ok(())
    }

    pub fn dot(&self, other: &Self) -> Result<T> {
        self.check_same_dim(other, "dot")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other, "add")?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other, "sub")?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.entries.iter().map(|a| a.clone() * factor.clone()).collect()
    }

    /// All entries strictly positive.
    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(|x| *x > T::zero())
    }

    /// All entries nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| *x >= T::zero())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect()
    }
}

/// Componentwise product `a * b` or minimum `a ∧ b`.
pub fn pointwise<T: Field>(a: &Vector<T>, b: &Vector<T>, kind: PointwiseKind) -> Result<Vector<T>> {
    a.check_same_dim(b, "pointwise")?;
    Ok(match kind {
        PointwiseKind::Product => a.zip_with(b, |x, y| x.clone() * y.clone()),
        PointwiseKind::Min => a.zip_with(b, |x, y| if y < x { y.clone() } else { x.clone() }),
    })
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n_rows: usize,
    n_cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.n_cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub(crate) fn require_square(&self, op: &str) -> Result<usize> {
        if !self.is_square() {
            return Err(dim_err(format!(
                "{op} needs a square matrix, got {}x{}",
                self.n_rows, self.n_cols
            )));
        }
        Ok(self.n_rows)
    }
}

impl<T: Field> Matrix<T> {
    pub fn new(n_rows: usize, n_cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != n_rows * n_cols {
            return Err(dim_err(format!(
                "{} entries for a {n_rows}x{n_cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { n_rows, n_cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(dim_err("matrix must have at least one row and one column"));
        }
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(dim_err("ragged rows"));
        }
        Ok(Matrix { n_rows, n_cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Matrix { n_rows, n_cols, data: vec![T::zero(); n_rows * n_cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in diag.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn column(&self, j: usize) -> Vector<T> {
        (0..self.n_rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.n_rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n_cols != other.n_rows {
            return Err(dim_err(format!(
                "product of {}x{} and {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let mut out = Self::zeros(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for l in 0..self.n_cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.n_cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(l, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector<T>) -> Result<Vector<T>> {
        if self.n_cols != v.dim() {
            return Err(dim_err(format!(
                "{}x{} matrix times vector of dim {}",
                self.n_rows,
                self.n_cols,
                v.dim()
            )));
        }
        Ok((0..self.n_rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.iter())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn scale(&self, factor: &T) -> Self {
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().map(|x| x.clone() * factor.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols) {
            return Err(dim_err("matrix sum of different shapes"));
        }
        Ok(Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    /// Rows `rows` and columns `cols` of `self`, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.iter().any(|&i| i >= self.n_rows) || cols.iter().any(|&j| j >= self.n_cols) {
            return Err(Error::IndexOutOfRange("submatrix index".into()));
        }
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Ok(Matrix { n_rows: rows.len(), n_cols: cols.len(), data })
    }

    /// Builds a matrix whose column `j` is `columns[j]`.
    pub fn from_columns(columns: &[Vector<T>]) -> Result<Self> {
        let n_cols = columns.len();
        let n_rows = columns.first().map_or(0, Vector::dim);
        if columns.iter().any(|c| c.dim() != n_rows) {
            return Err(dim_err("columns of different lengths"));
        }
        let mut m = Self::zeros(n_rows, n_cols);
        for (j, c) in columns.iter().enumerate() {
            for i in 0..n_rows {
                m.set(i, j, c[i].clone());
            }
        }
        Ok(m)
    }
}

impl Matrix<BigRational> {
    /// Convenience constructor from small integer literals.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Self::from_rows(rows).expect("well-formed integer literal matrix")
    }
}

impl Vector<BigRational> {
    pub fn from_ints(entries: &[i64]) -> Self {
        entries.iter().map(|&x| rat(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::scalar::rat;

    #[test]
    fn pointwise_examples() {
        let a = Vector::from_ints(&[1, -2]);
        let p = pointwise(&a, &Vector::from_ints(&[3, 0]), PointwiseKind::Product).unwrap();
        assert_eq!(p, Vector::from_ints(&[3, 0]));
        let m = pointwise(&a, &Vector::from_ints(&[0, 5]), PointwiseKind::Min).unwrap();
        assert_eq!(m, Vector::from_ints(&[0, -2]));
        let z = pointwise(&a, &Vector::zeros(2), PointwiseKind::Product).unwrap();
        assert!(z.is_zero());
        assert!(pointwise(&a, &Vector::zeros(3), PointwiseKind::Min).is_err());
    }

    #[test]
    fn shapes_are_validated() {
        assert!(Matrix::<BigRational>::from_rows(vec![vec![rat(1)], vec![rat(1), rat(2)]]).is_err());
        assert!(Matrix::<BigRational>::from_rows(vec![]).is_err());
        assert!(Matrix::new(2, 2, vec![rat(1); 3]).is_err());
        let a = Matrix::from_ints(&[&[1, 2, 3]]);
        assert!(a.mul(&a).is_err());
        assert!(a.mul_vec(&Vector::from_ints(&[1, 1])).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), Matrix::from_ints(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), Matrix::from_ints(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.mul_vec(&Vector::from_ints(&[1, -1])).unwrap(), Vector::from_ints(&[-1, -1]));
        assert_eq!(
            Matrix::from_columns(&[a.column(1), a.column(0)]).unwrap(),
            Matrix::from_ints(&[&[2, 1], &[4, 3]])
        );
    }
}
