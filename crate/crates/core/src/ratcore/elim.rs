use super::matrix::{Matrix, Vector};
use super::scalar::Field;
use crate::error::{dim_err, Result};

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division is exact, so integer input keeps integer intermediates and
/// the sign of the result is exact for exact scalar types.
pub fn det<T: Field>(m: &Matrix<T>) -> Result<T> {
    let n = m.require_square("det")?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let v = (row[j].clone() * pivot_row[k].clone()
                    - row[k].clone() * pivot_row[j].clone())
                    / prev.clone();
                row[j] = v;
            }
            row[k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Outcome of an exact linear solve `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolveResult<T> {
    Unique(Vector<T>),
    /// `particular + span(kernel_basis)`; the basis is linearly independent and non-empty.
    Affine {
        particular: Vector<T>,
        kernel_basis: Vec<Vector<T>>,
    },
    Inconsistent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveKind {
    Unique,
    Affine,
    Inconsistent,
}

impl<T> LinearSolveResult<T> {
    pub fn kind(&self) -> SolveKind {
        match self {
            LinearSolveResult::Unique(_) => SolveKind::Unique,
            LinearSolveResult::Affine { .. } => SolveKind::Affine,
            LinearSolveResult::Inconsistent => SolveKind::Inconsistent,
        }
    }

    pub fn particular(&self) -> Option<&Vector<T>> {
        match self {
            LinearSolveResult::Unique(x) => Some(x),
            LinearSolveResult::Affine { particular, .. } => Some(particular),
            LinearSolveResult::Inconsistent => None,
        }
    }

    pub fn kernel_basis(&self) -> &[Vector<T>] {
        match self {
            LinearSolveResult::Affine { kernel_basis, .. } => kernel_basis,
            _ => &[],
        }
    }
}

/// Reduced row echelon form of `rows` in place; returns pivot columns.
/// Only the first `n_cols` columns are eligible as pivots.
fn rref<T: Field>(rows: &mut [Vec<T>], n_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = T::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.clone() - f.clone() * pv.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact solve of `a x = b` by reduced row echelon form.
pub fn solve_linear<T: Field>(a: &Matrix<T>, b: &Vector<T>) -> Result<LinearSolveResult<T>> {
    if a.n_rows() != b.dim() {
        return Err(dim_err(format!(
            "system has {} rows but right-hand side has dim {}",
            a.n_rows(),
            b.dim()
        )));
    }
    let n = a.n_cols();
    let mut rows: Vec<Vec<T>> = (0..a.n_rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if rows[pivots.len()..].iter().any(|r| !r[n].is_zero()) {
        return Ok(LinearSolveResult::Inconsistent);
    }

    let mut particular = vec![T::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = rows[r][n].clone();
    }
    let particular = Vector::new(particular);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Ok(LinearSolveResult::Unique(particular));
    }
    let kernel_basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![T::zero(); n];
            v[f] = T::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -rows[r][f].clone();
            }
            Vector::new(v)
        })
        .collect();
    Ok(LinearSolveResult::Affine { particular, kernel_basis })
}

/// Basis of `{x : a x = 0}`; empty when `a` has full column rank.
pub fn nullspace<T: Field>(a: &Matrix<T>) -> Vec<Vector<T>> {
    let zero = Vector::zeros(a.n_rows());
    solve_linear(a, &zero)
        .map(|r| r.kernel_basis().to_vec())
        .unwrap_or_default()
}

pub fn rank<T: Field>(a: &Matrix<T>) -> usize {
    let mut rows = a.to_rows();
    rref(&mut rows, a.n_cols()).len()
}

/// Exact inverse, `None` when the matrix is singular.
pub fn inverse<T: Field>(m: &Matrix<T>) -> Result<Option<Matrix<T>>> {
    let n = m.require_square("inverse")?;
    let mut rows: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if pivots.len() < n {
        return Ok(None);
    }
    let data = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
    Matrix::new(n, n, data).map(Some)
}
