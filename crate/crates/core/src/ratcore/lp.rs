//! Dense two-phase simplex with Bland's least-index rule.
//!
//! No presolve and no floating point: with an exact scalar type every pivot,
//! ratio test and termination decision is exact, and Bland's rule rules out
//! cycling on degenerate problems.

use super::matrix::Vector;
use super::scalar::Field;
use crate::error::{dim_err, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpResult<T> {
    pub status: LpStatus,
    pub point: Option<Vector<T>>,
    pub objective_value: Option<T>,
}

/// Outcome of [`lp_solve_standard`].
#[derive(Clone, Debug, PartialEq)]
pub enum StandardOutcome<T> {
    Optimal(Vec<T>),
    Infeasible,
    Unbounded,
}

/// Maximizes `objective · x` over free variables `x` subject to
/// `row · x = rhs` for every `eq` entry and `row · x ≥ rhs` for every `ineq` entry.
pub fn lp_solve<T: Field>(
    objective: &Vector<T>,
    eq: &[(Vector<T>, T)],
    ineq: &[(Vector<T>, T)],
) -> Result<LpResult<T>> {
    let d = objective.dim();
    if let Some((row, _)) = eq.iter().chain(ineq).find(|(row, _)| row.dim() != d) {
        return Err(dim_err(format!(
            "constraint row of dim {} for {} variables",
            row.dim(),
            d
        )));
    }

    // x = x⁺ − x⁻, one surplus column per inequality.
    let n_vars = 2 * d + ineq.len();
    let mut a = Vec::with_capacity(eq.len() + ineq.len());
    let mut b = Vec::with_capacity(eq.len() + ineq.len());
    for (row, rhs) in eq {
        let mut r: Vec<T> = row.iter().cloned().collect();
        r.extend(row.iter().map(|x| -x.clone()));
        r.extend(std::iter::repeat_n(T::zero(), ineq.len()));
        a.push(r);
        b.push(rhs.clone());
    }
    for (s, (row, rhs)) in ineq.iter().enumerate() {
        let mut r: Vec<T> = row.iter().cloned().collect();
        r.extend(row.iter().map(|x| -x.clone()));
        r.extend((0..ineq.len()).map(|i| if i == s { -T::one() } else { T::zero() }));
        a.push(r);
        b.push(rhs.clone());
    }
    let mut c: Vec<T> = objective.iter().cloned().collect();
    c.extend(objective.iter().map(|x| -x.clone()));
    c.extend(std::iter::repeat_n(T::zero(), ineq.len()));
    debug_assert_eq!(c.len(), n_vars);

    Ok(match lp_solve_standard(&c, &a, &b)? {
        StandardOutcome::Optimal(x) => {
            let point: Vector<T> = (0..d).map(|j| x[j].clone() - x[d + j].clone()).collect();
            let value = objective.dot(&point)?;
            LpResult { status: LpStatus::Optimal, point: Some(point), objective_value: Some(value) }
        }
        StandardOutcome::Infeasible => {
            LpResult { status: LpStatus::Infeasible, point: None, objective_value: None }
        }
        StandardOutcome::Unbounded => {
            LpResult { status: LpStatus::Unbounded, point: None, objective_value: None }
        }
    })
}

/// Maximizes `c · x` subject to `a x = b`, `x ≥ 0`.
pub fn lp_solve_standard<T: Field>(c: &[T], a: &[Vec<T>], b: &[T]) -> Result<StandardOutcome<T>> {
    let n = c.len();
    if a.len() != b.len() || a.iter().any(|r| r.len() != n) {
        return Err(dim_err("standard-form LP shape"));
    }
    let m = a.len();
    let width = n + m + 1;
    let rhs = n + m;

    let mut tab: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let flip = *bi < T::zero();
            let mut r = Vec::with_capacity(width);
            r.extend(row.iter().map(|x| if flip { -x.clone() } else { x.clone() }));
            r.extend((0..m).map(|j| if j == i { T::one() } else { T::zero() }));
            r.push(if flip { -bi.clone() } else { bi.clone() });
            r
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase I: maximize −Σ artificials.
    let phase1: Vec<T> = (0..n + m).map(|j| if j < n { T::zero() } else { -T::one() }).collect();
    let bounded = run(&mut tab, &mut basis, &phase1, n + m);
    debug_assert!(bounded, "phase I is bounded above by zero");
    let infeasibility = basis
        .iter()
        .zip(&tab)
        .filter(|(&bv, _)| bv >= n)
        .fold(T::zero(), |acc, (_, row)| acc + row[rhs].clone());
    if !infeasibility.is_zero() {
        return Ok(StandardOutcome::Infeasible);
    }

    // Drive remaining (zero-valued) artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < tab.len() {
        if basis[i] >= n {
            match (0..n).find(|&j| !tab[i][j].is_zero()) {
                Some(j) => pivot(&mut tab, &mut basis, i, j),
                None => {
                    tab.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut cost: Vec<T> = c.to_vec();
    cost.extend(std::iter::repeat_n(T::zero(), m));
    if !run(&mut tab, &mut basis, &cost, n) {
        return Ok(StandardOutcome::Unbounded);
    }
    let mut x = vec![T::zero(); n];
    for (row, &bv) in tab.iter().zip(&basis) {
        if bv < n {
            x[bv] = row[rhs].clone();
        }
    }
    Ok(StandardOutcome::Optimal(x))
}

/// Simplex iterations with Bland's rule; only columns `< eligible` may enter.
/// Returns `false` on an unbounded ray.
fn run<T: Field>(tab: &mut [Vec<T>], basis: &mut [usize], cost: &[T], eligible: usize) -> bool {
    let rhs = cost.len();
    loop {
        let entering = (0..eligible).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let reduced = tab
                .iter()
                .zip(basis.iter())
                .filter(|(row, _)| !row[j].is_zero())
                .fold(cost[j].clone(), |acc, (row, &bv)| acc - cost[bv].clone() * row[j].clone());
            reduced > T::zero()
        });
        let Some(j) = entering else {
            return true;
        };

        let mut leave: Option<(usize, T)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[j] <= T::zero() {
                continue;
            }
            let ratio = row[rhs].clone() / row[j].clone();
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((r, _)) = leave else {
            return false;
        };
        pivot(tab, basis, r, j);
    }
}

fn pivot<T: Field>(tab: &mut [Vec<T>], basis: &mut [usize], r: usize, j: usize) {
    let inv = T::one() / tab[r][j].clone();
    for v in tab[r].iter_mut() {
        if !v.is_zero() {
            *v = v.clone() * inv.clone();
        }
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[j].is_zero() {
            continue;
        }
        let f = row[j].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v = v.clone() - f.clone() * pv.clone();
            }
        }
    }
    basis[r] = j;
}
