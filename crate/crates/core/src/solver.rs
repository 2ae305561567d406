//! Exact EHLCP solver by complementarity branch enumeration.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::classes::is_m;
use crate::error::{dim_err, Error, Result};
use crate::ratcore::{inverse, lp_solve, nullspace, pointwise, solve_linear, LinearSolveResult, LpStatus, PointwiseKind};
use crate::representatives::MatrixTuple;
use crate::{RatMatrix, RatVector, Rational};

/// Default cap on `k·n`, i.e. at most `2^20` branch patterns.
pub const MAX_BRANCH_BITS: usize = 20;

/// `C₀x₀ = q + Σ Cᵢxᵢ`, `x₀ ∧ x₁ = 0`, `(dⱼ − xⱼ) ∧ xⱼ₊₁ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct EhlcpInstance {
    tuple: MatrixTuple,
    d: Vec<RatVector>,
    q: RatVector,
}

impl EhlcpInstance {
    pub fn new(tuple: MatrixTuple, d: Vec<RatVector>, q: RatVector) -> Result<Self> {
        let (n, k) = (tuple.n(), tuple.k());
        if d.len() != k - 1 {
            return Err(dim_err(format!("expected {} vectors in d for k = {k}, got {}", k - 1, d.len())));
        }
        if let Some(bad) = d.iter().find(|v| v.dim() != n) {
            return Err(dim_err(format!("d vector of dim {} for n = {n}", bad.dim())));
        }
        if q.dim() != n {
            return Err(dim_err(format!("q of dim {} for n = {n}", q.dim())));
        }
        if !d.iter().all(|v| v.is_positive()) {
            return Err(Error::Invalid("d must be strictly positive".into()));
        }
        Ok(EhlcpInstance { tuple, d, q })
    }

    pub fn tuple(&self) -> &MatrixTuple {
        &self.tuple
    }

    pub fn d(&self) -> &[RatVector] {
        &self.d
    }

    pub fn q(&self) -> &RatVector {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.tuple.n()
    }

    pub fn k(&self) -> usize {
        self.tuple.k()
    }

    /// `dⱼ` for `1 ≤ j ≤ k−1`.
    pub fn bound(&self, j: usize) -> &RatVector {
        &self.d[j - 1]
    }
}

/// `(x₀, …, x_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SolutionTuple {
    pub xs: Vec<RatVector>,
}

impl SolutionTuple {
    pub fn new(xs: Vec<RatVector>) -> Self {
        SolutionTuple { xs }
    }

    pub fn zeros(n: usize, k: usize) -> Self {
        SolutionTuple { xs: vec![RatVector::zeros(n); k + 1] }
    }

    /// `t·self + (1 − t)·other`.
    pub fn convex_combination(&self, t: &Rational, other: &SolutionTuple) -> Result<SolutionTuple> {
        if self.xs.len() != other.xs.len() {
            return Err(dim_err("solution tuples of different length"));
        }
        let s = Rational::one() - t;
        self.xs
            .iter()
            .zip(&other.xs)
            .map(|(a, b)| a.scale(t).add(&b.scale(&s)))
            .collect::<Result<Vec<_>>>()
            .map(SolutionTuple::new)
    }

    /// `self + step·dir`.
    pub fn step(&self, dir: &SolutionTuple, step: &Rational) -> Result<SolutionTuple> {
        if self.xs.len() != dir.xs.len() {
            return Err(dim_err("solution tuples of different length"));
        }
        self.xs
            .iter()
            .zip(&dir.xs)
            .map(|(a, b)| a.add(&b.scale(step)))
            .collect::<Result<Vec<_>>>()
            .map(SolutionTuple::new)
    }
}

fn wedge_is_zero(a: &RatVector, b: &RatVector) -> Result<bool> {
    Ok(a.is_nonnegative() && b.is_nonnegative() && pointwise(a, b, PointwiseKind::Product)?.is_zero())
}

pub fn is_solution(inst: &EhlcpInstance, x: &SolutionTuple) -> Result<bool> {
    let (n, k) = (inst.n(), inst.k());
    if x.xs.len() != k + 1 || x.xs.iter().any(|v| v.dim() != n) {
        return Err(dim_err(format!("solution tuple must hold {} vectors of dim {n}", k + 1)));
    }
    let mats = inst.tuple.mats();
    let lhs = mats[0].mul_vec(&x.xs[0])?;
    let mut rhs = inst.q.clone();
    for (m, xi) in mats.iter().zip(&x.xs).skip(1) {
        rhs = rhs.add(&m.mul_vec(xi)?)?;
    }
    if lhs != rhs || !wedge_is_zero(&x.xs[0], &x.xs[1])? {
        return Ok(false);
    }
    for j in 1..k {
        if !wedge_is_zero(&inst.bound(j).sub(&x.xs[j])?, &x.xs[j + 1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which side of a wedge condition is pinned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn symbol(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

/// `k × n` choice of pinned sides, row-major. Row 0 column r pins `x₀,r = 0`
/// (left) or `x₁,r = 0` (right); row j pins `xⱼ,r = dⱼ,r` (left) or
/// `xⱼ₊₁,r = 0` (right).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BranchPattern {
    k: usize,
    n: usize,
    choice: Vec<Side>,
}

impl BranchPattern {
    pub fn new(k: usize, n: usize, choice: Vec<Side>) -> Result<Self> {
        if choice.len() != k * n {
            return Err(dim_err(format!("branch pattern needs {} sides, got {}", k * n, choice.len())));
        }
        Ok(BranchPattern { k, n, choice })
    }

    pub fn from_row_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().chars().count());
        let mut choice = Vec::with_capacity(k * n);
        for row in rows {
            let row = row.as_ref();
            if row.chars().count() != n {
                return Err(dim_err("ragged branch pattern"));
            }
            for c in row.chars() {
                choice.push(match c {
                    'L' => Side::Left,
                    'R' => Side::Right,
                    other => return Err(Error::Parse(format!("branch side `{other}`"))),
                });
            }
        }
        BranchPattern::new(k, n, choice)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Side of wedge row `j` (0-based) at column `r`.
    pub fn side(&self, j: usize, r: usize) -> Side {
        self.choice[j * self.n + r]
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.choice.chunks(self.n.max(1)).map(|c| c.iter().map(|s| s.symbol()).collect()).collect()
    }
}

impl fmt::Display for BranchPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.row_strings().join("/"))
    }
}

fn branch_cap(n: usize, k: usize, max_bits: usize) -> Result<usize> {
    let bits = n * k;
    if bits > max_bits {
        let requested = if bits >= 128 { u128::MAX } else { 1u128 << bits };
        return Err(Error::CapExceeded {
            what: "complementarity branch patterns",
            requested,
            limit: 1u128 << max_bits,
            hint: "reduce n or k",
        });
    }
    Ok(bits)
}

/// All `2^{kn}` patterns in binary order, left = 0, first position most significant.
pub fn enumerate_branches(n: usize, k: usize) -> Result<Branches> {
    enumerate_branches_capped(n, k, MAX_BRANCH_BITS)
}

pub fn enumerate_branches_capped(n: usize, k: usize, max_bits: usize) -> Result<Branches> {
    if n == 0 || k == 0 {
        return Err(Error::Invalid("n and k must be at least 1".into()));
    }
    let bits = branch_cap(n, k, max_bits)?;
    Ok(Branches { n, k, bits, next: 0, end: 1u64 << bits })
}

pub struct Branches {
    n: usize,
    k: usize,
    bits: usize,
    next: u64,
    end: u64,
}

impl Iterator for Branches {
    type Item = BranchPattern;

    fn next(&mut self) -> Option<BranchPattern> {
        if self.next >= self.end {
            return None;
        }
        let m = self.next;
        self.next += 1;
        let choice = (0..self.bits)
            .map(|p| if (m >> (self.bits - 1 - p)) & 1 == 0 { Side::Left } else { Side::Right })
            .collect();
        Some(BranchPattern { k: self.k, n: self.n, choice })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// The solution set of one branch: a point plus the directions of its affine hull.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionPiece {
    pub pattern: BranchPattern,
    /// A relative-interior point of the piece.
    pub point: SolutionTuple,
    pub piece_dimension: usize,
    pub kernel_basis: Vec<SolutionTuple>,
    /// Kernel dimension of the branch's linear system before inequalities.
    pub branch_kernel_dimension: usize,
}

impl SolutionPiece {
    /// Largest `s ∈ [0, 1]` with `point + s·dir` inside the branch bounds.
    pub fn feasible_step(&self, inst: &EhlcpInstance, dir: &SolutionTuple) -> Result<Rational> {
        let mut best = Rational::one();
        for (i, (x, v)) in self.point.xs.iter().zip(&dir.xs).enumerate() {
            for r in 0..x.dim() {
                let (xr, vr) = (&x[r], &v[r]);
                if vr.is_negative() {
                    best = best.min(-xr / vr);
                }
                if (1..inst.k()).contains(&i) && vr.is_positive() {
                    best = best.min((&inst.bound(i)[r] - xr) / vr);
                }
            }
        }
        Ok(best.max(Rational::zero()))
    }
}

/// Affine `a + b·t ≥ 0` in the branch's kernel coordinates.
struct Ineq {
    a: Rational,
    b: RatVector,
}

pub fn solve_branch(inst: &EhlcpInstance, pattern: &BranchPattern) -> Result<Option<SolutionPiece>> {
    let (n, k) = (inst.n(), inst.k());
    if pattern.n != n || pattern.k != k {
        return Err(dim_err(format!(
            "branch pattern is {}x{} but instance needs {k}x{n}",
            pattern.k, pattern.n
        )));
    }

    let mut pinned: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; k + 1];
    for j in 0..k {
        for r in 0..n {
            let (var, value) = match (j, pattern.side(j, r)) {
                (0, Side::Left) => (0, Rational::zero()),
                (0, Side::Right) => (1, Rational::zero()),
                (j, Side::Left) => (j, inst.bound(j)[r].clone()),
                (j, Side::Right) => (j + 1, Rational::zero()),
            };
            match &pinned[var][r] {
                Some(v) if *v != value => return Ok(None),
                Some(_) => {}
                None => pinned[var][r] = Some(value),
            }
        }
    }

    // C₀x₀ − Σ Cᵢxᵢ = q over the free variables.
    let mats = inst.tuple.mats();
    let free: Vec<(usize, usize)> = (0..=k)
        .flat_map(|i| (0..n).map(move |r| (i, r)))
        .filter(|&(i, r)| pinned[i][r].is_none())
        .collect();
    let mut rhs: Vec<Rational> = inst.q.iter().cloned().collect();
    for (i, row) in pinned.iter().enumerate() {
        for (r, v) in row.iter().enumerate() {
            let Some(v) = v else { continue };
            if v.is_zero() {
                continue;
            }
            for (e, rv) in rhs.iter_mut().enumerate() {
                let c = mats[i].get(e, r) * v;
                if i == 0 {
                    *rv -= c;
                } else {
                    *rv += c;
                }
            }
        }
    }
    let mut data = Vec::with_capacity(n * free.len());
    for e in 0..n {
        for &(i, r) in &free {
            let c = mats[i].get(e, r).clone();
            data.push(if i == 0 { c } else { -c });
        }
    }

    let assemble = |y: &[Rational], zero_pins: bool| -> SolutionTuple {
        let mut xs: Vec<Vec<Rational>> = pinned
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| match v {
                        Some(v) if !zero_pins => v.clone(),
                        _ => Rational::zero(),
                    })
                    .collect()
            })
            .collect();
        for (&(i, r), v) in free.iter().zip(y) {
            xs[i][r] = v.clone();
        }
        SolutionTuple::new(xs.into_iter().map(RatVector::new).collect())
    };

    if free.is_empty() {
        let rhs = RatVector::new(rhs);
        if !rhs.is_zero() {
            return Ok(None);
        }
        return Ok(Some(SolutionPiece {
            pattern: pattern.clone(),
            point: assemble(&[], false),
            piece_dimension: 0,
            kernel_basis: Vec::new(),
            branch_kernel_dimension: 0,
        }));
    }

    let system = RatMatrix::new(n, free.len(), data)?;
    let (p, kernel) = match solve_linear(&system, &RatVector::new(rhs))? {
        LinearSolveResult::Inconsistent => return Ok(None),
        LinearSolveResult::Unique(p) => (p, Vec::new()),
        LinearSolveResult::Affine { particular, kernel_basis } => (particular, kernel_basis),
    };
    let m = kernel.len();

    let mut ineqs = Vec::new();
    for (f, &(i, r)) in free.iter().enumerate() {
        let b: RatVector = kernel.iter().map(|v| v[f].clone()).collect();
        if (1..k).contains(&i) {
            ineqs.push(Ineq { a: &inst.bound(i)[r] - &p[f], b: b.scale(&-Rational::one()) });
        }
        ineqs.push(Ineq { a: p[f].clone(), b });
    }

    if m == 0 {
        if ineqs.iter().any(|g| g.a.is_negative()) {
            return Ok(None);
        }
        return Ok(Some(SolutionPiece {
            pattern: pattern.clone(),
            point: assemble(p.entries(), false),
            piece_dimension: 0,
            kernel_basis: Vec::new(),
            branch_kernel_dimension: 0,
        }));
    }

    // One LP per inequality: maximize its slack (capped at 1). Zero maximum
    // marks an implicit equality; the average of the other maximizers is a
    // relative-interior point.
    let constraints: Vec<(RatVector, Rational)> = ineqs.iter().map(|g| (g.b.clone(), -g.a.clone())).collect();
    let mut implicit = Vec::new();
    let mut interior: Vec<RatVector> = Vec::new();
    let mut any_point: Option<RatVector> = None;
    for g in &ineqs {
        let mut cons = constraints.clone();
        cons.push((g.b.scale(&-Rational::one()), &g.a - Rational::one()));
        let res = lp_solve(&g.b, &[], &cons)?;
        match res.status {
            LpStatus::Infeasible => {
                // The cap row only cuts slack above 1, so this is the branch polytope itself.
                return Ok(None);
            }
            LpStatus::Unbounded => {
                return Err(Error::Internal("slack LP with a capped objective reported unbounded".into()));
            }
            LpStatus::Optimal => {}
        }
        let t = res.point.expect("optimal LP carries a point");
        let slack = &g.a + res.objective_value.expect("optimal LP carries a value");
        if slack.is_zero() {
            implicit.push(g.b.clone());
            any_point.get_or_insert(t);
        } else {
            interior.push(t);
        }
    }
    let t = if interior.is_empty() {
        any_point.expect("at least one inequality per free variable")
    } else {
        let count = Rational::from_integer(interior.len().into());
        let sum = interior.iter().skip(1).try_fold(interior[0].clone(), |acc, v| acc.add(v))?;
        sum.scale(&(Rational::one() / count))
    };

    let directions: Vec<RatVector> = if implicit.is_empty() {
        (0..m)
            .map(|c| (0..m).map(|e| if e == c { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        nullspace(&RatMatrix::from_rows(implicit.iter().map(|v| v.entries().to_vec()).collect())?)
    };

    let to_y = |t: &RatVector| -> Vec<Rational> {
        (0..free.len())
            .map(|f| kernel.iter().zip(t.iter()).fold(Rational::zero(), |acc, (v, tc)| acc + &v[f] * tc))
            .collect()
    };
    let y: Vec<Rational> = to_y(&t).into_iter().zip(p.iter()).map(|(a, b)| a + b).collect();
    let kernel_basis: Vec<SolutionTuple> = directions.iter().map(|d| assemble(&to_y(d), true)).collect();

    Ok(Some(SolutionPiece {
        pattern: pattern.clone(),
        point: assemble(&y, false),
        piece_dimension: kernel_basis.len(),
        kernel_basis,
        branch_kernel_dimension: m,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_branch_bits: usize,
    /// Keep duplicate dimension-0 points from different branches.
    pub keep_duplicates: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { max_branch_bits: MAX_BRANCH_BITS, keep_duplicates: false }
    }
}

/// Every branch's piece in branch order, with repeated dimension-0 points dropped.
pub fn solve_all(inst: &EhlcpInstance) -> Result<Vec<SolutionPiece>> {
    solve_all_with(inst, &SolveOptions::default())
}

pub fn solve_all_with(inst: &EhlcpInstance, opts: &SolveOptions) -> Result<Vec<SolutionPiece>> {
    let mut out: Vec<SolutionPiece> = Vec::new();
    for pattern in enumerate_branches_capped(inst.n(), inst.k(), opts.max_branch_bits)? {
        let Some(piece) = solve_branch(inst, &pattern)? else { continue };
        if !opts.keep_duplicates
            && piece.piece_dimension == 0
            && out.iter().any(|o| o.piece_dimension == 0 && o.point == piece.point)
        {
            continue;
        }
        out.push(piece);
    }
    Ok(out)
}

/// `(C₀⁻¹q, 0, …, 0)` when `C₀` is an M-matrix and `q > 0`.
pub fn solve_m_fast(inst: &EhlcpInstance) -> Result<Option<SolutionTuple>> {
    if !inst.q.is_positive() || !is_m(inst.tuple.mat(0))?.holds {
        return Ok(None);
    }
    let Some(inv) = inverse(inst.tuple.mat(0))? else { return Ok(None) };
    let mut x = SolutionTuple::zeros(inst.n(), inst.k());
    x.xs[0] = inv.mul_vec(&inst.q)?;
    if !is_solution(inst, &x)? {
        return Err(Error::Internal("M-matrix fast path produced a non-solution".into()));
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::{rat, ratio};

    fn inst(mats: &[&[&[i64]]], d: &[&[i64]], q: &[i64]) -> EhlcpInstance {
        EhlcpInstance::new(
            MatrixTuple::from_ints(mats),
            d.iter().map(|v| RatVector::from_ints(v)).collect(),
            RatVector::from_ints(q),
        )
        .unwrap()
    }

    fn sol(xs: &[&[i64]]) -> SolutionTuple {
        SolutionTuple::new(xs.iter().map(|v| RatVector::from_ints(v)).collect())
    }

    const I2: &[&[i64]] = &[&[1, 0], &[0, 1]];
    const SKEW: &[&[i64]] = &[&[0, 1], &[-1, 0]];

    #[test]
    fn instance_validation() {
        let t = MatrixTuple::from_ints(&[I2, I2, I2]);
        let bad = EhlcpInstance::new(t.clone(), vec![RatVector::from_ints(&[1, 0])], RatVector::from_ints(&[0, 0]));
        assert_eq!(bad.unwrap_err(), Error::Invalid("d must be strictly positive".into()));
        assert!(EhlcpInstance::new(t.clone(), vec![], RatVector::from_ints(&[0, 0])).is_err());
        assert!(EhlcpInstance::new(t, vec![RatVector::from_ints(&[1, 1])], RatVector::from_ints(&[0])).is_err());
    }

    #[test]
    fn is_solution_examples() {
        let a = inst(&[I2, I2], &[], &[1, -2]);
        assert!(is_solution(&a, &sol(&[&[1, 0], &[0, 2]])).unwrap());
        assert!(!is_solution(&a, &sol(&[&[1, 0], &[1, 2]])).unwrap());
        let b = inst(&[I2, I2, I2], &[&[1, 1]], &[2, -1]);
        assert!(is_solution(&b, &sol(&[&[2, 0], &[0, 1], &[0, 0]])).unwrap());
        assert!(is_solution(&a, &sol(&[&[1, 0]])).is_err());
    }

    #[test]
    fn branch_counts_and_order() {
        assert_eq!(enumerate_branches(1, 1).unwrap().count(), 2);
        assert_eq!(enumerate_branches(2, 2).unwrap().count(), 16);
        assert_eq!(enumerate_branches(2, 1).unwrap().count(), 4);
        let all: Vec<String> = enumerate_branches(2, 1).unwrap().map(|b| b.to_string()).collect();
        assert_eq!(all, ["LL", "LR", "RL", "RR"]);
        let two: Vec<String> = enumerate_branches(1, 2).unwrap().map(|b| b.to_string()).collect();
        assert_eq!(two, ["L/L", "L/R", "R/L", "R/R"]);
        assert!(matches!(enumerate_branches(7, 3), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn pinned_unique_branch() {
        let a = inst(&[I2, I2], &[], &[1, -2]);
        // x₁,₁ = 0 and x₀,₂ = 0
        let piece = solve_branch(&a, &BranchPattern::from_row_strings(&["RL"]).unwrap()).unwrap().unwrap();
        assert_eq!(piece.point, sol(&[&[1, 0], &[0, 2]]));
        assert_eq!(piece.piece_dimension, 0);
        // x₀ = 0 forces x₁ = −q, infeasible
        assert!(solve_branch(&a, &BranchPattern::from_row_strings(&["LL"]).unwrap()).unwrap().is_none());
    }

    #[test]
    fn segment_branch() {
        let a = inst(&[I2, SKEW], &[], &[0, 1]);
        let piece = solve_branch(&a, &BranchPattern::from_row_strings(&["LR"]).unwrap()).unwrap().unwrap();
        assert_eq!(piece.piece_dimension, 1);
        assert_eq!(piece.branch_kernel_dimension, 1);
        let x = &piece.point;
        assert!(x.xs[0][0].is_zero() && x.xs[1][1].is_zero());
        assert_eq!(&x.xs[0][1] + &x.xs[1][0], rat(1));
        assert!(x.xs[0][1].is_positive() && x.xs[1][0].is_positive());
        assert!(is_solution(&a, x).unwrap());
        // x₁,₁ = 0 and x₀,₂ = 0 give x₀,₁ = x₁,₂ = 0 and x₁,₂ = 1 at once
        assert!(solve_branch(&a, &BranchPattern::from_row_strings(&["RL"]).unwrap()).unwrap().is_none());
    }

    #[test]
    fn inconsistent_branch() {
        let a = inst(&[I2, &[&[0, 0], &[0, 0]]], &[], &[0, 1]);
        // x₀ = 0 with C₁ = 0 leaves 0 = q
        assert!(solve_branch(&a, &BranchPattern::from_row_strings(&["LL"]).unwrap()).unwrap().is_none());
    }

    #[test]
    fn contradictory_pins() {
        let b = inst(&[I2, I2, I2], &[&[1, 1]], &[2, -1]);
        // x₁ = 0 (row 0 right) together with x₁ = d₁ (row 1 left)
        assert!(solve_branch(&b, &BranchPattern::from_row_strings(&["RR", "LL"]).unwrap()).unwrap().is_none());
    }

    #[test]
    fn solve_all_examples() {
        let a = inst(&[I2, I2], &[], &[1, -2]);
        let pieces = solve_all(&a).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].point, sol(&[&[1, 0], &[0, 2]]));

        let b = inst(&[I2, I2, I2], &[&[1, 1]], &[2, -1]);
        let pieces = solve_all(&b).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].point, sol(&[&[2, 0], &[0, 1], &[0, 0]]));
    }

    #[test]
    fn segment_instance_pieces_cover_the_segment() {
        let a = inst(&[I2, SKEW], &[], &[0, 1]);
        let pieces = solve_all(&a).unwrap();
        let segment: Vec<_> = pieces.iter().filter(|p| p.piece_dimension == 1).collect();
        assert_eq!(segment.len(), 1);
        let points: Vec<_> = pieces.iter().filter(|p| p.piece_dimension == 0).map(|p| p.point.clone()).collect();
        assert!(points.contains(&sol(&[&[0, 0], &[1, 0]])));
        assert!(points.contains(&sol(&[&[0, 1], &[0, 0]])));
        for p in &pieces {
            assert!(is_solution(&a, &p.point).unwrap());
        }
        let seg = segment[0];
        let dir = &seg.kernel_basis[0];
        for d in [dir.clone(), SolutionTuple::new(dir.xs.iter().map(|v| v.scale(&rat(-1))).collect())] {
            let s = seg.feasible_step(&a, &d).unwrap();
            assert!(s.is_positive());
            let moved = seg.point.step(&d, &(s * ratio(1, 2))).unwrap();
            assert!(is_solution(&a, &moved).unwrap());
        }
    }

    #[test]
    fn every_solution_is_complementary_to_x0() {
        let a = inst(&[I2, SKEW, I2], &[&[1, 2]], &[1, -1]);
        for p in solve_all(&a).unwrap() {
            for j in 1..=2 {
                let prod = pointwise(&p.point.xs[0], &p.point.xs[j], PointwiseKind::Product).unwrap();
                assert!(prod.is_zero());
            }
        }
    }

    #[test]
    fn m_fast_path() {
        let a = inst(&[&[&[2, -1], &[-1, 2]], SKEW], &[], &[1, 1]);
        assert_eq!(solve_m_fast(&a).unwrap(), Some(sol(&[&[1, 1], &[0, 0]])));
        let b = inst(&[I2, SKEW, I2], &[&[1, 1]], &[3, 4]);
        assert_eq!(solve_m_fast(&b).unwrap(), Some(sol(&[&[3, 4], &[0, 0], &[0, 0]])));
        let c = inst(&[I2, SKEW], &[], &[1, -1]);
        assert_eq!(solve_m_fast(&c).unwrap(), None);
        let pieces = solve_all(&a).unwrap();
        assert!(pieces.iter().any(|p| p.point == sol(&[&[1, 1], &[0, 0]])));
    }

    #[test]
    fn unbounded_branch_has_relative_interior_point() {
        // C₁ = 0 and q = 0: every x₁ ≥ 0 with x₀ = 0 solves.
        let a = inst(&[I2, &[&[0, 0], &[0, 0]]], &[], &[0, 0]);
        let pieces = solve_all(&a).unwrap();
        let full = pieces.iter().find(|p| p.pattern.to_string() == "LL").unwrap();
        assert_eq!(full.piece_dimension, 2);
        assert!(full.point.xs[1].is_positive());
    }
}
