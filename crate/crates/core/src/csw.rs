//! Exact decision of the sign-constrained kernel properties of a tuple:
//! column sufficient-W (cS-W), its cone variant, X-column-sufficiency of a
//! pair, and the definition-based form of column ND-W.
//!
//! Each property asks whether the homogeneous system
//! `C₀x₀ = Σ Cᵢxᵢ` has a solution whose component signs satisfy some product
//! constraints while breaking a conclusion. Product constraints only depend
//! on signs, so the question is decided by enumerating sign patterns over
//! `{−, 0, +}^{(k+1)×n}` and testing each candidate pattern for realizability
//! with an exact LP. Because the system is a cone, a pattern with strict
//! signs is realizable iff it is realizable with every nonzero component of
//! magnitude at least one, which turns each test into a closed feasibility
//! problem.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratcore::{lp_solve_standard, StandardOutcome};
use crate::representatives::{check_column_ndw_det, check_column_w, MatrixTuple};
use crate::verdict::{PropertyVerdict, Witness};
use crate::{RatMatrix, RatVector, Rational};

pub const DEFAULT_MAX_COMPONENTS: usize = 12;
pub const MAX_COMPONENTS_ENV: &str = "EHLCP_MAX_PATTERN_COMPONENTS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    const ORDER: [Sign; 3] = [Sign::Neg, Sign::Zero, Sign::Pos];

    pub fn of(x: &Rational) -> Sign {
        if x.is_positive() {
            Sign::Pos
        } else if x.is_negative() {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    fn value(self) -> i8 {
        match self {
            Sign::Neg => -1,
            Sign::Zero => 0,
            Sign::Pos => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Neg),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Pos),
            _ => None,
        }
    }
}

/// Sign assignment for every component of `(x₀, …, x_k)`; row `i` is `xᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignPattern {
    rows: usize,
    cols: usize,
    signs: Vec<Sign>,
}

impl SignPattern {
    pub fn new(rows: usize, cols: usize, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} signs for a {rows}x{cols} pattern",
                signs.len()
            )));
        }
        Ok(SignPattern { rows, cols, signs })
    }

    /// Parses one string per row, e.g. `["+0", "0-"]`.
    pub fn from_row_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().chars().count());
        let mut signs = Vec::new();
        for r in rows {
            let row: Vec<Sign> = r
                .as_ref()
                .chars()
                .map(|c| Sign::from_symbol(c).ok_or_else(|| Error::Parse(format!("bad sign `{c}`"))))
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::Dimension("ragged sign pattern".into()));
            }
            signs.extend(row);
        }
        Self::new(rows.len(), cols, signs)
    }

    /// Pattern of a concrete vector tuple.
    pub fn of_vectors(xs: &[RatVector]) -> Self {
        let cols = xs.first().map_or(0, RatVector::dim);
        let signs = xs.iter().flat_map(|x| x.iter().map(Sign::of)).collect();
        SignPattern { rows: xs.len(), cols, signs }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn sign(&self, i: usize, r: usize) -> Sign {
        self.signs[i * self.cols + r]
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|r| self.sign(i, r).symbol()).collect())
            .collect()
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.row_strings().join("/"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecidedBy {
    FastPathColumnW,
    FastPathNdwNotW,
    PatternEnumeration,
}

impl DecidedBy {
    pub fn as_str(self) -> &'static str {
        match self {
            DecidedBy::FastPathColumnW => "fast_path_column_w",
            DecidedBy::FastPathNdwNotW => "fast_path_ndw_not_w",
            DecidedBy::PatternEnumeration => "pattern_enumeration",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CswWitness {
    pub pattern: SignPattern,
    pub xs: Vec<RatVector>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CswVerdict {
    pub holds: bool,
    pub decided_by: DecidedBy,
    pub witness: Option<CswWitness>,
}

impl CswVerdict {
    pub fn into_property(self, name: &str) -> PropertyVerdict {
        let certificate = match (self.holds, self.decided_by) {
            (true, DecidedBy::FastPathColumnW) => {
                "column W holds, which implies this property".to_string()
            }
            (true, _) => "no candidate sign pattern is realizable (exhaustive enumeration)".to_string(),
            (false, DecidedBy::FastPathNdwNotW) => {
                "column ND-W holds but column W fails; witness from pattern enumeration".to_string()
            }
            (false, _) => "a realizable sign pattern violates the conclusion".to_string(),
        };
        match self.witness {
            Some(w) => PropertyVerdict::fails(
                name,
                Witness::Vectors { pattern: w.pattern, xs: w.xs },
                certificate,
            ),
            None => PropertyVerdict::holds(name, certificate),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CswOptions {
    /// Use the column-W / ND-W shortcuts before enumerating.
    pub fast_paths: bool,
    /// Prune the pattern tree with the hypothesis constraints and negation
    /// symmetry. Disabling it filters the full `3^{(k+1)n}` space instead.
    pub prune: bool,
    /// Largest `(k+1)·n` accepted for enumeration.
    pub max_components: usize,
}

impl Default for CswOptions {
    fn default() -> Self {
        CswOptions { fast_paths: true, prune: true, max_components: DEFAULT_MAX_COMPONENTS }
    }
}

impl CswOptions {
    /// Defaults, with the component cap taken from `EHLCP_MAX_PATTERN_COMPONENTS` when set.
    pub fn from_env() -> Result<Self> {
        let mut opts = Self::default();
        if let Ok(v) = std::env::var(MAX_COMPONENTS_ENV) {
            opts.max_components = v.trim().parse().map_err(|_| {
                Error::Parse(format!("{MAX_COMPONENTS_ENV} must be a positive integer, got `{v}`"))
            })?;
        }
        Ok(opts)
    }

    /// Enumeration only, no shortcuts.
    pub fn enumeration_only() -> Self {
        CswOptions { fast_paths: false, ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Space {
    /// x₁..x_k pairwise same-signed, x₀ opposite to each; conclusion on consecutive pairs.
    Csw,
    /// x₁..x_k nonnegative, x₀ opposite to each; conclusion on consecutive pairs.
    Cone,
    /// Per column at most one nonzero component; conclusion x = 0.
    Ndw,
}

impl Space {
    fn negation_closed(self) -> bool {
        !matches!(self, Space::Cone)
    }

    fn allows(self, i: usize, s: Sign) -> bool {
        !(self == Space::Cone && i >= 1 && s == Sign::Neg)
    }

    /// Hypothesis check between rows `j < i` of the same column.
    fn compatible(self, j: usize, sj: Sign, si: Sign) -> bool {
        let prod = sj.value() * si.value();
        match self {
            Space::Csw => {
                if j == 0 {
                    prod <= 0
                } else {
                    prod >= 0
                }
            }
            Space::Cone => j != 0 || prod <= 0,
            Space::Ndw => sj == Sign::Zero || si == Sign::Zero,
        }
    }

    fn violates(self, p: &[Sign], rows: usize, cols: usize) -> bool {
        match self {
            Space::Csw | Space::Cone => (0..rows - 1).any(|s| {
                (0..cols).any(|r| p[s * cols + r] != Sign::Zero && p[(s + 1) * cols + r] != Sign::Zero)
            }),
            Space::Ndw => p.iter().any(|&s| s != Sign::Zero),
        }
    }

    fn hypothesis(self, p: &[Sign], rows: usize, cols: usize) -> bool {
        (0..rows).all(|i| {
            (0..cols).all(|r| {
                let si = p[i * cols + r];
                self.allows(i, si) && (0..i).all(|j| self.compatible(j, p[j * cols + r], si))
            })
        })
    }
}

/// Decides whether some `x = (x₀, …, x_k)` with `C₀x₀ = Σ_{i≥1} Cᵢxᵢ` has exactly
/// the signs of `p`. Returns such an `x` (every nonzero component of magnitude ≥ 1).
pub fn pattern_realizable(t: &MatrixTuple, p: &SignPattern) -> Result<Option<Vec<RatVector>>> {
    let n = t.n();
    if p.rows() != t.k() + 1 || p.cols() != n {
        return Err(Error::Dimension(format!(
            "{}x{} pattern for a tuple with k = {}, n = {n}",
            p.rows(),
            p.cols(),
            t.k()
        )));
    }
    let support: Vec<(usize, usize, Sign)> = (0..p.rows())
        .flat_map(|i| (0..n).map(move |r| (i, r)))
        .map(|(i, r)| (i, r, p.sign(i, r)))
        .filter(|&(_, _, s)| s != Sign::Zero)
        .collect();

    // Column of the signed unknown σ·|x_{i,r}| in C₀x₀ − Σ Cᵢxᵢ = 0.
    let column = |i: usize, r: usize, s: Sign| -> Vec<Rational> {
        let flip = (i == 0) != (s == Sign::Pos);
        (0..n)
            .map(|row| {
                let v = t.mat(i).get(row, r).clone();
                if flip {
                    -v
                } else {
                    v
                }
            })
            .collect()
    };
    let cols: Vec<Vec<Rational>> = support.iter().map(|&(i, r, s)| column(i, r, s)).collect();

    // |x| = 1 + v with v ≥ 0:  A v = −A·1.
    let a: Vec<Vec<Rational>> =
        (0..n).map(|row| cols.iter().map(|c| c[row].clone()).collect()).collect();
    let b: Vec<Rational> = (0..n)
        .map(|row| -cols.iter().fold(Rational::zero(), |acc, c| acc + &c[row]))
        .collect();
    let zero_cost = vec![Rational::zero(); support.len()];
    let v = match lp_solve_standard(&zero_cost, &a, &b)? {
        StandardOutcome::Optimal(v) => v,
        StandardOutcome::Infeasible => return Ok(None),
        StandardOutcome::Unbounded => {
            return Err(Error::Internal("feasibility LP reported unbounded".into()))
        }
    };

    let mut xs = vec![vec![Rational::zero(); n]; t.k() + 1];
    for ((i, r, s), vj) in support.into_iter().zip(v) {
        let mag = Rational::one() + vj;
        xs[i][r] = if s == Sign::Pos { mag } else { -mag };
    }
    Ok(Some(xs.into_iter().map(RatVector::new).collect()))
}

/// First realizable violating pattern of `space`, in canonical order
/// (row-major over `(i, r)`, symbols ordered `−, 0, +`).
fn first_violation(t: &MatrixTuple, space: Space, prune: bool) -> Result<Option<CswWitness>> {
    let rows = t.k() + 1;
    let cols = t.n();
    let total = rows * cols;
    let mut p = vec![Sign::Zero; total];

    let mut test = |p: &[Sign]| -> Result<Option<CswWitness>> {
        let pattern = SignPattern::new(rows, cols, p.to_vec())?;
        Ok(pattern_realizable(t, &pattern)?.map(|xs| CswWitness { pattern, xs }))
    };

    if !prune {
        let mut digits = vec![0usize; total];
        loop {
            for (slot, &d) in p.iter_mut().zip(&digits) {
                *slot = Sign::ORDER[d];
            }
            if space.hypothesis(&p, rows, cols) && space.violates(&p, rows, cols) {
                if let Some(w) = test(&p)? {
                    return Ok(Some(w));
                }
            }
            let mut pos = total;
            loop {
                if pos == 0 {
                    return Ok(None);
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < 3 {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    fn dfs(
        pos: usize,
        p: &mut [Sign],
        rows: usize,
        cols: usize,
        space: Space,
        all_zero_so_far: bool,
        test: &mut dyn FnMut(&[Sign]) -> Result<Option<CswWitness>>,
    ) -> Result<Option<CswWitness>> {
        if pos == rows * cols {
            if space.violates(p, rows, cols) {
                return test(p);
            }
            return Ok(None);
        }
        let (i, r) = (pos / cols, pos % cols);
        for s in Sign::ORDER {
            if !space.allows(i, s) {
                continue;
            }
            // Negation maps realizable patterns to realizable ones and the first
            // realizable pattern in canonical order always starts with '−'.
            if all_zero_so_far && s == Sign::Pos && space.negation_closed() {
                continue;
            }
            if !(0..i).all(|j| space.compatible(j, p[j * cols + r], s)) {
                continue;
            }
            p[pos] = s;
            let found = dfs(pos + 1, p, rows, cols, space, all_zero_so_far && s == Sign::Zero, test)?;
            if found.is_some() {
                return Ok(found);
            }
        }
        p[pos] = Sign::Zero;
        Ok(None)
    }

    dfs(0, &mut p, rows, cols, space, true, &mut test)
}

fn check_components(t: &MatrixTuple, opts: &CswOptions) -> Result<()> {
    let components = (t.k() + 1) * t.n();
    if components > opts.max_components {
        return Err(Error::CapExceeded {
            what: "undecided: size; sign-pattern components (k+1)*n",
            requested: components as u128,
            limit: opts.max_components as u128,
            hint: "raise EHLCP_MAX_PATTERN_COMPONENTS to enumerate anyway",
        });
    }
    Ok(())
}

pub fn check_csw(t: &MatrixTuple) -> Result<CswVerdict> {
    check_csw_with(t, &CswOptions::default())
}

/// Column sufficient-W property.
pub fn check_csw_with(t: &MatrixTuple, opts: &CswOptions) -> Result<CswVerdict> {
    if opts.fast_paths {
        if let (Ok(w), Ok(ndw)) = (check_column_w(t), check_column_ndw_det(t)) {
            if w.holds {
                return Ok(CswVerdict {
                    holds: true,
                    decided_by: DecidedBy::FastPathColumnW,
                    witness: None,
                });
            }
            if ndw.holds {
                // W ⇔ cS-W ∧ ND-W, so cS-W must fail; the witness still comes
                // from enumeration, which the size cap does not apply to.
                let witness = first_violation(t, Space::Csw, opts.prune)?.ok_or_else(|| {
                    Error::Internal(
                        "column ND-W holds and column W fails, yet no cS-W violation was found".into(),
                    )
                })?;
                return Ok(CswVerdict {
                    holds: false,
                    decided_by: DecidedBy::FastPathNdwNotW,
                    witness: Some(witness),
                });
            }
        }
    }
    check_components(t, opts)?;
    let witness = first_violation(t, Space::Csw, opts.prune)?;
    Ok(CswVerdict {
        holds: witness.is_none(),
        decided_by: DecidedBy::PatternEnumeration,
        witness,
    })
}

pub fn check_cone_csw(t: &MatrixTuple) -> Result<CswVerdict> {
    check_cone_csw_with(t, &CswOptions::default())
}

/// Cone cS-W: the quantified `x₁, …, x_k` are restricted to the nonnegative orthant.
pub fn check_cone_csw_with(t: &MatrixTuple, opts: &CswOptions) -> Result<CswVerdict> {
    if opts.fast_paths && check_column_w(t).is_ok_and(|v| v.holds) {
        return Ok(CswVerdict { holds: true, decided_by: DecidedBy::FastPathColumnW, witness: None });
    }
    check_components(t, opts)?;
    let witness = first_violation(t, Space::Cone, opts.prune)?;
    Ok(CswVerdict {
        holds: witness.is_none(),
        decided_by: DecidedBy::PatternEnumeration,
        witness,
    })
}

pub fn check_x_column_sufficiency(a: &RatMatrix, b: &RatMatrix) -> Result<PropertyVerdict> {
    check_x_column_sufficiency_with(a, b, &CswOptions::default())
}

/// `[a x₀ = b x₁, x₀ * x₁ ≤ 0] ⇒ x₀ * x₁ = 0`, i.e. the `k = 1` case of cS-W.
pub fn check_x_column_sufficiency_with(
    a: &RatMatrix,
    b: &RatMatrix,
    opts: &CswOptions,
) -> Result<PropertyVerdict> {
    let pair = MatrixTuple::new(vec![a.clone(), b.clone()])?;
    Ok(check_csw_with(&pair, opts)?.into_property("x_col_suff"))
}

pub fn check_column_ndw_def(t: &MatrixTuple) -> Result<PropertyVerdict> {
    check_column_ndw_def_with(t, &CswOptions::default())
}

/// Column ND-W straight from its definition: no nonzero `x` solves the
/// homogeneous system with pairwise disjoint supports.
pub fn check_column_ndw_def_with(t: &MatrixTuple, opts: &CswOptions) -> Result<PropertyVerdict> {
    check_components(t, opts)?;
    Ok(match first_violation(t, Space::Ndw, opts.prune)? {
        None => PropertyVerdict::holds(
            "column_ndw_def",
            "no nonzero solution with pairwise disjoint supports (exhaustive enumeration)",
        ),
        Some(w) => PropertyVerdict::fails(
            "column_ndw_def",
            Witness::Vectors { pattern: w.pattern, xs: w.xs },
            "a nonzero solution with pairwise disjoint supports exists",
        ),
    })
}

fn kernel_equation_holds(t: &MatrixTuple, xs: &[RatVector]) -> bool {
    if xs.len() != t.k() + 1 || xs.iter().any(|x| x.dim() != t.n()) {
        return false;
    }
    let Ok(mut lhs) = t.mat(0).mul_vec(&xs[0]) else {
        return false;
    };
    for (c, x) in t.mats().iter().zip(xs).skip(1) {
        match c.mul_vec(x).and_then(|cx| lhs.sub(&cx)) {
            Ok(v) => lhs = v,
            Err(_) => return false,
        }
    }
    lhs.is_zero()
}

fn product_sign(a: &RatVector, b: &RatVector, r: usize) -> Sign {
    Sign::of(&(&a[r] * &b[r]))
}

/// Re-checks a cS-W (or, with `cone`, cone cS-W) failure witness from scratch.
pub fn verify_csw_witness(t: &MatrixTuple, xs: &[RatVector], cone: bool) -> bool {
    if !kernel_equation_holds(t, xs) {
        return false;
    }
    let k = t.k();
    let n = t.n();
    let hypothesis = (1..=k).all(|i| {
        (0..n).all(|r| {
            product_sign(&xs[0], &xs[i], r) != Sign::Pos
                && if cone {
                    !xs[i][r].is_negative()
                } else {
                    (i + 1..=k).all(|j| product_sign(&xs[i], &xs[j], r) != Sign::Neg)
                }
        })
    });
    let violated = (0..k).any(|s| (0..n).any(|r| product_sign(&xs[s], &xs[s + 1], r) != Sign::Zero));
    hypothesis && violated
}

/// Re-checks a definition-based ND-W failure witness from scratch.
pub fn verify_ndw_witness(t: &MatrixTuple, xs: &[RatVector]) -> bool {
    kernel_equation_holds(t, xs)
        && xs.iter().any(|x| !x.is_zero())
        && (0..=t.k()).all(|i| {
            (i + 1..=t.k()).all(|j| (0..t.n()).all(|r| product_sign(&xs[i], &xs[j], r) == Sign::Zero))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew_example() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]], &[&[1, 0], &[0, 1]]])
    }

    fn id_zero_zero() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[0, 0], &[0, 0]], &[&[0, 0], &[0, 0]]])
    }

    fn id_pair() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 1]]])
    }

    fn id_neg_id() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[-1, 0], &[0, -1]]])
    }

    #[test]
    fn realizability_examples() {
        let t = id_pair();
        let zero = SignPattern::from_row_strings(&["00", "00"]).unwrap();
        let xs = pattern_realizable(&t, &zero).unwrap().unwrap();
        assert!(xs.iter().all(RatVector::is_zero));

        let p = SignPattern::from_row_strings(&["+0", "00"]).unwrap();
        assert_eq!(pattern_realizable(&t, &p).unwrap(), None);

        let p = SignPattern::from_row_strings(&["00", "+0", "+0"]).unwrap();
        let xs = pattern_realizable(&id_zero_zero(), &p).unwrap().unwrap();
        assert_eq!(SignPattern::of_vectors(&xs), p);
        assert!(kernel_equation_holds(&id_zero_zero(), &xs));

        let bad = SignPattern::from_row_strings(&["00", "00", "00"]).unwrap();
        assert!(pattern_realizable(&t, &bad).is_err());
    }

    #[test]
    fn csw_examples() {
        let v = check_csw(&skew_example()).unwrap();
        assert!(v.holds);
        assert_eq!(v.decided_by, DecidedBy::PatternEnumeration);

        let v = check_csw(&id_zero_zero()).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(verify_csw_witness(&id_zero_zero(), &w.xs, false));
        assert!(w.xs[0].is_zero());

        let v = check_csw(&id_pair()).unwrap();
        assert!(v.holds);
        assert_eq!(v.decided_by, DecidedBy::FastPathColumnW);
    }

    #[test]
    fn csw_fast_path_ndw_not_w() {
        let v = check_csw(&id_neg_id()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.decided_by, DecidedBy::FastPathNdwNotW);
        assert!(verify_csw_witness(&id_neg_id(), &v.witness.unwrap().xs, false));
        let slow = check_csw_with(&id_neg_id(), &CswOptions::enumeration_only()).unwrap();
        assert!(!slow.holds);
    }

    #[test]
    fn cone_examples() {
        assert!(check_cone_csw(&id_pair()).unwrap().holds);
        let v = check_cone_csw(&id_zero_zero()).unwrap();
        assert!(!v.holds);
        assert!(verify_csw_witness(&id_zero_zero(), &v.witness.unwrap().xs, true));
        assert!(check_cone_csw(&skew_example()).unwrap().holds);
    }

    #[test]
    fn x_column_sufficiency_examples() {
        let id = RatMatrix::identity(2);
        assert!(check_x_column_sufficiency(&id, &id).unwrap().holds);
        let skew = RatMatrix::from_ints(&[&[0, 1], &[-1, 0]]);
        assert!(check_x_column_sufficiency(&id, &skew).unwrap().holds);
        let lower = RatMatrix::from_ints(&[&[0, 0], &[1, 0]]);
        let v = check_x_column_sufficiency(&id, &lower).unwrap();
        assert!(!v.holds);
        let pair = MatrixTuple::new(vec![id, lower]).unwrap();
        match v.witness.unwrap() {
            Witness::Vectors { xs, pattern } => {
                assert!(verify_csw_witness(&pair, &xs, false));
                assert_eq!(SignPattern::of_vectors(&xs), pattern);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ndw_def_examples() {
        assert!(check_column_ndw_def(&id_pair()).unwrap().holds);
        assert!(check_column_ndw_def(&id_neg_id()).unwrap().holds);
        let v = check_column_ndw_def(&skew_example()).unwrap();
        assert!(!v.holds);
        match v.witness.unwrap() {
            Witness::Vectors { xs, .. } => assert!(verify_ndw_witness(&skew_example(), &xs)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn size_cap_is_explicit() {
        let big = MatrixTuple::new(vec![RatMatrix::zeros(5, 5); 3]).unwrap();
        let err = check_csw(&big).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        assert!(err.to_string().contains("undecided: size"));
        let opts = CswOptions { max_components: 20, ..CswOptions::enumeration_only() };
        // zero tuple: x₀ free, every pattern is realizable; first violation is found fast
        assert!(!check_csw_with(&big, &opts).unwrap().holds);
    }

    #[test]
    fn pruned_and_unpruned_agree_on_examples() {
        for t in [skew_example(), id_zero_zero(), id_pair(), id_neg_id()] {
            for space in [Space::Csw, Space::Cone, Space::Ndw] {
                let a = first_violation(&t, space, true).unwrap();
                let b = first_violation(&t, space, false).unwrap();
                assert_eq!(a.map(|w| w.pattern), b.map(|w| w.pattern), "{space:?}");
            }
        }
    }

    #[test]
    fn pattern_strings_round_trip() {
        let p = SignPattern::from_row_strings(&["-0+", "+0-"]).unwrap();
        assert_eq!(p.row_strings(), vec!["-0+", "+0-"]);
        assert_eq!(p.sign(1, 2), Sign::Neg);
        assert_eq!(p.to_string(), "-0+/+0-");
        assert!(SignPattern::from_row_strings(&["-0", "+"]).is_err());
        assert!(SignPattern::from_row_strings(&["x0"]).is_err());
    }
}
