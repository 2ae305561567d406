//! Column representatives of a matrix tuple and the determinant-sign
//! properties built on them: column W, column W₀ and column ND-W.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ratcore::det;
use crate::verdict::{PropertyVerdict, Witness};
use crate::{RatMatrix, Rational};

/// Refuse more representatives than this unless forced.
pub const MAX_SELECTORS: u128 = 1_000_000;

/// An ordered tuple `(C₀, C₁, …, C_k)` of `n×n` rational matrices, `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTuple {
    n: usize,
    mats: Vec<RatMatrix>,
}

impl MatrixTuple {
    pub fn new(mats: Vec<RatMatrix>) -> Result<Self> {
        if mats.len() < 2 {
            return Err(Error::Invalid(format!(
                "a tuple needs at least two matrices (k >= 1), got {}",
                mats.len()
            )));
        }
        let n = mats[0].n_rows();
        if n == 0 {
            return Err(Error::Invalid("matrices must be at least 1x1".into()));
        }
        for (i, m) in mats.iter().enumerate() {
            if m.n_rows() != n || m.n_cols() != n {
                return Err(Error::Dimension(format!(
                    "C{i} is {}x{}, expected {n}x{n}",
                    m.n_rows(),
                    m.n_cols()
                )));
            }
        }
        Ok(MatrixTuple { n, mats })
    }

    /// Builds a tuple from integer literals; panics on inconsistent shapes.
    pub fn from_ints(mats: &[&[&[i64]]]) -> Self {
        Self::new(mats.iter().map(|m| RatMatrix::from_ints(m)).collect())
            .expect("well-formed tuple literal")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.mats.len() - 1
    }

    pub fn mats(&self) -> &[RatMatrix] {
        &self.mats
    }

    pub fn mat(&self, i: usize) -> &RatMatrix {
        &self.mats[i]
    }
}

/// `choice[j]` names the matrix that supplies column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnSelector {
    choice: Vec<usize>,
}

impl ColumnSelector {
    pub fn new(choice: Vec<usize>) -> Self {
        ColumnSelector { choice }
    }

    pub fn choice(&self) -> &[usize] {
        &self.choice
    }
}

/// `(k+1)^n`, saturating at `u128::MAX`.
pub fn selector_count(n: usize, k: usize) -> u128 {
    (k as u128 + 1).saturating_pow(n.min(u32::MAX as usize) as u32)
}

pub fn representative_matrix(t: &MatrixTuple, s: &ColumnSelector) -> Result<RatMatrix> {
    if s.choice.len() != t.n {
        return Err(Error::IndexOutOfRange(format!(
            "selector has {} entries for n = {}",
            s.choice.len(),
            t.n
        )));
    }
    if let Some(&bad) = s.choice.iter().find(|&&c| c > t.k()) {
        return Err(Error::IndexOutOfRange(format!("selector entry {bad} > k = {}", t.k())));
    }
    let mut r = RatMatrix::zeros(t.n, t.n);
    for (j, &src) in s.choice.iter().enumerate() {
        for i in 0..t.n {
            r.set(i, j, t.mats[src].get(i, j).clone());
        }
    }
    Ok(r)
}

/// All selectors in mixed-radix lexicographic order, column 0 most significant.
pub fn selectors(n: usize, k: usize) -> Selectors {
    Selectors { radix: k + 1, next: Some(vec![0; n]) }
}

pub struct Selectors {
    radix: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Selectors {
    type Item = ColumnSelector;

    fn next(&mut self) -> Option<ColumnSelector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        self.next = loop {
            if pos == 0 {
                break None;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.radix {
                break Some(succ);
            }
            succ[pos] = 0;
        };
        Some(ColumnSelector::new(current))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RepOptions {
    /// Scan every selector and report all violations instead of stopping early.
    pub exhaustive: bool,
    /// Lift the [`MAX_SELECTORS`] guardrail.
    pub force: bool,
}

fn check_cap(t: &MatrixTuple, opts: &RepOptions) -> Result<()> {
    let count = selector_count(t.n, t.k());
    if count > MAX_SELECTORS && !opts.force {
        return Err(Error::CapExceeded {
            what: "column representatives",
            requested: count,
            limit: MAX_SELECTORS,
            hint: "pass --force to enumerate anyway",
        });
    }
    Ok(())
}

/// Every representative with its determinant, in canonical selector order.
pub fn representative_dets(t: &MatrixTuple) -> Result<Vec<(ColumnSelector, Rational)>> {
    check_cap(t, &RepOptions::default())?;
    selectors(t.n, t.k())
        .map(|s| {
            let d = det(&representative_matrix(t, &s)?)?;
            Ok((s, d))
        })
        .collect()
}

fn dets<'a>(t: &'a MatrixTuple) -> impl Iterator<Item = (ColumnSelector, Rational)> + 'a {
    selectors(t.n, t.k()).map(move |s| {
        let r = representative_matrix(t, &s).expect("canonical selector is in range");
        let d = det(&r).expect("representative is square");
        (s, d)
    })
}

fn opposite(first: &(ColumnSelector, Rational), second: (ColumnSelector, Rational)) -> Witness {
    Witness::OppositeSigns {
        first: first.0.clone(),
        first_det: first.1.clone(),
        second: second.0,
        second_det: second.1,
    }
}

pub fn check_column_w(t: &MatrixTuple) -> Result<PropertyVerdict> {
    check_column_w_with(t, &RepOptions::default())
}

/// Column W: all representative determinants strictly positive, or all strictly negative.
pub fn check_column_w_with(t: &MatrixTuple, opts: &RepOptions) -> Result<PropertyVerdict> {
    check_cap(t, opts)?;
    let mut reference: Option<(ColumnSelector, Rational)> = None;
    let mut violations = Vec::new();
    for (s, d) in dets(t) {
        let violation = if d.is_zero() {
            Some(Witness::Selector { selector: s, det: d })
        } else {
            match &reference {
                None => {
                    reference = Some((s, d));
                    None
                }
                Some(r) if r.1.is_positive() != d.is_positive() => Some(opposite(r, (s, d))),
                Some(_) => None,
            }
        };
        if let Some(w) = violation {
            violations.push(w);
            if !opts.exhaustive {
                break;
            }
        }
    }
    let count = selector_count(t.n, t.k());
    Ok(match violations.first().cloned() {
        None => PropertyVerdict::holds(
            "column_w",
            format!("all {count} representative determinants share one strict sign"),
        ),
        Some(w) => {
            let why = match &w {
                Witness::Selector { .. } => "a representative determinant is zero",
                _ => "two representative determinants have opposite signs",
            };
            let mut v = PropertyVerdict::fails("column_w", w, why);
            if opts.exhaustive {
                v.all_violations = violations;
            }
            v
        }
    })
}

pub fn check_column_w0(t: &MatrixTuple) -> Result<PropertyVerdict> {
    check_column_w0_with(t, &RepOptions::default())
}

/// Column W₀: all determinants ≥ 0 with one > 0, or all ≤ 0 with one < 0.
pub fn check_column_w0_with(t: &MatrixTuple, opts: &RepOptions) -> Result<PropertyVerdict> {
    check_cap(t, opts)?;
    let mut reference: Option<(ColumnSelector, Rational)> = None;
    let mut first_zero: Option<ColumnSelector> = None;
    let mut violations = Vec::new();
    for (s, d) in dets(t) {
        if d.is_zero() {
            first_zero.get_or_insert(s);
            continue;
        }
        match &reference {
            None => reference = Some((s, d)),
            Some(r) if r.1.is_positive() != d.is_positive() => {
                violations.push(opposite(r, (s, d)));
                if !opts.exhaustive {
                    break;
                }
            }
            Some(_) => {}
        }
    }
    let mut verdict = match (violations.first().cloned(), reference) {
        (Some(w), _) => PropertyVerdict::fails(
            "column_w0",
            w,
            "two representative determinants have opposite strict signs",
        ),
        (None, None) => PropertyVerdict::fails(
            "column_w0",
            Witness::Selector {
                selector: first_zero.expect("at least one selector exists"),
                det: Rational::zero(),
            },
            "every representative determinant is zero",
        ),
        (None, Some((s, d))) => PropertyVerdict::holds(
            "column_w0",
            format!(
                "no determinant of opposite sign; selector {:?} has nonzero determinant {}",
                s.choice(),
                d
            ),
        ),
    };
    if opts.exhaustive && !verdict.holds {
        verdict.all_violations = violations;
    }
    Ok(verdict)
}

pub fn check_column_ndw_det(t: &MatrixTuple) -> Result<PropertyVerdict> {
    check_column_ndw_det_with(t, &RepOptions::default())
}

/// Column ND-W via the representative characterization: every determinant is nonzero.
pub fn check_column_ndw_det_with(t: &MatrixTuple, opts: &RepOptions) -> Result<PropertyVerdict> {
    check_cap(t, opts)?;
    let mut violations = Vec::new();
    for (s, d) in dets(t) {
        if d.is_zero() {
            violations.push(Witness::Selector { selector: s, det: d });
            if !opts.exhaustive {
                break;
            }
        }
    }
    Ok(match violations.first().cloned() {
        None => PropertyVerdict::holds("column_ndw", "every representative determinant is nonzero"),
        Some(w) => {
            let mut v = PropertyVerdict::fails("column_ndw", w, "a representative determinant is zero");
            if opts.exhaustive {
                v.all_violations = violations;
            }
            v
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::rat;

    fn skew_example() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[0, 1], &[-1, 0]], &[&[1, 0], &[0, 1]]])
    }

    fn id_pair() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 1]]])
    }

    fn id_neg_id() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[-1, 0], &[0, -1]]])
    }

    fn id_diag23() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[2, 0], &[0, 3]]])
    }

    fn id_zero_zero() -> MatrixTuple {
        MatrixTuple::from_ints(&[&[&[1, 0], &[0, 1]], &[&[0, 0], &[0, 0]], &[&[0, 0], &[0, 0]]])
    }

    #[test]
    fn tuple_validation() {
        assert!(MatrixTuple::new(vec![RatMatrix::identity(2)]).is_err());
        assert!(MatrixTuple::new(vec![RatMatrix::identity(2), RatMatrix::identity(3)]).is_err());
        assert!(MatrixTuple::new(vec![RatMatrix::identity(2), RatMatrix::zeros(2, 3)]).is_err());
        let t = skew_example();
        assert_eq!((t.n(), t.k()), (2, 2));
    }

    #[test]
    fn selector_counts() {
        assert_eq!(selector_count(1, 1), 2);
        assert_eq!(selector_count(2, 2), 9);
        assert_eq!(selector_count(3, 1), 8);
        for (n, k) in [(1, 1), (2, 2), (3, 1), (3, 3), (4, 2)] {
            let all: Vec<_> = selectors(n, k).collect();
            assert_eq!(all.len() as u128, selector_count(n, k));
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, all, "lexicographic and without repeats");
        }
    }

    #[test]
    fn representative_examples() {
        let t = id_pair();
        for s in selectors(2, 1) {
            assert_eq!(representative_matrix(&t, &s).unwrap(), RatMatrix::identity(2));
        }
        let r = representative_matrix(&skew_example(), &ColumnSelector::new(vec![0, 1])).unwrap();
        assert_eq!(r, RatMatrix::from_ints(&[&[1, 1], &[0, 0]]));
        let r = representative_matrix(&id_diag23(), &ColumnSelector::new(vec![1, 0])).unwrap();
        assert_eq!(r, RatMatrix::from_ints(&[&[2, 0], &[0, 1]]));
        assert!(representative_matrix(&id_pair(), &ColumnSelector::new(vec![0, 2])).is_err());
        assert!(representative_matrix(&id_pair(), &ColumnSelector::new(vec![0])).is_err());
    }

    #[test]
    fn column_w_examples() {
        assert!(check_column_w(&id_pair()).unwrap().holds);
        assert!(check_column_w(&id_diag23()).unwrap().holds);
        let v = check_column_w(&skew_example()).unwrap();
        assert!(!v.holds);
        match v.witness.unwrap() {
            Witness::Selector { selector, det: d } => {
                assert_eq!(d, rat(0));
                assert_eq!(selector.choice(), &[0, 1]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
        let v = check_column_w(&id_neg_id()).unwrap();
        assert!(matches!(v.witness, Some(Witness::OppositeSigns { .. })));
    }

    #[test]
    fn column_w0_examples() {
        assert!(!check_column_w0(&id_neg_id()).unwrap().holds);
        assert!(check_column_w0(&skew_example()).unwrap().holds);
        assert!(check_column_w0(&id_zero_zero()).unwrap().holds);
        let all_zero = MatrixTuple::from_ints(&[&[&[0, 0], &[0, 0]], &[&[1, 0], &[0, 0]]]);
        let v = check_column_w0(&all_zero).unwrap();
        assert!(!v.holds);
        assert!(matches!(v.witness, Some(Witness::Selector { .. })));
    }

    #[test]
    fn ndw_det_examples() {
        assert!(check_column_ndw_det(&id_neg_id()).unwrap().holds);
        assert!(!check_column_ndw_det(&skew_example()).unwrap().holds);
        assert!(check_column_ndw_det(&id_pair()).unwrap().holds);
    }

    #[test]
    fn exhaustive_mode_lists_every_violation() {
        let opts = RepOptions { exhaustive: true, force: false };
        let v = check_column_ndw_det_with(&skew_example(), &opts).unwrap();
        let zeros = representative_dets(&skew_example())
            .unwrap()
            .into_iter()
            .filter(|(_, d)| d.is_zero())
            .count();
        assert_eq!(v.all_violations.len(), zeros);
        assert_eq!(v.witness.as_ref(), v.all_violations.first());
        let w = check_column_w_with(&skew_example(), &opts).unwrap();
        assert_eq!(w.all_violations.len(), zeros);
    }

    #[test]
    fn witness_rechecks() {
        for t in [skew_example(), id_neg_id(), id_zero_zero()] {
            let v = check_column_w(&t).unwrap();
            match v.witness.unwrap() {
                Witness::Selector { selector, det: d } => {
                    assert_eq!(det(&representative_matrix(&t, &selector).unwrap()).unwrap(), d)
                }
                Witness::OppositeSigns { first, first_det, second, second_det } => {
                    assert_eq!(det(&representative_matrix(&t, &first).unwrap()).unwrap(), first_det);
                    assert_eq!(det(&representative_matrix(&t, &second).unwrap()).unwrap(), second_det);
                    assert!(first_det.is_positive() != second_det.is_positive());
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn size_cap() {
        let big = MatrixTuple::new(vec![RatMatrix::identity(20), RatMatrix::identity(20)]).unwrap();
        assert!(matches!(check_column_w(&big), Err(Error::CapExceeded { .. })));
    }
}
