//! Single-matrix class oracles: Z, M, P, nondegenerate and column-sufficient.

use num_traits::{Signed, Zero};

use crate::csw::{check_csw_with, CswOptions};
use crate::error::{Error, Result};
use crate::ratcore::{det, inverse};
use crate::representatives::MatrixTuple;
use crate::verdict::{PropertyVerdict, Witness};
use crate::{RatMatrix, Rational};

/// Largest order for which principal minors are enumerated.
pub const MAX_MINOR_ORDER: usize = 16;

/// Off-diagonal entries nonpositive.
pub fn is_z(m: &RatMatrix) -> Result<PropertyVerdict> {
    let n = m.require_square("is_z")?;
    for i in 0..n {
        for j in 0..n {
            if i != j && m.get(i, j).is_positive() {
                return Ok(PropertyVerdict::fails(
                    "z",
                    Witness::Entry { row: i, col: j, value: m.get(i, j).clone() },
                    "positive off-diagonal entry",
                ));
            }
        }
    }
    Ok(PropertyVerdict::holds("z", "every off-diagonal entry is nonpositive"))
}

/// Z-matrix with a nonnegative inverse.
pub fn is_m(m: &RatMatrix) -> Result<PropertyVerdict> {
    let z = is_z(m)?;
    if !z.holds {
        return Ok(z.relabeled("m"));
    }
    let Some(inv) = inverse(m)? else {
        return Ok(PropertyVerdict::fails("m", Witness::Singular, "matrix is singular"));
    };
    let n = m.n_rows();
    for i in 0..n {
        for j in 0..n {
            if inv.get(i, j).is_negative() {
                return Ok(PropertyVerdict::fails(
                    "m",
                    Witness::InverseEntry { row: i, col: j, value: inv.get(i, j).clone() },
                    "inverse has a negative entry",
                ));
            }
        }
    }
    Ok(PropertyVerdict::holds("m", "Z-matrix with an entrywise nonnegative inverse"))
}

/// Nonempty subsets of `0..n`, by size and then lexicographically.
fn index_sets(n: usize) -> Vec<Vec<usize>> {
    fn extend(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            extend(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity((1usize << n) - 1);
    for size in 1..=n {
        extend(0, n, size, &mut Vec::new(), &mut out);
    }
    out
}

/// Every principal minor `(index_set, value)`; index sets are 0-based and
/// ordered by size, then lexicographically.
pub fn principal_minors(m: &RatMatrix) -> Result<Vec<(Vec<usize>, Rational)>> {
    let n = m.require_square("principal_minors")?;
    if n > MAX_MINOR_ORDER {
        return Err(Error::CapExceeded {
            what: "principal minor enumeration order",
            requested: n as u128,
            limit: MAX_MINOR_ORDER as u128,
            hint: "principal minors are only enumerated for small matrices",
        });
    }
    index_sets(n)
        .into_iter()
        .map(|set| {
            let sub = m.submatrix(&set, &set)?;
            Ok((set, det(&sub)?))
        })
        .collect()
}

fn minors_verdict(
    m: &RatMatrix,
    name: &str,
    ok: impl Fn(&Rational) -> bool,
    rule: &str,
) -> Result<PropertyVerdict> {
    for (set, value) in principal_minors(m)? {
        if !ok(&value) {
            return Ok(PropertyVerdict::fails(
                name,
                Witness::PrincipalMinor { index_set: set, value },
                format!("a principal minor is not {rule}"),
            ));
        }
    }
    Ok(PropertyVerdict::holds(name, format!("every principal minor is {rule}")))
}

pub fn is_p(m: &RatMatrix) -> Result<PropertyVerdict> {
    minors_verdict(m, "p", |v| v.is_positive(), "positive")
}

pub fn is_nondegenerate(m: &RatMatrix) -> Result<PropertyVerdict> {
    minors_verdict(m, "nondegenerate", |v| !v.is_zero(), "nonzero")
}

pub fn is_column_sufficient(m: &RatMatrix) -> Result<PropertyVerdict> {
    is_column_sufficient_with(m, &CswOptions::default())
}

/// `x * Mx ≤ 0 ⇒ x * Mx = 0`, decided as cS-W of the pair `(I, M)`.
pub fn is_column_sufficient_with(m: &RatMatrix, opts: &CswOptions) -> Result<PropertyVerdict> {
    let n = m.require_square("is_column_sufficient")?;
    let pair = MatrixTuple::new(vec![RatMatrix::identity(n), m.clone()])?;
    Ok(check_csw_with(&pair, opts)?.into_property("column_sufficient"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::rat;
    use crate::RatVector;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_ints(rows)
    }

    #[test]
    fn z_examples() {
        assert!(is_z(&RatMatrix::identity(2)).unwrap().holds);
        assert!(is_z(&m(&[&[2, -1], &[-1, 2]])).unwrap().holds);
        let v = is_z(&m(&[&[0, 1], &[-1, 0]])).unwrap();
        assert_eq!(v.witness, Some(Witness::Entry { row: 0, col: 1, value: rat(1) }));
        assert!(is_z(&m(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn m_examples() {
        assert!(is_m(&RatMatrix::identity(2)).unwrap().holds);
        assert!(is_m(&m(&[&[2, -1], &[-1, 2]])).unwrap().holds);
        let v = is_m(&m(&[&[1, -2], &[-2, 1]])).unwrap();
        assert!(matches!(v.witness, Some(Witness::InverseEntry { .. })));
        let v = is_m(&m(&[&[1, -1], &[-1, 1]])).unwrap();
        assert_eq!(v.witness, Some(Witness::Singular));
    }

    #[test]
    fn minors_examples() {
        let vals = |mm: RatMatrix| -> Vec<Rational> {
            principal_minors(&mm).unwrap().into_iter().map(|(_, v)| v).collect()
        };
        assert_eq!(vals(RatMatrix::identity(2)), vec![rat(1), rat(1), rat(1)]);
        assert_eq!(vals(m(&[&[2, -1], &[-1, 2]])), vec![rat(2), rat(2), rat(3)]);
        assert_eq!(vals(m(&[&[0, 1], &[-1, 0]])), vec![rat(0), rat(0), rat(1)]);
        let sets: Vec<_> = principal_minors(&RatMatrix::identity(3)).unwrap().into_iter().map(|(s, _)| s).collect();
        assert_eq!(
            sets,
            vec![vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]
        );
        assert!(principal_minors(&RatMatrix::identity(17)).is_err());
    }

    #[test]
    fn p_and_nondegenerate_examples() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        assert!(is_p(&a).unwrap().holds && is_nondegenerate(&a).unwrap().holds);
        let skew = m(&[&[0, 1], &[-1, 0]]);
        assert!(!is_p(&skew).unwrap().holds && !is_nondegenerate(&skew).unwrap().holds);
        let neg = RatMatrix::identity(2).neg();
        assert!(!is_p(&neg).unwrap().holds && is_nondegenerate(&neg).unwrap().holds);
    }

    #[test]
    fn column_sufficient_examples() {
        assert!(is_column_sufficient(&RatMatrix::identity(2)).unwrap().holds);
        assert!(is_column_sufficient(&m(&[&[0, 1], &[-1, 0]])).unwrap().holds);
        let lower = m(&[&[0, 0], &[1, 0]]);
        let v = is_column_sufficient(&lower).unwrap();
        assert!(!v.holds);
        // witness (x₀, x₁) with x₀ = C x₁ and x₁ * (C x₁) ≤ 0, ≠ 0
        let Some(Witness::Vectors { xs, .. }) = v.witness else { panic!() };
        let cx = lower.mul_vec(&xs[1]).unwrap();
        assert_eq!(cx, xs[0]);
        let prod = crate::ratcore::pointwise(&xs[1], &cx, crate::ratcore::PointwiseKind::Product).unwrap();
        assert!(prod.iter().all(|v| !v.is_positive()) && !prod.is_zero());
    }

    #[test]
    fn m_matrix_maps_positive_to_positive() {
        let a = m(&[&[3, -1, 0], &[-1, 3, -1], &[0, -1, 3]]);
        assert!(is_m(&a).unwrap().holds);
        let inv = inverse(&a).unwrap().unwrap();
        let v = RatVector::from_ints(&[1, 2, 1]);
        assert!(inv.mul_vec(&v).unwrap().is_positive());
    }
}
