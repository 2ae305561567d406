//! Seeded tuple and instance generators. Every family is re-certified by its oracle.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::rng::SplitMix64;
use crate::classes::{is_m, is_z};
use crate::error::{Error, Result};
use crate::ratcore::{det, rat};
use crate::representatives::{check_column_ndw_det, check_column_w, MatrixTuple};
use crate::solver::EhlcpInstance;
use crate::{RatMatrix, RatVector};

/// Resampling budget for an invertible `C₀`.
pub const MAX_RESAMPLES: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Generic,
    ColumnWConstructive,
    ZStructured,
    Degenerate,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::Generic, Family::ColumnWConstructive, Family::ZStructured, Family::Degenerate];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Generic => "generic",
            Family::ColumnWConstructive => "column_w_constructive",
            Family::ZStructured => "z_structured",
            Family::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub k: usize,
    pub family: Family,
    /// Entries are drawn from `{−B, …, B}`.
    pub entry_range: i64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, k: usize, family: Family, entry_range: i64, seed: u64) -> Self {
        GenSpec { n, k, family, entry_range, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 {
            return Err(Error::Invalid("n and k must be at least 1".into()));
        }
        if self.entry_range < 1 {
            return Err(Error::Invalid("entry range must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GenSpec { seed, ..self }
    }
}

fn random_matrix(rng: &mut SplitMix64, n: usize, lo: i64, hi: i64) -> RatMatrix {
    let data = (0..n * n).map(|_| rat(rng.int_in(lo, hi))).collect();
    RatMatrix::new(n, n, data).expect("square shape")
}

fn random_z_matrix(rng: &mut SplitMix64, n: usize, b: i64) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = if i == j { rng.int_in(-b, b) } else { rng.int_in(-b, 0) };
            m.set(i, j, rat(v));
        }
    }
    m
}

fn positive_diagonal(rng: &mut SplitMix64, n: usize, b: i64) -> RatMatrix {
    RatMatrix::diagonal(&(0..n).map(|_| rat(rng.int_in(1, b))).collect::<Vec<_>>())
}

fn invertible_matrix(rng: &mut SplitMix64, n: usize, b: i64) -> Result<RatMatrix> {
    for _ in 0..MAX_RESAMPLES {
        let c0 = random_matrix(rng, n, -b, b);
        if !det(&c0)?.is_zero() {
            return Ok(c0);
        }
    }
    Err(Error::Internal(format!("no invertible matrix in {MAX_RESAMPLES} samples")))
}

fn certify(ok: bool, what: &str, spec: &GenSpec) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!("generated {} tuple (seed {}) is not {what}", spec.family, spec.seed)))
    }
}

pub fn gen_tuple(spec: &GenSpec) -> Result<MatrixTuple> {
    spec.validate()?;
    let (n, k, b) = (spec.n, spec.k, spec.entry_range);
    let mut rng = SplitMix64::new(spec.seed);
    let tuple = match spec.family {
        Family::Generic => MatrixTuple::new((0..=k).map(|_| random_matrix(&mut rng, n, -b, b)).collect())?,
        Family::ColumnWConstructive => {
            let c0 = invertible_matrix(&mut rng, n, b)?;
            column_w_from(&mut rng, c0, k, b)?
        }
        Family::ZStructured => {
            let mut mats = vec![RatMatrix::identity(n)];
            mats.extend((0..k).map(|_| random_z_matrix(&mut rng, n, b)));
            MatrixTuple::new(mats)?
        }
        Family::Degenerate => {
            let mut mats: Vec<RatMatrix> = (0..=k).map(|_| random_matrix(&mut rng, n, -b, b)).collect();
            let i = 1 + rng.index(k);
            let r = rng.index(n);
            for row in 0..n {
                mats[i].set(row, r, rat(0));
            }
            MatrixTuple::new(mats)?
        }
    };

    match spec.family {
        Family::Generic => {}
        Family::ColumnWConstructive => certify(check_column_w(&tuple)?.holds, "column W", spec)?,
        Family::ZStructured => {
            let all_z = tuple.mats()[1..].iter().try_fold(true, |acc, m| Ok::<_, Error>(acc && is_z(m)?.holds))?;
            certify(all_z && tuple.mat(0) == &RatMatrix::identity(n), "Z-structured", spec)?;
        }
        Family::Degenerate => certify(!check_column_ndw_det(&tuple)?.holds, "degenerate", spec)?,
    }
    Ok(tuple)
}

/// `(C₀, C₀D₁, …, C₀D_k)` with random strictly positive diagonals.
pub fn column_w_from(rng: &mut SplitMix64, c0: RatMatrix, k: usize, b: i64) -> Result<MatrixTuple> {
    let n = c0.n_rows();
    let mut mats = vec![c0.clone()];
    for _ in 0..k {
        mats.push(c0.mul(&positive_diagonal(rng, n, b))?);
    }
    MatrixTuple::new(mats)
}

/// `dⱼ ∈ {1, …, B}ⁿ`, `q ∈ {−B, …, B}ⁿ`.
pub fn gen_instance(t: &MatrixTuple, seed: u64, entry_range: i64) -> Result<EhlcpInstance> {
    let mut rng = SplitMix64::new(seed);
    let (n, k) = (t.n(), t.k());
    let d = (1..k).map(|_| (0..n).map(|_| rat(rng.int_in(1, entry_range))).collect()).collect();
    let q: RatVector = (0..n).map(|_| rat(rng.int_in(-entry_range, entry_range))).collect();
    EhlcpInstance::new(t.clone(), d, q)
}

/// Like [`gen_instance`] but with `q ∈ {1, …, B}ⁿ`.
pub fn gen_positive_instance(t: &MatrixTuple, seed: u64, entry_range: i64) -> Result<EhlcpInstance> {
    let mut rng = SplitMix64::new(seed);
    let (n, k) = (t.n(), t.k());
    let d = (1..k).map(|_| (0..n).map(|_| rat(rng.int_in(1, entry_range))).collect()).collect();
    let q: RatVector = (0..n).map(|_| rat(rng.int_in(1, entry_range))).collect();
    EhlcpInstance::new(t.clone(), d, q)
}

/// Strictly diagonally dominant Z-matrix with positive diagonal, certified by `is_m`.
pub fn gen_m_matrix(rng: &mut SplitMix64, n: usize, entry_range: i64) -> Result<RatMatrix> {
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        let mut off = 0;
        for j in 0..n {
            if i != j {
                let v = rng.int_in(-entry_range, 0);
                off -= v;
                m.set(i, j, rat(v));
            }
        }
        m.set(i, i, rat(off + rng.int_in(1, entry_range)));
    }
    if !is_m(&m)?.holds {
        return Err(Error::Internal("diagonally dominant Z-matrix failed the M-matrix oracle".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representatives::check_column_ndw_det;

    #[test]
    fn families_parse() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn column_w_family_is_column_w() {
        for seed in 0..20 {
            let t = gen_tuple(&GenSpec::new(2, 1, Family::ColumnWConstructive, 2, seed)).unwrap();
            assert!(check_column_w(&t).unwrap().holds);
        }
        assert!(check_column_w(&gen_tuple(&GenSpec::new(2, 1, Family::ColumnWConstructive, 2, 7)).unwrap()).unwrap().holds);
    }

    #[test]
    fn z_family_shape() {
        let t = gen_tuple(&GenSpec::new(2, 2, Family::ZStructured, 2, 3)).unwrap();
        assert_eq!(t.mat(0), &RatMatrix::identity(2));
        assert!(is_z(t.mat(1)).unwrap().holds && is_z(t.mat(2)).unwrap().holds);
    }

    #[test]
    fn degenerate_family_fails_ndw() {
        let t = gen_tuple(&GenSpec::new(2, 1, Family::Degenerate, 2, 11)).unwrap();
        assert!(!check_column_ndw_det(&t).unwrap().holds);
    }

    #[test]
    fn instances_are_deterministic() {
        let t = gen_tuple(&GenSpec::new(2, 2, Family::Generic, 2, 5)).unwrap();
        let a = gen_instance(&t, 99, 2).unwrap();
        assert_eq!(a, gen_instance(&t, 99, 2).unwrap());
        assert!(a.d().iter().all(|v| v.is_positive()));
        let t1 = gen_tuple(&GenSpec::new(2, 1, Family::Generic, 2, 5)).unwrap();
        assert!(gen_instance(&t1, 1, 2).unwrap().d().is_empty());
    }

    #[test]
    fn m_matrices_certified() {
        let mut rng = SplitMix64::new(4);
        for _ in 0..20 {
            let m = gen_m_matrix(&mut rng, 3, 2).unwrap();
            assert!(is_m(&m).unwrap().holds);
        }
    }

    #[test]
    fn bad_specs() {
        assert!(gen_tuple(&GenSpec::new(0, 1, Family::Generic, 2, 0)).is_err());
        assert!(gen_tuple(&GenSpec::new(2, 1, Family::Generic, 0, 0)).is_err());
    }
}
