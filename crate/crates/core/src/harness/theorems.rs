//! Randomized verification suites, one per theorem id, plus fixed golden cases.

use num_traits::Zero;

use super::gen::{column_w_from, gen_instance, gen_m_matrix, gen_positive_instance, gen_tuple, Family, GenSpec};
use super::rng::{sub_seed, SplitMix64};
use crate::classes::{is_m, is_z};
use crate::csw::{
    check_column_ndw_def_with, check_cone_csw_with, check_csw_with, check_x_column_sufficiency_with,
    verify_csw_witness, verify_ndw_witness, CswOptions, CswVerdict,
};
use crate::error::{Error, Result};
use crate::ratcore::{det, inverse, pointwise, rat, ratio, PointwiseKind};
use crate::representatives::{
    check_column_ndw_det, check_column_w, check_column_w0, representative_matrix, MatrixTuple,
};
use crate::solver::{is_solution, solve_all, solve_m_fast, EhlcpInstance, SolutionPiece, SolutionTuple};
use crate::verdict::{PropertyVerdict, Witness};
use crate::{RatMatrix, RatVector};

pub const THEOREM_IDS: [&str; 10] = [
    "T2.1-equiv",
    "T2.2-finite",
    "T3.1-convex",
    "T3.2-unique",
    "P3.1-pairs",
    "T4.1-ndw",
    "T4.2-equiv",
    "T4.3-chain",
    "T4.4-cone",
    "C4.1-zconvex",
];

/// Id of the fixed golden-case report.
pub const GOLDEN_ID: &str = "golden";

type TupleCheck = fn(&MatrixTuple) -> Result<PropertyVerdict>;
type EnumCheck = fn(&MatrixTuple, &CswOptions) -> Result<CswVerdict>;

/// The deciders a suite cross-checks. Swappable so a deliberately broken
/// oracle can be shown to produce violations.
#[derive(Clone, Copy)]
pub struct Oracles {
    pub column_w: TupleCheck,
    pub column_w0: TupleCheck,
    pub column_ndw_det: TupleCheck,
    pub column_ndw_def: fn(&MatrixTuple, &CswOptions) -> Result<PropertyVerdict>,
    pub csw: EnumCheck,
    pub cone_csw: EnumCheck,
    pub x_col_suff: fn(&RatMatrix, &RatMatrix, &CswOptions) -> Result<PropertyVerdict>,
    pub solve_all: fn(&EhlcpInstance) -> Result<Vec<SolutionPiece>>,
    pub solve_m_fast: fn(&EhlcpInstance) -> Result<Option<SolutionTuple>>,
}

impl Default for Oracles {
    fn default() -> Self {
        Oracles {
            column_w: check_column_w,
            column_w0: check_column_w0,
            column_ndw_det: check_column_ndw_det,
            column_ndw_def: check_column_ndw_def_with,
            csw: check_csw_with,
            cone_csw: check_cone_csw_with,
            x_col_suff: check_x_column_sufficiency_with,
            solve_all,
            solve_m_fast,
        }
    }
}

/// One failed check, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    /// `trial <i>` or `golden <name>`.
    pub case: String,
    pub tuple_seed: Option<u64>,
    pub instance_seed: Option<u64>,
    pub tuple: MatrixTuple,
    pub instance: Option<EhlcpInstance>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub trials: usize,
    pub golden_cases: usize,
    /// Cases in which the theorem's hypothesis held (the rest are vacuous).
    pub exercised: usize,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

struct Case {
    name: String,
    seed: Option<u64>,
    tuple: MatrixTuple,
    fixed: Vec<EhlcpInstance>,
}

fn tuple3(mats: [&[&[i64]]; 3]) -> MatrixTuple {
    MatrixTuple::from_ints(&mats)
}

const I2: &[&[i64]] = &[&[1, 0], &[0, 1]];
const SKEW: &[&[i64]] = &[&[0, 1], &[-1, 0]];
const Z2: &[&[i64]] = &[&[0, 0], &[0, 0]];

/// `(I, [[0,1],[−1,0]], I)`: cS-W and W₀ without column W.
pub fn skew_example() -> MatrixTuple {
    tuple3([I2, SKEW, I2])
}

/// `(I, 0, 0)`: W₀ without cS-W.
pub fn identity_zero_zero() -> MatrixTuple {
    tuple3([I2, Z2, Z2])
}

/// `C = (I, [[0,1],[−1,0]])`, `q = (0, 1)`: a solution segment.
pub fn segment_instance() -> EhlcpInstance {
    EhlcpInstance::new(MatrixTuple::from_ints(&[I2, SKEW]), vec![], RatVector::from_ints(&[0, 1]))
        .expect("valid instance")
}

fn golden_cases() -> Vec<Case> {
    let seg = segment_instance();
    vec![
        Case { name: "golden skew_example".into(), seed: None, tuple: skew_example(), fixed: vec![] },
        Case { name: "golden segment".into(), seed: None, tuple: seg.tuple().clone(), fixed: vec![seg] },
        Case { name: "golden identity_zero_zero".into(), seed: None, tuple: identity_zero_zero(), fixed: vec![] },
    ]
}

struct Ctx<'a> {
    o: &'a Oracles,
    spec: GenSpec,
    report: TheoremReport,
}

impl Ctx<'_> {
    fn violate(&mut self, case: &Case, inst: Option<(&EhlcpInstance, Option<u64>)>, detail: impl Into<String>) {
        self.report.violations.push(Violation {
            case: case.name.clone(),
            tuple_seed: case.seed,
            instance_seed: inst.and_then(|(_, s)| s),
            tuple: case.tuple.clone(),
            instance: inst.map(|(i, _)| i.clone()),
            detail: detail.into(),
        });
    }

    /// Fixed instances first, then `count` generated ones.
    fn instances(&self, case: &Case, count: usize, positive_q: bool) -> Result<Vec<(EhlcpInstance, Option<u64>)>> {
        let base = case.seed.unwrap_or(self.spec.seed ^ 0x005E_ED0F_601D);
        let mut out: Vec<_> = case
            .fixed
            .iter()
            .filter(|i| !positive_q || i.q().is_positive())
            .map(|i| (i.clone(), None))
            .collect();
        for m in 0..count as u64 {
            let s = sub_seed(base, m);
            let inst = if positive_q {
                gen_positive_instance(&case.tuple, s, self.spec.entry_range)?
            } else {
                gen_instance(&case.tuple, s, self.spec.entry_range)?
            };
            out.push((inst, Some(s)));
        }
        Ok(out)
    }

    /// Every piece point must solve the instance and satisfy `x₀ ∧ xⱼ = 0` for all j.
    fn check_pieces(&mut self, case: &Case, inst: &EhlcpInstance, seed: Option<u64>, pieces: &[SolutionPiece]) -> Result<()> {
        for p in pieces {
            if !is_solution(inst, &p.point)? {
                self.violate(case, Some((inst, seed)), format!("branch {} returned a non-solution", p.pattern));
                continue;
            }
            for j in 1..p.point.xs.len() {
                if !pointwise(&p.point.xs[0], &p.point.xs[j], PointwiseKind::Product)?.is_zero() {
                    self.violate(case, Some((inst, seed)), format!("branch {}: x0 * x{j} != 0", p.pattern));
                }
            }
        }
        Ok(())
    }

    fn convexity(&mut self, case: &Case, inst: &EhlcpInstance, seed: Option<u64>) -> Result<bool> {
        let pieces = (self.o.solve_all)(inst)?;
        self.check_pieces(case, inst, seed, &pieces)?;
        let points = sample_points(inst, &pieces)?;
        if points.len() < 2 {
            return Ok(false);
        }
        for detail in convexity_violations(inst, &points)? {
            self.violate(case, Some((inst, seed)), detail);
        }
        Ok(true)
    }
}

/// Piece points together with `point ± ½·step` along each affine-hull direction.
pub fn sample_points(inst: &EhlcpInstance, pieces: &[SolutionPiece]) -> Result<Vec<SolutionTuple>> {
    let mut out: Vec<SolutionTuple> = Vec::new();
    let half = ratio(1, 2);
    for p in pieces {
        let mut candidates = vec![p.point.clone()];
        for dir in &p.kernel_basis {
            let neg = SolutionTuple::new(dir.xs.iter().map(|v| v.scale(&rat(-1))).collect());
            for d in [dir.clone(), neg] {
                let s = p.feasible_step(inst, &d)?;
                if !s.is_zero() {
                    candidates.push(p.point.step(&d, &(s * &half))?);
                }
            }
        }
        for c in candidates {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Pairs `(x, y)` and `t ∈ {¼, ½, ¾}` for which `t·x + (1−t)·y` is not a solution.
pub fn convexity_violations(inst: &EhlcpInstance, points: &[SolutionTuple]) -> Result<Vec<String>> {
    let ts = [ratio(1, 4), ratio(1, 2), ratio(3, 4)];
    let mut out = Vec::new();
    for (a, x) in points.iter().enumerate() {
        for (b, y) in points.iter().enumerate().skip(a + 1) {
            for t in &ts {
                if !is_solution(inst, &x.convex_combination(t, y)?)? {
                    out.push(format!("t = {t} combination of solution points {a} and {b} is not a solution"));
                }
            }
        }
    }
    Ok(out)
}

fn tuple_for(id: &str, spec: &GenSpec) -> Result<MatrixTuple> {
    if id != "T3.2-unique" {
        return gen_tuple(spec);
    }
    // C₀ must be an M-matrix; keep a generated one that already is.
    let mut rng = SplitMix64::new(sub_seed(spec.seed, u64::MAX));
    if spec.family == Family::ColumnWConstructive {
        let c0 = gen_m_matrix(&mut rng, spec.n, spec.entry_range)?;
        return column_w_from(&mut rng, c0, spec.k, spec.entry_range);
    }
    let t = gen_tuple(spec)?;
    if is_m(t.mat(0))?.holds {
        return Ok(t);
    }
    let mut mats = t.mats().to_vec();
    mats[0] = gen_m_matrix(&mut rng, spec.n, spec.entry_range)?;
    MatrixTuple::new(mats)
}

pub fn verify_theorem(id: &str, trials: usize, spec: &GenSpec) -> Result<TheoremReport> {
    verify_theorem_with(id, trials, spec, &Oracles::default())
}

pub fn verify_theorem_with(id: &str, trials: usize, spec: &GenSpec, oracles: &Oracles) -> Result<TheoremReport> {
    let suite: fn(&mut Ctx, &Case) -> Result<bool> = match id {
        "T2.1-equiv" => suite_unique,
        "T2.2-finite" => suite_finite,
        "T3.1-convex" => suite_convex,
        "T3.2-unique" => suite_m_unique,
        "P3.1-pairs" => suite_pairs,
        "T4.1-ndw" => suite_ndw,
        "T4.2-equiv" => suite_equiv,
        "T4.3-chain" => suite_chain,
        "T4.4-cone" => suite_cone,
        "C4.1-zconvex" => suite_zconvex,
        other => return Err(Error::UnknownTheorem(other.to_string())),
    };
    spec.validate()?;
    let golden = golden_cases();
    let mut ctx = Ctx {
        o: oracles,
        spec: *spec,
        report: TheoremReport {
            theorem_id: id.to_string(),
            trials,
            golden_cases: golden.len(),
            exercised: 0,
            violations: Vec::new(),
            passed: false,
        },
    };
    for i in 0..trials {
        let s = sub_seed(spec.seed, i as u64);
        let tuple = tuple_for(id, &spec.with_seed(s))?;
        let case = Case { name: format!("trial {i}"), seed: Some(s), tuple, fixed: vec![] };
        if suite(&mut ctx, &case)? {
            ctx.report.exercised += 1;
        }
    }
    for case in &golden {
        if suite(&mut ctx, case)? {
            ctx.report.exercised += 1;
        }
    }
    ctx.report.passed = ctx.report.violations.is_empty();
    Ok(ctx.report)
}

fn enum_opts() -> CswOptions {
    CswOptions::enumeration_only()
}

fn selector_witness_ok(t: &MatrixTuple, v: &PropertyVerdict) -> Result<bool> {
    match &v.witness {
        Some(Witness::Selector { selector, det: d }) => Ok(det(&representative_matrix(t, selector)?)? == *d),
        Some(Witness::OppositeSigns { first, first_det, second, second_det }) => Ok(det(&representative_matrix(t, first)?)?
            == *first_det
            && det(&representative_matrix(t, second)?)? == *second_det),
        _ => Ok(false),
    }
}

fn csw_witness_ok(t: &MatrixTuple, v: &CswVerdict, cone: bool) -> bool {
    match &v.witness {
        Some(w) => verify_csw_witness(t, &w.xs, cone),
        None => v.holds,
    }
}

fn suite_unique(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let t = &case.tuple;
    let w = (ctx.o.column_w)(t)?;
    // Column W of C against column W of the normalized tuple (I, C₀⁻¹C₁, …).
    let normalized = match inverse(t.mat(0))? {
        None => false,
        Some(inv) => {
            let mut mats = vec![RatMatrix::identity(t.n())];
            for c in &t.mats()[1..] {
                mats.push(inv.mul(c)?);
            }
            (ctx.o.column_w)(&MatrixTuple::new(mats)?)?.holds
        }
    };
    if w.holds != normalized {
        ctx.violate(case, None, format!("column W is {} but the normalized tuple gives {normalized}", w.holds));
    }
    if !w.holds {
        if !selector_witness_ok(t, &w)? {
            ctx.violate(case, None, "column W failure witness does not re-check");
        }
        return Ok(false);
    }
    // Nonnegative diagonal combinations with positive diagonal sum stay nonsingular.
    let mut rng = SplitMix64::new(case.seed.unwrap_or(0) ^ 0xD1A6);
    for _ in 0..5 {
        let mut sum = RatMatrix::zeros(t.n(), t.n());
        let mut weights: Vec<Vec<i64>> = (0..=t.k()).map(|_| (0..t.n()).map(|_| rng.int_in(0, 2)).collect()).collect();
        for r in 0..t.n() {
            if weights.iter().all(|w| w[r] == 0) {
                weights[rng.index(t.k() + 1)][r] = 1;
            }
        }
        for (c, w) in t.mats().iter().zip(&weights) {
            let d = RatMatrix::diagonal(&w.iter().map(|&v| rat(v)).collect::<Vec<_>>());
            sum = sum.add(&c.mul(&d)?)?;
        }
        if det(&sum)?.is_zero() {
            ctx.violate(case, None, format!("diagonal combination with weights {weights:?} is singular"));
        }
    }
    for (inst, seed) in ctx.instances(case, 50, false)? {
        let pieces = (ctx.o.solve_all)(&inst)?;
        ctx.check_pieces(case, &inst, seed, &pieces)?;
        if pieces.len() != 1 || pieces[0].piece_dimension != 0 {
            let dims: Vec<usize> = pieces.iter().map(|p| p.piece_dimension).collect();
            ctx.violate(case, Some((&inst, seed)), format!("expected one isolated solution, got piece dimensions {dims:?}"));
        }
    }
    Ok(true)
}

fn suite_finite(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let ndw = (ctx.o.column_ndw_det)(&case.tuple)?;
    if !ndw.holds {
        return Ok(false);
    }
    for (inst, seed) in ctx.instances(case, 10, false)? {
        let pieces = (ctx.o.solve_all)(&inst)?;
        ctx.check_pieces(case, &inst, seed, &pieces)?;
        if let Some(p) = pieces.iter().find(|p| p.piece_dimension > 0) {
            ctx.violate(case, Some((&inst, seed)), format!("branch {} has a piece of dimension {}", p.pattern, p.piece_dimension));
        }
    }
    Ok(true)
}

fn suite_convex(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    if !(ctx.o.csw)(&case.tuple, &CswOptions::default())?.holds {
        return Ok(false);
    }
    let mut exercised = false;
    for (inst, seed) in ctx.instances(case, 10, false)? {
        exercised |= ctx.convexity(case, &inst, seed)?;
    }
    Ok(exercised)
}

fn suite_m_unique(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let t = &case.tuple;
    if !is_m(t.mat(0))?.holds || !(ctx.o.csw)(t, &CswOptions::default())?.holds {
        return Ok(false);
    }
    for (inst, seed) in ctx.instances(case, 5, true)? {
        let fast = (ctx.o.solve_m_fast)(&inst)?;
        let pieces = (ctx.o.solve_all)(&inst)?;
        ctx.check_pieces(case, &inst, seed, &pieces)?;
        let Some(fast) = fast else {
            ctx.violate(case, Some((&inst, seed)), "fast path declined an M-matrix instance with q > 0");
            continue;
        };
        if pieces.len() != 1 || pieces[0].piece_dimension != 0 || pieces[0].point != fast {
            ctx.violate(
                case,
                Some((&inst, seed)),
                format!("expected the single solution (C0^-1 q, 0, ..., 0), got {} pieces", pieces.len()),
            );
        }
    }
    Ok(true)
}

fn suite_pairs(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let t = &case.tuple;
    let csw = (ctx.o.csw)(t, &enum_opts())?;
    if !csw_witness_ok(t, &csw, false) {
        ctx.violate(case, None, "cS-W failure witness does not re-check");
    }
    if !csw.holds {
        return Ok(false);
    }
    for i in 0..t.k() {
        let pair = (ctx.o.x_col_suff)(t.mat(i), t.mat(i + 1), &enum_opts())?;
        if !pair.holds {
            ctx.violate(case, None, format!("cS-W holds but (C{i}, C{}) is not X-column-sufficient", i + 1));
        }
    }
    Ok(true)
}

fn suite_ndw(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let t = &case.tuple;
    let by_def = (ctx.o.column_ndw_def)(t, &enum_opts())?;
    let by_det = (ctx.o.column_ndw_det)(t)?;
    if by_def.holds != by_det.holds {
        ctx.violate(case, None, format!("ND-W by definition is {} but by determinants is {}", by_def.holds, by_det.holds));
    }
    if !by_def.holds {
        let ok = matches!(&by_def.witness, Some(Witness::Vectors { xs, .. }) if verify_ndw_witness(t, xs));
        if !ok {
            ctx.violate(case, None, "ND-W definition witness does not re-check");
        }
    }
    if !by_det.holds {
        let ok = matches!(&by_det.witness, Some(Witness::Selector { det, .. }) if det.is_zero())
            && selector_witness_ok(t, &by_det)?;
        if !ok {
            ctx.violate(case, None, "ND-W determinant witness does not re-check");
        }
    }
    Ok(true)
}

fn suite_equiv(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let t = &case.tuple;
    let w = (ctx.o.column_w)(t)?.holds;
    let csw = (ctx.o.csw)(t, &enum_opts())?;
    let w0 = (ctx.o.column_w0)(t)?.holds;
    let ndw = (ctx.o.column_ndw_det)(t)?.holds;
    if !csw_witness_ok(t, &csw, false) {
        ctx.violate(case, None, "cS-W failure witness does not re-check");
    }
    if w != (csw.holds && ndw) {
        ctx.violate(case, None, format!("column W = {w}, cS-W = {}, ND-W = {ndw}", csw.holds));
    }
    if w != (w0 && ndw) {
        ctx.violate(case, None, format!("column W = {w}, W0 = {w0}, ND-W = {ndw}"));
    }
    Ok(true)
}

fn suite_chain(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let t = &case.tuple;
    let w = (ctx.o.column_w)(t)?.holds;
    let csw = (ctx.o.csw)(t, &enum_opts())?;
    let w0 = (ctx.o.column_w0)(t)?.holds;
    if !csw_witness_ok(t, &csw, false) {
        ctx.violate(case, None, "cS-W failure witness does not re-check");
    }
    if w && !csw.holds {
        ctx.violate(case, None, "column W holds but cS-W fails");
    }
    if csw.holds && !w0 {
        ctx.violate(case, None, "cS-W holds but column W0 fails");
    }
    Ok(w || csw.holds)
}

/// `C₀` invertible and every `C₀⁻¹Cᵢ` a Z-matrix.
fn z_hypothesis(t: &MatrixTuple) -> Result<bool> {
    let Some(inv) = inverse(t.mat(0))? else { return Ok(false) };
    for c in &t.mats()[1..] {
        if !is_z(&inv.mul(c)?)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

fn suite_cone(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let t = &case.tuple;
    let csw = (ctx.o.csw)(t, &enum_opts())?;
    let cone = (ctx.o.cone_csw)(t, &enum_opts())?;
    if !csw_witness_ok(t, &csw, false) || !csw_witness_ok(t, &cone, true) {
        ctx.violate(case, None, "a failure witness does not re-check");
    }
    if csw.holds && !cone.holds {
        ctx.violate(case, None, "cS-W holds but cone cS-W fails");
    }
    if !z_hypothesis(t)? {
        return Ok(false);
    }
    if csw.holds != cone.holds {
        ctx.violate(case, None, format!("Z hypothesis holds, cS-W = {}, cone cS-W = {}", csw.holds, cone.holds));
    }
    Ok(true)
}

fn suite_zconvex(ctx: &mut Ctx, case: &Case) -> Result<bool> {
    let t = &case.tuple;
    if !z_hypothesis(t)? || !(ctx.o.cone_csw)(t, &CswOptions::default())?.holds {
        return Ok(false);
    }
    let mut exercised = false;
    for (inst, seed) in ctx.instances(case, 10, false)? {
        exercised |= ctx.convexity(case, &inst, seed)?;
    }
    Ok(exercised)
}

pub fn golden_suite() -> Result<TheoremReport> {
    golden_suite_with(&Oracles::default())
}

/// Fixed expectations on the skew example, `(I, 0, 0)` and the segment instance.
pub fn golden_suite_with(o: &Oracles) -> Result<TheoremReport> {
    let cases = golden_cases();
    let mut ctx = Ctx {
        o,
        spec: GenSpec::new(2, 1, Family::Generic, 2, 0),
        report: TheoremReport {
            theorem_id: GOLDEN_ID.into(),
            trials: 0,
            golden_cases: cases.len(),
            exercised: cases.len(),
            violations: Vec::new(),
            passed: false,
        },
    };
    let [skew, seg, izz] = &cases[..] else { unreachable!() };

    let t = &skew.tuple;
    for opts in [CswOptions::default(), enum_opts()] {
        if !(o.csw)(t, &opts)?.holds {
            ctx.violate(skew, None, "cS-W should hold");
        }
    }
    let w = (o.column_w)(t)?;
    let zero_witness = matches!(&w.witness, Some(Witness::Selector { det, .. }) if det.is_zero());
    if w.holds || !zero_witness || !selector_witness_ok(t, &w)? {
        ctx.violate(skew, None, "column W should fail with a determinant-0 selector");
    }
    if !(o.column_w0)(t)?.holds {
        ctx.violate(skew, None, "column W0 should hold");
    }
    if (o.column_ndw_det)(t)?.holds {
        ctx.violate(skew, None, "column ND-W should fail");
    }

    let t = &izz.tuple;
    if !(o.column_w0)(t)?.holds {
        ctx.violate(izz, None, "column W0 should hold");
    }
    let csw = (o.csw)(t, &enum_opts())?;
    if csw.holds || !csw_witness_ok(t, &csw, false) {
        ctx.violate(izz, None, "cS-W should fail with a re-checkable witness");
    }

    let inst = &seg.fixed[0];
    let pieces = (o.solve_all)(inst)?;
    ctx.check_pieces(seg, inst, None, &pieces)?;
    if !pieces.iter().any(|p| p.piece_dimension == 1) {
        ctx.violate(seg, Some((inst, None)), "expected a dimension-1 solution piece");
    }
    let points = sample_points(inst, &pieces)?;
    for detail in convexity_violations(inst, &points)? {
        ctx.violate(seg, Some((inst, None)), detail);
    }

    ctx.report.passed = ctx.report.violations.is_empty();
    Ok(ctx.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_passes() {
        let r = golden_suite().unwrap();
        assert!(r.passed, "{:?}", r.violations);
    }

    #[test]
    fn unknown_id() {
        let spec = GenSpec::new(2, 1, Family::Generic, 2, 1);
        assert!(matches!(verify_theorem("T9.9", 1, &spec), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn broken_oracle_is_caught() {
        let o = Oracles {
            column_ndw_det: |t| Ok(PropertyVerdict::holds("column_ndw", format!("claims {}", t.n()))),
            ..Oracles::default()
        };
        let r = verify_theorem_with("T4.1-ndw", 20, &GenSpec::new(2, 1, Family::Degenerate, 2, 3), &o).unwrap();
        assert!(!r.passed);
        assert!(!golden_suite_with(&o).unwrap().passed);
    }

    #[test]
    fn small_runs_pass() {
        let spec = GenSpec::new(2, 1, Family::Generic, 2, 5);
        for id in THEOREM_IDS {
            let r = verify_theorem(id, 5, &spec).unwrap();
            assert!(r.passed, "{id}: {:?}", r.violations);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let spec = GenSpec::new(2, 2, Family::ZStructured, 2, 8);
        assert_eq!(verify_theorem("C4.1-zconvex", 4, &spec).unwrap(), verify_theorem("C4.1-zconvex", 4, &spec).unwrap());
    }

    #[test]
    fn sample_points_on_segment() {
        let inst = segment_instance();
        let pieces = solve_all(&inst).unwrap();
        let points = sample_points(&inst, &pieces).unwrap();
        assert!(points.len() >= 3);
        assert!(convexity_violations(&inst, &points).unwrap().is_empty());
    }
}
