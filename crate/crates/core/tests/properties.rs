use ehlcp::classes::{is_column_sufficient, is_m, is_p};
use ehlcp::cli::doc::InstanceDocument;
use ehlcp::csw::{check_csw, check_csw_with, CswOptions};
use ehlcp::harness::{gen_instance, gen_m_matrix, SplitMix64};
use ehlcp::ratcore::{det, inverse, lp_solve, rat, solve_linear, LpStatus, SolveKind};
use ehlcp::representatives::{check_column_ndw_det, check_column_w, check_column_w0, MatrixTuple};
use ehlcp::solver::{is_solution, solve_all, solve_m_fast, EhlcpInstance};
use ehlcp::{RatMatrix, RatVector, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_matrix(n: usize, b: i64) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-b..=b, n * n)
        .prop_map(move |v| RatMatrix::new(n, n, v.into_iter().map(rat).collect()).unwrap())
}

fn small_vector(n: usize, b: i64) -> impl Strategy<Value = RatVector> {
    prop::collection::vec(-b..=b, n).prop_map(|v| v.into_iter().map(rat).collect())
}

fn tuple(n: usize, k: usize) -> impl Strategy<Value = MatrixTuple> {
    prop::collection::vec(small_matrix(n, 2), k + 1).prop_map(|m| MatrixTuple::new(m).unwrap())
}

fn tuple_2() -> impl Strategy<Value = MatrixTuple> {
    (1usize..=2).prop_flat_map(|k| tuple(2, k))
}

fn instance() -> impl Strategy<Value = EhlcpInstance> {
    (tuple_2(), any::<u64>()).prop_map(|(t, s)| gen_instance(&t, s, 2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn det_is_multiplicative(a in small_matrix(3, 3), b in small_matrix(3, 3)) {
        let ab = det(&a.mul(&b).unwrap()).unwrap();
        prop_assert_eq!(ab, det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn inverse_round_trips(a in small_matrix(3, 3)) {
        match inverse(&a).unwrap() {
            Some(inv) => prop_assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(3)),
            None => prop_assert!(det(&a).unwrap().is_zero()),
        }
    }

    #[test]
    fn solve_linear_solutions_satisfy_system(a in small_matrix(3, 2), b in small_vector(3, 3)) {
        let r = solve_linear(&a, &b).unwrap();
        match r.kind() {
            SolveKind::Inconsistent => prop_assert!(det(&a).unwrap().is_zero()),
            _ => {
                let x = r.particular().unwrap();
                prop_assert_eq!(&a.mul_vec(x).unwrap(), &b);
                for v in r.kernel_basis() {
                    prop_assert!(a.mul_vec(v).unwrap().is_zero());
                }
                prop_assert_eq!(r.kernel_basis().is_empty(), r.kind() == SolveKind::Unique);
            }
        }
    }

    /// max c.x over a box intersected with a half-space; compared with vertex enumeration.
    #[test]
    fn lp_matches_vertex_enumeration(c in small_vector(2, 3), h in small_vector(2, 2), rhs in -3i64..=3) {
        let e = |i: usize| RatVector::new((0..2).map(|j| rat((i == j) as i64)).collect());
        let ineq = vec![
            (e(0), rat(0)),
            (e(1), rat(0)),
            (e(0).scale(&rat(-1)), rat(-2)),
            (e(1).scale(&rat(-1)), rat(-2)),
            (h.clone(), rat(rhs)),
        ];
        let r = lp_solve(&c, &[], &ineq).unwrap();
        // Vertices: intersections of pairs of constraint lines that are feasible.
        let mut best: Option<Rational> = None;
        for i in 0..ineq.len() {
            for j in i + 1..ineq.len() {
                let m = RatMatrix::from_rows(vec![ineq[i].0.entries().to_vec(), ineq[j].0.entries().to_vec()]).unwrap();
                let Some(inv) = inverse(&m).unwrap() else { continue };
                let x = inv.mul_vec(&RatVector::new(vec![ineq[i].1.clone(), ineq[j].1.clone()])).unwrap();
                if ineq.iter().all(|(row, b)| row.dot(&x).unwrap() >= *b) {
                    let v = c.dot(&x).unwrap();
                    if best.as_ref().is_none_or(|b| v > *b) {
                        best = Some(v);
                    }
                }
            }
        }
        match best {
            None => prop_assert_eq!(r.status, LpStatus::Infeasible),
            Some(v) => {
                prop_assert_eq!(r.status, LpStatus::Optimal);
                prop_assert_eq!(r.objective_value.unwrap(), v);
                let x = r.point.unwrap();
                prop_assert!(ineq.iter().all(|(row, b)| row.dot(&x).unwrap() >= *b));
            }
        }
    }

    #[test]
    fn p_implies_column_sufficient_implies_w0(m in small_matrix(2, 2)) {
        let t = MatrixTuple::new(vec![RatMatrix::identity(2), m.clone()]).unwrap();
        let p = is_p(&m).unwrap().holds;
        let cs = is_column_sufficient(&m).unwrap().holds;
        prop_assert_eq!(p, check_column_w(&t).unwrap().holds);
        if p {
            prop_assert!(cs);
        }
        if cs {
            prop_assert!(check_column_w0(&t).unwrap().holds);
        }
    }

    #[test]
    fn m_matrices_are_p_with_positive_inverse_action(seed in any::<u64>(), v in prop::collection::vec(1i64..=3, 3)) {
        let m = gen_m_matrix(&mut SplitMix64::new(seed), 3, 2).unwrap();
        prop_assert!(is_m(&m).unwrap().holds);
        prop_assert!(is_p(&m).unwrap().holds);
        let v: RatVector = v.into_iter().map(rat).collect();
        let x = inverse(&m).unwrap().unwrap().mul_vec(&v).unwrap();
        prop_assert!(x.is_positive());
    }

    #[test]
    fn column_w_implies_ndw_and_w0(t in tuple_2()) {
        if check_column_w(&t).unwrap().holds {
            prop_assert!(check_column_ndw_det(&t).unwrap().holds);
            prop_assert!(check_column_w0(&t).unwrap().holds);
        }
    }

    #[test]
    fn csw_options_agree(t in tuple_2()) {
        let base = check_csw(&t).unwrap().holds;
        let unpruned = CswOptions { prune: false, ..CswOptions::enumeration_only() };
        prop_assert_eq!(base, check_csw_with(&t, &CswOptions::enumeration_only()).unwrap().holds);
        prop_assert_eq!(base, check_csw_with(&t, &unpruned).unwrap().holds);
    }

    #[test]
    fn solver_points_are_solutions(inst in instance()) {
        for p in solve_all(&inst).unwrap() {
            prop_assert!(is_solution(&inst, &p.point).unwrap());
            prop_assert!(p.piece_dimension <= p.branch_kernel_dimension);
            // x₀ ∧ xⱼ = 0 for every j on every solution.
            for j in 1..=inst.k() {
                for r in 0..inst.n() {
                    prop_assert!((p.point.xs[0][r].clone() * p.point.xs[j][r].clone()).is_zero());
                }
            }
        }
    }

    #[test]
    fn solution_sets_follow_column_conditions(inst in instance()) {
        let t = inst.tuple();
        let pieces = solve_all(&inst).unwrap();
        if check_column_w(t).unwrap().holds {
            prop_assert_eq!(pieces.len(), 1);
            prop_assert_eq!(pieces[0].piece_dimension, 0);
        }
        if check_column_ndw_det(t).unwrap().holds {
            prop_assert!(pieces.iter().all(|p| p.piece_dimension == 0));
        }
    }

    #[test]
    fn fast_path_is_among_pieces(seed in any::<u64>(), k in 1usize..=2, q in prop::collection::vec(1i64..=3, 2)) {
        let mut rng = SplitMix64::new(seed);
        let mut mats = vec![gen_m_matrix(&mut rng, 2, 2).unwrap()];
        for _ in 0..k {
            mats.push(RatMatrix::new(2, 2, (0..4).map(|_| rat(rng.int_in(-2, 2))).collect()).unwrap());
        }
        let d = (1..k).map(|_| RatVector::new(vec![Rational::one(), rat(2)])).collect();
        let inst = EhlcpInstance::new(MatrixTuple::new(mats).unwrap(), d, q.into_iter().map(rat).collect()).unwrap();
        let fast = solve_m_fast(&inst).unwrap().unwrap();
        prop_assert!(solve_all(&inst).unwrap().iter().any(|p| p.point == fast));
    }

    #[test]
    fn instance_documents_round_trip(inst in instance()) {
        let doc = InstanceDocument::from_instance(&inst);
        let again = InstanceDocument::parse(&doc.to_json().to_string()).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_instance().unwrap(), inst);
    }
}
