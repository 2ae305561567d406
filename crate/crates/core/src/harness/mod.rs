//! Seeded generators and theorem-verification suites.

pub mod gen;
pub mod rng;
pub mod theorems;

pub use gen::{gen_instance, gen_m_matrix, gen_tuple, Family, GenSpec};
pub use rng::{sub_seed, SplitMix64};
pub use theorems::{
    golden_suite, golden_suite_with, verify_theorem, verify_theorem_with, Oracles, TheoremReport, Violation,
    THEOREM_IDS,
};
