//! Randomized invariants, 64 cases per suite.

mod common;

macro_rules! suite {
    ($name:ident) => {
        #[test]
        fn $name() {
            if let Err(e) = common::$name() {
                panic!("{e}");
            }
        }
    };
}

suite!(residue_sum_zero);
suite!(reconstruction);
suite!(cube_vs_orthant);
suite!(engine_agreement);
suite!(digamma_recurrence);
suite!(lerch_shift);
suite!(alt_log_product_antisymmetry);
suite!(kernel_consistency);
suite!(deterministic_reports);
