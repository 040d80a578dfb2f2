//! Shared case table for the golden-file and acceptance tests.

use std::path::PathBuf;
use std::process::{Command, Output};

pub struct Case {
    pub name: &'static str,
    pub command: &'static str,
    pub fixture: &'static str,
    pub extra_args: &'static [&'static str],
    pub expect_exit: i32,
}

pub const CASES: &[Case] = &[
    Case {
        name: "ginverse_shift",
        command: "ginverse",
        fixture: "matrix_shift.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "ginverse_steered",
        command: "ginverse",
        fixture: "matrix_steered.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "ginverse_json",
        command: "ginverse",
        fixture: "matrix_shift.json",
        extra_args: &["--report", "json"],
        expect_exit: 0,
    },
    Case {
        name: "ginverse_bad_rational",
        command: "ginverse",
        fixture: "matrix_bad_rational.json",
        extra_args: &[],
        expect_exit: 2,
    },
    Case {
        name: "ginverse_bad_schema",
        command: "ginverse",
        fixture: "matrix_bad_schema.json",
        extra_args: &[],
        expect_exit: 2,
    },
    Case {
        name: "ginverse_kind_mismatch",
        command: "ginverse",
        fixture: "chain_odd.json",
        extra_args: &[],
        expect_exit: 2,
    },
    Case {
        name: "chain_default4",
        command: "check-chain",
        fixture: "chain_default4.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "chain_nilpotent",
        command: "check-chain",
        fixture: "chain_nilpotent.json",
        extra_args: &[],
        expect_exit: 1,
    },
    Case {
        name: "chain_odd",
        command: "check-chain",
        fixture: "chain_odd.json",
        extra_args: &[],
        expect_exit: 2,
    },
    Case {
        name: "verify_projectors",
        command: "verify-cocycle",
        fixture: "cocycle_projectors.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "verify_invertible",
        command: "verify-cocycle",
        fixture: "cocycle_invertible.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "verify_failing",
        command: "verify-cocycle",
        fixture: "cocycle_failing.json",
        extra_args: &[],
        expect_exit: 1,
    },
    Case {
        name: "degree_mixed",
        command: "obstruction-degree",
        fixture: "cocycle_mixed.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "degree_missing_object",
        command: "obstruction-degree",
        fixture: "cocycle_projectors.json",
        extra_args: &[],
        expect_exit: 2,
    },
    Case {
        name: "morphism_conjugation",
        command: "cocycle-morphism",
        fixture: "cocycle_morphism.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "tensor_pair",
        command: "tensor",
        fixture: "cocycle_tensor.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "dual_projectors",
        command: "dual",
        fixture: "cocycle_projectors.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "pairing_invertible",
        command: "pairing",
        fixture: "cocycle_invertible.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "pairing_projectors",
        command: "pairing",
        fixture: "cocycle_projectors.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "lift_rank1",
        command: "lift",
        fixture: "lift_rank1.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "lift_bad_retraction",
        command: "lift",
        fixture: "lift_bad_retraction.json",
        extra_args: &[],
        expect_exit: 1,
    },
    Case {
        name: "functor_conjugation",
        command: "functor-check",
        fixture: "functor_conjugation.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "functor_collapse",
        command: "functor-check",
        fixture: "functor_collapse.json",
        extra_args: &[],
        expect_exit: 1,
    },
    Case {
        name: "functor_collapse_stop",
        command: "functor-check",
        fixture: "functor_collapse.json",
        extra_args: &["--stop-on-first-failure"],
        expect_exit: 1,
    },
    Case {
        name: "functor_natural",
        command: "functor-check",
        fixture: "functor_natural.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "algebra_coordwise",
        command: "algebra-check",
        fixture: "algebra_coordwise.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "algebra_skew",
        command: "algebra-check",
        fixture: "algebra_skew.json",
        extra_args: &[],
        expect_exit: 1,
    },
    Case {
        name: "hopf_z2",
        command: "hopf-check",
        fixture: "bialgebra_z2.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "hopf_z3",
        command: "hopf-check",
        fixture: "bialgebra_z3.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "hopf_zero_antipode",
        command: "hopf-check",
        fixture: "bialgebra_zero_antipode.json",
        extra_args: &[],
        expect_exit: 1,
    },
    Case {
        name: "module_self",
        command: "module-check",
        fixture: "module_self.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "module_failing",
        command: "module-check",
        fixture: "module_failing.json",
        extra_args: &[],
        expect_exit: 1,
    },
    Case {
        name: "comodule_dual",
        command: "module-check",
        fixture: "comodule_dual.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "tqft_reversible",
        command: "tqft-check",
        fixture: "tqft_reversible.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "tqft_projector",
        command: "tqft-check",
        fixture: "tqft_projector.json",
        extra_args: &[],
        expect_exit: 0,
    },
    Case {
        name: "tqft_nilpotent",
        command: "tqft-check",
        fixture: "tqft_nilpotent.json",
        extra_args: &[],
        expect_exit: 1,
    },
    Case {
        name: "tqft_json",
        command: "tqft-check",
        fixture: "tqft_reversible.json",
        extra_args: &["--report", "json"],
        expect_exit: 0,
    },
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

#[allow(dead_code)] // only the golden test target reads golden files
pub fn golden_path(case: &str, stream: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{case}.{stream}"))
}

pub fn run_case(case: &Case) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regcat"))
        .arg(case.command)
        .arg(fixture_path(case.fixture))
        .args(case.extra_args)
        .output()
        .expect("the binary runs")
}
