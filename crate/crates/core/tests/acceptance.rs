//! Acceptance suite: one test per criterion, every comparison exact.
//!
//! Each test prints a `criterion N: PASS` line (visible with
//! `cargo test --test acceptance -- --nocapture`); the test name itself
//! doubles as the pass/fail line in the default report.

use std::time::Instant;

use skeinrep::cli::{self, CliRequest, CliStatus, Subcommand};
use skeinrep::laurent::{ExpVec, PolyElement};
use skeinrep::macdonald::mac_poly;
use skeinrep::qreduce::{oracle_reduce, Reducer};
use skeinrep::scalar::Scalar;
use skeinrep::verify::{
    suite_cherednik, suite_compiler, suite_conjugation, suite_dimension, suite_hecke,
    suite_macdonald, suite_uniqueness,
};

fn assert_all(outcomes: Vec<skeinrep::verify::CheckOutcome>) -> usize {
    let mut checks = 0;
    for o in outcomes {
        assert!(
            o.passed,
            "identity '{}' failed ({} checks): {:?}",
            o.name, o.checks, o.failures
        );
        checks += o.checks;
    }
    checks
}

/// Criterion 1: the operator identity suite passes exactly for
/// kappa in {2,3,4} over all monomials with entries in [-2,2], within 60 s.
#[test]
fn criterion_1_hecke_operator_suite() {
    let start = Instant::now();
    let mut checks = 0;
    for kappa in 2..=4 {
        checks += assert_all(suite_hecke(kappa, 2).unwrap());
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "operator suite exceeded 60 s: {elapsed:?}"
    );
    println!("criterion 1: PASS ({checks} checks in {elapsed:?})");
}

/// Criterion 2: the shift conjugation law holds exactly on the same window.
#[test]
fn criterion_2_conjugation_law() {
    let mut checks = 0;
    for kappa in 2..=4 {
        checks += assert_all(suite_conjugation(kappa, 2).unwrap());
    }
    println!("criterion 2: PASS ({checks} checks)");
}

/// Criterion 3: the boxed quotient has degree-0 dimension exactly 1 for
/// kappa in {2,3}; the recursive reducer agrees with the oracle on every
/// degree-0 monomial in the box; nonzero total degree reduces to zero.
#[test]
fn criterion_3_dimension_one() {
    let mut checks = 0;
    for kappa in 2..=3 {
        checks += assert_all(suite_dimension(kappa, 2).unwrap());
    }
    println!("criterion 3: PASS ({checks} checks)");
}

/// Criterion 4: the pinned value, independently reproduced by the oracle.
#[test]
fn criterion_4_pinned_value() {
    let expected = Scalar::hbar() / (Scalar::s_pow(-1) * Scalar::c_pow(2) - Scalar::s());
    let reducer = Reducer::new(2);
    let a = ExpVec::new(vec![1, -1]);
    assert_eq!(reducer.reduce_monomial(&a).unwrap().lambda, expected);
    let via_oracle =
        oracle_reduce(&PolyElement::monomial(a, Scalar::one()), 2).unwrap();
    assert_eq!(via_oracle, expected);
    println!("criterion 4: PASS (recursive and oracle routes agree on the pinned value)");
}

/// Criterion 5: normalization, star-bilinearity on 50 random samples, and
/// the exact adjoint property for T_i, X_i, Y_i, g over all monomial pairs
/// with exponents in [-2,2]^kappa, kappa in {2,3}, within 10 minutes.
#[test]
fn criterion_5_cherednik_axioms() {
    let start = Instant::now();
    let mut checks = 0;
    for kappa in 2..=3 {
        checks += assert_all(suite_cherednik(kappa, 2, 50).unwrap());
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 600,
        "pairing axioms exceeded 10 minutes: {elapsed:?}"
    );
    println!("criterion 5: PASS ({checks} checks in {elapsed:?})");
}

/// Criterion 6: the axiom-driven recursive determination of the form agrees
/// with the topological pairing on the whole kappa=2 window.
#[test]
fn criterion_6_uniqueness_cross_check() {
    let checks = assert_all(suite_uniqueness(2, 2).unwrap());
    println!("criterion 6: PASS ({checks} checks)");
}

/// Criterion 7: exact joint eigenvectors over the composition window for
/// kappa in {2,3}, pairwise orthogonal with nonzero self-pairings, and the
/// kappa=2 closed forms.
#[test]
fn criterion_7_macdonald_orthogonality() {
    let mut checks = 0;
    for kappa in 2..=3 {
        checks += assert_all(suite_macdonald(kappa).unwrap());
    }
    // closed forms, asserted directly as well
    let d10 = mac_poly(&ExpVec::new(vec![1, 0])).unwrap();
    assert_eq!(d10.polynomial, PolyElement::x(2, 1));
    let d01 = mac_poly(&ExpVec::new(vec![0, 1])).unwrap();
    let gamma = (Scalar::hbar() * Scalar::c_pow(2))
        / (Scalar::s() - Scalar::s_pow(-1) * Scalar::c_pow(2));
    assert_eq!(
        d01.polynomial,
        PolyElement::x(2, 2).add(&PolyElement::x(2, 1).scale(&gamma))
    );
    println!("criterion 7: PASS ({checks} checks)");
}

/// Criterion 8: compiler witnesses for the built-in relations at every index
/// for kappa in {2,3,4}, plus character consistency.
#[test]
fn criterion_8_compiler_relations() {
    let mut checks = 0;
    for kappa in 2..=4 {
        checks += assert_all(suite_compiler(kappa).unwrap());
    }
    println!("criterion 8: PASS ({checks} checks)");
}

/// Criterion 9: golden-file determinism for the CLI on 10 fixed inputs,
/// byte-exact.
#[test]
fn criterion_9_cli_golden_files() {
    struct Case {
        file: &'static str,
        subcommand: Subcommand,
        kappa: usize,
        exprs: &'static [&'static str],
        json: bool,
        bound: Option<i64>,
    }
    let cases = [
        Case {
            file: "01_normal_form_t1.txt",
            subcommand: Subcommand::NormalForm,
            kappa: 2,
            exprs: &["T1"],
            json: false,
            bound: None,
        },
        Case {
            file: "02_normal_form_t1x1t1.txt",
            subcommand: Subcommand::NormalForm,
            kappa: 2,
            exprs: &["T1 x1 T1"],
            json: false,
            bound: None,
        },
        Case {
            file: "03_normal_form_conj_json.txt",
            subcommand: Subcommand::NormalForm,
            kappa: 3,
            exprs: &["g x1 g^-1"],
            json: true,
            bound: None,
        },
        Case {
            file: "04_normal_form_y1y2.txt",
            subcommand: Subcommand::NormalForm,
            kappa: 2,
            exprs: &["y1 y2"],
            json: false,
            bound: None,
        },
        Case {
            file: "05_reduce_pinned.txt",
            subcommand: Subcommand::Reduce,
            kappa: 2,
            exprs: &["x1*x2^-1"],
            json: false,
            bound: None,
        },
        Case {
            file: "06_reduce_oracle_json.txt",
            subcommand: Subcommand::Reduce,
            kappa: 3,
            exprs: &["1 + x1 - x2*x3^-1"],
            json: true,
            bound: Some(2),
        },
        Case {
            file: "07_pair_x1_x2.txt",
            subcommand: Subcommand::Pair,
            kappa: 2,
            exprs: &["x1", "x2"],
            json: false,
            bound: None,
        },
        Case {
            file: "08_pair_json.txt",
            subcommand: Subcommand::Pair,
            kappa: 3,
            exprs: &["x1*x2", "x2*x3"],
            json: true,
            bound: None,
        },
        Case {
            file: "09_macdonald_01.txt",
            subcommand: Subcommand::Macdonald,
            kappa: 2,
            exprs: &["0,1"],
            json: false,
            bound: None,
        },
        Case {
            file: "10_macdonald_json.txt",
            subcommand: Subcommand::Macdonald,
            kappa: 3,
            exprs: &["1,0,-1"],
            json: true,
            bound: None,
        },
    ];
    assert_eq!(cases.len(), 10);
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for case in &cases {
        let request = CliRequest {
            subcommand: case.subcommand,
            kappa: case.kappa,
            expressions: case.exprs.iter().map(|s| s.to_string()).collect(),
            json: case.json,
            bound: case.bound,
            degree: 0,
            suite: String::new(),
        };
        let report = cli::run(&request);
        assert_eq!(report.status, CliStatus::Ok, "{}: {:?}", case.file, report);
        let rendered = cli::render(&request, &report);
        let expected = std::fs::read_to_string(root.join(case.file))
            .unwrap_or_else(|e| panic!("missing golden file {}: {e}", case.file));
        assert_eq!(
            rendered, expected,
            "golden mismatch for {} (byte-exact comparison)",
            case.file
        );
        // a second run must be byte-identical
        let again = cli::render(&request, &cli::run(&request));
        assert_eq!(rendered, again, "nondeterministic output for {}", case.file);
    }
    println!("criterion 9: PASS (10 golden files, byte-exact, re-run identical)");
}

/// End-to-end: the installed binary agrees with the in-process renderer and
/// uses the documented exit codes.
#[test]
fn binary_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_skeinrep");
    let out = std::process::Command::new(bin)
        .args(["pair", "--kappa", "2", "x1", "x2"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "(-s^2 + 1)/(s^2 - c^2)\n"
    );
    // parse errors use exit code 2 and report a position on stderr
    let err = std::process::Command::new(bin)
        .args(["normal-form", "--kappa", "2", "T9"])
        .output()
        .expect("binary runs");
    assert_eq!(err.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&err.stderr).contains("out of range"));
    // verify exits 0 on success
    let v = std::process::Command::new(bin)
        .args(["verify", "--kappa", "2", "--degree", "1", "--suite", "compiler"])
        .output()
        .expect("binary runs");
    assert_eq!(v.status.code(), Some(0));
}
