use std::process::{Command, Output};

use sheun::kernel::{parse_rational, LambdaPoly};
use sheun::ops::{sheun_basis, DifferenceOperator};
use sheun::verify::VerificationReport;

fn sheun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sheun"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_wilson_examples() {
    let one = sheun(&["eval", "wilson", "--n", "0", "--params", "1,2,3,4"]);
    assert_eq!((one.status.code(), stdout(&one).as_str()), (Some(0), "1\n"));
    let lin = sheun(&["eval", "wilson", "--n", "1", "--params", "1,2,3,4"]);
    assert_eq!(stdout(&lin), "50, -10\n");
}

#[test]
fn eval_json_round_trips_through_the_polynomial_parser() {
    let out = sheun(&[
        "eval",
        "--family",
        "wilson",
        "--n",
        "3",
        "--params",
        "1/2,-2/3,3,5/4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let coeffs: Vec<String> = serde_json::from_str(&stdout(&out)).unwrap();
    let poly = LambdaPoly::from_coeffs(coeffs.iter().map(|c| parse_rational(c).unwrap()).collect());
    let p =
        sheun::families::ParamSet::from_slice(&sheun::kernel::parse_rational_list("1/2,-2/3,3,5/4").unwrap()).unwrap();
    assert_eq!(poly, sheun::families::wilson(3, &p).unwrap());
}

#[test]
fn eval_para_racah_and_cdhahn() {
    let pr = sheun(&["eval", "pararacah", "--n", "0", "--N", "4", "--params", "1/4,3/4,2"]);
    assert_eq!(stdout(&pr), "1\n");
    let csv = sheun(&["eval", "cdhahn", "--n", "2", "--params", "1,2,3", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    assert_eq!(stdout(&csv).trim().split(',').count(), 3);
    let missing_n = sheun(&["eval", "pararacah", "--n", "1", "--params", "1/4,3/4,2"]);
    assert_eq!(missing_n.status.code(), Some(2));
    assert!(stderr(&missing_n).contains("--N"));
}

#[test]
fn eval_error_codes() {
    let usage = sheun(&["eval", "wilson", "--params", "1,2,3,4"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(stderr(&usage).contains("--n"));
    assert!(stdout(&usage).is_empty());
    let decimal = sheun(&["eval", "wilson", "--n", "1", "--params", "0.5,2,3,4"]);
    assert_eq!(decimal.status.code(), Some(2));
    let singular = sheun(&["eval", "wilson", "--n", "2", "--params", "1,-1,3,4"]);
    assert_eq!(singular.status.code(), Some(3));
    assert!(stderr(&singular).contains("a+b"));
    let family = sheun(&["eval", "jacobi", "--n", "1", "--params", "1,2"]);
    assert_eq!(family.status.code(), Some(2));
}

#[test]
fn dump_op_round_trips() {
    let b = sheun_basis();
    for (name, expected) in [("L", &b.l), ("M1", &b.m1), ("M2", &b.m2), ("R1", &b.r1), ("R2", &b.r2)] {
        let out = sheun(&["dump-op", name]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let op = DifferenceOperator::from_json(&serde_json::from_str(&stdout(&out)).unwrap()).unwrap();
        assert_eq!(&op, expected, "{name}");
    }
    for args in [
        &["dump-op", "taustar", "--params", "1/3,-2,5/7,4"][..],
        &["dump-op", "mu", "--params", "1/3,-2,5/7,4"],
        &["dump-op", "P", "--params", "1/2,-3"],
        &["dump-op", "R", "--params", "7/3"],
        &["dump-op", "S+", "--s", "-3/5"],
    ] {
        let out = sheun(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let op = DifferenceOperator::from_json(&value).unwrap();
        assert_eq!(op.to_json(), value);
    }
}

#[test]
fn dump_op_errors() {
    let unknown = sheun(&["dump-op", "Z"]);
    assert_eq!(unknown.status.code(), Some(3));
    assert!(stderr(&unknown).contains("unknown operator"));
    let missing = sheun(&["dump-op", "mustar"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("--params"));
}

#[test]
fn verify_json_is_schema_valid() {
    let out = sheun(&[
        "verify", "--suite", "casimir", "--trials", "2", "--seed", "3", "--format", "json",
    ]);
    let reports: Vec<VerificationReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert_eq!(r.suite, "casimir");
        assert!(!r.relation_id.is_empty());
        for p in &r.params {
            parse_rational(p).unwrap();
        }
    }
    let reencoded = serde_json::to_string_pretty(&reports).unwrap();
    assert_eq!(
        serde_json::from_str::<Vec<VerificationReport>>(&reencoded).unwrap(),
        reports
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_exit_status_tracks_hard_failures() {
    let text = sheun(&["verify", "--suite", "appendix"]);
    assert_eq!(text.status.code(), Some(0));
    let body = stdout(&text);
    assert!(body.starts_with("== appendix =="));
    assert!(body.contains("correction"));
    assert!(body.trim_end().ends_with("0 unresolved"));
}

#[test]
fn verify_usage_errors() {
    for args in [
        &["verify"][..],
        &["verify", "--suite", "everything"],
        &["verify", "--suite", "stab", "--format", "yaml"],
        &["verify", "--suite", "stab", "--trials", "many"],
        &["verify", "--suite", "pararacah", "--N", "1"],
        &["frobnicate"],
    ] {
        let out = sheun(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stdout(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn verify_csv_has_a_header_and_one_row_per_entry() {
    let out = sheun(&["verify", "--suite", "stab", "--format", "csv"]);
    let body = stdout(&out);
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("suite,"));
}
