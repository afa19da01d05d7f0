use serde_json::{json, Value};
use sheun::families::ParamSet;
use sheun::kernel::rat;
use sheun::ops::{sheun_basis, DifferenceOperator};
use sheun::structure::{sklyanin_set, taustar, universal_set};
use sheun::verify::{render, verify_truncation, CorrectionOutcome, Format, Status, VerificationReport};

#[test]
fn operator_json_shape() {
    let l = sheun_basis().l.to_json();
    let obj = l.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["+1", "-1"]);
    for v in obj.values() {
        let pair = v.as_array().unwrap();
        assert_eq!(pair.len(), 2);
        assert!(pair.iter().all(|p| p.as_array().unwrap().iter().all(Value::is_string)));
    }
    assert_eq!(DifferenceOperator::from_json(&l).unwrap().support(), vec![-1, 1]);
}

#[test]
fn structure_operators_survive_a_text_round_trip() {
    let p = ParamSet::new(rat(1, 3), rat(-5, 2), rat(7, 4), rat(2, 9));
    let u = universal_set(&rat(-3, 5));
    let s = sklyanin_set(&rat(5, 8)).unwrap();
    for op in [taustar(&p), u.r, u.v, s.splus, s.s3] {
        let text = serde_json::to_string(&op.to_json()).unwrap();
        let back = DifferenceOperator::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, op);
    }
}

#[test]
fn malformed_operator_json_is_rejected() {
    for bad in [
        json!(null),
        json!([1, 2]),
        json!({"terms": "x"}),
        json!({"1": {"num": ["1"]}}),
        json!({"+1": [["1/0"], ["1"]]}),
        json!({"+1": [["1"], []]}),
        json!({"+1": [[1], ["1"]]}),
    ] {
        assert!(DifferenceOperator::from_json(&bad).is_err(), "{bad}");
    }
}

#[test]
fn report_fields() {
    let reports = verify_truncation(3);
    let v: Value = serde_json::from_str(&render(&reports, Format::Json)).unwrap();
    for entry in v.as_array().unwrap() {
        for key in ["suite", "relation_id", "status", "params"] {
            assert!(entry.get(key).is_some(), "{key}");
        }
        let status = entry["status"].as_str().unwrap();
        assert!(["pass", "fail", "degenerate-resampled"].contains(&status));
        if status == "fail" {
            assert!(entry.get("correction").is_some());
        }
    }
}

#[test]
fn report_round_trip_keeps_optional_fields() {
    let r = VerificationReport::new("demo", "x = y", &[rat(1, 2), rat(-3, 1)])
        .constant("sign_vs_stated", "-1")
        .note("illustrative")
        .with_correction(CorrectionOutcome {
            description: "swap sign".into(),
            status: Status::Pass,
            residual_offset: None,
            residual_coeff: None,
        });
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.contains("\"params\":[\"1/2\",\"-3\"]"));
    assert_eq!(serde_json::from_str::<VerificationReport>(&text).unwrap(), r);
    let bare = VerificationReport::new("demo", "x = y", &[]);
    let text = serde_json::to_string(&bare).unwrap();
    assert!(!text.contains("correction") && !text.contains("note") && !text.contains("empirical_constants"));
}
