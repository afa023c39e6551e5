use std::process::Command;

use serde_json::Value;

fn pgl6(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pgl6")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn ok_json(args: &[&str]) -> Value {
    let (code, out) = pgl6(args);
    assert_eq!(code, 0, "{args:?}: {out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "pgl6.v1");
    v
}

#[test]
fn brauer_index_example() {
    let v = ok_json(&["brauer", "index", r#"{"primes":{"7":"1/6","13":"5/6"}}"#]);
    assert_eq!(v["index"], 6);
}

#[test]
fn split_count_example() {
    let v = ok_json(&["surface", "count", "--model", "split", "--q", "2"]);
    assert_eq!(v["count"], 13);
    assert_eq!(v["predicted"], 13);
}

#[test]
fn all_subgroup_reports() {
    let v = ok_json(&["hexagon", "report", "--all-subgroups"]);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 16);
    for r in reports {
        assert_eq!(r["h1"], Value::Array(vec![]));
        assert_eq!(r["sequences_exact"], true);
    }
}

#[test]
fn hilbert_and_restriction() {
    assert_eq!(ok_json(&["brauer", "hilbert", "-1", "-1", "2"])["symbol"], -1);
    assert_eq!(ok_json(&["brauer", "hilbert", "-1", "-1", "inf"])["symbol"], -1);
    let v = ok_json(&["brauer", "restrict", r#"{"primes":{"7":"1/3","13":"2/3"}}"#, "--d", "2"]);
    assert_eq!(v["class"]["primes"]["7"], serde_json::json!(["1/3", "1/3"]));
    assert_eq!(v["class"]["primes"]["13"], serde_json::json!(["1/3"]));
}

#[test]
fn domain_error_exit_one() {
    let (code, out) = pgl6(&["brauer", "index", r#"{"primes":{"7":"1/6"}}"#]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "brauer");
    let (code, _) = pgl6(&["replay", "--proof", "first", "--algebra", r#"{"primes":{"7":"1/2","13":"1/2"}}"#]);
    assert_eq!(code, 1);
    let (code, _) = pgl6(&["surface", "count", "--q", "3", "--k", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_error_exit_two() {
    assert_eq!(pgl6(&["brauer", "frobnicate"]).0, 2);
    assert_eq!(pgl6(&["surface", "count", "--no-such-flag"]).0, 2);
    assert_eq!(pgl6(&[]).0, 2);
}

#[test]
fn replays_verify() {
    for proof in ["first", "second"] {
        let v = ok_json(&["replay", "--proof", proof, "--algebra", r#"{"primes":{"7":"1/6","13":"5/6"}}"#]);
        assert_eq!(v["verified"], true);
        assert_eq!(v["certificate"]["contradiction"], true);
    }
    let v = ok_json(&["replay", "--proof", "second", "--algebra", r#"{"primes":{"7":"1/6","13":"5/6"}}"#, "--corollary"]);
    assert!(v["transcript"].as_str().unwrap().contains("cdim PGL_6 = 3"));
}

#[test]
fn zeta_and_torus_on_a_twist() {
    let v = ok_json(&["surface", "check-zeta", "--model", "K-inert-L-cubic", "--q", "2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["records"].as_array().unwrap().len(), 3);
    let v = ok_json(&["surface", "torus", "--model", "L-quadratic", "--q", "3"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn selftest_filter_and_fault() {
    let (code, out) = pgl6(&["selftest", "--filter", "brauer"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let ids: Vec<u64> = v["criteria"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [1, 2, 3]);

    let (code, out) = pgl6(&["selftest", "--filter", "zeta", "--inject-fault", "trace-table"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(!v["criteria"][0]["details"]["failed_surfaces"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["surface", "lines", "--model", "K-inert-L-quadratic", "--q", "3"];
    assert_eq!(pgl6(&args), pgl6(&args));
}
