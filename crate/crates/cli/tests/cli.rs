use std::process::{Command, Output};

use serde_json::Value;

fn nilmult(args: &[&str]) -> Output {
    nilmult_env(args, None)
}

fn nilmult_env(args: &[&str], cap: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nilmult"));
    cmd.args(args).env_remove("NILMULT_ENUM_CAP");
    if let Some(cap) = cap {
        cmd.env("NILMULT_ENUM_CAP", cap);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = nilmult(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn compute_classical_both() {
    let o = nilmult(&["compute", "--group", "12,6,2", "--class", "1", "--method", "both"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("multiplier: Z6 (+) Z2^(2)"), "{text}");
    assert!(text.contains("verified:   equal"), "{text}");
}

#[test]
fn compute_cyclic_is_trivial() {
    let o = nilmult(&["compute", "--group", "Z5", "--class", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("multiplier: 0 (trivial)"));
    let v = json(&["compute", "--group", "Z5", "--class", "7"]);
    assert_eq!(v["summands"], serde_json::json!([]));
    assert_eq!(v["order_decimal"], "1");
    assert_eq!(v["order_factored"], "");
}

#[test]
fn compute_non_canonical_input() {
    let v = json(&["compute", "--group", "4,6", "--class", "2"]);
    assert_eq!(v["input"], serde_json::json!([4, 6]));
    assert_eq!(v["canonical"], serde_json::json!([12, 2]));
    assert_eq!(v["summands"], serde_json::json!([{"order": 2, "multiplicity": "2"}]));
}

#[test]
fn json_schema_fields() {
    let v = json(&["compute", "--group", "12,6,2", "--class", "1", "--method", "both"]);
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(
        keys,
        [
            "canonical", "class", "input", "method", "order_decimal", "order_factored",
            "schema_version", "summands", "verified"
        ]
    );
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["method"], "both");
    assert_eq!(v["class"], 1);
    assert_eq!(v["verified"], true);
    assert_eq!(v["order_decimal"], "24");
    assert_eq!(v["order_factored"], "6^1 \u{b7} 2^2");

    let f = json(&["compute", "--group", "12,6,2", "--class", "1"]);
    assert_eq!(f["method"], "formula");
    assert_eq!(f["verified"], Value::Null);
}

#[test]
fn oracle_method() {
    let v = json(&["compute", "--group", "3,2", "--class", "1", "--method", "oracle"]);
    assert_eq!(v["summands"], serde_json::json!([]));
    assert_eq!(v["method"], "oracle");
}

#[test]
fn multiplicity_strings_are_exact() {
    // b_2 for class 40 is W(41, 2) = (2^41 - 2) / 41
    let v = json(&["compute", "--group", "6,6", "--class", "40"]);
    let expected = ((1u64 << 41) - 2) / 41;
    assert_eq!(v["summands"][0]["multiplicity"], expected.to_string());
    assert_eq!(v["order_decimal"], Value::Null);
    assert_eq!(v["order_factored"], format!("6^{expected}"));
}

#[test]
fn canonical_entries_beyond_u64() {
    let v = json(&["compute", "--group", "999983,1000003,999979", "--class", "1"]);
    let canonical = serde_json::to_string(&v["canonical"]).unwrap();
    assert_eq!(canonical, format!("[{}]", 999_983u128 * 1_000_003 * 999_979));
}

#[test]
fn equivalent_spellings_agree() {
    let a = json(&["compute", "--group", "Z2^3", "--class", "2", "--method", "both"]);
    let b = json(&["compute", "--group", "Z2+Z2+Z2", "--class", "2", "--method", "both"]);
    let c = json(&["compute", "--group", "2, 2, 2", "--class", "2", "--method", "both"]);
    assert_eq!(a, b);
    assert_eq!(b, c);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["compute", "--group", "Z12,6", "--class", "1"][..],
        &["compute", "--group", "0", "--class", "1"],
        &["compute", "--group", "2000000000000", "--class", "1"],
        &["compute", "--group", "4,2", "--class", "0"],
        &["compute", "--group", "4,2", "--class", "x"],
        &["witt", "--weight", "abc", "--letters", "2"],
        &["witt", "--weight", "2", "--letters", "-1"],
        &["basis", "--weight", "0", "--letters", "2"],
        &["frobnicate"],
    ] {
        let o = nilmult(args);
        assert_eq!(code(&o), 1, "{args:?}");
    }
}

#[test]
fn bad_cap_env_exits_one() {
    let o = nilmult_env(&["witt", "--weight", "2", "--letters", "2"], Some("zero"));
    assert_eq!(code(&o), 1);
    let o = nilmult_env(&["witt", "--weight", "2", "--letters", "2"], Some("0"));
    assert_eq!(code(&o), 1);
}

#[test]
fn cap_exceeded_exits_three() {
    let o = nilmult_env(&["compute", "--group", "2,2,2,2", "--class", "5", "--method", "oracle"], Some("10"));
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--method formula"));
    let o = nilmult_env(&["basis", "--weight", "6", "--letters", "4"], Some("669"));
    assert_eq!(code(&o), 3);
    let o = nilmult_env(&["basis", "--weight", "6", "--letters", "4"], Some("670"));
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 670);
    // the formula path ignores the cap
    let o = nilmult_env(&["compute", "--group", "2,2,2,2", "--class", "5"], Some("10"));
    assert_eq!(code(&o), 0);
}

#[test]
fn witt_subcommand() {
    for (w, t, want) in [("2", "4", "6"), ("1", "9", "9"), ("5", "1", "0"), ("6", "4", "670")] {
        let o = nilmult(&["witt", "--weight", w, "--letters", t]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), format!("{want}\n"));
    }
}

#[test]
fn basis_subcommand() {
    assert_eq!(stdout(&nilmult(&["basis", "--weight", "2", "--letters", "2"])), "[x2,x1]\n");
    assert_eq!(stdout(&nilmult(&["basis", "--weight", "1", "--letters", "2"])), "x1\nx2\n");
    assert_eq!(
        stdout(&nilmult(&["basis", "--weight", "3", "--letters", "2"])),
        "[[x2,x1],x1]\n[[x2,x1],x2]\n"
    );
    let o = nilmult(&["basis", "--weight", "4", "--letters", "1"]);
    assert_eq!((code(&o), stdout(&o)), (0, String::new()));
}

#[test]
fn sweep_subcommand() {
    for args in [["6", "2", "2"], ["12", "3", "3"], ["2", "1", "5"]] {
        let o = nilmult(&[
            "sweep", "--max-order", args[0], "--max-rank", args[1], "--max-class", args[2],
        ]);
        assert_eq!(code(&o), 0, "{args:?}");
        assert!(stdout(&o).contains(" 0 failed"), "{}", stdout(&o));
    }
    let o = nilmult(&["sweep", "--max-order", "12", "--max-rank", "3", "--max-class", "3"]);
    assert!(stdout(&o).contains("222 cases, 222 passed"));
}
