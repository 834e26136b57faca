use std::process::{Command, Output};

use shoda::run::canonical_json;

fn shoda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shoda"))
        .args(args)
        .env_remove("SHODA_THREADS")
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
fn decompose_quaternion() {
    let o = shoda(&["decompose", "--group", "Q8", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "F_3^(4) (+) M_2(F_3)\n");
}

#[test]
fn gcd_violation_exits_2() {
    let o = shoda(&["decompose", "--group", "Q8", "--q", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("not coprime"));
}

#[test]
fn aut_is_appended() {
    let o = shoda(&["decompose", "--group", "H:1", "--q", "3", "--aut"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "F_3^(4) (+) F_9^(2) (+) M_2(F_9)");
    assert_eq!(lines[1], "aut: S_4 (+) (Z_2^(2) x| S_2) (+) (SL(2, q^2) x| Z_2)");
}

#[test]
fn parse_and_validation_errors_exit_4() {
    let o = shoda(&["decompose", "--group", "H:1x", "--q", "3"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("column 4"));
    assert_eq!(shoda(&["decompose", "--group", "Q8", "--q", "6"]).status.code(), Some(4));
    assert_eq!(shoda(&["decompose", "--group", "T2:p=7,r=1", "--q", "5"]).status.code(), Some(4));
    assert_eq!(shoda(&["decompose", "--group", "T3:p=5", "--q", "2", "--max-order", "1000"]).status.code(), Some(4));
    assert_eq!(shoda(&["decompose", "--group", "Q8"]).status.code(), Some(4));
    assert_eq!(shoda(&["decompose", "--group", "Q8", "--q", "3", "--threads", "0"]).status.code(), Some(4));
}

#[test]
fn oracle_agreement_and_mismatch() {
    let o = shoda(&["decompose", "--group", "D8", "--q", "5", "--verify", "oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle: agree"));
    // S_4 is not normally monomial
    let o = shoda(&["verify", "--group", "perm:(1 2 3 4);(1 2)", "--q", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.contains("normally monomial: no"));
    assert!(out.contains("+ M_3(F_5)^(2)"));
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["decompose", "--group", "G:3@p=3", "--q", "2", "--json", "--aut"],
        vec!["shoda-pairs", "--group", "Q8", "--q", "3", "--json"],
        vec!["idempotents", "--group", "pc:orders=[2,4];conj:1,0->[0,3]", "--q", "9", "--json"],
        vec!["verify", "--group", "H:4", "--q", "3", "--json"],
    ] {
        let o = shoda(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(canonical_json(&v), text);
        assert!(v["group"]["order"].is_u64());
        assert!(v["components"].is_array());
        assert!(v["normally_monomial"].as_bool().unwrap());
    }
}

#[test]
fn json_schema_fields() {
    let o = shoda(&["shoda-pairs", "--group", "D8", "--q", "3", "--json", "--idempotents"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group"]["spec"], "D8");
    assert_eq!(v["q"], 3);
    let pairs = v["shoda_pairs"].as_array().unwrap();
    assert!(pairs.iter().all(|p| p["A"].is_array() && p["D"].is_array() && p["core"].is_array() && p["orbits"].is_u64()));
    let total: u64 = v["idempotents"].as_array().unwrap().len() as u64;
    assert_eq!(total, 5);
    assert!(v.get("aut").is_none());
}

#[test]
fn idempotent_export_format() {
    let o = shoda(&["idempotents", "--group", "cyclic:3", "--q", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let records: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(records.len(), 3);
    // field elements of F_4 print as coefficient pairs over F_2
    assert!(records.iter().all(|r| r.starts_with('P') && r.contains(" 0:(")));
    let r = shoda(&["idempotents", "--group", "cyclic:3", "--q", "2"]);
    assert!(stdout(&r).lines().any(|l| l.ends_with(": 0:1 1:1 2:1")));
}

#[test]
fn output_does_not_depend_on_threads() {
    let base = ["shoda-pairs", "--group", "T2:p=5,r=2", "--q", "3", "--json", "--idempotents"];
    let one = shoda(&[&base[..], &["--threads", "1"]].concat());
    let four = shoda(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_shoda"))
        .args(base)
        .env("SHODA_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
    let bad_env = Command::new(env!("CARGO_BIN_EXE_shoda"))
        .args(["decompose", "--group", "Q8", "--q", "3"])
        .env("SHODA_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(4));
}

#[test]
fn families_listing() {
    let o = shoda(&["families"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("Q8 ") && l.ends_with("order 8")));
    assert!(out.lines().any(|l| l.starts_with("T3:p=5") && l.ends_with("order 78125")));
    let j = shoda(&["families", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&j)).unwrap();
    assert!(v.as_array().unwrap().iter().any(|f| f["spec"] == "G:8@p=5"));
}
