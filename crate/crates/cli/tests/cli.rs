use std::process::Command;

use cha_cli::{run, Outcome};
use cha_combinatorics::perm::Permutation;
use cha_core::text::parse_lincomb;
use cha_core::LinComb;
use cha_zoo::mr::mr_product;
use cha_zoo::qsym::{qsym_product, QsymKey};
use proptest::prelude::*;
use serde_json::Value;

fn cha(args: &[&str]) -> Outcome {
    run(std::iter::once("cha").chain(args.iter().copied()))
}

fn stdout_ok(args: &[&str]) -> String {
    let out = cha(args);
    assert_eq!(out.code, 0, "{args:?}: {}{}", out.stdout, out.stderr);
    out.stdout
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&cha(&full).stdout).expect("valid JSON")
}

#[test]
fn enumerate_examples() {
    assert!(stdout_ok(&["enumerate", "pbt", "4"]).starts_with("count: 5\n"));
    assert!(stdout_ok(&["enumerate", "sp-poset", "3", "--connected"]).starts_with("count: 12\n"));
    assert_eq!(stdout_ok(&["enumerate", "pt", "1"]), "count: 1\n.\n");
    assert!(stdout_ok(&["enumerate", "perm", "3", "--connected"]).starts_with("count: 3\n"));
    assert_eq!(cha(&["enumerate", "pbt", "3", "--connected"]).code, 2);
    assert_eq!(cha(&["enumerate", "pbt", "9"]).code, 2);
    assert!(stdout_ok(&["enumerate", "pbt", "7", "--maxdeg", "7"]).starts_with("count: 132\n"));
}

#[test]
fn eval_examples() {
    assert_eq!(stdout_ok(&["eval", "mr", "product 12 1"]), "123 + 132 + 312\n");
    assert_eq!(stdout_ok(&["eval", "qsym", "product x[1] x[1]"]), "2*x[1,1] + x[2]\n");
    assert_eq!(stdout_ok(&["eval", "ck", "coproduct [[]]"]), "1 (x) {[[]]} + {[]} (x) {[]} + {[[]]} (x) 1\n");
    assert_eq!(
        stdout_ok(&["eval", "brace-operad", "compose <[[]] x 12> 1 <[[]] x 12>"]),
        "[[] []] x 123 + [[] []] x 132 + [[[]]] x 123\n"
    );
    assert_eq!(stdout_ok(&["eval", "mr", "phi 231"]), "-132 + 231\n");
    assert_eq!(stdout_ok(&["eval", "fdb", "coproduct a2"]), "a1^2 (x) a2 + a2 (x) a1\n");
}

#[test]
fn check_examples() {
    let r = stdout_ok(&["check", "R", "--maxdeg", "4"]);
    assert!(r.ends_with("R: ok\n") && !r.contains("FAIL"));
    let sr = stdout_ok(&["check", "sr111"]);
    assert!(sr.contains("M21(u v; w) + M11(M11(u;v); w) = M11(u; M11(v;w)) + M12(u; v w)"));
    assert!(sr.contains("both sides"));
    let series = stdout_ok(&["check", "series", "--maxdeg", "5"]);
    assert!(series.contains("PASS series/Dend: 1,2,5,14,42"));
    assert!(series.contains("PASS series/Dipt: 1,2,6,22,90"));
}

#[test]
fn table_examples() {
    assert_eq!(stdout_ok(&["table", "series-parallel"]), "PASS d_n: 1,3,19,195,2791\nPASS f_n: 1,2,12,122,1740\n");
    assert_eq!(stdout_ok(&["table", "catalan"]), "PASS Dend: 1,2,5,14,42\n");
    let sc = stdout_ok(&["table", "supercatalan"]);
    assert!(sc.starts_with("PASS |PT_(n+1)|: 1,3,11,45,197\nnote: "));
}

#[test]
fn exit_codes() {
    assert_eq!(cha(&["check", "mr"]).code, 1);
    assert_eq!(cha(&["check", "fdb"]).code, 1);
    assert_eq!(cha(&["check", "qsym"]).code, 0);
    assert_eq!(cha(&["check", "nosuch"]).code, 2);
    assert_eq!(cha(&["bogus"]).code, 2);
    assert_eq!(cha(&["enumerate", "pbt"]).code, 2);
    assert_eq!(cha(&["table", "nosuch"]).code, 2);
    assert_eq!(cha(&["eval", "nosuch", "product 1 1"]).code, 2);
    assert_eq!(cha(&["--help"]).code, 0);
    let bad = cha(&["eval", "mr", "product 12 x"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.starts_with("error: parse error at position 11"));
    assert!(bad.stderr.ends_with("  product 12 x\n             ^\n"));
    let deep = cha(&["eval", "mr", "product 1234 1234"]);
    assert_eq!(deep.code, 2, "{}", deep.stderr);
}

#[test]
fn binary_matches_library() {
    let bin = env!("CARGO_BIN_EXE_cha");
    for args in [&["eval", "qsym", "product x[1] x[2]"][..], &["check", "mr"], &["check", "nosuch"], &["--json", "table", "catalan"]] {
        let out = Command::new(bin).args(args).output().unwrap();
        let expected = cha(args);
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected.stdout);
        assert_eq!(String::from_utf8(out.stderr).unwrap(), expected.stderr);
        assert_eq!(out.status.code(), Some(expected.code));
    }
}

#[test]
fn json_mirrors_text() {
    let v = json(&["eval", "qsym", "product x[1] x[1]"]);
    assert_eq!(v["result"], "2*x[1,1] + x[2]");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let v = json(&["enumerate", "pbt", "4"]);
    let text: Vec<String> = stdout_ok(&["enumerate", "pbt", "4"]).lines().skip(1).map(String::from).collect();
    assert_eq!(v["count"], 5);
    assert_eq!(v["elements"].as_array().unwrap().iter().map(|e| e.as_str().unwrap().to_string()).collect::<Vec<_>>(), text);
    let v = json(&["check", "sr111"]);
    let text = stdout_ok(&["check", "sr111"]);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len() + 1, text.lines().count());
    for c in checks {
        assert!(text.contains(&format!("sr111/{}: {}", c["id"].as_str().unwrap(), c["detail"].as_str().unwrap())));
    }
    let v = json(&["table", "supercatalan"]);
    assert_eq!(v["ok"], true);
    assert!(v["note"].is_string());
    let v = json(&["eval", "mr", "product 12 x"]);
    assert_eq!(v["position"], 11);
}

#[test]
fn deterministic() {
    for args in [&["check", "confluence", "--seed", "7"][..], &["check", "operad"], &["enumerate", "sp-poset", "4"], &["eval", "gl", "e1 {[], [[]]}"]] {
        assert_eq!(cha(args), cha(args));
    }
}

fn composition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=2, 1..=3)
}

fn qsym_text(parts: &[usize]) -> String {
    format!("x[{}]", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn qsym_output_reparses(a in composition(), b in composition()) {
        let out = stdout_ok(&["--maxdeg", "12", "eval", "qsym", &format!("product {} {}", qsym_text(&a), qsym_text(&b))]);
        let parsed = parse_lincomb(out.trim(), QsymKey::parse).unwrap();
        let expected = qsym_product(&LinComb::basis(QsymKey::new(a).unwrap()), &LinComb::basis(QsymKey::new(b).unwrap()));
        prop_assert_eq!(&parsed, &expected);
        let again = stdout_ok(&["--maxdeg", "12", "eval", "qsym", &format!("product <{}> 1", out.trim())]);
        prop_assert_eq!(again, out);
    }

    #[test]
    fn mr_output_reparses(a in prop::sample::select(vec!["1", "12", "21", "132", "312"]),
        b in prop::sample::select(vec!["1", "12", "21", "231"])) {
        let out = stdout_ok(&["eval", "mr", &format!("product {a} {b}")]);
        let parsed = parse_lincomb(out.trim(), Permutation::parse).unwrap();
        prop_assert_eq!(parsed, mr_product(&Permutation::parse(a).unwrap(), &Permutation::parse(b).unwrap()));
    }
}
