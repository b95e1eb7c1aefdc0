use std::process::{Command, Output};

use serde_json::Value;

fn lexseg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexseg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_case_one() {
    let out = lexseg(&["classify", "--n", "3", "--d", "2", "--u", "1,1,0", "--v", "1,0,1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["label"], "CompletelyCaseI");
    assert_eq!(v["generators"], 2);
    assert_eq!(v["completely"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "--n", "3", "--u", "1,0,1,1", "--v", "0,1,0,2"][..],
        &["classify", "--u", "1,x,0", "--v", "1,0,1"],
        &["classify", "--u", "0,1,1", "--v", "1,0,1"],
        &["classify", "--d", "3", "--u", "1,1,0", "--v", "1,0,1"],
        &["no-such-command"],
        &["tableau", "--n", "3", "--d", "2", "--support", "1,2,3"],
    ] {
        assert_eq!(lexseg(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn tableau_reproduces_worked_example() {
    let out = lexseg(&["tableau", "--n", "8", "--d", "3", "--support", "1,1,2,3,3,4,4,4,5,5,6,6,6,7,8", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json(&out)["rows"],
        serde_json::json!([[1, 6, 7], [1, 6, 8], [2, 5, 6], [3, 4, 4], [3, 4, 5]])
    );
    assert_eq!(lexseg(&["tableau", "--n", "3", "--d", "2", "--check", "1,3;2,2"]).status.code(), Some(0));
    assert_eq!(lexseg(&["tableau", "--n", "3", "--d", "2", "--check", "1,2;2,3"]).status.code(), Some(1));
}

#[test]
fn power_quotients_statuses() {
    let ok = lexseg(&["power-quotients", "--n", "4", "--d", "3", "--u", "1,0,1,1", "--v", "0,1,0,2", "--N", "2", "--json"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&ok);
    assert_eq!(v["certificate"]["ok"], true);
    assert_eq!(v["order"], "revlex-dec");
    let refuted = lexseg(&["power-quotients", "--u", "1,0,1", "--v", "0,2,0", "--order", "lex"]);
    assert_eq!(refuted.status.code(), Some(1));
    let unprescribed = lexseg(&["power-quotients", "--u", "1,0,1", "--v", "0,2,0"]);
    assert_eq!(unprescribed.status.code(), Some(2));
}

#[test]
fn rees_gb_verifies() {
    let out = lexseg(&["rees-gb", "--n", "4", "--d", "3", "--u", "1,0,1,1", "--v", "0,1,0,2", "--verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["groebner"]["groebner"], true);
    assert_eq!(v["quadratic"], true);
    let binomials = v["binomials"].as_array().unwrap();
    assert!(!binomials.is_empty());
    for b in binomials {
        for key in ["xlead", "tlead", "xtail", "ttail", "bidegree"] {
            assert!(b.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn exchange_counterexample() {
    let out = lexseg(&["exchange", "--mode", "l", "--bound", "2", "--u", "1,0,1,1", "--v", "0,0,0,3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["satisfied"], false);
    let ce = &v["counterexample"];
    let mut involved: Vec<String> = ce["u_factors"]
        .as_array()
        .unwrap()
        .iter()
        .chain(ce["v_factors"].as_array().unwrap())
        .map(|m| m.as_str().unwrap().to_string())
        .collect();
    involved.dedup();
    assert!(involved.contains(&"0,3,0,0".to_string()));
    assert!(involved.contains(&"1,0,1,1".to_string()));
    let sigma = lexseg(&["exchange", "--mode", "sigma", "--u", "1,0,1,1", "--v", "0,0,0,3", "--t-order", "degrevlex", "--json"]);
    assert_eq!(json(&sigma)["satisfied"], true);
}

#[test]
fn sweep_records_are_consistent_and_round_trip() {
    let out = lexseg(&["sweep", "--n-max", "3", "--d-max", "2", "--N-max", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let records: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 21);
    for (line, r) in text.lines().zip(&records) {
        assert_eq!(r["consistent"], true);
        assert_eq!(serde_json::to_string(r).unwrap(), line);
    }
}

#[test]
fn paper_examples_and_lemmas_pass() {
    let out = lexseg(&["paper-examples", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["ok"], true);
    let lemmas = lexseg(&["lemmas", "--cases", "100", "--seed", "9", "--json"]);
    assert_eq!(lemmas.status.code(), Some(0));
    assert_eq!(json(&lemmas)["reports"].as_array().unwrap().len(), 4);
}
