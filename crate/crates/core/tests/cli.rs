use std::process::Command;

use higher_lie::cli::run;
use higher_lie::lie_modules::lie;
use higher_lie::symfunc::{SymFunc, SymFuncJson};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("higher-lie").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn expand_lie_four() {
    let (code, out, _) = call(&[
        "expand", "--family", "lie", "--n", "4", "--basis", "schur", "--format", "text",
    ]);
    assert_eq!((code, out.as_str()), (0, "s[3,1] + s[2,1,1]\n"));
    let (_, schur, _) = call(&["schur", "--family", "lie", "--n", "4"]);
    assert_eq!(schur, out);
}

#[test]
fn expand_json_round_trips() {
    let doc = json(&["expand", "--family", "lie", "--n", "6", "--format", "json"]);
    let value: SymFuncJson = serde_json::from_value(doc["value"].clone()).unwrap();
    assert_eq!(SymFunc::from_json(&value).unwrap(), lie(6));
}

#[test]
fn verify_thrall_passes() {
    let doc = json(&[
        "verify",
        "--id",
        "thrall",
        "--max-degree",
        "8",
        "--format",
        "json",
    ]);
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["N"], 8);
    assert!(doc["first_mismatch"].is_null());
    assert!(doc["elapsed_ms"].is_null());
    for key in ["id", "params", "witnesses"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn scan_powk_four_reports_sign_witness() {
    let doc = json(&[
        "scan", "--family", "powk", "--k", "4", "--n", "4", "--format", "json",
    ]);
    let verdict = &doc["verdicts"][0];
    assert_eq!(verdict["positive"], false);
    assert_eq!(
        verdict["witnesses"][0]["partition"],
        serde_json::json!([1, 1, 1, 1])
    );
    assert_eq!(verdict["witnesses"][0]["coefficient"], "-1");

    let args = [
        "scan",
        "--family",
        "powk",
        "--k",
        "4",
        "--n",
        "4",
        "--expect-positive",
    ];
    assert_eq!(call(&args).0, 1);
    let args = [
        "scan",
        "--family",
        "powk",
        "--k",
        "3",
        "--n-max",
        "8",
        "--expect-positive",
    ];
    assert_eq!(call(&args).0, 0);
}

#[test]
fn list_is_sorted_and_complete() {
    let doc = json(&["list", "--format", "json"]);
    let entries = doc.as_array().unwrap();
    assert!(entries.len() >= 30);
    let ids: Vec<&str> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"solomon"));
    let mut sorted = ids.clone();
    sorted.sort_by_key(|s| s.to_lowercase());
    assert_eq!(ids, sorted);
    let lifting = entries.iter().find(|e| e["id"] == "lifting").unwrap();
    let names: Vec<&str> = lifting["params"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["q", "n_max"]);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["list"][..],
        &["verify", "--id", "meta-sym", "--format", "json"],
        &[
            "scan", "--family", "lek", "--k", "4", "--n-max", "9", "--jobs", "3",
        ],
        &[
            "pleth",
            "--outer",
            "h2",
            "--family",
            "lie",
            "--max-degree",
            "6",
        ],
    ] {
        assert_eq!(call(args), call(args), "{args:?}");
    }
}

#[test]
fn text_and_json_agree() {
    let (_, text, _) = call(&["scan", "--family", "powk", "--k", "4", "--n-max", "6"]);
    let doc = json(&[
        "scan", "--family", "powk", "--k", "4", "--n-max", "6", "--format", "json",
    ]);
    for v in doc["verdicts"].as_array().unwrap() {
        let word = if v["positive"] == true {
            "positive"
        } else {
            "negative"
        };
        assert!(text.contains(&format!("n={}: {word}", v["n"])), "{text}");
    }
}

#[test]
fn usage_errors_have_distinct_messages() {
    let cases = [
        (
            &["expand", "--family", "nope", "--n", "3"][..],
            "unknown family",
        ),
        (
            &["scan", "--family", "fT", "--T", "le(", "--n", "3"],
            "malformed set",
        ),
        (
            &["scan", "--family", "powk", "--k", "3", "--n", "40"],
            "budget",
        ),
        (&["verify", "--id", "nope"], "unknown identity"),
    ];
    for (args, needle) in cases {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains(needle), "{args:?}: {err}");
    }
    assert_eq!(call(&["expand", "--n", "3"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_higher-lie");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["verify", "--id", "thrall"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("pass"));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
    let neg = status(&["lift", "--q", "3", "--n-max", "4", "--expect-positive"]);
    assert_eq!(neg.status.code(), Some(1));
}
