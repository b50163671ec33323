use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value as Json;

fn frw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frw"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("FRW_BUDGET")
        .output()
        .expect("frw runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// (golden file, argv) pairs checked byte for byte.
const GOLDEN: &[(&str, &[&str])] = &[
    ("validate-trivial", &["validate", "tests/data/trivial.frt"]),
    (
        "validate-z2-bad-dual",
        &["validate", "tests/data/z2_bad_dual.frt"],
    ),
    ("analyze-rep-s3", &["analyze", "tests/data/rep_s3.frt"]),
    ("analyze-ising", &["analyze", "tests/data/ising.frt"]),
    ("fpdim-rep-s3", &["fpdim", "tests/data/rep_s3.frt"]),
    ("type-ising", &["type", "tests/data/ising.frt"]),
    ("grading-ising", &["grading", "tests/data/ising.frt"]),
    ("diophantine-78", &["diophantine", "78", "6,14,21,42"]),
    ("classify-90", &["classify", "90", "--weakly-integral"]),
    ("classify-84", &["classify", "84", "--weakly-integral"]),
    (
        "classify-ring-ising",
        &["classify", "--ring", "tests/data/ising.frt"],
    ),
    ("smatrix-z3", &["smatrix", "tests/data/z3.smt"]),
    (
        "smatrix-z3-perturbed",
        &["smatrix", "tests/data/z3_perturbed.smt"],
    ),
    (
        "nichols-richmond-rep-s3",
        &["nichols-richmond", "tests/data/rep_s3.frt", "--object", "X"],
    ),
    (
        "enumerate-90-golden",
        &[
            "enumerate",
            "90",
            "--preset",
            "strict",
            "--golden",
            "../core/golden/types-90.golden",
        ],
    ),
];

#[test]
fn golden_reports() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("FRW_BLESS").is_some();
    for (name, args) in GOLDEN {
        let out = stdout(&frw(args));
        let path = dir.join(format!("{name}.txt"));
        if bless {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let expected =
            std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out, expected, "frw {}", args.join(" "));
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| frw(args).status.code().unwrap();
    assert_eq!(code(&["validate", "tests/data/trivial.frt"]), 0);
    assert_eq!(code(&["validate", "tests/data/z2_bad_dual.frt"]), 1);
    assert_eq!(code(&["fpdim", "tests/data/z2_bad_dual.frt"]), 1);
    assert_eq!(code(&["smatrix", "tests/data/z3_perturbed.smt"]), 1);
    assert_eq!(code(&["smatrix", "tests/data/z2.smt"]), 0);
    assert_eq!(code(&["validate", "tests/data/missing.frt"]), 2);
    assert_eq!(code(&["validate", "tests/data/z2.smt"]), 2);
    assert_eq!(code(&["enumerate", "90", "--preset", "nope"]), 2);
    assert_eq!(code(&["enumerate", "90", "--filter", "nope"]), 2);
    assert_eq!(code(&["diophantine", "10", "2,x"]), 2);
    assert_eq!(code(&["--tolerance", "1", "fpdim", "tests/data/z2.frt"]), 2);
    assert_eq!(
        code(&["nichols-richmond", "tests/data/z2.frt", "--object", "g"]),
        2
    );
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--budget", "10", "enumerate", "90"]), 3);
    assert_eq!(
        code(&["--budget", "3", "diophantine", "78", "6,14,21,42"]),
        3
    );
}

#[test]
fn golden_mismatch_exits_one() {
    let dir = std::env::temp_dir().join(format!("frw-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let golden = dir.join("bad.golden");
    std::fs::write(&golden, "(1,2;2,4;6,2)\n(1,3;3,9)\n").unwrap();
    let out = frw(&["enumerate", "90", "--golden", golden.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("contains_golden: false"));
    assert!(text.contains("missing:\n    - (1,3;3,9)\n"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_frw"))
        .args(["enumerate", "90"])
        .env("FRW_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reports_are_deterministic() {
    for (_, args) in GOLDEN {
        let a = frw(args);
        let b = frw(args);
        assert_eq!(a.stdout, b.stdout, "frw {}", args.join(" "));
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn parallel_runs_match_sequential() {
    let sequential: Vec<Vec<u8>> = GOLDEN.iter().map(|(_, a)| frw(a).stdout).collect();
    let parallel: Vec<Vec<u8>> = std::thread::scope(|s| {
        let handles: Vec<_> = GOLDEN
            .iter()
            .map(|(_, a)| s.spawn(move || frw(a).stdout))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(sequential, parallel);
}

fn json_keys(v: &Json, out: &mut BTreeSet<String>) {
    if let Json::Array(items) = v {
        let is_pairs = !items.is_empty()
            && items
                .iter()
                .all(|p| matches!(p, Json::Array(kv) if kv.len() == 2 && kv[0].is_string()));
        for item in items {
            match item {
                Json::Array(kv) if is_pairs => {
                    out.insert(kv[0].as_str().unwrap().to_string());
                    json_keys(&kv[1], out);
                }
                other => json_keys(other, out),
            }
        }
    }
}

fn text_keys(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(str::trim_start)
        .filter(|l| !l.starts_with('-'))
        .filter_map(|l| l.split_once(':').map(|(k, _)| k.to_string()))
        .collect()
}

#[test]
fn json_has_the_text_key_set() {
    for (_, args) in GOLDEN {
        let text = stdout(&frw(args));
        let mut json_args = vec!["--format", "json"];
        json_args.extend_from_slice(args);
        let json: Json = serde_json::from_str(&stdout(&frw(&json_args))).expect("valid JSON");
        let mut keys = BTreeSet::new();
        json_keys(&json, &mut keys);
        assert_eq!(keys, text_keys(&text), "frw {}", args.join(" "));
    }
}

#[test]
fn json_numbers_follow_report_precision() {
    let out = stdout(&frw(&[
        "--format",
        "json",
        "analyze",
        "tests/data/ising.frt",
    ]));
    let json: Json = serde_json::from_str(&out).unwrap();
    let dims = json
        .as_array()
        .unwrap()
        .iter()
        .find(|kv| kv[0] == "dimensions")
        .map(|kv| kv[1].clone())
        .unwrap();
    assert_eq!(dims[2][1].to_string(), "1.41421356237");
}
