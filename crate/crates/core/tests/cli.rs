use std::path::PathBuf;
use std::process::Command;

use divclass::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn machine(args: &[&str]) -> Value {
    let mut full = vec!["divclass", "--format", "machine"];
    full.extend_from_slice(args);
    serde_json::from_str(&run(full).unwrap()).unwrap()
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_divclass")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn temp_problem(name: &str, text: &str) -> String {
    let p = std::env::temp_dir().join(format!("divclass-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn segre_values() {
    let v = machine(&["class-group", &data("segre23.json")]);
    assert_eq!(v["payload"]["result"]["description"], "Z");
    assert_eq!(v["payload"]["result"]["canonical_class"], serde_json::json!([1]));
    let v = machine(&["mu", &data("segre23.json"), "--class", "-2"]);
    assert_eq!(v["payload"]["result"]["generators"]["mu"], 6);
    let v = machine(&["cm", &data("segre23.json"), "--class", "3"]);
    assert_eq!(v["payload"]["result"]["report"]["cohen_macaulay"], false);
    assert!(v["provenance"]["seed"].is_u64());
    let v = machine(&["cm", &data("segre23.json"), "--class", "2"]);
    assert_eq!(v["payload"]["result"]["report"]["cohen_macaulay"], true);
}

#[test]
fn equations_and_generators_agree() {
    let a = machine(&["info", &data("segre23.json")]);
    let b = machine(&["info", &data("segre23-equations.json")]);
    assert_eq!(a["summary"]["hilbert_basis_size"], b["summary"]["hilbert_basis_size"]);
    assert_eq!(a["summary"]["support_forms"], b["summary"]["support_forms"]);
    let v = machine(&["class-group", &data("veronese-congruence.json")]);
    assert_eq!(v["payload"]["result"]["description"], "Z/2");
    let v = machine(&["class-group", &data("mixed.json")]);
    assert_eq!(v["payload"]["result"]["description"], "Z/2 + Z");
}

#[test]
fn every_command_runs() {
    let seg = data("segre23.json");
    let quad = data("quadratic.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["info", &seg],
        vec!["hilbert-basis", &seg],
        vec!["class-group", &seg, "--class", "1"],
        vec!["mingen", &seg, "--bounds", "0,0,0,0,-1"],
        vec!["conic", &seg],
        vec!["face-ideal", &seg, "--face", "0"],
        vec!["--k", "4", "frobenius", &seg],
        vec!["depth-bounds", &seg],
        vec!["--hs-window", "0", "cm", &seg, "--class", "-1"],
        vec!["simplicial", &quad],
        vec!["--jmax", "6", "progression", &seg, "--c", "1"],
        vec!["pure-check", &quad],
        vec!["divisorial-check", &quad],
        vec!["eff", &quad],
        vec!["iso", &quad, "--bounds", "0,0,1", "--other", "0,0,2"],
        vec!["intersect", &quad, "--with", &quad],
        vec!["--box", "3", "enumerate", &quad, "--max-mu", "2"],
    ];
    for args in runs {
        for format in ["table", "machine"] {
            let mut full = vec!["divclass", "--format", format];
            full.extend_from_slice(&args);
            let out = run(full.clone()).unwrap_or_else(|e| panic!("{full:?}: {e}"));
            assert!(out.ends_with('\n'));
            if format == "machine" {
                let v: Value = serde_json::from_str(&out).unwrap();
                assert_eq!(
                    v["payload"]["kind"].as_str().unwrap().replace('_', "-"),
                    args.iter().find(|a| !a.starts_with('-') && a.parse::<i64>().is_err()).unwrap().to_string()
                );
                assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", out);
                assert!(!has_float(&v), "{full:?}");
            }
        }
    }
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(o) => o.values().any(has_float),
        _ => false,
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "machine", "cm", &data("segre23.json"), "--class", "1"];
    let (c1, a, _) = binary(&args);
    let (c2, b, _) = binary(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let args = ["--box", "2", "enumerate", &data("quadratic.json"), "--max-mu", "3"];
    assert_eq!(binary(&args).1, binary(&args).1);
}

#[test]
fn exit_codes() {
    let (code, _, err) = binary(&["mu", "no-such-file.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("no-such-file.json"));
    let (code, _, err) = binary(&["mu", &data("segre23.json"), "--bounds", "1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("2 bounds"));
    let bad =
        temp_problem("bad.json", "{\"rank\": 2, \"presentation\": \"generators\",\n\"generators\": [[1, 0], [0]]}");
    assert_eq!(binary(&["info", &bad]).0, 2);
    let impure = temp_problem(
        "impure.json",
        r#"{"rank": 2, "presentation": "inequalities", "inequalities": [[1,0],[0,1]], "xi": [[1,-1],[0,1],[1,0]], "bounds": [0,0,0]}"#,
    );
    let (code, _, err) = binary(&["eff", &impure]);
    assert_eq!(code, 3);
    assert!(err.contains("not pure"));
    let (code, _, err) = binary(&["--cap-faces", "2", "progression", &data("segre23.json"), "--c", "1"]);
    assert_eq!(code, 4);
    assert!(err.contains("--cap-faces"));
}

#[test]
fn the_class_flag_and_file_bounds() {
    let q = machine(&["eff", &data("quadratic.json")]);
    assert_eq!(q["payload"]["result"]["eff"], serde_json::json!([0, 0, 2]));
    let q = machine(&["eff", &data("quadratic.json"), "--bounds", "0,1,0"]);
    assert_eq!(q["payload"]["result"]["bounds"], serde_json::json!([0, 1, 0]));
    let m = machine(&["mu", &data("segre23.json"), "--bounds", "0,0,0,0,-2"]);
    let c = machine(&["mu", &data("segre23.json"), "--class", "-2"]);
    assert_eq!(m["payload"]["result"]["generators"], c["payload"]["result"]["generators"]);
}
