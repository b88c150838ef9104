use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn gsla(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gsla"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn gsla");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn catalog(args: &[&str]) -> Vec<u8> {
    let mut a = vec!["catalog"];
    a.extend_from_slice(args);
    let out = gsla(&a, b"");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn json_report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn pauli_catalog_verifies() {
    let doc = catalog(&["pauli-sl2"]);
    let out = gsla(&["verify", "-"], &doc);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("verify: Verified"));
}

#[test]
fn loop_algebra_recognized_with_p_order_two() {
    let doc = catalog(&["loop-sl2", "--moduli", "2,2", "--p-gen", "1,0"]);
    let out = gsla(&["--json", "recognize", "-"], &doc);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(r["P_order"], 2);
    assert_eq!(r["format"], 1);
    assert!(r.get("first_failed").is_none());
}

#[test]
fn example0_decompose_fails_with_no_such_root() {
    let doc = catalog(&["example0"]);
    let out = gsla(&["--json", "decompose", "-"], &doc);
    assert_eq!(out.status.code(), Some(1));
    let r = json_report(&out);
    assert_eq!(r["first_failed"], "NoSuchRoot");
    assert_eq!(r["killing_nondegenerate"], false);
    assert_eq!(r["proper_ideal_dim"], 6);
}

#[test]
fn bad_input_names_json_path() {
    let out = gsla(&["--json", "verify", "-"], br#"{"format":1,"dim":"three"}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("$.dim"));
    let r = json_report(&out);
    assert_eq!(r["exit_code"], 2);

    let out = gsla(&["verify", "-"], b"not json");
    assert_eq!(out.status.code(), Some(2));

    let doc = catalog(&["matrix2"]);
    let out = gsla(&["--commute-order", "0,0,1", "mod-recognize", "-"], &doc);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_catalog_entry_is_invalid() {
    assert_eq!(gsla(&["catalog", "nope"], b"").status.code(), Some(2));
    assert_eq!(gsla(&["catalog", "sl-n"], b"").status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let doc = catalog(&["matrix2"]);
    for cmd in ["mod-recognize", "mod-verify", "schur", "weyl"] {
        let args = ["--json", "--seed", "7", cmd, "-"];
        let a = gsla(&args, &doc);
        let b = gsla(&args, &doc);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let r = json_report(&a);
        assert_eq!(r["caps"]["seed"], 7);
        assert!(r["tool"]["version"].is_string());
    }
}

#[test]
fn commute_order_changes_p() {
    let doc = catalog(&["matrix2"]);
    let p = |order: &str| {
        let out = gsla(&["--json", "--commute-order", order, "mod-recognize", "-"], &doc);
        assert_eq!(out.status.code(), Some(0), "{order}");
        json_report(&out)["P_generators"].clone()
    };
    let all: Vec<Value> = ["0,1,2,3", "0,2,1,3", "0,3,1,2"].iter().map(|o| p(o)).collect();
    assert_ne!(all[0], all[1]);
    assert_ne!(all[1], all[2]);
}

#[test]
fn loop_build_then_decompose() {
    let req = catalog(&["loop-request", "--moduli", "2,2", "--p-gen", "1,1"]);
    let built = gsla(&["loop-build", "-"], &req);
    assert_eq!(built.status.code(), Some(0));
    let g: Value = serde_json::from_slice(&built.stdout).unwrap();
    assert_eq!(g["dim"], 6);
    assert_eq!(gsla(&["verify"], &built.stdout).status.code(), Some(0));
    let out = gsla(&["--json", "decompose", "-"], &built.stdout);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_report(&out)["members"], 2);
}

#[test]
fn negative_module_verdicts_name_a_certificate() {
    // over a non-semisimple algebra Weyl decomposition is refused
    let w = catalog(&["ex1-w"]);
    let out = gsla(&["--json", "weyl", "-"], &w);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_report(&out)["first_failed"], "NotSemisimple");

    // break the action law of the matrix module
    let mut m: Value = serde_json::from_slice(&catalog(&["matrix2"])).unwrap();
    m["action"][0]["coeffs"][0]["c"] = "5".into();
    let out = gsla(&["--json", "mod-verify", "-"], m.to_string().as_bytes());
    assert_eq!(out.status.code(), Some(1));
    assert!(json_report(&out)["first_failed"].is_string());
}

#[test]
fn output_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("gsla-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pair.json");
    let p = path.to_str().unwrap();
    assert_eq!(gsla(&["catalog", "pair-module", "--h1", "1", "--h2", "0", "-o", p], b"").status.code(), Some(0));
    let out = gsla(&["--json", "mod-recognize", p], b"");
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!((r["P_order"].as_u64(), r["V_dim"].as_u64()), (Some(2), Some(2)));
    std::fs::remove_dir_all(&dir).unwrap();
}
