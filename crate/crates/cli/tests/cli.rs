use std::process::Command;

use serde_json::{json, Value};

fn solgeom(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_solgeom"))
        .args(args)
        .env("SOLFOUR_THREADS", "2")
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let doc = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc)
}

#[test]
fn isom_identifies_inverses() {
    let (code, doc) = solgeom(&["invariant", "isom", "3,2;4,3", "3,-2;-4,3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["isomorphic"], json!(true));
    assert_eq!(doc["schema"], json!("solgeom/isomorphism/v1"));
}

#[test]
fn isom_reports_swap_partners() {
    let (_, doc) = solgeom(&["invariant", "isom", "3,2;4,3", "3,4;2,3"]);
    assert_eq!(doc["isomorphic"], json!(false));
    assert_eq!(doc["related_by_swap"], json!(true));
}

#[test]
fn enumerate_four() {
    let (code, doc) = solgeom(&["invariant", "enumerate", "--max", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["count"], json!(4));
    assert_eq!(doc["invariants"][0], json!({"p": 3, "q": 2, "r": 4}));
    assert_eq!(doc["invariants"][3], json!({"p": -3, "q": 4, "r": 2}));
}

#[test]
fn validate_rejects_parity() {
    let (code, doc) = solgeom(&["invariant", "validate", "2,1;3,2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"], json!("even-p"));
}

#[test]
fn normalize_inverts_when_needed() {
    let (code, doc) = solgeom(&["invariant", "normalize", "3,-2;-4,3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["invariant"], json!({"p": 3, "q": 2, "r": 4}));
    assert_eq!(doc["inverted"], json!(true));
}

#[test]
fn kb_center() {
    let (code, doc) = solgeom(&["group", "center", "kb-monodromy(3,2;4,3)"]);
    assert_eq!(code, 0);
    assert_eq!(doc["rank"], json!(1));
    assert_eq!(doc["generator"], json!("x^2"));
}

#[test]
fn bordered_center() {
    let (_, doc) = solgeom(&["group", "center", "bordered((1,0),(3,2;4,3))"]);
    assert_eq!(doc["rank"], json!(1));
}

#[test]
fn pillowcase_is_torsion_free() {
    let (code, doc) = solgeom(&["group", "torsion", "pillowcase(3,2,4)", "--max-word", "7"]);
    assert_eq!(code, 0);
    assert_eq!(doc["torsion_found"], json!(false));
}

#[test]
fn homology() {
    let (_, doc) = solgeom(&["group", "h1", "G2"]);
    assert_eq!((doc["rank"].clone(), doc["torsion"].clone()), (json!(1), json!([2, 2])));
    let (_, doc) = solgeom(&["group", "h1", "pillowcase(3,2,4)"]);
    assert_eq!((doc["rank"].clone(), doc["torsion"].clone()), (json!(0), json!([2, 4, 4])));
}

#[test]
fn w1_and_presentation() {
    let (_, doc) = solgeom(&["group", "w1", "pillowcase(3,2,4)"]);
    assert_eq!(doc["factors_through_z4"], json!(true));
    let (_, doc) = solgeom(&["group", "presentation", "sigma-sec4"]);
    assert_eq!(doc["generators"], json!(["x", "y", "u", "v"]));
    assert!(doc["notes"][0].as_str().unwrap().contains("u y u^-1 = y^-1"));
}

#[test]
fn description_files_load() {
    let (_, doc) = solgeom(&["group", "describe", "kb-monodromy(3,2;4,3)"]);
    let path = std::env::temp_dir().join(format!("solgeom-kb-{}.json", std::process::id()));
    let mut desc = doc.clone();
    desc.as_object_mut().unwrap().remove("schema");
    std::fs::write(&path, desc.to_string()).unwrap();
    let (code, center) = solgeom(&["group", "center", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(center["generator"], json!("x^2"));
}

#[test]
fn unknown_inputs_exit_one() {
    assert_eq!(solgeom(&["group", "h1", "no-such-group"]).0, 1);
    assert_eq!(solgeom(&["verify", "no-such-suite"]).0, 1);
    let (code, doc) = solgeom(&["group", "torsion", "G2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["schema"], json!("solgeom/error/v1"));
}

#[test]
fn suites_pass_at_spec_bounds() {
    for args in [
        &["verify", "order-twelve", "--box", "3"][..],
        &["verify", "sec3-family", "--a-max", "12"],
        &["verify", "sec4-examples"],
        &["verify", "two-ended", "--box", "2"],
    ] {
        let (code, doc) = solgeom(args);
        assert_eq!(code, 0, "{args:?}: {doc}");
        assert_eq!(doc["failures"], json!([]));
        assert!(doc["instances"].as_u64().unwrap() > 0);
    }
}

#[test]
fn homology_sweep_reports_order_failures() {
    let (code, doc) = solgeom(&["verify", "corollary-h1", "--max", "20"]);
    assert_eq!(code, 2);
    let failures = doc["failures"].as_array().unwrap();
    assert!(failures.iter().all(|f| f["input"].as_str().unwrap().contains("order of")));
    assert!(failures.iter().any(|f| f["input"] == json!("(7,6,8) order of x") && f["actual"] == json!("Some(6)")));
}

#[test]
fn output_is_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = strip(solgeom(&["verify", "theorem10-roundtrip", "--max", "8", "--conjugations", "5"]).1);
    let b = strip(solgeom(&["verify", "theorem10-roundtrip", "--max", "8", "--conjugations", "5"]).1);
    assert_eq!(a, b);
}

#[test]
fn pretty_output_is_text() {
    let out = Command::new(env!("CARGO_BIN_EXE_solgeom"))
        .args(["--pretty", "group", "h1", "G2"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rank"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
