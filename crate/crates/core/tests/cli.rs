use std::process::Command;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cherednik-fd"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_rectangle() {
    let (code, out, _) = bin(&["classify", "--e", "2", "--s", "2", "--bp", "2,2|"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["unitary_fd"], true);
    assert_eq!(v["r"], 2);
    assert_eq!(v["q"], 2);
    assert_eq!(v["c_function"], "0");
    assert_eq!(v["d"], "1/2");
}

#[test]
fn classify_negative_charge_and_second_component() {
    let (code, out, _) = bin(&["classify", "--e", "3", "--s", "-2", "--bp", "|1,1,1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // (∅, 1³): q - r = -2
    assert_eq!(v["unitary_fd"], true);
    assert_eq!(v["component"], 2);
    assert_eq!(v["required_s"], -2);
}

#[test]
fn classify_text() {
    let (code, out, _) = bin(&["classify", "--e", "2", "--s", "0", "--bp", "1|1", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("not unitary and finite-dimensional"));
}

#[test]
fn abacus_text() {
    let (code, out, _) = bin(&["abacus", "--e", "2", "--s", "0", "--bp", "1|1", "--window", "-2..2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "●●○●○");
    assert_eq!(lines[1], "●●○●○");
    assert!(out.contains("not totally 2-periodic"));
}

#[test]
fn abacus_json() {
    let (code, out, _) = bin(&["abacus", "--e", "2", "--s", "2", "--bp", "2,2|", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["abacus"]["row1"]["full_below"], -2);
    assert_eq!(v["abacus"]["row1"]["beads"], serde_json::json!([1, 2]));
    assert_eq!(v["decomposition"]["totally_periodic"], true);
    assert_eq!(v["nonzero_columns"], 2);
}

#[test]
fn crystal_formats() {
    let (code, dot, _) = bin(&["crystal", "--nmax", "1", "--e", "2", "--s", "1"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph crystal {"));
    assert_eq!(dot.matches(" -> ").count(), 2);

    let (code, json, _) = bin(&["crystal", "--nmax", "2", "--e", "2", "--s", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);
    assert_eq!(v["nodes"][0], "|");
}

#[test]
fn verify_example_grid() {
    let (code, out, _) = bin(&["verify", "--nmax", "6", "--e", "2,3", "--s", "-4..4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    for (_, tally) in v["properties"].as_object().unwrap() {
        assert_eq!(tally["violations"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn output_is_deterministic() {
    let a = bin(&["verify", "--nmax", "4", "--e", "2,3"]);
    let b = bin(&["verify", "--nmax", "4", "--e", "2,3"]);
    assert_eq!(a, b);
    let a = bin(&["crystal", "--nmax", "4", "--e", "3", "--s", "-1"]);
    let b = bin(&["crystal", "--nmax", "4", "--e", "3", "--s", "-1"]);
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["classify", "--e", "1", "--s", "0", "--bp", "1|"],
        &["classify", "--e", "2", "--s", "0", "--bp", "1,2|"],
        &["classify", "--e", "2", "--s", "0", "--bp", "3"],
        &["classify", "--e", "2", "--s", "0", "--bp", "|"],
        &["abacus", "--e", "2", "--s", "0", "--bp", "2|", "--window", "1..2"],
        &["crystal", "--nmax", "1", "--e", "2", "--s", "0", "--format", "text"],
        &["verify", "--nmax", "0"],
        &["verify", "--nmax", "3", "--s", "2..1"],
        &["verify", "--nmax", "3", "--e", "1"],
        &["frobnicate"],
        &[],
    ];
    for args in cases {
        let (code, out, err) = bin(args);
        assert_eq!(code, 2, "{args:?}: {out} {err}");
        assert!(out.is_empty(), "{args:?} wrote to stdout");
        assert!(!err.is_empty());
    }
}
