use std::process::{Command, Output};

fn snakes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snakes"))
        .args(args)
        .env_remove("SNAKES_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn lists_snakes() {
    let out = snakes(&["snakes", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().any(|l| l == "3,-2,1"));

    let empty = snakes(&["snakes", "--n", "0"]);
    assert_eq!(stdout(&empty), "\n");

    let json = snakes(&["snakes", "--n", "6", "--format", "json"]);
    let records: Vec<Vec<i32>> = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(records.len(), 2763);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_snakes"))
        .args(["snakes", "--n", "2"])
        .env("SNAKES_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "[[1,-2],[2,1],[2,-1]]\n");
}

#[test]
fn enumeration_cap_needs_acknowledgment() {
    let over = snakes(&["snakes", "--n", "11"]);
    assert_eq!(over.status.code(), Some(2));
    let unconfirmed = snakes(&["snakes", "--n", "2", "--cap", "11"]);
    assert_eq!(unconfirmed.status.code(), Some(2));
    let confirmed = snakes(&["snakes", "--n", "2", "--cap", "11", "--i-know"]);
    assert!(confirmed.status.success());
}

#[test]
fn maps_both_ways() {
    let out = snakes(&["map", "phi", "--snake", "2,-1,5,4,7,-6,-3"]);
    assert_eq!(stdout(&out), "uuudduu 0,1,1,0,1,1,2\n");
    let out = snakes(&[
        "map",
        "psi",
        "--path",
        "uuudduu",
        "--labels",
        "0,1,1,0,1,1,2",
    ]);
    assert_eq!(stdout(&out), "2,-1,5,4,7,-6,-3\n");
    let out = snakes(&["map", "psi", "--path", "u", "--labels", "0"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn trace_is_json() {
    let out = snakes(&[
        "map",
        "psi",
        "--path",
        "uuudduu",
        "--labels",
        "0,1,1,0,1,1,2",
        "--trace",
    ]);
    let trace: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        trace["contracted"],
        serde_json::json!([5, 2, 1, 4, 3, 7, 6])
    );
    assert_eq!(trace["stages"].as_array().unwrap().len(), 7);
    assert_eq!(trace["snake"], serde_json::json!([2, -1, 5, 4, 7, -6, -3]));
}

#[test]
fn invalid_inputs_exit_with_two() {
    let cases: [&[&str]; 4] = [
        &["map", "phi", "--snake", "1,2"],
        &["map", "psi", "--path", "ud", "--labels", "0,1"],
        &["map", "psi", "--path", "du", "--labels", "0,0"],
        &["triangle", "--kind", "Q", "--rows", "3"],
    ];
    for args in cases {
        let out = snakes(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = snakes(&["map", "psi", "--path", "ud", "--labels", "0,1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the step height"));
}

#[test]
fn triangle_and_series_dumps() {
    let b = snakes(&["triangle", "--kind", "B", "--rows", "8"]);
    assert!(stdout(&b).lines().any(|l| l == "8,2,24568"));
    let single = snakes(&["triangle", "--kind", "B", "--rows", "0"]);
    assert_eq!(stdout(&single), "n,k,value\n0,0,1\n");
    let json = snakes(&["triangle", "--kind", "T", "--rows", "3", "--format", "json"]);
    let rows: Vec<Vec<String>> = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(rows[3], ["0", "2", "0", "2", "0"]);

    let egf = snakes(&[
        "series",
        "--name",
        "springer_egf",
        "--order",
        "7",
        "--format",
        "egf",
    ]);
    let values: Vec<String> = stdout(&egf)
        .lines()
        .map(|l| l.split_once(',').unwrap().1.to_string())
        .collect();
    assert_eq!(values, ["1", "1", "3", "11", "57", "361", "2763", "24611"]);
    let raw = snakes(&["series", "--name", "sec2x_sinx", "--order", "3"]);
    let coeffs: serde_json::Value = serde_json::from_slice(&raw.stdout).unwrap();
    assert_eq!(coeffs[3], serde_json::json!({"num": "11", "den": "6"}));
    assert_eq!(
        snakes(&["series", "--name", "cot", "--order", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "all", "--max-n", "4"];
    assert_eq!(snakes(&args).stdout, snakes(&args).stdout);
}

#[test]
fn verify_suites() {
    let all = snakes(&["verify", "--suite", "all", "--max-n", "1"]);
    assert!(all.status.success());
    assert!(stdout(&all).ends_with("0 failed\n"));

    let bijection = snakes(&["verify", "--suite", "bijection", "--max-n", "7"]);
    assert!(bijection.status.success());
    assert!(stdout(&bijection).contains("24611 at n = 7"));

    let alpha = snakes(&["verify", "--suite", "alpha", "--max-n", "6"]);
    assert!(alpha.status.success());
    assert!(stdout(&alpha).lines().all(|l| !l.starts_with("FAIL")));

    let triangles = snakes(&["verify", "--suite", "triangles", "--max-n", "5"]);
    assert!(triangles.status.success());
    assert!(stdout(&triangles).contains("10902"));
}

#[test]
fn writes_to_out_file() {
    let dir = std::env::temp_dir().join(format!("snakes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("b.csv");
    let out = snakes(&[
        "triangle",
        "--kind",
        "B",
        "--rows",
        "2",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&file).unwrap(),
        "n,k,value\n0,0,1\n1,1,1\n2,0,1\n2,2,2\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
