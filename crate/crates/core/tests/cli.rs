use std::process::{Command, Output};

fn cfgcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfgcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = cfgcalc(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn derive_examples() {
    assert_eq!(
        stdout_of(&[
            "derive",
            "--grammar",
            "ext_peaks",
            "--word",
            "x",
            "--n",
            "3"
        ]),
        "x*y^3 + 5*x^3*y"
    );
    assert_eq!(
        stdout_of(&["derive", "--grammar", "eulerian", "--word", "x", "--n", "0"]),
        "x"
    );
    assert_eq!(
        stdout_of(&[
            "derive",
            "--grammar",
            "lah_signless",
            "--word",
            "z",
            "--n",
            "2"
        ]),
        "2*x^3*z + x^4*z"
    );
    assert_eq!(
        stdout_of(&[
            "derive",
            "--grammar",
            "eulerian",
            "--word",
            "-x^-1*y",
            "--n",
            "1"
        ]),
        "x^-1*y^2 + -y"
    );
}

#[test]
fn derive_from_grammar_file() {
    let dir = std::env::temp_dir().join(format!("cfgcalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("weighted.cfg");
    std::fs::write(&path, "# weighted peaks\nx -> x*y\ny -> w*x^2\n").unwrap();
    let out = stdout_of(&[
        "derive",
        "--grammar",
        path.to_str().unwrap(),
        "--word",
        "x",
        "--n",
        "2",
    ]);
    assert_eq!(out, "x*y^2 + w*x^3");
    std::fs::write(&path, "x -> x*y\nx -> y\n").unwrap();
    let out = cfgcalc(&[
        "derive",
        "--grammar",
        path.to_str().unwrap(),
        "--word",
        "x",
        "--n",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn derive_json() {
    let out = stdout_of(&[
        "--format",
        "json",
        "derive",
        "--grammar",
        "andre",
        "--word",
        "y",
        "--n",
        "3",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], "x^2 + x*y^2");
    assert_eq!(v["n"], 3);
}

#[test]
fn egf_text_and_json() {
    let text = stdout_of(&[
        "egf",
        "--grammar",
        "eulerian",
        "--word",
        "x",
        "--order",
        "2",
    ]);
    assert_eq!(text, "0: x\n1: x*y\n2: x*y^2 + x^2*y");
    let json = stdout_of(&[
        "egf",
        "--grammar",
        "aux_uv",
        "--word",
        "v",
        "--order",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["order"], 3);
    assert_eq!(v["coeffs"], serde_json::json!(["v", "v", "v", "v"]));
}

#[test]
fn enumerate_families() {
    let rows = stdout_of(&["enumerate", "--family", "eulerian", "--max-n", "3"]);
    assert_eq!(rows.lines().last().unwrap(), "3: x*y^3 + 4*x^2*y^2 + x^3*y");
    let peaks = stdout_of(&["enumerate", "--family", "peaks", "--max-n", "4"]);
    assert_eq!(peaks, "1: 1\n2: 1,1\n3: 1,5\n4: 1,18,5");
    let json = stdout_of(&[
        "--format",
        "json",
        "enumerate",
        "--family",
        "peaks",
        "--max-n",
        "3",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"name": "T", "rows": {"1": [1], "2": [1, 1], "3": [1, 5]}})
    );
    let trees = stdout_of(&["enumerate", "--family", "trees", "--max-n", "2"]);
    assert_eq!(trees.lines().last().unwrap(), "2: x0*x1^2 + x0^2*x2");
    assert_eq!(
        cfgcalc(&["enumerate", "--family", "eulerian", "--max-n", "12"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bijection_examples() {
    assert_eq!(
        stdout_of(&["bijection", "phi", "--perm", "5,3,4,6,7,2,1"]),
        "0,1,2,0,4,2,2"
    );
    assert_eq!(
        stdout_of(&["bijection", "psi", "--tree", "0,1,2,0,4,2,2"]),
        "5,3,4,6,7,2,1"
    );
    assert_eq!(stdout_of(&["bijection", "phi", "--perm", "1"]), "0");
    let trace = stdout_of(&["bijection", "phi", "--perm", "5,3,4,6,7,2,1", "--trace"]);
    let lines: Vec<&str> = trace.lines().collect();
    assert_eq!(lines[0], "k  M_k        i_k  J_k");
    assert_eq!(lines[2], "2  {4,5,6,7}  6    {3,6}");
    assert_eq!(lines[5], "5  {1}        1    {1}");
    assert_eq!(lines.last().unwrap(), &"0,1,2,0,4,2,2");
    let json = stdout_of(&[
        "--format",
        "json",
        "bijection",
        "phi",
        "--perm",
        "5,3,4,6,7,2,1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"n": 7, "parents": [0, 1, 2, 0, 4, 2, 2]})
    );
}

#[test]
fn bijection_rejects_bad_input() {
    let out = cfgcalc(&["bijection", "phi", "--perm", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid permutation"));
    let out = cfgcalc(&["bijection", "psi", "--tree", "0,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an increasing tree"));
}

#[test]
fn verify_exit_codes() {
    let out = cfgcalc(&["verify", "--suite", "peaks", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| !l.starts_with("[FAIL]")));
    assert!(text.trim_end().ends_with(", 0 failed"));

    let json = stdout_of(&[
        "verify", "--suite", "gf", "--order", "10", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["passed"] == true));

    assert_eq!(
        cfgcalc(&["verify", "--suite", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(cfgcalc(&["verify", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(cfgcalc(&["verify", "--order", "17"]).status.code(), Some(2));
}

#[test]
fn verify_all_defaults() {
    let out = cfgcalc(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for suite in [
        "eulerian",
        "cyclic",
        "stirling",
        "lah",
        "andre",
        "peaks",
        "trees",
        "gf",
        "recurrences",
        "bijection",
        "morphism",
    ] {
        assert!(
            text.contains(&format!("[PASS] {suite}: ")),
            "{suite} missing"
        );
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cfgcalc(&[]).status.code(), Some(2));
    assert_eq!(
        cfgcalc(&[
            "derive",
            "--grammar",
            "eulerian",
            "--word",
            "x^",
            "--n",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        cfgcalc(&["derive", "--grammar", "eulerian", "--word", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cfgcalc(&["--format", "yaml", "verify"]).status.code(),
        Some(2)
    );
    assert_eq!(cfgcalc(&["--help"]).status.code(), Some(0));
}
