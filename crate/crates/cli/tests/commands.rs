use std::process::{Command, Output};

use qweyl_cli::parse_weyl;
use qweyl_core::{reduce, Variant};

fn qweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(args)
        .output()
        .expect("spawn qweyl")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_owned()
}

#[test]
fn normalize_matches_bracket_formula() {
    let out = qweyl(&["normalize", "d1 x1", "--variant", "imath", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = Variant::imath(2).unwrap();
    let printed = reduce(v, &parse_weyl(&stdout(&out), &v).unwrap()).unwrap();
    let expected = reduce(
        v,
        &parse_weyl("(q*m1 - q^-1*m1^-1)/(q - q^-1)", &v).unwrap(),
    )
    .unwrap();
    assert_eq!(printed, expected);
}

#[test]
fn apply_braid_operator_to_m() {
    let out = qweyl(&[
        "apply",
        "--op",
        "T",
        "--i",
        "2",
        "--e",
        "-1",
        "--kind",
        "prime",
        "m2",
        "--variant",
        "jmath",
        "--rank",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "m3");
    let out = qweyl(&[
        "apply",
        "--op",
        "T",
        "--i",
        "2",
        "--e",
        "-1",
        "--kind",
        "prime",
        "m2",
        "--variant",
        "jmath",
        "--rank",
        "2",
    ]);
    assert_eq!(stdout(&out), "m2");
}

#[test]
fn apply_phi_and_act() {
    let out = qweyl(&[
        "apply",
        "--op",
        "phi",
        "B1",
        "--variant",
        "jmath",
        "--rank",
        "2",
    ]);
    assert_eq!(stdout(&out), "d1 x2");
    let out = qweyl(&["act", "x1 d1", "X1^2", "--variant", "imath", "--rank", "1"]);
    assert_eq!(stdout(&out), "(q^2+1)/(q) * X1^2");
    let out = qweyl(&[
        "act",
        "K1",
        "X1",
        "--on",
        "iqg",
        "--variant",
        "imath",
        "--rank",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "q * X1");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let cases: [&[&str]; 5] = [
        &["normalize", "x1 +", "--variant", "imath", "--rank", "2"],
        &["normalize", "x1"],
        &[
            "apply",
            "--op",
            "phi",
            "K3",
            "--variant",
            "imath",
            "--rank",
            "2",
        ],
        &[
            "apply",
            "--op",
            "T",
            "x1",
            "--variant",
            "imath",
            "--rank",
            "2",
        ],
        &["verify", "all", "--variant", "imath", "--rank", "0"],
    ];
    for args in cases {
        assert_eq!(qweyl(args).status.code(), Some(2), "{args:?}");
    }
    let out = qweyl(&[
        "apply",
        "--op",
        "phi",
        "K3",
        "--variant",
        "imath",
        "--rank",
        "2",
    ]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("K3 illegal: ρ fixes node 3"));
}

#[test]
fn json_report_shape() {
    let out = qweyl(&[
        "verify",
        "braid",
        "--variant",
        "imath",
        "--rank",
        "2",
        "--e",
        "-1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<_> = json.as_object().unwrap().keys().cloned().collect();
    assert_eq!(
        keys,
        [
            "checks",
            "e",
            "rank",
            "suite",
            "summary",
            "toolVersion",
            "variant"
        ]
    );
    assert_eq!(json["e"], -1);
    assert_eq!(json["suite"], "braid");
    let checks = json["checks"].as_array().unwrap();
    let passed = checks.iter().filter(|c| c["status"] == "pass").count();
    assert_eq!(json["summary"]["passed"], passed);
    let ids: Vec<_> = checks
        .iter()
        .map(|c| c["id"].as_str().unwrap().to_owned())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.iter().all(|id| id.starts_with("braid/")));
}

#[test]
fn perturbed_table_fails_verification() {
    let out = qweyl(&[
        "verify",
        "endo-well-defined",
        "--variant",
        "jmath",
        "--rank",
        "2",
        "--inject-fault",
        "flip-prime-next-d",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL "));
}

#[test]
fn report_written_to_file() {
    let dir = std::env::temp_dir().join(format!("qweyl-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = qweyl(&[
        "verify",
        "phi-relations",
        "--variant",
        "jmath",
        "--rank",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["summary"]["failed"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
