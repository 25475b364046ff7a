use std::process::{Command, Output};

use serde_json::Value;

fn cmspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmspace"))
        .args(args)
        .env_remove("CMSPACE_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn without_timings(mut v: Value) -> Value {
    for c in v["checks"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("ms");
    }
    v
}

#[test]
fn verify_cm_json_report() {
    let args = ["verify", "cm", "--n", "4", "--trials", "20", "--seed", "7", "--format", "json"];
    let o = cmspace(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "verify cm");
    assert_eq!(v["config"]["seed"], 7);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 4);
    for c in checks {
        assert_eq!(c["status"], "pass");
        assert!(c["ms"].is_number());
        assert!(c["name"].is_string());
    }

    let again: Value = serde_json::from_str(&stdout(&cmspace(&args))).unwrap();
    assert_eq!(without_timings(v), without_timings(again));
}

#[test]
fn small_dimensions_and_commuting_pairs() {
    for args in [
        ["verify", "cm", "--n", "2", "--trials", "10"],
        ["verify", "cm", "--n", "3", "--trials", "10"],
        ["verify", "com", "--n", "4", "--trials", "5"],
    ] {
        let o = cmspace(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn dimension_five_is_rejected() {
    let o = cmspace(&["verify", "cm", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no catalogue for n = 5"));
}

#[test]
fn hilbert_prints_the_series() {
    let o = cmspace(&["hilbert"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("1 + T^2 + 2*T^3 + 4*T^4 + 2*T^5 + 4*T^6 + 2*T^7 + 4*T^8 + 2*T^9 + T^10 + T^12"));
    assert!(out.contains("rank 24"));
}

#[test]
fn failing_check_sets_exit_status() {
    let o = cmspace(&["groebner", "check", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"][0]["status"], "fail");
    assert!(v["checks"][0]["witness"].as_str().unwrap().contains("S-pairs"));
}

#[test]
fn candidate_file_is_checked() {
    let dir = std::env::temp_dir().join(format!("cmspace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    std::fs::write(&good, "# single variables\na3\na4\n").unwrap();
    let o = cmspace(&["groebner", "check", "--input", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "a3 + 1\na4 - 2/x\n").unwrap();
    let o = cmspace(&["groebner", "check", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 8"), "{}", stderr(&o));
}

#[test]
fn unknown_command_prints_usage() {
    let o = cmspace(&["frobnicate"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("Usage"));
}

#[test]
fn output_directory_from_environment() {
    let dir = std::env::temp_dir().join(format!("cmspace-out-{}", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_cmspace"))
        .args(["discriminant", "--format", "json"])
        .env("CMSPACE_OUTPUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.join("discriminant.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["checks"][0]["witness"], "c = -72");
}

#[test]
fn exports() {
    let o = cmspace(&["export", "relations", "--set", "COM4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.to_string().contains("a3*a4^2 - a3^2*a5"));

    let o = cmspace(&["export", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("{a1,a2} = 4"));
    assert!(out.contains("{a3,a4} = 2*a3"));

    let o = cmspace(&["export", "relations", "--set", "CM9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn derive_reports_the_jacobiator_sign() {
    let o = cmspace(&["derive", "relations"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL Jacobiator of (a5, a10, a12) is 8 r1"));
    assert!(out.contains("it is -8 r1"));
    assert!(out.contains("PASS Jacobi identity modulo I"));
}
