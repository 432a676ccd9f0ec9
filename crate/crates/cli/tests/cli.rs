use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const RUNNING_EXAMPLE_FLAGS: [&str; 8] =
    ["--n", "6", "--sigma", "(136245)", "--gamma1", "(6,1),(1,2)", "--gamma2", "(2,3),(3,4)"];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybe-forge")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> (i32, String) {
    let mut full = args.to_vec();
    full.extend(["--json", "-"]);
    let out = run(&full);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let start = stdout.find('{').expect("json on stdout");
    (out.status.code().unwrap(), stdout[start..].to_string())
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn running_example_report_matches_golden_file() {
    let mut args = vec!["verify-aybe"];
    args.extend(RUNNING_EXAMPLE_FLAGS);
    args.extend(["--seed", "7"]);
    let (code, text) = json_of(&args);
    assert_eq!(code, 0);
    assert_eq!(text, include_str!("golden/running_example_verify_aybe.json"));
}

#[test]
fn same_seed_gives_identical_bytes() {
    let args = [
        "verify-cybe",
        "--n",
        "4",
        "--gamma1",
        "1",
        "--gamma2",
        "3",
        "--tau",
        "(1,3)",
        "--seed",
        "42",
        "--trials",
        "5",
    ];
    let (c1, a) = json_of(&args);
    let (c2, b) = json_of(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let other = json_of(&[
        "verify-cybe",
        "--n",
        "4",
        "--gamma1",
        "1",
        "--gamma2",
        "3",
        "--tau",
        "(1,3)",
        "--seed",
        "43",
        "--trials",
        "5",
    ]);
    let v: Value = serde_json::from_str(&other.1).unwrap();
    assert_eq!(v["seed"], 43);
}

#[test]
fn report_schema() {
    let (_, text) = json_of(&["verify-cybe", "--n", "3"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "verify-cybe");
    assert_eq!(v["timing_ms"], 0);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["cybe", "unitarity", "singular_part"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn corrupted_gluing_exits_with_failure() {
    let mut args = vec!["geometric-compare", "--corrupt-levi", "--trials", "2"];
    args.extend(RUNNING_EXAMPLE_FLAGS);
    let (code, text) = json_of(&args);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&text).unwrap();
    let failed = v["checks"].as_array().unwrap().iter().find(|c| c["status"] == "fail").unwrap();
    assert!(failed["witness"].is_object() || failed["witness"].is_string());
}

#[test]
fn geometric_compare_passes_on_the_running_example() {
    let mut args = vec!["geometric-compare", "--trials", "3"];
    args.extend(RUNNING_EXAMPLE_FLAGS);
    let (code, text) = json_of(&args);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["inputs"]["normalization_shift"], 1);
}

#[test]
fn input_errors_exit_with_two() {
    // τ without a finite orbit
    assert_eq!(
        run(&["verify-cybe", "--n", "3", "--gamma1", "1,2", "--gamma2", "2,1", "--tau", "(1,2),(2,1)"]).status.code(),
        Some(2)
    );
    // Γ₁ covering every arc
    let all = run(&[
        "verify-aybe",
        "--n",
        "3",
        "--sigma",
        "(123)",
        "--gamma1",
        "(1,2),(2,3),(3,1)",
        "--gamma2",
        "(2,3),(3,1),(1,2)",
    ]);
    assert_eq!(all.status.code(), Some(2));
    assert_eq!(run(&["verify-aybe", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["manin-audit", "--n", "x"]).status.code(), Some(2));
    assert_eq!(run(&["verify-cybe", "--n", "3", "--config", "/nonexistent/ybe.conf"]).status.code(), Some(2));
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let path = scratch("cybe.conf");
    std::fs::write(&path, "# defaults\nn = 4\ngamma1 = 1\ngamma2 = 3\ntau = (1,3)\ntrials = 2\nseed = 5\n").unwrap();
    let (code, text) = json_of(&["verify-cybe", "--config", path.to_str().unwrap(), "--seed", "9"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["seed"], 9);
    assert_eq!(v["inputs"]["n"], 4);
}

#[test]
fn r0_file_is_checked() {
    let good = scratch("r0_good.txt");
    let bad = scratch("r0_bad.txt");
    // n = 2, Γ = ∅: r₀ = Ω₀/2, and Ω₀ = h⊗h/2 for h = diag(1,-1)
    std::fs::write(&good, "1/4\n").unwrap();
    std::fs::write(&bad, "1\n").unwrap();
    assert_eq!(run(&["verify-cybe", "--n", "2", "--r0", good.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["verify-cybe", "--n", "2", "--r0", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn manin_audit_reports_every_stage() {
    let (code, text) =
        json_of(&["manin-audit", "--n", "3", "--gamma1", "1", "--gamma2", "2", "--tau", "(1,2)", "--pole-bound", "2"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for expected in ["node_ideal", "extraction_agreement", "module_closure", "isotropy", "complementarity"] {
        assert!(names.contains(&expected), "{expected} missing from {names:?}");
    }
    assert_eq!(code, 0, "{text}");
}
