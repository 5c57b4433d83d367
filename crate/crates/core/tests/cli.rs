use std::path::PathBuf;
use std::process::{Command, Output};

fn cdop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdop")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cdop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn norm_json_for_half_dilation() {
    let o = cdop(&["norm", "--map", "dilation:0.5", "--alpha", "0.5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["closed_form"].as_f64().unwrap() - 0.9036).abs() <= 5e-5);
    assert!(v["gap"].as_f64().unwrap() <= 1e-6);
    assert_eq!(v["eta"], 2);
    let human = stdout(&cdop(&["norm", "--map", "dilation:0.85", "--alpha", "0.5"]));
    assert!(human.contains("2.5616"), "{human}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["diagnose", "--map", "lens:0.1", "--alpha", "0.5", "--format", "json"][..],
        &["hs", "--map", "poly:0,0,0.5", "--alpha", "0.25", "--format", "json"][..],
        &["profile", "--map", "dilation:0.5", "--alpha", "0.75"][..],
    ] {
        let a = cdop(args);
        let b = cdop(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn counting_value() {
    let o = cdop(&["counting", "--map", "poly:0,0,1", "--alpha", "0.5", "--w", "0.25", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["value"].as_f64().unwrap() - 3f64.sqrt()).abs() <= 1e-12);
}

#[test]
fn diagnose_verdicts() {
    let verdict = |map: &str, alpha: &str| {
        let o = cdop(&["diagnose", "--map", map, "--alpha", alpha, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["verdict"].as_str().unwrap().to_string()
    };
    assert_eq!(verdict("lens:0.1", "0.5"), "compact-evidence");
    assert_eq!(verdict("exp", "0.75"), "unbounded-evidence");
    assert_eq!(verdict("auto:0.3", "0.5"), "unbounded-evidence");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["norm", "--map", "dilation:0.5", "--alpha", "1.5"][..],
        &["norm", "--map", "dilation:1.5", "--alpha", "0.5"][..],
        &["norm", "--map", "exp", "--alpha", "0.5"][..],
        &["norm", "--map", "spiral:2", "--alpha", "0.5"][..],
        &["norm", "--alpha", "0.5"][..],
        &["frobnicate"][..],
    ] {
        let o = cdop(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = cdop(&["norm", "--map", "exp", "--alpha", "0.5"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cdop diagnose --map exp"));
    let o = cdop(&["norm", "--map", "dilation:0.5", "--alpha=-0.1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside the valid range 0 < alpha < 1"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(cdop(&["verify", "--suite", "cov"]).status.code(), Some(0));
    let coarse = cdop(&["verify", "--suite", "cov", "--quad-radial", "2", "--quad-angular", "4"]);
    assert_eq!(coarse.status.code(), Some(3));
    assert!(stdout(&coarse).contains("FAIL"));
}

#[test]
fn config_file_and_out_path() {
    let cfg = scratch("run.toml");
    let out = scratch("profile.csv");
    std::fs::write(
        &cfg,
        format!(
            "map = \"dilation:0.5\"\nalpha = 0.5\nshells = 14\npoints_per_shell = 32\nout = \"{}\"\n\n[quad]\nradial = 64\nangular = 128\n",
            out.display()
        ),
    )
    .unwrap();
    let o = cdop(&["profile", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 15);
    assert!(csv.starts_with("shell,"));

    // flags override the file
    let json = scratch("norm.json");
    let o = cdop(&[
        "norm", "--config", cfg.to_str().unwrap(), "--map", "dilation:0.85", "--format", "json", "--out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["map"], "dilation:0.85");
    assert_eq!(v["alpha"], 0.5);

    std::fs::write(&cfg, "map = \"dilation:0.5\"\nalpah = 0.5\n").unwrap();
    assert_eq!(cdop(&["norm", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}
