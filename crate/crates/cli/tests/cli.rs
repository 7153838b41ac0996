//! End-to-end runs of the `superyangian` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use superyangian::{AlgebraContext, Element, Yangian};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superyangian")).args(args).output().expect("spawn binary")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn verify_all_passes_on_y11() {
    let o = run(&["--m", "1", "--n", "1", "--p", "3", "--trunc", "6", "verify", "all", "--no-timing"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let reports = json(&o);
    let reports = reports.as_array().unwrap();
    assert!(reports.iter().all(|r| r["status"] == "pass"));
    for prefix in ["rtt/", "drinfeld/", "identity/", "sy/", "center/", "pbw/", "maps/", "current/", "spot/"] {
        assert!(reports.iter().any(|r| r["id"].as_str().unwrap().starts_with(prefix)), "{prefix}");
    }
}

#[test]
fn berezinian_first_coefficient() {
    let o = run(&["--m", "1", "--n", "1", "--p", "3", "--trunc", "4", "berezinian"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let series = &v["series"][0];
    assert_eq!(series["name"], "c");
    assert_eq!(series["coefficients"].as_array().unwrap().len(), 5);
    let ctx = AlgebraContext::new(1, 1, 3, 4).unwrap();
    let y = Yangian::new(ctx);
    let c1: superyangian::Canonical = serde_json::from_value(series["canonical"][1].clone()).unwrap();
    let expected = y.t(1, 1, 1).sub(&y.t(2, 2, 1));
    assert_eq!(Element::from_canonical(ctx, &c1).unwrap(), expected);
}

#[test]
fn composite_p_is_a_config_error() {
    let o = run(&["--p", "4", "verify", "rtt"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("prime"));
}

#[test]
fn unknown_suite_is_a_config_error() {
    assert_eq!(code(&run(&["verify", "no-such-suite"])), 2);
}

#[test]
fn mutated_run_fails() {
    let o = run(&["--m", "2", "--n", "1", "--mutate", "verify", "rtt"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert!(v.as_array().unwrap().iter().any(|r| r["status"] == "fail" && r["witness"].is_object()));
}

#[test]
fn wall_crossing_map_is_rejected() {
    let o = run(&["--m", "2", "--n", "1", "maps", "--check", "perm:3,2,1"]);
    assert_eq!(code(&o), 2);
    let o = run(&["--m", "2", "--n", "1", "maps", "--check", "zeta"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn graded_image_of_berezinian() {
    let o = run(&["--m", "1", "--n", "1", "--trunc", "4", "gr", "c", "3"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["loop_degree"], 2);
    assert_eq!(v["graded"], "e_{1,1}x^2 + e_{2,2}x^2");
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn config_file_is_honoured_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    write(&cfg, "m = 2\nn = 1\np = 3\ntrunc = 3\nsuite = [\"rtt\"]\nno_timing = true\n");
    let o = run(&["--config", cfg.to_str().unwrap(), "verify"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert!(v[0]["context"].as_str().unwrap().starts_with("Y(2|1)"));
    assert!(v[0].get("seconds").is_none());

    let o = run(&["--config", cfg.to_str().unwrap(), "--m", "1", "verify"]);
    assert!(json(&o)[0]["context"].as_str().unwrap().starts_with("Y(1|1)"));

    write(&cfg, "m = 2\ncolour = \"blue\"\n");
    let o = run(&["--config", cfg.to_str().unwrap(), "verify", "rtt"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn warm_cache_gives_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = ["--m", "2", "--n", "1", "--trunc", "3", "--cache-dir", cache.to_str().unwrap(), "--no-timing"];
    for cmd in [&["gauss"][..], &["center", "--emit", "b_1"], &["berezinian"]] {
        let all: Vec<&str> = args.iter().copied().chain(cmd.iter().copied()).collect();
        let cold = run(&all);
        assert_eq!(code(&cold), 0, "{}", String::from_utf8_lossy(&cold.stderr));
        let warm = run(&all);
        assert_eq!(cold.stdout, warm.stdout, "{cmd:?}");
    }
    assert!(std::fs::read_dir(&cache).unwrap().count() >= 3);

    let verify: Vec<&str> = args.iter().copied().chain(["verify", "rtt", "spot"]).collect();
    assert_eq!(run(&verify).stdout, run(&verify).stdout);
}

#[test]
fn report_goes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&["--output", out.to_str().unwrap(), "verify", "identity/gv-gu"]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v[0]["id"], "identity/gv-gu");
}
