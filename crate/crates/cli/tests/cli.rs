use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dressed"))
}

fn run(args: &[&str]) -> Output {
    bin()
        .args(args)
        .env_remove("DRESSED_SEED")
        .output()
        .unwrap()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn spectrum_default_matches_golden() {
    let out = run(&["spectrum"]);
    assert!(out.status.success());
    assert_eq!(
        out.stdout,
        std::fs::read(golden("spectrum_default.csv")).unwrap()
    );
}

#[test]
fn crossings_default_matches_golden() {
    let out = run(&["crossings"]);
    assert!(out.status.success());
    assert_eq!(
        out.stdout,
        std::fs::read(golden("crossings_default.csv")).unwrap()
    );
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let out = run(&["spectrum", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read(&path).unwrap(),
        std::fs::read(golden("spectrum_default.csv")).unwrap()
    );
}

#[test]
fn spectrum_rows_are_sorted_and_complete() {
    let out = run(&["spectrum", "--xi-count", "7", "--levels", "0-3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "xi,branch,n,E_over_J"));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 7 * 16);
    let order = |b: &str| ["s", "0", "+", "-"].iter().position(|x| *x == b).unwrap();
    let keys: Vec<(f64, usize, usize)> = rows
        .iter()
        .map(|r| (r[0].parse().unwrap(), r[2].parse().unwrap(), order(&r[1])))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn decoupled_spectrum_is_linear() {
    let out = run(&[
        "spectrum",
        "--g-over-j",
        "0",
        "--xi-count",
        "5",
        "--levels",
        "0-2",
    ]);
    for r in data_rows(&String::from_utf8(out.stdout).unwrap()) {
        let xi: f64 = r[0].parse().unwrap();
        let n: f64 = r[2].parse().unwrap();
        let e: f64 = r[3].parse().unwrap();
        let expected = match (r[1].as_str(), n as usize) {
            ("s", _) => n * xi - 1.0,
            ("0", 0) => 1.0 - xi,
            ("+", 0) => 1.0,
            ("-", 0) => -1.0,
            ("0", _) | ("+", _) => n * xi + 1.0,
            _ => n * xi - 1.0,
        };
        assert!((e - expected).abs() < 1e-11, "{r:?}");
    }
}

#[test]
fn weak_coupling_near_degeneracy() {
    let out = run(&[
        "spectrum",
        "--g-over-j",
        "0.05",
        "--xi-count",
        "3",
        "--levels",
        "1-1",
        "--branches",
        "0,+",
    ]);
    let rows = data_rows(&String::from_utf8(out.stdout).unwrap());
    for pair in rows
        .iter()
        .filter(|r| r[2] == "1")
        .collect::<Vec<_>>()
        .chunks(2)
    {
        let a: f64 = pair[0][3].parse().unwrap();
        let b: f64 = pair[1][3].parse().unwrap();
        assert!((b - a).abs() <= 0.004);
        assert!(((b - a) - ((1.0f64 + 3.0 * 0.0025).sqrt() - 1.0)).abs() < 1e-11);
    }
}

#[test]
fn crossings_compact_and_converge() {
    let out = run(&["crossings", "--g-over-j", "0.16", "--levels", "0-18"]);
    let rows = data_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 19);
    let out = run(&["crossings", "--g-over-j", "0.0001"]);
    for r in data_rows(&String::from_utf8(out.stdout).unwrap()) {
        let x: f64 = r[2].parse().unwrap();
        assert!((x - 1e-8).abs() <= 1e-8);
    }
}

#[test]
fn json_mirror_has_same_rows() {
    let csv = run(&["crossings", "--levels", "0-3"]);
    let json = run(&["crossings", "--levels", "0-3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let rows = data_rows(&String::from_utf8(csv.stdout).unwrap());
    let jrows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), jrows.len());
    for (r, j) in rows.iter().zip(jrows) {
        assert_eq!(r[2].parse::<f64>().unwrap(), j[2].as_f64().unwrap());
    }
    assert_eq!(v["columns"][0], "g_over_J");
}

#[test]
fn metadata_echoes_inputs() {
    let out = run(&["rabi", "--j", "4", "--g", "0.2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# dressed rabi\n"));
    assert!(text.contains("# J = 4\n"));
    assert!(text.contains("# g = 0.2\n"));
    let rows = data_rows(&text);
    let mhz: f64 = rows[0][3].parse().unwrap();
    assert!((4.5..=5.5).contains(&mhz));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "[model]\nj = 4.0\ng = 2.0\n[output]\nformat = \"json\"\n",
    )
    .unwrap();
    let out = run(&["rabi", "--config", cfg.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["rows"][0][2].as_f64().unwrap() - 0.472135955).abs() < 1e-9);
    let out = run(&[
        "rabi",
        "--config",
        cfg.to_str().unwrap(),
        "--g",
        "0.2",
        "--format",
        "csv",
    ]);
    let rows = data_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows[0][1], "0.2");
}

#[test]
fn phase_reports_regions() {
    let out = run(&[
        "phase",
        "--g-over-j",
        "0.05",
        "--xi-start",
        "0.001",
        "--xi-stop",
        "3.5",
        "--xi-count",
        "2",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("xi,hq_phase,region,ground_state"));
    let rows = data_rows(&text);
    assert_eq!(rows[0][2..], ["I".to_string(), "none".to_string()]);
    assert_eq!(rows[1][2..], ["III".to_string(), "0_down_down".to_string()]);
}

#[test]
fn damping_reports_both_ratios() {
    let out = run(&["damping", "--omega", "12", "--g1", "1", "--g2", "0"]);
    let rows = data_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows[0][0], "closed_form");
    assert!((rows[0][3].parse::<f64>().unwrap() - 0.0528).abs() < 1e-4);
    assert_eq!(rows[1][0], "golden_rule");
    let out = run(&["damping", "--g1", "0.5", "--g2", "0.5"]);
    assert!(out.status.success());
    let rows = data_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows[0][3], "");
    assert_eq!(rows[0][4], "forbidden:symmetric_coupling");
}

#[test]
fn verify_passes_and_uses_seed() {
    let out = bin()
        .args(["verify", "--n-max", "12"])
        .env("DRESSED_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# seed = 42\n"));
    assert!(text.contains("# verdict = PASS\n"));
}

#[test]
fn evolve_traps_the_singlet() {
    let out = run(&["evolve", "--n-max", "10", "--t-count", "11"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("t,singlet_population,norm"));
    for r in data_rows(&text) {
        assert!((r[1].parse::<f64>().unwrap() - 0.5).abs() <= 1e-9);
        assert!((r[2].parse::<f64>().unwrap() - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn device_without_mutual_capacitance() {
    let out = run(&["device", "--c-m", "0"]);
    let rows = data_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows[0], ["J", "0", "GHz"]);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["crossings", "--levels", "4-1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["spectrum", "--xi-count", "1"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["rabi", "--j", "4", "--g", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["device", "--c-sigma", "1e-18"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["spectrum", "--out", "/nonexistent/dir/x.csv"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["rabi", "--config", "/nonexistent/cfg.toml"])
            .status
            .code(),
        Some(3)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[model]\nj = \"four\"\n").unwrap();
    assert_eq!(
        run(&["rabi", "--config", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let out = bin()
        .args(["verify", "--n-max", "4"])
        .env("DRESSED_SEED", "abc")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
