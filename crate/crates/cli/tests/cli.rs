use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_noisy-cavity");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("NOISY_CAVITY_WORKERS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with_env(args, &[])
}

struct Csv {
    comments: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    fn read(path: &Path) -> Self {
        let text = std::fs::read_to_string(path).unwrap();
        let comments = text
            .lines()
            .filter_map(|l| l.strip_prefix("# "))
            .map(str::to_string)
            .collect();
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let header = reader.headers().unwrap().iter().map(str::to_string).collect();
        let rows = reader
            .records()
            .map(|r| r.unwrap().iter().map(str::to_string).collect())
            .collect();
        Self {
            comments,
            header,
            rows,
        }
    }

    fn col(&self, name: &str) -> usize {
        self.header
            .iter()
            .position(|h| h == name)
            .unwrap_or_else(|| panic!("no column {name} in {:?}", self.header))
    }

    fn floats(&self, name: &str) -> Vec<f64> {
        let k = self.col(name);
        self.rows.iter().map(|r| r[k].parse().unwrap()).collect()
    }

    fn comment_value(&self, key: &str) -> Option<String> {
        self.comments
            .iter()
            .find_map(|c| c.strip_prefix(&format!("{key} = ")).map(str::to_string))
    }
}

fn out_path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn ok_run(dir: &TempDir, name: &str, args: &[&str]) -> Csv {
    let path = out_path(dir, name);
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--out", path.to_str().unwrap()]);
    let r = run(&full);
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    Csv::read(&path)
}

#[test]
fn evolve_first_maximum() {
    let dir = TempDir::new().unwrap();
    let csv = ok_run(&dir, "e.csv", &["evolve", "--t", "0:8:801"]);
    let t = csv.floats("t");
    let c = csv.floats("C");
    let k = (1..c.len() - 1).find(|&k| c[k] >= c[k - 1] && c[k] >= c[k + 1]).unwrap();
    // Zero temperature: C = exp(-2 gamma t) |sin(2 omega t)|, peaking where tan(2 omega t) = omega / gamma.
    let (omega, gamma) = (0.2_f64, 0.01_f64);
    let t_peak = (omega / gamma).atan() / (2.0 * omega);
    let c_peak = (-2.0 * gamma * t_peak).exp() * (2.0 * omega * t_peak).sin();
    assert!((c[k] - c_peak).abs() < 1e-4, "{} vs {c_peak}", c[k]);
    assert!((t[k] - t_peak).abs() < 0.01, "{} vs {t_peak}", t[k]);
    assert!(csv.rows.iter().all(|r| r[csv.col("engine")] == "analytic"));
}

#[test]
fn evolve_ground_state_barely_entangles() {
    let dir = TempDir::new().unwrap();
    let csv = ok_run(
        &dir,
        "e.csv",
        &[
            "evolve", "--model", "asymmetric", "--gamma", "0.1", "--eta", "0.5", "--n_t", "1e-6",
            "--initial", "00", "--t", "0:100:400",
        ],
    );
    assert!(csv.floats("C").iter().all(|&c| c < 1e-3));
    assert!(csv.rows.iter().all(|r| r[csv.col("engine")] == "numeric"));
}

#[test]
fn engine_column_respects_preconditions() {
    let dir = TempDir::new().unwrap();
    for (args, want) in [
        (vec!["evolve", "--initial", "01"], "numeric"),
        (vec!["evolve", "--engine", "numeric"], "numeric"),
        (vec!["evolve", "--model", "asymmetric", "--eta", "0.1"], "numeric"),
        (vec!["evolve", "--n_t", "0.5"], "analytic"),
    ] {
        let csv = ok_run(&dir, "e.csv", &args);
        assert!(csv.rows.iter().all(|r| r[csv.col("engine")] == want), "{args:?}");
    }
    let r = run(&["evolve", "--engine", "analytic", "--initial", "00", "--out", "x.csv"]);
    assert_eq!(r.code, 1, "{}", r.stderr);
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = TempDir::new().unwrap();
    let out = out_path(&dir, "x.csv");
    let out = out.to_str().unwrap();
    for args in [
        vec!["evolve", "--t", "0:100:0", "--out", out],
        vec!["evolve", "--t", "0:100:1", "--out", out],
        vec!["evolve", "--omega", "abc", "--out", out],
        vec!["evolve", "--gamma", "-0.1", "--out", out],
        vec!["evolve", "--eta", "0.1", "--out", out],
        vec!["evolve", "--bogus", "1", "--out", out],
        vec!["evolve"],
        vec!["steady-sweep", "--n_t", "0:1:5", "--eta", "0:1:5", "--omega", "0.1,0.2", "--out", out],
        vec!["no-such-mode", "--out", out],
        vec![],
    ] {
        let r = run(&args);
        assert_eq!(r.code, 1, "{args:?}: {}", r.stderr);
        assert!(!r.stderr.is_empty());
    }
    assert!(!Path::new(out).exists());
    let r = run(&["evolve", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(r.code, 1);
    let r = run_with_env(&["region", "--out", out], &[("NOISY_CAVITY_WORKERS", "zero")]);
    assert_eq!(r.code, 1);
}

#[test]
fn help_and_version() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    for mode in ["evolve", "steady-sweep", "region", "bell-evolve", "validate-adiabatic"] {
        assert!(r.stdout.contains(mode));
    }
    let r = run(&["region", "--help"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("--omega"));
    assert_eq!(run(&["--version"]).code, 0);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = TempDir::new().unwrap();
    let cfg = dir.path().join("run.cfg");
    let out = out_path(&dir, "from_cfg.csv");
    std::fs::write(
        &cfg,
        format!("# sweep\ngamma = 0.05\nn_t = 2  # fixed\nt = 0:10:11\nout = {}\n", out.display()),
    )
    .unwrap();
    let r = run(&["evolve", "--config", cfg.to_str().unwrap(), "--n_t", "1"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let csv = Csv::read(&out);
    assert_eq!(csv.comment_value("gamma").as_deref(), Some("0.05"));
    assert_eq!(csv.comment_value("n_t").as_deref(), Some("1"));
    assert_eq!(csv.rows.len(), 11);

    std::fs::write(&cfg, "gamma = 0.05\nbeta = 1\n").unwrap();
    let r = run(&["evolve", "--config", cfg.to_str().unwrap(), "--out", "x.csv"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("run.cfg:2") && r.stderr.contains("beta"), "{}", r.stderr);

    std::fs::write(&cfg, "gamma = fast\n").unwrap();
    let r = run(&["evolve", "--config", cfg.to_str().unwrap(), "--out", "x.csv"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("run.cfg:1") && r.stderr.contains("gamma"), "{}", r.stderr);

    let r = run(&["evolve", "--config", dir.path().join("missing.cfg").to_str().unwrap(), "--out", "x.csv"]);
    assert_eq!(r.code, 1);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let cases: [&[&str]; 5] = [
        &["evolve", "--n_t", "0.3"],
        &["steady-sweep", "--n_t", "0:6:31", "--eta", "0.1:3:7"],
        &["region", "--n_t", "0:6:21", "--omega", "0:1:21"],
        &["bell-evolve", "--t", "0:50:101"],
        &["validate-adiabatic", "--t", "0:100:51"],
    ];
    for args in cases {
        let a = out_path(&dir, "a.csv");
        let b = out_path(&dir, "b.csv");
        let mut args_a = args.to_vec();
        args_a.extend(["--out", a.to_str().unwrap()]);
        let mut args_b = args.to_vec();
        args_b.extend(["--out", b.to_str().unwrap()]);
        assert_eq!(run_with_env(&args_a, &[("NOISY_CAVITY_WORKERS", "1")]).code, 0);
        assert_eq!(run_with_env(&args_b, &[("NOISY_CAVITY_WORKERS", "4")]).code, 0);
        let bytes = std::fs::read(&a).unwrap();
        assert_eq!(bytes, std::fs::read(&b).unwrap(), "{args:?}");

        let csv = Csv::read(&a);
        assert!(csv.comments[0].starts_with("noisy-cavity "));
        for row in &csv.rows {
            assert_eq!(row.len(), csv.header.len());
            for field in row {
                if let Ok(v) = field.parse::<f64>() {
                    assert!(v.is_finite(), "{field}");
                    // Written text is the canonical shortest form of the value it parses to.
                    let canonical = if v == 0.0 { "0.0".to_string() } else { format!("{v:?}") };
                    assert!(field == &canonical || field == "0" || field == "1", "{field} vs {canonical}");
                }
            }
        }
    }
}

#[test]
fn steady_sweep_shapes() {
    let dir = TempDir::new().unwrap();
    let csv = ok_run(&dir, "s.csv", &["steady-sweep", "--n_t", "0:6:13"]);
    assert_eq!(csv.header, ["n_t", "C_st", "B_st"]);
    assert_eq!(csv.rows[0][csv.col("C_st")], "0.0");
    assert!(csv.floats("B_st").iter().all(|&b| b <= 2.0));

    // C_st(eta) rises to an interior maximum.
    let csv = ok_run(&dir, "s.csv", &["steady-sweep", "--n_t", "2", "--eta", "0.015:3:200"]);
    let c = csv.floats("C_st");
    let (arg, _) = c.iter().enumerate().fold((0, f64::MIN), |a, (i, &v)| if v > a.1 { (i, v) } else { a });
    assert!(arg > 0 && arg < c.len() - 1 && c[0] < c[arg] && c[c.len() - 1] < c[arg]);

    // Four coupling curves stay ordered top to bottom.
    let csv = ok_run(
        &dir,
        "s.csv",
        &["steady-sweep", "--gamma", "0.01", "--n_t", "0.1:40:400", "--omega", "0.49,0.5,0.505,0.51"],
    );
    assert_eq!(csv.header, ["n_t", "omega", "C_st", "B_st"]);
    let c = csv.floats("C_st");
    for chunk in c.chunks(4) {
        assert!(chunk.windows(2).all(|w| w[1] <= w[0] + 1e-10), "{chunk:?}");
    }
}

#[test]
fn region_matches_thresholds() {
    let dir = TempDir::new().unwrap();
    let csv = ok_run(&dir, "r.csv", &["region"]);
    assert_eq!(csv.header, ["n_t", "omega", "entangled", "omega_c"]);
    assert_eq!(csv.rows.len(), 101 * 101);
    assert_eq!(csv.comment_value("n_tc").as_deref(), Some("4.0"));
    let (n, w) = (csv.floats("n_t"), csv.floats("omega"));
    let bit = csv.col("entangled");
    let oc = csv.col("omega_c");
    let mut inside = 0;
    for (k, row) in csv.rows.iter().enumerate() {
        let entangled = row[bit] == "1";
        inside += usize::from(entangled);
        if n[k] >= 4.0 || w[k] == 0.0 {
            assert!(!entangled, "{row:?}");
        }
        let omega_c: Option<f64> = (!row[oc].is_empty()).then(|| row[oc].parse().unwrap());
        if omega_c.is_some_and(|c| (w[k] - c).abs() < 1e-6) {
            continue;
        }
        let predicate = w[k] > 0.0 && omega_c.is_some_and(|c| w[k] < c) && n[k] > 0.0 && n[k] < 4.0;
        assert_eq!(entangled, predicate, "{row:?}");
    }
    assert!(inside > 0);
}

#[test]
fn bell_evolve_curves() {
    let dir = TempDir::new().unwrap();
    let csv = ok_run(&dir, "b.csv", &["bell-evolve"]);
    assert_eq!(
        csv.header,
        ["t", "B[n_t=0]", "C[n_t=0]", "B[n_t=0.5]", "C[n_t=0.5]", "B[n_t=1]", "C[n_t=1]"]
    );
    let b0 = csv.floats("B[n_t=0]");
    let b1 = csv.floats("B[n_t=1]");
    for name in ["B[n_t=0]", "B[n_t=0.5]", "B[n_t=1]"] {
        let b = csv.floats(name);
        assert!((b[0] - 2.0).abs() < 1e-12);
        assert!(b.iter().all(|&v| v <= 2.0 * std::f64::consts::SQRT_2 + 1e-9));
    }
    for (x, y) in b0.iter().zip(&b1) {
        if *x > 2.0 && *y > 2.0 {
            assert!(x > y, "{x} vs {y}");
        }
    }
}

fn summary_values(csv: &Csv) -> HashMap<String, String> {
    csv.comments
        .iter()
        .filter_map(|c| c.split_once(" = "))
        .map(|(k, v)| (k.to_string(), v.split(' ').next().unwrap().to_string()))
        .collect()
}

#[test]
fn validate_adiabatic_outcomes() {
    let dir = TempDir::new().unwrap();
    let csv = ok_run(&dir, "v.csv", &["validate-adiabatic"]);
    let s2 = summary_values(&csv);
    assert_eq!(s2["result"], "PASS");
    let gap2: f64 = s2["max_gap"].parse().unwrap();
    assert!(gap2 <= 5e-2);
    assert_eq!(csv.header.last().unwrap(), "max_gap");

    let csv = ok_run(&dir, "v.csv", &["validate-adiabatic", "--n_max", "3"]);
    let gap3: f64 = summary_values(&csv)["max_gap"].parse().unwrap();
    assert!((gap2 - gap3).abs() < 1e-3);

    let csv = ok_run(&dir, "v.csv", &["validate-adiabatic", "--g", "0"]);
    assert!(csv.floats("max_gap").iter().all(|&g| g < 1e-12));

    // Close to resonance: flagged, and the comparison fails.
    let path = out_path(&dir, "near.csv");
    let r = run(&[
        "validate-adiabatic", "--omega_atom", "10.3", "--g", "0.3", "--gamma", "0", "--t", "0:200:101",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 2, "{}", r.stderr);
    assert!(r.stderr.contains("warning"));
    let csv = Csv::read(&path);
    assert!(csv.comments.iter().any(|c| c.starts_with("warning")));
    assert_eq!(summary_values(&csv)["result"], "FAIL");
}
