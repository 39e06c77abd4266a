use std::process::{Command, Output};

fn snt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snt")).args(args).env_remove("SNT_ZEROS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table1_default_matches() {
    let o = snt(&["table1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 10);
    assert_eq!(s.matches(" match").count(), 9);
}

#[test]
fn table1_csv_parses_and_extends() {
    let o = snt(&["table1", "--format", "csv", "--n-max", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let headers = r.headers().unwrap().clone();
    assert_eq!(&headers[0], "n");
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 11);
    assert_eq!(&rows[10][5], "true");
    assert_eq!(&rows[10][6], "unchecked");
    let c2: f64 = rows[0][1].parse().unwrap();
    assert!((c2 - 0.0593564).abs() < 1e-7);
}

#[test]
fn output_is_deterministic() {
    for fmt in ["csv", "json"] {
        let a = snt(&["extremal-eval", "--m", "1", "--delta", "2", "--grid", "-3:3:0.25", "--format", fmt]);
        let b = snt(&["extremal-eval", "--m", "1", "--delta", "2", "--grid", "-3:3:0.25", "--format", fmt]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn json_rows_are_objects() {
    let o = snt(&["constants", "--n", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let row = &v.as_array().unwrap()[0];
    assert!((row["c_minus"].as_f64().unwrap() - std::f64::consts::PI / 24.0).abs() < 1e-9);
    assert!((row["c_plus"].as_f64().unwrap() - std::f64::consts::PI / 48.0).abs() < 1e-9);
}

#[test]
fn snt_single_point_has_both_methods() {
    let o = snt(&["snt", "--n", "1", "--t", "100", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 1);
    let a: f64 = rows[0][1].parse().unwrap();
    let b: f64 = rows[0][3].parse().unwrap();
    assert!((a - b).abs() <= 2.0);
}

#[test]
fn snt_grid_row_count() {
    let o = snt(&["snt", "--n", "2", "--grid", "50:500:10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 47);
}

#[test]
fn snt_refuses_an_ordinate() {
    let o = snt(&["snt", "--n", "0", "--t", "14.134725141734693"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero ordinate"));
}

#[test]
fn missing_zero_file_skips() {
    let o = snt(&["verify", "--suite", "cross-method", "--zeros", "/definitely/not/here.txt"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("SKIP") && !s.contains("FAIL"));
    let o = snt(&["verify", "--suite", "zeta", "--zeros", "/definitely/not/here.txt"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("PASS") && s.contains("SKIP"));
}

#[test]
fn verify_single_suite() {
    let o = snt(&["verify", "--suite", "constants", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.lines().skip(1).all(|l| l.starts_with("constants,")));
    assert_eq!(s.matches(",PASS,").count(), 5);
}

#[test]
fn env_var_and_config_file() {
    let dir = std::env::temp_dir().join(format!("snt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.cfg");
    std::fs::write(&cfg, "format = csv\nn = 3\n").unwrap();
    let o = snt(&["constants", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("n,c_minus"));
    assert!(s.lines().nth(1).unwrap().starts_with("3,"));
    let o = Command::new(env!("CARGO_BIN_EXE_snt"))
        .args(["verify", "--suite", "gw"])
        .env("SNT_ZEROS", dir.join("absent.txt"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SKIP"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(snt(&["snt", "--t", "10"]).status.code(), Some(2));
    assert_eq!(snt(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(snt(&["extremal-eval", "--m", "0", "--delta", "0.5", "--x", "1"]).status.code(), Some(2));
}
