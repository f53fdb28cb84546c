use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const CUBE: &str = "zonotope3\n1 0 0\n0 1 0\n0 0 1\n";
const SEG_E1: &str = "zonotope3\n1 0 0\n";
const SEG_E2: &str = "zonotope3\n0 1 0\n";

fn zonobez(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zonobez")).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn workdir(files: &[(&str, &str)]) -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in files {
        fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

fn standard() -> TempDir {
    workdir(&[
        ("cube", CUBE),
        ("e1", SEG_E1),
        ("e2", SEG_E2),
        ("empty", "zonotope3\n"),
        ("id", "matrix 3 3\n1 0 0\n0 1 0\n0 0 1\n"),
        ("pyramid", "polytope3\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n0 0 1\n"),
        ("extremal", "zonotope3\n0 0 1\n0 1 1\n1 0 1\n1 1 1\n"),
        ("bad", "zonotope3\n1 2\n"),
    ])
}

#[test]
fn mixedvol_values() {
    let d = standard();
    let o = zonobez(d.path(), &["mixedvol", "cube", "e1", "e2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "mixed_volume = 1/6 (~0.166666666667)\n");
    assert_eq!(stdout(&zonobez(d.path(), &["mixedvol", "cube", "cube", "cube"])), "mixed_volume = 1\n");
    assert_eq!(stdout(&zonobez(d.path(), &["mixedvol", "empty", "cube", "cube"])), "mixed_volume = 0\n");
    let f = stdout(&zonobez(d.path(), &["--mode", "float", "mixedvol", "cube", "e1", "e2"]));
    let x: f64 = f.trim().strip_prefix("mixed_volume = ").unwrap().parse().unwrap();
    assert!((x - 1.0 / 6.0).abs() < 1e-12);
}

#[test]
fn volume_dispatches_on_header() {
    let d = standard();
    assert_eq!(stdout(&zonobez(d.path(), &["volume", "pyramid"])), "volume = 1/3 (~0.333333333333)\n");
    assert_eq!(stdout(&zonobez(d.path(), &["volume", "extremal"])), "volume = 4\n");
    assert_eq!(zonobez(d.path(), &["volume", "id"]).status.code(), Some(2));
}

#[test]
fn check_targets() {
    let d = standard();
    let o = zonobez(d.path(), &["check", "bezout", "extremal", "e1", "e2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("slack = 0\n") && out.contains("ratio = 3/2 (~1.5)\n"), "{out}");

    let o = zonobez(d.path(), &["check", "lemma", "id"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("lhs = 1\nrhs = 1\n"));

    let o = zonobez(d.path(), &["check", "af-square", "cube", "e1", "e2", "cube"]);
    assert_eq!(o.status.code(), Some(0));

    fs::write(d.path().join("m6"), "matrix 3 6\n1 0 0 1 2 -1\n0 1 0 1 3 1/2\n0 0 1 1 -1 4\n").unwrap();
    let o = zonobez(d.path(), &["check", "grassmann", "m6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("relations = 30\nnonzero_residuals = 0\n") && out.contains("quad_holds = true"), "{out}");
}

#[test]
fn exit_codes() {
    let d = standard();
    let code = |args: &[&str]| zonobez(d.path(), args).status.code();
    assert_eq!(code(&["check", "lemma", "id", "--mode", "float"]), Some(2));
    assert_eq!(code(&["fuzz", "--target", "lemma", "--mode", "float"]), Some(2));
    assert_eq!(code(&["fuzz", "--target", "bezout", "--trials", "0"]), Some(2));
    assert_eq!(code(&["fuzz", "--target", "nope"]), Some(2));
    assert_eq!(code(&["mixedvol", "cube", "e1", "missing"]), Some(2));
    assert_eq!(code(&["mixedvol", "cube", "e1", "bad"]), Some(2));
    assert_eq!(code(&["check", "bezout", "cube", "e1"]), Some(2));
    assert_eq!(code(&["extremal", "--s1", "-1", "--s2", "1", "--s3", "1", "--s4", "1"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    let err = String::from_utf8(zonobez(d.path(), &["mixedvol", "cube", "e1", "bad"]).stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn fuzz_csv_is_byte_identical() {
    let d = standard();
    let args = ["fuzz", "--target", "bezout", "--trials", "200", "--seed", "42", "--output", "csv"];
    let a = zonobez(d.path(), &args);
    let b = zonobez(d.path(), &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("trial,target,m,slack_num,slack_den,ratio_num,ratio_den"));
    assert_eq!(lines.count(), 200);

    let out: PathBuf = d.path().join("fuzz.csv");
    let o = zonobez(d.path(), &["fuzz", "--target", "bezout", "--trials", "200", "--seed", "42", "--output", "csv", "--out", "fuzz.csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read(out).unwrap(), a.stdout);

    let other = zonobez(d.path(), &["fuzz", "--target", "bezout", "--trials", "200", "--seed", "43", "--output", "csv"]);
    assert_ne!(other.stdout, a.stdout);
}

#[test]
fn fuzz_text_summary() {
    let d = standard();
    let o = zonobez(d.path(), &["fuzz", "--target", "bezout", "--trials", "1000", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("failures  = 0\n"));
}

#[test]
fn extremal_reports() {
    let d = standard();
    let run = |s: [&str; 4]| {
        let o = zonobez(d.path(), &["extremal", "--s1", s[0], "--s2", s[1], "--s3", s[2], "--s4", s[3]]);
        assert_eq!(o.status.code(), Some(0));
        stdout(&o)
    };
    let out = run(["1", "1", "1", "1"]);
    assert!(out.contains("ratio = 3/2 (~1.5)\n") && out.contains("equality = true"), "{out}");
    let out = run(["1", "2", "3", "4"]);
    assert!(out.contains("ratio = 125/84") && out.contains("balanced = false") && out.contains("equality = false"), "{out}");
    let out = run(["1", "2", "2", "4"]);
    assert!(out.contains("ratio = 3/2 (~1.5)\n") && out.contains("balanced = true"), "{out}");

    let o = zonobez(
        d.path(),
        &["extremal", "--s1", "1", "--s2", "1", "--s3", "1", "--s4", "1", "--lambda", "-1/2", "--mu-prime", "3", "--output", "csv"],
    );
    let out = stdout(&o);
    assert!(out.starts_with("quantity,value\n") && out.contains("ratio,3/2\n"), "{out}");
}

#[test]
fn grassmann_sample_round_trips_through_check() {
    let d = standard();
    let o = zonobez(d.path(), &["grassmann-sample", "--seed", "9", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let matrix: String = text.lines().take(4).map(|l| format!("{l}\n")).collect();
    assert!(matrix.starts_with("matrix 3 7\n"));
    fs::write(d.path().join("m"), matrix).unwrap();
    let c = zonobez(d.path(), &["check", "grassmann", "m"]);
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).contains("relations = 105\nnonzero_residuals = 0\n"));

    let csv = stdout(&zonobez(d.path(), &["grassmann-sample", "--seed", "9", "--n", "7", "--output", "csv"]));
    assert!(csv.starts_with("i,j,k,value\n1,2,3,"));
    assert_eq!(csv.lines().count(), 1 + 35);
}

#[test]
fn report_runs() {
    let d = standard();
    let o = zonobez(d.path(), &["report", "--trials", "20", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("pyramid_lhs = 1/18") && out.contains("lemma_lhs = 16\nlemma_rhs = 16\n"), "{out}");
    assert_eq!(zonobez(d.path(), &["report", "--mode", "float"]).status.code(), Some(2));
}
