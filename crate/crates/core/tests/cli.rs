use std::process::Command;

use univoque::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["univoque"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn alpha_digits_of_periodic_spec() {
    let (code, out, _) = call(&["alpha", "alpha:(1100)", "--digits", "8"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "11001100");
}

#[test]
fn solve_finds_smallest_b2_base() {
    let (code, out, _) =
        call(&["--format", "json", "solve", "--c", "00(10)", "--d", "0000(10)", "--lo", "17/10", "--hi", "9/5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["minpoly"], serde_json::json!([-1, -1, -2, 0, 1]));
    assert!(v["root"].as_str().unwrap().starts_with("1.71064"));
    assert_eq!(v["admissible"], true);
}

#[test]
fn enum_b2_csv_rows() {
    let (code, out, err) = call(&["--format", "csv", "enum-b2", "--n", "1", "--jmax", "6"]);
    assert_eq!(code, 0);
    assert!(err.contains("j <= 6"));
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(
        rdr.headers().unwrap().iter().collect::<Vec<_>>(),
        ["n", "root_approx", "minpoly", "c", "d", "derived_order", "admissible"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    let root = |r: &csv::StringRecord| r[1].parse::<f64>().unwrap();
    assert!((root(rows.first().unwrap()) - 1.71064).abs() < 1e-5);
    assert!((root(rows.last().unwrap()) - 1.75488).abs() < 1e-5);
    assert!(!out.contains('\r'));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["--format", "csv", "enum-b2", "--n", "2", "--jmax", "3"][..],
        &["--format", "json", "ladder", "--gen", "0", "-N", "4"][..],
        &["--format", "json", "entropy", "alpha:(1110)"][..],
    ] {
        let a = call(args);
        let b = call(args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["omega", "--gen", "01", "--n", "2"]).0, 2);
    assert_eq!(call(&["dim-bound", "alpha:(1100)", "--delta", "1/2"]).0, 2);
    assert_eq!(call(&["--jmax", "1", "--nmax", "2", "derived", "--min", "4"]).0, 3);
    assert_eq!(call(&["bogus"]).0, 64);
    assert_eq!(call(&["classify", "1.5"]).0, 64);
    assert_eq!(call(&["--precision", "4", "alpha", "alpha:(10)"]).0, 64);
    let (code, out, err) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage") && err.is_empty());
}

#[test]
fn binary_reports_exit_status() {
    let bin = env!("CARGO_BIN_EXE_univoque");
    let ok = Command::new(bin).args(["omega", "--gen", "0", "--n", "4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap().trim(), "1101001100101101");
    let bad = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(64));
}
