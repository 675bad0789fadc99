use std::io::Write;
use std::process::{Command, Output};

use baskakov::cli::{EXIT_DATA, EXIT_OK, EXIT_USAGE};
use baskakov::coeffs::CoeffTable;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_baskakov"))
        .args(args)
        .env("BASKAKOV_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn coefficient_examples() {
    let o = run(&["coeffs", "--n", "10", "--family", "eta", "--r", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&o).trim(), "-(1/22)x - (1/22)x^2");

    let o = run(&["coeffs", "--n", "1", "--family", "theta", "--r", "1"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn coefficient_json_round_trips() {
    let o = run(&[
        "coeffs", "--n", "7", "--family", "theta", "--r-max", "6", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let t = CoeffTable::from_json(&stdout(&o)).unwrap();
    let direct = baskakov::coeffs::recurrence(baskakov::coeffs::Family::Theta, 7, 6).unwrap();
    assert_eq!(t.polys, direct.polys);
}

#[test]
fn verify_coefficients_exits_cleanly() {
    let o = run(&["coeffs", "--verify", "--r-max", "11"]);
    assert_eq!(o.status.code(), Some(EXIT_OK), "{}", stdout(&o));
}

#[test]
fn order_zero_at_origin_is_first_sample() {
    let o = run(&[
        "approx", "--fn", "exp-neg", "--n", "10", "--r", "0", "--at", "0",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&o).trim().parse::<f64>().unwrap(), 1.0);
}

#[test]
fn sample_file_matches_registry_function() {
    let n = 20u32;
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "k,value").unwrap();
    for k in 0..=5 * n {
        writeln!(file, "{k},{:e}", (-(k as f64) / n as f64).exp()).unwrap();
    }
    file.flush().unwrap();
    let path = file.path().to_str().unwrap();

    let from_file = run(&[
        "approx",
        "--samples",
        path,
        "--n",
        "20",
        "--r",
        "3",
        "--at",
        "1.0",
    ]);
    let from_fn = run(&[
        "approx", "--fn", "exp-neg", "--n", "20", "--r", "3", "--at", "1.0",
    ]);
    assert_eq!(from_file.status.code(), Some(EXIT_OK));
    let a: f64 = stdout(&from_file).trim().parse().unwrap();
    let b: f64 = stdout(&from_fn).trim().parse().unwrap();
    assert!((a - b).abs() < 1e-14, "{a} {b}");
    assert!((a - (-1.0f64).exp()).abs() < 1e-3);
}

#[test]
fn bad_input_exit_codes() {
    let o = run(&["approx", "--fn", "nope", "--at", "1"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));

    let o = run(&[
        "approx",
        "--fn",
        "exp-neg",
        "--samples",
        "x.csv",
        "--at",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "k,value\n0,1\n2,3\n").unwrap();
    let o = run(&[
        "approx",
        "--samples",
        file.path().to_str().unwrap(),
        "--n",
        "2",
        "--r",
        "1",
        "--at",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_DATA));

    let mut short = tempfile::NamedTempFile::new().unwrap();
    write!(short, "k,value\n0,1\n1,2\n").unwrap();
    let o = run(&[
        "approx",
        "--samples",
        short.path().to_str().unwrap(),
        "--n",
        "4",
        "--r",
        "2",
        "--at",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_DATA));
}

#[test]
fn single_norm_cell() {
    let o = run(&["norms", "--n", "32", "--r", "4"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&o).trim(), "1.79");
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = [
        "approx", "--fn", "runge", "--n", "10,20", "--r", "1,3", "--format", "csv",
    ];
    let a = run(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_baskakov"))
        .args(args)
        .env("BASKAKOV_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(EXIT_OK));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rates.csv");
    let o = run(&[
        "rates",
        "--fn",
        "exp-neg",
        "--r",
        "1",
        "--n",
        "32,64",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,scaled_error,target"));
    assert_eq!(lines.count(), 2);
}
