use std::path::PathBuf;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("verify runs")
}

fn compute(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compute"))
        .args(args)
        .output()
        .expect("compute runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_shows_every_check() {
    let o = verify(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in [
        "cong-1.1",
        "cor-1.5",
        "thm1.4-hecke-1.9",
        "oracle-partitions",
    ] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
    assert!(text.contains("Theorem 1.1"));
}

#[test]
fn json_report_passes() {
    let o = verify(&[
        "run",
        "--check",
        "thm1.4-pbar",
        "--check",
        "thm1.1-ped",
        "--n-max",
        "200",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    // sorted by name
    assert!(lines[0].starts_with(r#"{"name":"thm1.1-ped","paper_ref":"Theorem 1.1","n_max":200,"params":[],"tested":201,"skipped":0,"passed":true"#));
    assert!(lines[1].starts_with(r#"{"name":"thm1.4-pbar""#));
    assert!(text.ends_with('\n'));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "run",
        "--check",
        "cor-1.3",
        "--check",
        "id-psi5-r5",
        "--n-max",
        "300",
        "--format",
        "json",
    ];
    assert_eq!(verify(&args).stdout, verify(&args).stdout);
}

#[test]
fn perturbation_fails_with_counterexamples() {
    let o = verify(&[
        "run",
        "--check",
        "thm1.1-pbar_o",
        "--n-max",
        "50",
        "--perturb",
        "pbar-odd:6",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains(r#""passed":false"#));
    assert!(text.contains(r#""counterexamples":[{"n":2,"params":[["route",0]],"lhs":1,"rhs":0}"#));
}

#[test]
fn perturbation_only_affects_checks_reading_it() {
    let o = verify(&[
        "run",
        "--check",
        "thm1.4-pbar",
        "--n-max",
        "50",
        "--perturb",
        "pbar-odd:6",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn even_prime_fails_corollary_1_5() {
    let o = verify(&[
        "run", "--check", "cor-1.5", "--primes", "2", "--n-max", "100",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL cor-1.5"));
}

#[test]
fn configuration_errors_exit_2() {
    let o = verify(&["run", "--check", "cong-1.3", "--n-max", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("empty effective range"));

    for args in [
        &["run", "--check", "nope"][..],
        &["run", "--check", "cor-1.3", "--primes", "13"],
        &["run", "--check", "thm1.4-hecke-1.9", "--primes", "2"],
        &["run", "--ring", "mod5"],
        &["run", "--format", "xml"],
    ] {
        assert_eq!(verify(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn csv_to_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("verify-report.csv");
    let o = verify(&[
        "run",
        "--check",
        "vanish-forms",
        "--n-max",
        "100",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("name,paper_ref,n_max,params,tested,skipped,passed,counterexamples")
    );
    assert!(lines.next().unwrap().starts_with("vanish-forms,"));
}

#[test]
fn exact_ring_runs() {
    let o = verify(&[
        "run",
        "--check",
        "thm1.1-pbar_o",
        "--check",
        "cong-1.1",
        "--ring",
        "exact",
        "--n-max",
        "60",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn compute_values() {
    let cases: &[(&[&str], &str)] = &[
        (&["pbar", "--n", "4"], "14"),
        (&["pbar-odd", "--n", "6"], "12"),
        (&["ped", "--n", "4"], "4"),
        (&["pod", "--n", "5"], "4"),
        (&["r5", "--n", "4"], "90"),
        (&["r5", "--n", "5", "--ring", "mod3"], "1"),
        (&["R", "--n", "25"], "6"),
        (&["R", "--n", "11", "--form", "2,3"], "4"),
    ];
    for (args, want) in cases {
        let o = compute(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o).trim(), *want, "{args:?}");
    }
    assert_eq!(compute(&["pbar", "--n", "2000"]).status.code(), Some(2));
    assert_eq!(compute(&["tau", "--n", "3"]).status.code(), Some(2));
}
