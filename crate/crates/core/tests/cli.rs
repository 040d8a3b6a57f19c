use std::process::{Command, Output};

fn qcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcalc"))
        .args(args)
        .output()
        .expect("spawn qcalc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn nf_examples() {
    let o = qcalc(&["nf", "--algebra", "hq", "a0*a1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "a1*a0 - (1/2)*i*(q - q^-1)*a2^2 - (1/2)*i*(q - q^-1)*a3^2"
    );

    let o = qcalc(&["nf", "--algebra", "hq", "--at-q", "1", "a0*a1"]);
    assert_eq!(stdout(&o), "a1*a0");

    let o = qcalc(&["nf", "--algebra", "units", "e2*e3"]);
    assert_eq!(stdout(&o), "e1");

    let o = qcalc(&["nf", "--algebra", "dga", "d(a2)^2"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn check_examples() {
    let o = qcalc(&["check", "--algebra", "hq", "N*a2", "a2*N"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "EQUAL"));

    let o = qcalc(&["check", "--algebra", "hq", "a0*a2", "a2*a0"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("DIFFERENT: "));

    let o = qcalc(&["check", "--algebra", "cm", "w2*w3", "-w3*w2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "EQUAL"));
}

#[test]
fn apply_examples() {
    let o = qcalc(&["apply", "coproduct", "a3"]);
    assert_eq!(stdout(&o), "a0 (x) a3 + a1 (x) a2 - a2 (x) a1 + a3 (x) a0");

    let o = qcalc(&["--unicode", "apply", "coproduct", "a3"]);
    assert_eq!(stdout(&o), "a0 ⊗ a3 + a1 ⊗ a2 - a2 ⊗ a1 + a3 ⊗ a0");

    let o = qcalc(&["apply", "star", "a2"]);
    assert_eq!(stdout(&o), "(1/2)*(q + q^-1)*a2 - (1/2)*i*(q - q^-1)*a3");

    let o = qcalc(&["apply", "d", "a0*a2"]);
    assert_eq!(
        stdout(&o),
        "(1/2)*(q^2 + 1)*d(a0)*a2 + (1/2)*i*(q^2 - 1)*d(a1)*a2 + q*d(a2)*a0"
    );
    let o = qcalc(&["apply", "d", "--at-q", "1", "a0*a2"]);
    assert_eq!(stdout(&o), "d(a0)*a2 + d(a2)*a0");

    let o = qcalc(&["apply", "counit", "a0"]);
    assert_eq!(stdout(&o), "1");

    let o = qcalc(&["apply", "antipode", "a0*N"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(code(&qcalc(&["nf", "--algebra", "cm", "w4"])), 2);
    assert_eq!(code(&qcalc(&["nf", "a0 a1"])), 2);
    assert_eq!(code(&qcalc(&["nf", "--algebra", "nope", "a0"])), 2);
    assert_eq!(code(&qcalc(&["frobnicate"])), 2);
    let o = qcalc(&["nf", "--algebra", "cm", "w4"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cm"));
}

#[test]
fn step_limit_is_configurable() {
    let o = Command::new(env!("CARGO_BIN_EXE_qcalc"))
        .args(["nf", "a0*a1*a2*a3"])
        .env("QCALC_STEP_LIMIT", "2")
        .output()
        .unwrap();
    assert_ne!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("step limit"));
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = qcalc(&["verify", "grassmann", "--stable", "--report", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains("finding grassmann.vs_printed.psi2*psi2"));
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);

    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["suite"], "grassmann");
    let ids: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn presentations_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cm.json");
    let o = qcalc(&["dump-presentation", "cm"]);
    assert_eq!(code(&o), 0);
    std::fs::write(&path, &o.stdout).unwrap();

    let o = qcalc(&["load-presentation", path.to_str().unwrap(), "w2*w3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("cm: 8 generators, 32 rules, 0 of 88 overlaps fail")
    );
    assert_eq!(lines.next(), Some("-w3*w2"));

    std::fs::write(&path, "{not json").unwrap();
    assert_ne!(code(&qcalc(&["load-presentation", path.to_str().unwrap()])), 0);
}
