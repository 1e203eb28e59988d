use std::process::{Command, Output};

use serde_json::Value;

fn qfact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfact"))
        .args(args)
        .output()
        .expect("spawn qfact")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn exit_codes_follow_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let quartic = write(
        &dir,
        "q.json",
        r#"{"vertices":[[0,0,0],[4,0,0],[0,4,0],[0,0,4]]}"#,
    );
    let cubic = write(
        &dir,
        "c.json",
        r#"{"vertices":[[0,0,0],[3,0,0],[0,3,0],[0,0,3]]}"#,
    );
    let oct = write(
        &dir,
        "o.json",
        r#"{"vertices":[[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]}"#,
    );
    for (file, code, verdict) in [
        (&quartic, 0, "CERTIFIED_Q_FACTORIAL"),
        (&cubic, 2, "INCONCLUSIVE"),
        (&oct, 3, "UNSUPPORTED"),
    ] {
        let out = qfact(&["check", "--polytope", file]);
        assert_eq!(out.status.code(), Some(code));
        assert_eq!(json(&out)["verdict"], verdict);
    }
    let out = qfact(&["check", "--poly-str", "1 + x^"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "ERROR");
}

#[test]
fn polynomial_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let text = write(&dir, "f.txt", "1 + x^4 + y^4 + z^4\n");
    let out = qfact(&["check", "--poly", &text, "--use-input-coeffs"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["sample"]["input_coefficients"], true);
    assert_eq!(v["sample"]["coefficients"].as_array().unwrap().len(), 4);

    let poly_json = write(
        &dir,
        "f.json",
        r#"{"variables":["x","y","z"],"terms":[
            {"exponents":[0,0,0],"coefficient":"1"},
            {"exponents":[4,0,0],"coefficient":"2/3"},
            {"exponents":[0,4,0],"coefficient":"-1"},
            {"exponents":[0,0,4],"coefficient":"5"}]}"#,
    );
    let out = qfact(&["check", "--poly", &poly_json, "--use-input-coeffs"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let term = v["sample"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["exponents"] == serde_json::json!([4, 0, 0]))
        .unwrap();
    assert_eq!(term["coefficient"], "2/3");

    let four = write(
        &dir,
        "g.json",
        r#"{"variables":["x","y","z","w"],"terms":[{"exponents":[1,0,0,0],"coefficient":"1"}]}"#,
    );
    let out = qfact(&["check", "--poly", &four]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert!(v["reason"]
        .as_str()
        .unwrap()
        .contains("factorial by Dolgachev for generic F"));

    // leading sign and negative exponents on the command line
    let out = qfact(&["check", "--poly-str", "-1 + x^4 + y^4 + z^-4"]);
    assert_ne!(
        out.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn out_file_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.txt");
    let out = qfact(&[
        "check",
        "--poly-str",
        "1 + x^4 + y^4 + z^4",
        "--format",
        "text",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&report).unwrap();
    assert!(body.starts_with("verdict: CERTIFIED_Q_FACTORIAL"));
    assert!(body.contains("picard number: 1"));
}

#[test]
fn options_are_honoured() {
    let args = [
        "check",
        "--poly-str",
        "1 + x^3 + y^3 + z^3",
        "--seed",
        "17",
        "--samples",
        "2",
        "--coeff-bound",
        "3",
    ];
    let v = json(&qfact(&args));
    assert_eq!(v["sample"]["seed"], 17);
    assert_eq!(v["sample"]["attempts_run"], 2);
    assert_eq!(v["sample"]["coeff_bound"], 3);
    for t in v["sample"]["coefficients"].as_array().unwrap() {
        let c: i64 = t["coefficient"].as_str().unwrap().parse().unwrap();
        assert!(c != 0 && c.abs() <= 3);
    }
    assert_eq!(qfact(&args).stdout, qfact(&args).stdout);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(qfact(&["check"]).status.code(), Some(1));
    assert_eq!(
        qfact(&["check", "--poly-str", "x", "--polytope", "p.json"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        qfact(&["check", "--poly-str", "x", "--samples", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(qfact(&["--help"]).status.code(), Some(0));
}

#[test]
fn unreadable_input_is_an_error_report() {
    let out = qfact(&["check", "--polytope", "/nonexistent/qfact/input.json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], "ERROR");
    assert!(v["reason"].as_str().unwrap().contains("cannot read"));
}
