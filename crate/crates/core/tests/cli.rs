use std::process::{Command, Output};

use biquadrate::cli::{Report, Status};
use biquadrate::exact::{fourth_root, isqrt, parse_integer, Integer};
use serde_json::Value;

fn biquadrate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biquadrate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> (i32, Report) {
    let out = biquadrate(args);
    let report = serde_json::from_slice(&out.stdout).expect("valid JSON report");
    (out.status.code().unwrap(), report)
}

fn field<'a>(v: &'a Value, key: &str) -> &'a str {
    v[key]
        .as_str()
        .unwrap_or_else(|| panic!("{key} is not a string in {v}"))
}

#[test]
fn flagship_solution_as_json() {
    let (code, report) = json_report(&[
        "solutions",
        "--steps",
        "2",
        "--positive-only",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report.status, Status::Ok);
    assert_eq!(report.error_message, None);
    assert_eq!(report.inputs["steps"], "2");
    let sols = report.results.as_array().unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(field(&sols[0], "X"), "4565486027761");
    assert_eq!(field(&sols[0], "Y"), "1061652293520");
    assert_eq!(field(&sols[0], "a"), "2372159");
    assert_eq!(field(&sols[0], "b"), "2165017");
}

#[test]
fn emitted_solutions_reverify_after_round_trip() {
    let (_, report) = json_report(&["solutions", "--steps", "6", "--format", "json"]);
    let sols = report.results.as_array().unwrap();
    assert_eq!(sols.len(), 7);
    for sol in sols {
        let num = |k: &str| parse_integer(field(sol, k)).unwrap();
        let (x, y, a, b) = (num("X"), num("Y"), num("a"), num("b"));
        assert_eq!(isqrt(&(&x + &y)).unwrap(), (a, true));
        assert_eq!(fourth_root(&(&x * &x + &y * &y)).unwrap(), (b, true));
    }
}

#[test]
fn verify_degenerate_zero_member() {
    let (code, report) = json_report(&["verify", "--x", "4", "--y", "0", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(field(&report.results, "a"), "2");
    assert_eq!(field(&report.results, "b"), "2");
}

#[test]
fn verify_non_solution_exits_two() {
    let out = biquadrate(&["verify", "--x", "1", "--y", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("status = error"), "{stdout}");
    assert!(stdout.contains("sum 2 is not a perfect square"), "{stdout}");
}

#[test]
fn usage_errors_exit_one() {
    let out = biquadrate(&["verify", "--x", "3/2", "--y", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("--x"), "{stderr}");

    let out = biquadrate(&["chain", "--steps", "many"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--steps"));
}

#[test]
fn chain_text_format() {
    let out = biquadrate(&["chain", "--steps", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("command = chain"));
    assert!(text.contains("results.1.u = -13"));
    assert!(text.contains("results.2.t = -113/84"));
    assert!(text.contains("results.2.residual = 0"));
    assert!(text.lines().all(|l| l.contains(" = ")));
}

/// Every scalar in the JSON report appears verbatim as a `path = value` line.
fn assert_same_content(args: &[&str]) {
    let json_args: Vec<&str> = args.iter().copied().chain(["--format", "json"]).collect();
    let text_args: Vec<&str> = args.iter().copied().chain(["--format", "text"]).collect();
    let json: Value = serde_json::from_slice(&biquadrate(&json_args).stdout).unwrap();
    let text = String::from_utf8(biquadrate(&text_args).stdout).unwrap();

    let mut expected = Vec::new();
    collect("", &json, &mut expected);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), expected.len());
    for line in expected {
        assert!(
            lines.contains(&line.as_str()),
            "missing {line:?} in text output"
        );
    }
}

fn collect(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: String| {
        if prefix.is_empty() {
            k
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            m.iter().for_each(|(k, v)| collect(&key(k.clone()), v, out))
        }
        Value::Array(a) if !a.is_empty() => a
            .iter()
            .enumerate()
            .for_each(|(i, v)| collect(&key(i.to_string()), v, out)),
        Value::Object(_) => out.push(format!("{prefix} = {{}}")),
        Value::Array(_) => out.push(format!("{prefix} = []")),
        Value::String(s) => out.push(format!("{prefix} = {s}")),
        other => out.push(format!("{prefix} = {other}")),
    }
}

#[test]
fn text_and_json_carry_identical_numbers() {
    assert_same_content(&["chain", "--steps", "5"]);
    assert_same_content(&["solutions", "--steps", "4"]);
    assert_same_content(&["audit"]);
    assert_same_content(&["verify", "--x", "-119", "--y", "120"]);
    assert_same_content(&["brute", "--max-b", "20"]);
}

#[test]
fn audit_json() {
    let (code, report) = json_report(&["audit", "--format", "json"]);
    assert_eq!(code, 0);
    let findings = report.results.as_array().unwrap();
    assert_eq!(findings.len(), 5);
    let count = |v: &str| findings.iter().filter(|f| f["verdict"] == v).count();
    assert_eq!(
        (count("match"), count("mismatch"), count("suspected_typo")),
        (2, 2, 1)
    );
    let u_finding = findings
        .iter()
        .find(|f| f["printed_value"] == "301993/1343")
        .unwrap();
    assert_eq!(field(u_finding, "recomputed_value"), "-1525/1343");
}

#[test]
fn brute_defaults_and_schema() {
    let (code, report) = json_report(&["brute", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(report.inputs["max_b"], "100");
    assert_eq!(report.results, Value::Array(vec![]));

    let raw: Value =
        serde_json::from_slice(&biquadrate(&["brute", "--max-b", "5", "--format", "json"]).stdout)
            .unwrap();
    let keys: Vec<&str> = raw
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    for key in ["command", "inputs", "results", "status", "error_message"] {
        assert!(keys.contains(&key), "missing {key}");
    }
    assert!(raw["error_message"].is_null());
}

#[test]
fn default_chain_depth_is_four() {
    let (_, report) = json_report(&["chain", "--format", "json"]);
    assert_eq!(report.inputs["steps"], "4");
    assert_eq!(report.results.as_array().unwrap().len(), 5);
    let last = &report.results[4];
    assert_eq!(field(last, "t"), "57123/6214");
    assert_eq!(last["on_curve"], Value::Bool(true));
    let _: Integer = parse_integer(field(last, "index")).unwrap();
}
