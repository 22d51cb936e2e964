use std::process::{Command, Output};

fn eulerint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerint")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn numbers_text_and_json() {
    let o = eulerint(&["numbers", "--kind", "bernoulli", "--max", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1, -1/2, 1/6, 0, -1/30\n");
    let o = eulerint(&["numbers", "--kind", "euler", "--max", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "euler");
    assert_eq!(v["values"][7], "17/8");
}

#[test]
fn integrate_shifted_and_mixed() {
    // E1(x + 1/2) = x, so the integrand is x * (x - 1/2)
    assert_eq!(stdout(&eulerint(&["integrate", "E1(x+1/2)*E1"])), "1/12\n");
    assert_eq!(stdout(&eulerint(&["integrate", "E2*E2"])), "1/30\n");
    assert_eq!(stdout(&eulerint(&["integrate", "B1*E1"])), "1/12\n");
}

#[test]
fn malformed_expression_reports_offset() {
    let o = eulerint(&["integrate", "E1*E2^"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("byte 6") && err.contains("end of input"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn audit_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = eulerint(&["audit", "--ids", "thm5,eq22", "--max", "3", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("eq22"), "{text}");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["ranges"]["m_max"], 3);
    assert_eq!(v["summary"].as_array().unwrap().len(), 2);

    let o = eulerint(&["audit", "--ids", "thm5", "--max", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 4);
}

#[test]
fn audit_errors() {
    assert_eq!(eulerint(&["audit", "--ids", "thm99"]).status.code(), Some(1));
    assert_eq!(eulerint(&["audit", "--all", "--ids", "thm1"]).status.code(), Some(1));
}
