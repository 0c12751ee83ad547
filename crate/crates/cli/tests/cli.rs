use std::process::{Command, Output};

fn qsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsym"))
        .args(args)
        .env_remove("QSYM_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn dual_immaculate_by_each_method() {
    for method in ["tableaux", "creation", "zabrocki"] {
        let out = qsym(&[
            "dual-immaculate",
            "[1,2]",
            "--method",
            method,
            "--basis",
            "M",
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), "M[1,2] + M[1,1,1]");
    }
    let out = qsym(&["dual-immaculate", "[2]", "--basis", "F"]);
    assert_eq!(stdout(&out), "F[2]");
}

#[test]
fn belg_of_fundamentals() {
    let out = qsym(&["op", "belg", "F[1]", "F[1]", "--basis", "F"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "F[2]");
}

#[test]
fn op_outputs() {
    assert_eq!(
        stdout(&qsym(&["op", "mul", "M[1]", "M[1]"])),
        "M[2] + 2*M[1,1]"
    );
    assert_eq!(stdout(&qsym(&["op", "prec", "M[2]", "M[1]"])), "M[2,1]");
    assert_eq!(stdout(&qsym(&["op", "tvim", "M[2]", "M[1,1]"])), "M[2,1,1]");
    assert_eq!(stdout(&qsym(&["op", "succeq", "M[1]", "1"])), "0");
}

#[test]
fn json_output_and_input() {
    let out = qsym(&["op", "mul", "M[1]", "M[1]", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["basis"], "M");
    assert_eq!(v["terms"][0]["comp"], serde_json::json!([2]));
    assert_eq!(v["terms"][1]["coeff"], "2");

    let input = r#"{"basis":"M","terms":[{"comp":[1],"coeff":"1"}]}"#;
    assert_eq!(stdout(&qsym(&["wop", "1", input])), "M[1,1]");
}

#[test]
fn convert_and_expand() {
    assert_eq!(
        stdout(&qsym(&["convert", "M[2]", "--basis", "F"])),
        "F[2] - F[1,1]"
    );
    assert_eq!(
        stdout(&qsym(&["convert", "F[2] - 2*M[1,1]"])),
        "M[2] - M[1,1]"
    );
    assert_eq!(
        stdout(&qsym(&["expand", "F[2]", "--vars", "2"])),
        "x1^2 + x1*x2 + x2^2"
    );
}

#[test]
fn word_algebra_commands() {
    assert_eq!(
        stdout(&qsym(&["wq-op", "belg", "[1]", "[1]"])),
        "M[1,1] + M[1,2]"
    );
    assert_eq!(stdout(&qsym(&["wq-op", "circ", "[1]", "[1]"])), "M[1,1]");
    assert_eq!(
        stdout(&qsym(&["fq-op", "belg", "[2,1]", "[1]"])),
        "G[2,1,3]"
    );
    assert_eq!(stdout(&qsym(&["fq-op", "succ", "[1]", "[1]"])), "G[2,1]");
    assert_eq!(stdout(&qsym(&["project", "M[2,1,3,1]"])), "M[2,1,1]");
    assert_eq!(
        qsym(&["fq-op", "prec", "[1]", "[1]"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_zabrocki_reports_compositions() {
    let out = qsym(&["verify", "zabrocki", "--max-degree", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("verified 32 compositions"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn verify_all_is_clean() {
    let out = qsym(&[
        "verify",
        "all",
        "--max-degree",
        "4",
        "--with-oracle",
        "--seed",
        "11",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().count(), 18);
}

#[test]
fn verify_json_report() {
    let out = qsym(&["verify", "omega", "--max-degree", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "omega");
    assert_eq!(v["degree"], 3);
    assert!(v["cases"].as_u64().unwrap() > 0);
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn max_degree_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qsym"))
        .args(["verify", "zabrocki"])
        .env("QSYM_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert!(
        stdout(&out).contains("verified 8 compositions"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn counterexample_exits_one_with_json() {
    let out = qsym(&["verify", "beldend", "--max-degree", "2", "--literal"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let failure = &v["failures"][0];
    assert_eq!(failure["inputs"]["a"], "M[]");
    assert_eq!(failure["expected"], "0");
    assert_eq!(failure["actual"], "M[]");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["op", "frob", "M[1]", "M[1]"][..],
        &["op", "mul", "M[0]", "M[1]"],
        &["op", "circ", "M[1]", "M[1]"],
        &["dual-immaculate", "[1,2", "--method", "tableaux"],
        &["wop", "0", "M[1]"],
        &["verify", "nonexistent"],
        &["verify"],
        &["no-such-command"],
        &["op", "mul", "M[1]", "M[1]", "--basis", "Q"],
    ] {
        let out = qsym(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
