use std::io::Write;
use std::process::{Command, Output, Stdio};

use pedestal_cli::json::{self, SeriesDoc, UniPolyDoc};
use pedestal_core::Poset;
use serde_json::{json, Value};

fn pedestal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pedestal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn pedestal_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pedestal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn poly_three_two_golden() {
    let out = pedestal(&["poly", "--shape", "3,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        concat!(
            r#"{"n":5,"truncation":null,"terms":["#,
            r#"{"indices":[0,0,0,0,0],"coeff":1},{"indices":[0,0,0,0,1],"coeff":1},"#,
            r#"{"indices":[0,0,0,1,1],"coeff":1},{"indices":[0,0,1,1,1],"coeff":1},"#,
            r#"{"indices":[0,0,1,1,2],"coeff":1}]}"#,
            "\n"
        )
    );
    let text = pedestal(&["--format", "text", "poly", "--shape", "3,2"]);
    assert_eq!(
        String::from_utf8(text.stdout).unwrap(),
        "x0^5 + x0^4*x1 + x0^3*x1^2 + x0^2*x1^3 + x0^2*x1^2*x2\n"
    );
}

#[test]
fn syt_listing_and_count() {
    assert_eq!(pedestal(&["syt", "--shape", "1", "--count"]).stdout, b"1\n");
    assert_eq!(
        pedestal(&["syt", "--shape", "3,2", "--count"]).stdout,
        b"5\n"
    );
    assert_eq!(
        stdout_json(&pedestal(&["syt", "--shape", "2,1"])),
        json!([[[1, 2], [3]], [[1, 3], [2]]])
    );
}

#[test]
fn identical_invocations_identical_bytes() {
    for args in [
        &["poly", "--shape", "3,2,1"][..],
        &["verify", "theorem", "--shape", "3,2,1"],
        &["verify", "family", "--shape", "3,2,1"],
        &["verify", "id01", "--shape", "2,2", "--all-p"],
    ] {
        let a = pedestal(args);
        let b = pedestal(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    // Thread count must not change the answer.
    let one = Command::new(env!("CARGO_BIN_EXE_pedestal"))
        .args(["verify", "theorem", "--shape", "3,2,1"])
        .env("PEDESTAL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(
        one.stdout,
        pedestal(&["verify", "theorem", "--shape", "3,2,1"]).stdout
    );
}

#[test]
fn verifiers_exit_codes() {
    for check in ["theorem", "id01", "id04", "majcomaj", "symmetry"] {
        let out = pedestal(&["verify", check, "--shape", "2,1"]);
        assert_eq!(out.status.code(), Some(0), "{check}");
        assert_eq!(stdout_json(&out)["holds"], json!(true));
    }
    // For a single row maj − l is the zero function, which is a pedestal
    // volume function: the "not in family" claim is false there.
    let out = pedestal(&["verify", "family", "--shape", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["holds"], json!(false));
    assert_eq!(report["candidates"][0]["in_family"], json!(true));
}

#[test]
fn malformed_input_exits_two() {
    for args in [
        &["poly", "--shape", "2,3"][..],
        &["poly", "--shape", "2,-1"],
        &["poly"],
        &["poly", "--shape", "2", "--poset", "x.json"],
        &["poly", "--poset", "/nonexistent.json"],
        &["pedestal", "--shape", "2,1", "--q", "[[1,2],[4]]"],
        &["verify", "id04", "--poset", "/nonexistent.json"],
        &["bogus"],
    ] {
        let out = pedestal(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_id04_needs_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chain.json");
    std::fs::write(&path, r#"{"elements":["a","b"],"covers":[["a","b"]]}"#).unwrap();
    let out = pedestal(&["verify", "id04", "--poset", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn general_poset_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("vee.json");
    std::fs::write(
        &path,
        r#"{"elements":["a","b","c"],"covers":[["a","b"],["a","c"]]}"#,
    )
    .unwrap();
    let file = path.to_str().unwrap();

    let poly = stdout_json(&pedestal(&["poly", "--poset", file]));
    assert_eq!(
        poly,
        json!({"n":3,"truncation":null,"terms":[{"indices":[0,0,0],"coeff":1},{"indices":[0,0,1],"coeff":1}]})
    );
    let ped = stdout_json(&pedestal(&[
        "pedestal",
        "--poset",
        file,
        "--q",
        r#"["a","c","b"]"#,
    ]));
    assert_eq!(ped["rpp"], json!({"values": {"a": 0, "b": 1, "c": 0}}));
    assert_eq!(ped["P"], json!(["a", "b", "c"]));
    assert_eq!(ped["disagreement"], json!(["c"]));

    for check in ["theorem", "id01"] {
        assert_eq!(
            pedestal(&["verify", check, "--poset", file]).status.code(),
            Some(0)
        );
    }
    let fwd = stdout_json(&pedestal(&[
        "bijection",
        "fwd",
        "--poset",
        file,
        "--data",
        r#"{"values":{"a":1,"b":2,"c":1}}"#,
    ]));
    assert_eq!(fwd["partition"], json!([1, 1, 1]));
    assert_eq!(
        fwd["pedestal"]["rpp"],
        json!({"values": {"a": 0, "b": 1, "c": 0}})
    );
}

#[test]
fn bijection_round_trip_through_cli() {
    let fwd = pedestal_stdin(&["bijection", "fwd", "--shape", "2,1"], "[[0,2],[1]]");
    let fwd = stdout_json(&fwd);
    let inverse_input = json!({"Q": fwd["pedestal"]["Q"], "partition": fwd["partition"]});
    let inv = pedestal(&[
        "bijection",
        "inv",
        "--shape",
        "2,1",
        "--data",
        &inverse_input.to_string(),
    ]);
    assert_eq!(stdout_json(&inv), json!([[0, 2], [1]]));

    let too_many = pedestal(&[
        "bijection",
        "inv",
        "--shape",
        "2,1",
        "--data",
        r#"{"Q":[[1,2],[3]],"partition":[1,1,1,1]}"#,
    ]);
    assert_eq!(too_many.status.code(), Some(2));
}

/// Emitted JSON parses back into values that satisfy their invariants.
#[test]
fn emitted_json_reparses() {
    let series: SeriesDoc =
        serde_json::from_slice(&pedestal(&["poly", "--shape", "3,3,1"]).stdout).unwrap();
    let h = json::series_from_doc(&series).unwrap();
    assert_eq!(json::series_to_doc(&h), series);

    let pi: UniPolyDoc =
        serde_json::from_slice(&pedestal(&["pi", "--shape", "3,3,1"]).stdout).unwrap();
    json::unipoly_from_doc(&pi).unwrap();

    let tableaux = stdout_json(&pedestal(&["syt", "--shape", "3,2,1"]));
    for t in tableaux.as_array().unwrap() {
        json::tableau_from_value(t).unwrap();
    }

    let shape = json::parse_shape("3,2").unwrap();
    let poset = Poset::young(&shape);
    let ped = stdout_json(&pedestal(&[
        "pedestal",
        "--shape",
        "3,2",
        "--q",
        "[[1,3,4],[2,5]]",
    ]));
    json::rpp_from_value(&poset, &ped["rpp"]).unwrap();
    json::extension_from_value(&poset, &ped["P"]).unwrap();
    json::extension_from_value(&poset, &ped["Q"]).unwrap();
}
