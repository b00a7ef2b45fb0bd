use std::io::Write;
use std::process::{Command, Output, Stdio};

fn amoeba(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_amoeba"))
        .args(args)
        .env_remove("AMOEBA_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or_default())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn path4_pipeline() {
    let g = amoeba(&["family", "path", "4"], None);
    assert!(g.status.success());
    let r = amoeba(&["--format", "json", "classify", "-"], Some(&g.stdout));
    assert!(r.status.success());
    let v = json(&r);
    assert_eq!(v["local_amoeba"], true);
    assert_eq!(v["fer_order"], "24");
}

#[test]
fn counterexample_pipeline() {
    let g = amoeba(&["example", "counterexample_GH_labeled"], None);
    let r = amoeba(&["--format", "json", "classify", "-"], Some(&g.stdout));
    let v = json(&r);
    assert_eq!(v["local_amoeba"], false);
    assert_eq!(v["fer_order"], "82944");
}

#[test]
fn missing_file_is_usage_error() {
    let r = amoeba(&["classify", "/nonexistent/graph.json"], None);
    assert_eq!(r.status.code(), Some(2));
    assert_eq!(amoeba(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn malformed_json_names_the_path() {
    let r = amoeba(
        &["classify", "-"],
        Some(br#"{"labels":["1","2"],"edges":[["1","7"]]}"#),
    );
    assert_eq!(r.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&r.stderr).contains("edges[0][1]"));
}

#[test]
fn size_guard() {
    assert_eq!(
        amoeba(&["family", "path", "31"], None).status.code(),
        Some(3)
    );
    assert!(amoeba(&["--max-n", "40", "family", "path", "31"], None)
        .status
        .success());
    let p7 = amoeba(&["family", "path", "7"], None);
    assert_eq!(
        amoeba(&["oracle", "-"], Some(&p7.stdout)).status.code(),
        Some(3)
    );
}

#[test]
fn written_graphs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = |f: &str| dir.path().join(f).to_string_lossy().into_owned();
    assert!(
        amoeba(&["family", "path", "3", "--out", &p("g.json")], None)
            .status
            .success()
    );
    assert!(
        amoeba(&["example", "counterexample_H", "-o", &p("h.json")], None)
            .status
            .success()
    );
    assert!(amoeba(
        &["comb", &p("g.json"), &p("h.json"), "-o", &p("gh.json")],
        None
    )
    .status
    .success());
    let written = std::fs::read_to_string(p("gh.json")).unwrap();
    let g = amoeba::lgraph::LabeledGraph::from_json_str(&written).unwrap();
    assert_eq!(format!("{}\n", g.to_json_string()), written);
    assert_eq!(g.len(), 12);
    let r = amoeba(&["--format", "json", "classify", &p("gh.json")], None);
    assert_eq!(json(&r)["fer_order"], "82944");
}

#[test]
fn fer_and_orbits() {
    let g = amoeba(&["example", "hang_symm_8"], None);
    let v = json(&amoeba(
        &["--format", "json", "fer", "-", "--hang", "1"],
        Some(&g.stdout),
    ));
    assert_eq!(v["order"], "40320");
    let v = json(&amoeba(
        &["--format", "json", "orbits", "-", "--fixed", "1"],
        Some(&g.stdout),
    ));
    assert!(v["orbits"].as_array().unwrap().len() > 1);
}

#[test]
fn checks_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let p = |f: &str| dir.path().join(f).to_string_lossy().into_owned();
    amoeba(&["family", "path", "2", "-o", &p("p2.json")], None);
    amoeba(&["family", "b_family", "2", "-o", &p("b2.json")], None);
    let r = amoeba(
        &[
            "--format",
            "json",
            "check",
            "bigcor",
            &p("p2.json"),
            &p("b2.json"),
        ],
        None,
    );
    assert!(r.status.success());
    assert_eq!(json(&r)["verdict"], "full-symmetric");
    let r = amoeba(&["check", "wreath", &p("p2.json"), &p("p2.json")], None);
    assert!(r.status.success());
    let r = amoeba(&["--format", "json", "oracle", &p("p2.json")], None);
    assert!(r.status.success());
    assert_eq!(json(&r)["agrees"], true);
    let r = amoeba(&["family", "cube", "1", "--dot"], None);
    assert!(String::from_utf8_lossy(&r.stdout).starts_with("graph"));
}
