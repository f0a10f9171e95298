use std::process::{Command, Output};

fn hatpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hatpath"))
        .args(args)
        .env_remove("HATPATH_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hatpath(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn phi_of_worked_permutation() {
    assert_eq!(
        stdout(&["map", "--bijection", "phi", "5 4 6 2 1 3 7"]),
        "uuududduududdd"
    );
}

#[test]
fn psi_of_motzkin_word() {
    assert_eq!(
        stdout(&["map", "--bijection", "psi", "ufduududd"]),
        "8 6 5 7 9 3 2 1 4 10"
    );
}

#[test]
fn sequence_of_motzkin_class() {
    assert_eq!(
        stdout(&["sequence", "--class", "132,2^13", "--n", "8"]),
        "1 1 2 4 9 21 51 127"
    );
    let csv = stdout(&["sequence", "--class", "132", "--n", "3", "--csv"]);
    assert_eq!(csv, "n,count\n1,1\n2,2\n3,5");
}

#[test]
fn map_then_invert_is_identity() {
    let cases = [
        ("phi", "5 4 6 2 1 3 7"),
        ("theta", "4 5 2 3 6 1"),
        ("ss", "7 5 6 1 2 3 4"),
    ];
    for (b, input) in cases {
        let image = stdout(&["map", "--bijection", b, input]);
        assert_eq!(stdout(&["invert", "--bijection", b, &image]), input, "{b}");
    }
    let perm = stdout(&["map", "--bijection", "psi", "uffdud"]);
    assert_eq!(stdout(&["invert", "--bijection", "psi", &perm]), "uffdud");
}

#[test]
fn theta_inverse_accepts_plain_word() {
    assert_eq!(
        stdout(&["invert", "--bijection", "theta", "uuudduudddud"]),
        "5 3 2 4 1 6"
    );
}

#[test]
fn domain_errors_exit_one() {
    let out = hatpath(&["map", "--bijection", "phi", "1 3 2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("132"));
    assert_eq!(
        hatpath(&["invert", "--bijection", "phi", "udd"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        hatpath(&["enumerate", "--class", "1x2", "--n", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        hatpath(&["sequence", "--class", "12", "--n", "40"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        hatpath(&["map", "--bijection", "nope", "12"]).status.code(),
        Some(2)
    );
    assert_eq!(hatpath(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        hatpath(&["enumerate", "--class", "12"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_reports_and_exit_status() {
    let ok = hatpath(&["verify", "--theorem", "fac", "--n", "6"]);
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).ends_with("fac: passed\n"));
    let failing = hatpath(&["verify", "--theorem", "udu", "--n", "5"]);
    assert_eq!(failing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&failing.stdout).contains("FAIL n=5 p=5"));
}

#[test]
fn verify_size_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hatpath"))
        .args(["verify", "--theorem", "eco"])
        .env("HATPATH_MAX_N", "3")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("ok")).count(), 3);
}

#[test]
fn json_output() {
    let text = stdout(&["--json", "tree", "--depth", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let nodes = v.as_array().unwrap();
    assert_eq!(nodes.len(), 3);
    assert_eq!(nodes[0]["perm"], serde_json::json!([2, 1]));
    assert_eq!(nodes[1]["parent"], serde_json::json!(0));

    let text = stdout(&["--json", "enumerate", "--class", "^21", "--n", "3"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["count"], 3);
}

#[test]
fn tree_and_render_text() {
    let tree = stdout(&["tree", "--depth", "2"]);
    assert_eq!(
        tree,
        "21 (2) sites 1,3\n  321 (3) sites 1,3,4\n  213 (1) sites 1"
    );
    assert_eq!(
        stdout(&["render", "--alphabet", "dyck", "uudd"]),
        " /\\\n/  \\"
    );
    assert_eq!(
        hatpath(&["render", "--alphabet", "dyck", "uf"])
            .status
            .code(),
        Some(1)
    );
}
