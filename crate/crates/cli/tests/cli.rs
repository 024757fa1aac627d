//! End-to-end CLI tests: exit codes, report content, format round trips
//! and byte determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_thinq")
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn thinq")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "thinq {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("thinq-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    for grp in ["trivial.grp", "c2.grp"] {
        std::fs::copy(data(grp), dir.join(grp)).unwrap();
    }
    dir
}

#[test]
fn verify_all_formats() {
    for f in ["trivial.grp", "c2.grp", "x4.gset", "split4.cov", "split4.ocov"] {
        let out = stdout(&["verify", &data(f)]);
        assert!(out.ends_with("ok\n"), "{f}: {out}");
    }
}

#[test]
fn clifford_lists_16_sections() {
    let out = stdout(&["clifford", &data("split4.cov")]);
    assert!(out.contains("sections: 16"));
    assert!(out.contains("class sizes: 8 8"));
    assert_eq!(out.matches("section ").count(), 16);
}

#[test]
fn discriminant_of_swap_is_not_orientable() {
    let out = stdout(&["discriminant", &data("swap.cov")]);
    assert!(out.contains("orientable: false"));
    let out = stdout(&["discriminant", &data("reg2.cov")]);
    assert!(out.contains("orientable: true"));
}

#[test]
fn triality_split_orbit_length_1() {
    let out = stdout(&["triality", &data("split4.ocov"), "--steps", "3"]);
    assert!(out.contains("# orbit length 1"));
    assert!(out.contains("# step 3 isomorphic to step 0"));
}

#[test]
fn classify_c2_size_4() {
    let out = stdout(&["classify", "--group", &data("c2.grp"), "--size", "4"]);
    assert!(out.contains("# classes: 3"));
}

#[test]
fn exit_codes() {
    // parse error -> 1
    assert_eq!(run(&["verify", &data("broken.grp")]).status.code(), Some(1));
    // missing file -> 1
    assert_eq!(run(&["verify", "no-such-file.grp"]).status.code(), Some(1));
    // unknown subcommand -> 1
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    // verification failure -> 2
    assert_eq!(run(&["orient", &data("swap.cov")]).status.code(), Some(2));
    // mismatched extensions for iso -> 1
    assert_eq!(
        run(&["iso", &data("x4.gset"), &data("split4.cov")]).status.code(),
        Some(1)
    );
    // --help is not an error
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn orient_output_reparses() {
    let dir = tmpdir("orient");
    let out = stdout(&["orient", &data("reg2.cov"), "--label", "2"]);
    assert!(out.contains("orient 2"));
    let path = dir.join("out.ocov");
    std::fs::write(&path, &out).unwrap();
    let check = stdout(&["verify", path.to_str().unwrap()]);
    assert!(check.ends_with("ok\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gr1_c1_round_trip_via_files() {
    let dir = tmpdir("gr1");
    let ocov = dir.join("z.ocov");
    std::fs::copy(data("x4.gset"), dir.join("x4.gset")).unwrap();
    std::fs::write(&ocov, stdout(&["gr1", dir.join("x4.gset").to_str().unwrap()])).unwrap();
    let check = stdout(&["verify", ocov.to_str().unwrap()]);
    assert!(check.contains("base size: 3"));
    let gset = dir.join("back.gset");
    std::fs::write(&gset, stdout(&["c1", ocov.to_str().unwrap()])).unwrap();
    let iso = stdout(&["iso", gset.to_str().unwrap(), dir.join("x4.gset").to_str().unwrap()]);
    assert!(iso.contains("isomorphic: true"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_byte_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["clifford".into(), data("split4.cov")],
        vec!["clifford".into(), "--json".into(), data("split4.cov")],
        vec!["triality".into(), data("split4.ocov")],
        vec![
            "classify".into(),
            "--group".into(),
            data("c2.grp"),
            "--size".into(),
            "2".into(),
            "--kind".into(),
            "coverings".into(),
        ],
        vec!["algebra".into(), "--json".into(), data("reg3.cov")],
    ];
    for args in &cases {
        let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let a = run(&refs);
        let b = run(&refs);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn json_report_has_schema_and_digest() {
    let out = stdout(&["verify", "--json", &data("split4.cov")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}
