//! CLI acceptance: deterministic byte-identical reports, exit codes, and the
//! documented command behaviors.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_nary")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("spawning the CLI")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nary-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_catalog(make: &str, n: usize, out: &Path, extra: &[&str]) {
    let n = n.to_string();
    let mut args = vec!["catalog", "--make", make, "--n", &n, "--out"];
    let out_s = out.to_str().unwrap();
    args.push(out_s);
    args.extend_from_slice(extra);
    let r = run(&args);
    assert!(
        r.status.success(),
        "{:?}",
        String::from_utf8_lossy(&r.stderr)
    );
}

#[test]
fn criterion_10_reports_are_byte_identical() {
    let d4 = tmp("D4.json");
    write_catalog("D", 3, &d4, &[]);
    let j1 = tmp("report1.json");
    let j2 = tmp("report2.json");
    for j in [&j1, &j2] {
        let r = run(&[
            "verify",
            "--input",
            d4.to_str().unwrap(),
            "--suite",
            "all",
            "--json",
            j.to_str().unwrap(),
        ]);
        assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    }
    let b1 = std::fs::read(&j1).unwrap();
    let b2 = std::fs::read(&j2).unwrap();
    let ok = b1 == b2;
    println!(
        "acceptance criterion 10 (deterministic reports): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok);
}

#[test]
fn catalog_round_trip_is_byte_identical() {
    let out = tmp("A3.json");
    write_catalog("A", 3, &out, &[]);
    let text = std::fs::read_to_string(&out).unwrap();
    let doc = nary_alg::io::AlgebraDocument::parse(&text).unwrap();
    doc.to_algebra().unwrap();
    assert_eq!(doc.canonical_json(), text);
}

#[test]
fn lb_with_identity_matches_d_up_to_name() {
    let id4 = tmp("id4.json");
    std::fs::write(&id4, "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]").unwrap();
    let lb = tmp("LB.json");
    let d = tmp("D4b.json");
    write_catalog("LB", 3, &lb, &["--b", id4.to_str().unwrap()]);
    write_catalog("D", 3, &d, &[]);
    let mut lb_doc =
        nary_alg::io::AlgebraDocument::parse(&std::fs::read_to_string(&lb).unwrap()).unwrap();
    let mut d_doc =
        nary_alg::io::AlgebraDocument::parse(&std::fs::read_to_string(&d).unwrap()).unwrap();
    lb_doc.name = None;
    d_doc.name = None;
    assert_eq!(lb_doc.canonical_json(), d_doc.canonical_json());
}

#[test]
fn spaces_dimensions_match_known_values() {
    let a3 = tmp("A3s.json");
    write_catalog("A", 3, &a3, &[]);
    let r = run(&["spaces", "--input", a3.to_str().unwrap(), "--class", "der"]);
    assert!(r.status.success());
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(text.contains("dim=6"), "{text}");

    let z2 = tmp("zero2.json");
    write_catalog("zero", 2, &z2, &["--dim", "2"]);
    let r = run(&["spaces", "--input", z2.to_str().unwrap(), "--class", "zder"]);
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(text.contains("dim=4"), "{text}");

    // the centroid of D4 contains the identity map
    let d4 = tmp("D4s.json");
    write_catalog("D", 3, &d4, &[]);
    let r = run(&[
        "spaces",
        "--input",
        d4.to_str().unwrap(),
        "--class",
        "centroid",
        "--degree",
        "",
    ]);
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(text.contains("dim=1"), "{text}");
    assert!(
        text.contains("[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1]"),
        "{text}"
    );
}

#[test]
fn verify_all_passes_on_a3() {
    let a3 = tmp("A3v.json");
    write_catalog("A", 3, &a3, &[]);
    let r = run(&["verify", "--input", a3.to_str().unwrap(), "--suite", "all"]);
    assert!(r.status.success());
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn verify_s4_reports_singular_lb_as_not_end() {
    let id_sing = tmp("sing.json");
    std::fs::write(&id_sing, "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,0]]").unwrap();
    let lb = tmp("LBsing.json");
    write_catalog("LB", 3, &lb, &["--b", id_sing.to_str().unwrap()]);
    let r = run(&[
        "verify",
        "--input",
        lb.to_str().unwrap(),
        "--suite",
        "s4-classification",
    ]);
    assert!(r.status.success(), "consistency checks still pass");
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(text.contains("qder_ll_end=false"), "{text}");
    assert!(text.contains("inner_equals_end=false"), "{text}");
}

#[test]
fn extend_writes_a_valid_double() {
    let a3 = tmp("A3e.json");
    write_catalog("A", 3, &a3, &[]);
    let out = tmp("A3ext.json");
    let r = run(&[
        "extend",
        "--input",
        a3.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    let doc =
        nary_alg::io::AlgebraDocument::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let alg = doc.to_algebra().unwrap();
    assert_eq!(alg.dim(), 6);
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(text.contains("[pass] s3.phi-into-der"), "{text}");
    assert!(text.contains("[pass] s3.der-decomposition"), "{text}");
}

#[test]
fn exit_codes() {
    // input error: missing file
    let r = run(&["verify", "--input", "/nonexistent.json", "--suite", "s1"]);
    assert_eq!(r.status.code(), Some(2));
    // input error: invalid document
    let bad = tmp("bad.json");
    std::fs::write(&bad, "{\"dim\": 1}").unwrap();
    let r = run(&["verify", "--input", bad.to_str().unwrap(), "--suite", "s1"]);
    assert_eq!(r.status.code(), Some(2));
    // non-prime field request
    let out = tmp("fp.json");
    let r = Command::new(bin())
        .args([
            "catalog",
            "--make",
            "A",
            "--n",
            "3",
            "--field",
            "Fp:6",
            "--out",
            out.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(r.status.code(), Some(2));
    // unknown suite
    let a3 = tmp("A3x.json");
    write_catalog("A", 3, &a3, &[]);
    let r = run(&[
        "verify",
        "--input",
        a3.to_str().unwrap(),
        "--suite",
        "bogus",
    ]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn graded_document_verifies() {
    let doc = r#"{
  "name": "super3",
  "field": {"kind": "Q"},
  "dim": 3,
  "arity": 2,
  "group": [2],
  "degrees": [[0], [1], [1]],
  "bicharacter": [["-1"]],
  "products": [{"args": [1, 2], "out": {"0": "1"}}],
  "closure": "antisymmetrize"
}"#;
    let path = tmp("super3.json");
    std::fs::write(&path, doc).unwrap();
    let r = run(&[
        "verify",
        "--input",
        path.to_str().unwrap(),
        "--suite",
        "all",
    ]);
    assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(!text.contains("FAIL"), "{text}");
    // guarded checks are reported as skips, not dropped
    assert!(text.contains("[skip] s3.der-decomposition"), "{text}");
    // odd and even derivation blocks both appear
    let r = run(&[
        "spaces",
        "--input",
        path.to_str().unwrap(),
        "--class",
        "der",
    ]);
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(text.contains("degree=[0] dim=2"), "{text}");
    assert!(text.contains("degree=[1] dim=2"), "{text}");
}

#[test]
fn prime_field_catalog_works() {
    let out = tmp("A3f7.json");
    let r = Command::new(bin())
        .args([
            "catalog",
            "--make",
            "A",
            "--n",
            "3",
            "--field",
            "Fp:7",
            "--out",
            out.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(r.status.success());
    let doc =
        nary_alg::io::AlgebraDocument::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let alg = doc.to_algebra().unwrap();
    assert_eq!(alg.field(), nary_alg::Field::Fp { p: 7 });
    // operator spaces still solve over the prime field
    let r = run(&["spaces", "--input", out.to_str().unwrap(), "--class", "end"]);
    let text = String::from_utf8(r.stdout).unwrap();
    assert!(text.contains("dim=9"), "{text}");
}
