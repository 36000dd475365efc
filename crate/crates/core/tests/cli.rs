use std::path::Path;
use std::process::{Command, Output};

fn sid(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sidorenko")).current_dir(dir).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

#[test]
fn emit_certify_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let entries: &[&[&str]] = &[
        &["edge"],
        &["path", "4"],
        &["star", "3"],
        &["even-cycle", "4"],
        &["reflection-tree"],
        &["tree-arrangeable"],
        &["bipartite-3side", "1", "2", "1"],
        &["hypercube", "3"],
        &["grid", "2", "3"],
        &["tight-path", "3", "4"],
        &["complete-partite", "2", "2", "2"],
    ];
    for entry in entries {
        let tag = entry.join("-");
        let complex = format!("{tag}.json");
        let mut args = vec!["--out", &complex, "catalog", "emit"];
        args.extend_from_slice(entry);
        let o = sid(d, &args);
        assert_eq!(code(&o), 0, "emit {tag}: {}", String::from_utf8_lossy(&o.stderr));
        let cert = format!("{tag}.cert.json");
        let o = sid(d, &["certify", &complex, "--out", &cert]);
        assert_eq!(code(&o), 0, "certify {tag}: {}", String::from_utf8_lossy(&o.stdout));
        let o = sid(d, &["verify-cert", &cert, "--complex", &complex]);
        assert_eq!(code(&o), 0, "verify {tag}");
        assert!(String::from_utf8_lossy(&o.stdout).contains("PASS"));
    }
}

#[test]
fn tampered_certificate_fails() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&sid(d, &["--out", "c4.json", "catalog", "emit", "c4"])), 0);
    assert_eq!(code(&sid(d, &["certify", "c4.json", "--out", "cert.json"])), 0);
    let cert = std::fs::read_to_string(d.join("cert.json")).unwrap();
    let bad = cert.replacen("\"coeff\": \"1\"", "\"coeff\": \"5\"", 1);
    assert_ne!(bad, cert);
    write(d, "bad.json", &bad);
    let o = sid(d, &["verify-cert", "bad.json", "--complex", "c4.json"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // The 3-set has no related split, so the structure is rejected on input.
    write(d, "irreducible.json", r#"{"arity": 2, "vertices": [1, 2, 3], "edges": [[1, 2, 3], [1, 2], [2, 3]]}"#);
    assert_eq!(code(&sid(d, &["certify", "irreducible.json"])), 3);
    assert_eq!(code(&sid(d, &["certify", "missing.json"])), 3);
    write(d, "garbage.json", "{");
    assert_eq!(code(&sid(d, &["certify", "garbage.json"])), 3);
    assert_eq!(code(&sid(d, &["catalog", "emit", "bipartite-4side"])), 2);
    assert_eq!(code(&sid(d, &["catalog", "emit", "no-such-thing"])), 3);

    write(d, "tri.json", r#"{"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3], [1, 3]]}"#);
    write(d, "p3.json", r#"{"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}"#);
    write(d, "k2.json", r#"{"vertices": [1, 2], "edges": [[1, 2]]}"#);
    assert_eq!(code(&sid(d, &["sidorenko", "--h", "tri.json", "--g", "p3.json"])), 1);
    assert_eq!(code(&sid(d, &["sidorenko", "--h", "p3.json", "--g", "tri.json"])), 0);
    assert_eq!(code(&sid(d, &["sidorenko", "--h", "k2.json", "--g", "tri.json"])), 0);
    assert_eq!(code(&sid(d, &["--max-state", "10", "--out", "c4.json", "catalog", "emit", "c4"])), 0);
    assert_eq!(code(&sid(d, &["--max-state", "10", "scheme", "c4.json", "--g", "p3.json"])), 2);
}

#[test]
fn seeded_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&sid(d, &["--out", "c4.json", "catalog", "emit", "c4"])), 0);
    write(d, "p3.json", r#"{"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}"#);
    let runs: Vec<Output> = (0..2)
        .map(|_| sid(d, &["--seed", "7", "scheme", "c4.json", "--g", "p3.json", "--check-witness", "--probe"]))
        .collect();
    assert_eq!(code(&runs[0]), 0);
    assert_eq!(runs[0].stdout, runs[1].stdout);
    let sweeps: Vec<Output> = (0..2)
        .map(|_| sid(d, &["--seed", "3", "sidorenko-sweep", "--h", "c4.json", "--max-g-vertices", "5", "--random", "40"]))
        .collect();
    assert_eq!(code(&sweeps[0]), 0);
    assert_eq!(sweeps[0].stdout, sweeps[1].stdout);
    let certs: Vec<Output> = (0..2).map(|_| sid(d, &["certify", "c4.json"])).collect();
    assert_eq!(certs[0].stdout, certs[1].stdout);
}
