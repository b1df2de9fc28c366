//! End-to-end checks of the compiled binary: exit codes and output
//! plumbing for the documented command surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gkm(args: &[&str], dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkm"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gkm-cli-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn fixture_hilbert_and_validate_flow() {
    let dir = tempdir("flow");
    let out = gkm(&["fixture", "sp22", "-o", "sp22.json"], &dir);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let out = gkm(
        &["hilbert", "--graph", "sp22.json", "--max-degree", "4"],
        &dir,
    );
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("degree"), "{text}");
    assert!(text
        .lines()
        .any(|l| l.trim().starts_with("4") && l.trim().ends_with("8")));

    let out = gkm(&["validate", "--graph", "sp22.json"], &dir);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("valid non-abelian graph"));

    let out = gkm(
        &[
            "hilbert",
            "--graph",
            "sp22.json",
            "--max-degree",
            "3",
            "--json",
        ],
        &dir,
    );
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("json output parses");
    assert_eq!(parsed["hilbert"], serde_json::json!([1, 2, 4, 6]));
}

#[test]
fn oracle_exit_codes() {
    let dir = tempdir("oracle");
    for (name, file) in [
        ("g2-typecc", "t.json"),
        ("g2-k6", "k.json"),
        ("g2-k6-action", "a.json"),
    ] {
        assert!(gkm(&["fixture", name, "-o", file], &dir).status.success());
    }
    let out = gkm(
        &[
            "oracle",
            "--nonabelian",
            "t.json",
            "--abelian",
            "k.json",
            "--action",
            "a.json",
            "--max-degree",
            "5",
        ],
        &dir,
    );
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("all degrees agree"));

    // Mismatched pairing: sp22 against the G2 oracle disagrees -> exit 1.
    assert!(gkm(&["fixture", "sp22", "-o", "sp22.json"], &dir)
        .status
        .success());
    let out = gkm(
        &[
            "oracle",
            "--nonabelian",
            "sp22.json",
            "--abelian",
            "k.json",
            "--action",
            "a.json",
            "--max-degree",
            "5",
        ],
        &dir,
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("DISAGREEMENT"));
}

#[test]
fn validate_rejects_broken_documents() {
    let dir = tempdir("invalid");
    let broken = r#"{
        "kind": "abelian",
        "schemaVersion": 1,
        "payload": {
            "torusRank": 2,
            "dots": ["p", "q"],
            "edges": [{"a": "p", "b": "q", "label": ["1/0", "1"]}]
        }
    }"#;
    std::fs::write(dir.join("broken.json"), broken).unwrap();
    let out = gkm(&["validate", "--graph", "broken.json"], &dir);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("zero denominator"));

    let out = gkm(&["validate", "--graph", "missing.json"], &dir);
    assert!(!out.status.success());
}

#[test]
fn export_dot_and_build_orbit() {
    let dir = tempdir("dot");
    assert!(gkm(&["fixture", "gras", "-o", "gras.json"], &dir)
        .status
        .success());
    let out = gkm(&["export-dot", "--graph", "gras.json"], &dir);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("graph \"gras\""));

    let out = gkm(
        &[
            "build-orbit",
            "--family",
            "C",
            "--rank",
            "2",
            "--weight",
            "2,1",
            "-o",
            "flag.json",
        ],
        &dir,
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = gkm(
        &[
            "hilbert",
            "--graph",
            "flag.json",
            "--max-degree",
            "3",
            "--json",
        ],
        &dir,
    );
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["hilbert"], serde_json::json!([1, 4, 9, 16]));

    let out = gkm(
        &[
            "build-orbit",
            "--family",
            "Z",
            "--rank",
            "2",
            "--weight",
            "1,1",
        ],
        &dir,
    );
    assert!(!out.status.success());
}

#[test]
fn group_order_cap_is_respected() {
    let dir = tempdir("cap");
    assert!(gkm(&["fixture", "g2-k6-action", "-o", "a.json"], &dir)
        .status
        .success());
    assert!(gkm(&["fixture", "g2-k6", "-o", "k.json"], &dir)
        .status
        .success());
    assert!(gkm(&["fixture", "g2-typecc", "-o", "t.json"], &dir)
        .status
        .success());
    let out = Command::new(env!("CARGO_BIN_EXE_gkm"))
        .args([
            "oracle",
            "--nonabelian",
            "t.json",
            "--abelian",
            "k.json",
            "--action",
            "a.json",
        ])
        .env("GKM_MAX_GROUP_ORDER", "2")
        .current_dir(&dir)
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
