//! Behavioral tests of the command line front end: exit codes, format
//! equivalence, environment lookup, and byte determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e6baw"))
        .args(args)
        .current_dir(workspace_root())
        .env_remove("E6BAW_DATA")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["validate"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--all"]).status.code(), Some(0));
    assert_eq!(
        run(&["report", "--eps", "+1", "--case", "q2+1"]).status.code(),
        Some(0)
    );
    // usage errors
    assert_eq!(
        run(&["scan", "--type", "X", "--n", "4", "--e", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["report", "--eps", "+1"]).status.code(), Some(2));
    // unreadable data file
    assert_eq!(
        run(&["validate", "--data", "/nonexistent/groups.txt"]).status.code(),
        Some(2)
    );
    // an inadmissible prime for the case
    assert_eq!(
        run(&["report", "--eps", "+1", "--case", "q2+eq+1", "--l", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["report", "--eps", "+1", "--case", "q2+eq+1", "--l-regime", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn scan_without_any_data_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_e6baw"))
        .args(["scan", "--type", "D", "--n", "4", "--twist", "+", "--e", "2"])
        .current_dir(dir.path())
        .env_remove("E6BAW_DATA")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[1,3|0,2]"), "{text}");
    assert!(text.contains("1/2*q^3*PHI(2)^4*PHI(6)^1"), "{text}");
    assert!(text.contains("hits = 1"), "{text}");
}

#[test]
fn report_without_degree_dataset_degrades_with_a_clear_error() {
    let dir = tempfile::tempdir().unwrap();
    let groups = std::fs::read_to_string(workspace_root().join("data/groups.txt")).unwrap();
    let data = dir.path().join("groups.txt");
    std::fs::write(&data, groups).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_e6baw"))
        .args(["report", "--eps", "+1", "--case", "q-e"])
        .arg("--data")
        .arg(&data)
        .env_remove("E6BAW_DATA")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("dataset required"), "{err}");
    // validate still works on the group data alone
    let out = Command::new(env!("CARGO_BIN_EXE_e6baw"))
        .args(["validate"])
        .arg("--data")
        .arg(&data)
        .env_remove("E6BAW_DATA")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn tampered_defect_zero_entry_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let root = workspace_root();
    let groups = std::fs::read_to_string(root.join("data/groups.txt")).unwrap();
    assert!(groups.contains("dz[5] = 15"));
    let tampered = groups.replace("dz[5] = 15", "dz[5] = 14");
    std::fs::write(dir.path().join("groups.txt"), tampered).unwrap();
    std::fs::copy(
        root.join("data/e6_degrees.txt"),
        dir.path().join("e6_degrees.txt"),
    )
    .unwrap();
    let data = dir.path().join("groups.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_e6baw"))
        .args(["verify", "--eps", "+1", "--case", "q-e", "--l", "5"])
        .arg("--data")
        .arg(&data)
        .env_remove("E6BAW_DATA")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL"));
    // the generic regime never reads that entry
    let out = Command::new(env!("CARGO_BIN_EXE_e6baw"))
        .args(["verify", "--eps", "+1", "--case", "q-e", "--l-regime", "ge7"])
        .arg("--data")
        .arg(&data)
        .env_remove("E6BAW_DATA")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn data_file_found_through_environment() {
    let dir = tempfile::tempdir().unwrap();
    let root = workspace_root();
    std::fs::copy(root.join("data/groups.txt"), dir.path().join("groups.txt")).unwrap();
    std::fs::copy(
        root.join("data/e6_degrees.txt"),
        dir.path().join("e6_degrees.txt"),
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_e6baw"))
        .args(["verify", "--all"])
        .current_dir(dir.path())
        .env("E6BAW_DATA", dir.path().join("groups.txt"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    // without the variable the default relative path is missing here
    let out = Command::new(env!("CARGO_BIN_EXE_e6baw"))
        .args(["verify", "--all"])
        .current_dir(dir.path())
        .env_remove("E6BAW_DATA")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jsonl_and_table_formats_carry_the_same_rows() {
    let table = run(&["report", "--eps", "+1", "--case", "q2+1"]);
    let jsonl = run(&["report", "--eps", "+1", "--case", "q2+1", "--format", "jsonl"]);
    assert_eq!(table.status.code(), Some(0));
    assert_eq!(jsonl.status.code(), Some(0));

    let mut block_rows = Vec::new();
    let mut weight_rows = Vec::new();
    let mut verified = None;
    for line in stdout(&jsonl).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        match v["kind"].as_str().unwrap() {
            "block" => block_rows.push((
                v["block"].as_str().unwrap().to_string(),
                v["chars"].as_u64().unwrap(),
            )),
            "weight" => weight_rows.push((
                v["block"].clone(),
                v["weights"].as_u64().unwrap(),
            )),
            "weight_summary" => verified = v["verified"].as_bool(),
            other => panic!("unexpected kind {other}"),
        }
    }
    assert_eq!(verified, Some(true));
    assert_eq!(block_rows.iter().filter(|(b, _)| b == "B1").count(), 1);
    let positive: Vec<u64> = block_rows
        .iter()
        .filter(|(b, _)| b.starts_with('B'))
        .map(|(_, c)| *c)
        .collect();
    assert_eq!(positive, [16, 4]);
    assert_eq!(block_rows.iter().filter(|(b, _)| b.starts_with("dz")).count(), 10);
    let weight_total: u64 = weight_rows.iter().map(|(_, w)| w).sum();
    assert_eq!(weight_total, 20);

    // the table carries the same numbers
    let text = stdout(&table);
    assert!(text.contains("B1     (T3,1)          16"), "{text}");
    assert!(text.contains("B2     (L4,zeta)       4 "), "{text}");
    assert!(text.contains("total B1 = 16"), "{text}");
    assert!(text.contains("total B2 = 4"), "{text}");
    assert!(text.contains("verified = yes"), "{text}");
    // one principal marker, ten defect-zero markers, one verified line
    assert_eq!(text.matches("yes").count(), 12, "{text}");
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["report", "--eps", "-1", "--case", "q-e", "--l", "5"],
        vec!["report", "--eps", "+1", "--case", "q2+1", "--format", "jsonl"],
        vec!["verify", "--all", "--format", "jsonl"],
        vec!["validate"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), b.status.code());
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
    }
}
