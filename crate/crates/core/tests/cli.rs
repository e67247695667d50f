use std::process::Command;

fn chromlab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_chromlab")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn compute_path_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p8.txt");
    let text: String = std::iter::once("8\n".to_string()).chain((0..7).map(|i| format!("{i} {}\n", i + 1))).collect();
    std::fs::write(&file, text).unwrap();
    let (code, out) = chromlab(&["compute", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["chi_lin"], 4);
    assert_eq!(v["chi_cen"], 4);
    for key in ["order", "edges", "witness_lin", "witness_cen", "forest", "millis"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_linear_but_not_centered() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let c = dir.path().join("c.json");
    std::fs::write(&g, "6\n0 1\n1 2\n2 3\n3 0\n0 4\n2 5\n").unwrap();
    std::fs::write(&c, "[1, 2, 3, 2, 3, 1]").unwrap();
    let (g, c) = (g.to_str().unwrap(), c.to_str().unwrap());
    assert_eq!(chromlab(&["verify", "--coloring", c, "--kind", "linear", g]).0, 0);
    let (code, out) = chromlab(&["--json", "verify", "--coloring", c, "--kind", "centered", g]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["accepted"], false);
    assert_eq!(v["violation"]["witness"], serde_json::json!([0, 1, 2, 3, 4, 5]));
}

#[test]
fn scans_and_usage_errors() {
    assert_eq!(chromlab(&["scan", "caterpillars", "--nmax", "9"]).0, 0);
    assert_eq!(chromlab(&["scan", "conjecture", "--nmax", "5", "--random", "20", "--seed", "3"]).0, 0);
    assert_eq!(chromlab(&["compute", "/nonexistent/file"]).0, 2);
    assert_eq!(chromlab(&["scan", "classes", "--nmax", "9"]).0, 2);
}

#[test]
fn obstruction_database_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("obs.g6");
    let db = db.to_str().unwrap();
    assert_eq!(chromlab(&["obstructions", "--k", "3", "--nmax", "6", "--db", db]).0, 0);
    let (code, out) = chromlab(&["--json", "obstructions", "--k", "3", "--nmax", "7", "--db", db, "--check"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n_max_searched"], 7);
    assert_eq!(v["count"], 11);
    assert_eq!(v["antichain"], true);
    assert_eq!(chromlab(&["characterize", "--db", db]).0, 0);
    assert_eq!(chromlab(&["obstructions", "--k", "2", "--db", db]).0, 2);
}

#[test]
fn gen_and_color() {
    assert_eq!(chromlab(&["gen", "corook", "3", "3"]).1.lines().count(), 1);
    let (code, out) = chromlab(&["--json", "color", "grid", "16"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verified"], true);
    assert!(v["palette_size"].as_u64().unwrap() <= 64);
}
