use std::path::Path;
use std::process::{Command, Output};

use lieinv::tablefile::TableFile;
use lieinv_core::report::{Status, VerificationReport};

fn lieinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieinv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn export_g2(dir: &Path) -> TableFile {
    let path = dir.join("g2.json");
    let o = lieinv(&["export-table", "--algebra", "g2-borel", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write_table(dir: &Path, name: &str, t: &TableFile) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(t).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn g2_invariance_and_weights_pass() {
    let o = lieinv(&["verify", "--algebra", "g2-borel", "--char", "0", "--suites", "invariance,weights"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.suites.len(), 2);
    assert_eq!(r.summary.fail, 0);
    // the overlaid weight claim carries its note
    let w = r.suites.iter().find(|s| s.suite == "weights").unwrap();
    assert_eq!(w.find("g2.weight.h2.c2").unwrap().status, Status::DerivedWithNote);
}

#[test]
fn char_two_is_a_config_error() {
    let o = lieinv(&["verify", "--algebra", "f4-nil", "--char", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p=2 excluded"), "{}", stderr(&o));
}

#[test]
fn g2_excludes_three() {
    let o = lieinv(&["verify", "--algebra", "g2-nil", "--char", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p=3 excluded"));
}

#[test]
fn cn_audit_confirms_six_generators() {
    let o = lieinv(&["verify", "--algebra", "cn-borel", "--n", "2", "--char", "3", "--suites", "audit"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    let audit = &r.suites[0];
    let center = audit.find("cn.audit.center-u.generators").unwrap();
    assert_eq!(center.status, Status::Verified);
    assert!(center.anchor.contains("6 generators"), "{}", center.anchor);
    assert!(audit.claims.iter().any(|c| c.status == Status::AssertedNotVerified));
}

#[test]
fn config_errors_exit_two() {
    for args in [
        &["verify", "--algebra", "cn-borel", "--char", "0"][..],
        &["verify", "--algebra", "g2-borel", "--suites", "bogus"],
        &["verify", "--algebra", "g2-borel", "--char", "0", "--suites", "frobenius"],
        &["verify", "--algebra", "g2-borel", "--char", "9"],
        &["verify", "--algebra", "/nonexistent/table.json"],
        &["verify", "--algebra", "g2-borel", "--corrections", "/nonexistent/overlay.txt"],
        &["verify", "--algebra", "g2-borel", "--jobs", "0"],
        &["invariants", "--algebra", "g2-nil", "--oracle", "--max-degree", "0"],
    ] {
        let o = lieinv(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn malformed_overlay_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("overlay.txt");
    std::fs::write(&path, "kind = claim ; id = x ; printed = 1 ; bogus = 2\n").unwrap();
    let o = lieinv(&["verify", "--algebra", "g2-nil", "--suites", "jacobi", "--corrections", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invariants_g2_nil() {
    let o = lieinv(&["invariants", "--algebra", "g2-nil", "--char", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("c1 = x6    (degree 1)"), "{out}");
    let c2 = out.lines().find(|l| l.starts_with("c2 = ")).unwrap();
    assert_eq!(c2, "c2 = 3*x1*x6 - 3*x2*x5 + x3^2    (degree 2)");
}

#[test]
fn invariants_f4_oracle_dimensions() {
    let o = lieinv(&["invariants", "--algebra", "f4-nil", "--max-degree", "4", "--oracle", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let dims: Vec<u64> = v["oracle"].as_array().unwrap().iter().map(|d| d["dimension"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 2, 2, 4]);
}

#[test]
fn invariants_c3_degrees() {
    let o = lieinv(&["invariants", "--algebra", "cn-borel", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let inv = v["invariants"].as_array().unwrap();
    let names: Vec<&str> = inv.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let degrees: Vec<u64> = inv.iter().map(|c| c["degree"].as_u64().unwrap()).collect();
    assert_eq!(names, ["c1", "c2", "c3"]);
    assert_eq!(degrees, [1, 2, 3]);
}

#[test]
fn oracle_cap_exceeded_exits_two() {
    let o = lieinv(&["invariants", "--algebra", "f4-nil", "--max-degree", "9", "--oracle"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds configured cap"));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    let base = ["verify", "--algebra", "g2-nil", "--char", "5", "--suites", "jacobi,invariance,frobenius,pbw"];
    let o = lieinv(&[&base[..], &["--jobs", "1", "--out", a.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = lieinv(&[&base[..], &["--jobs", "4", "--out", b.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0));
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    let o = lieinv(&["report", a.to_str().unwrap(), "--format", "json", "--out", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ta, std::fs::read(&c).unwrap());
    let r: VerificationReport = serde_json::from_slice(&ta).unwrap();
    assert_eq!(r.corrections_sha256.len(), 64);
    assert_eq!(r.config["suites"], "jacobi,invariance,frobenius,pbw");
}

#[test]
fn markdown_lists_chain_cases_with_statements() {
    let o = lieinv(&["verify", "--algebra", "f4-nil", "--suites", "triangle", "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let md = stdout(&o);
    assert!(md.starts_with("# Verification report"));
    let rows = md.lines().filter(|l| l.starts_with("| f4.triangle.")).count();
    assert!(rows >= 210, "{rows} rows");
    assert!(md.contains("derived-with-note"));
}

#[test]
fn exported_table_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let t = export_g2(dir.path());
    assert_eq!(t.basis.len(), 8);
    let path = write_table(dir.path(), "copy.json", &t);
    let o = lieinv(&["verify", "--algebra", &path, "--char", "7", "--suites", "jacobi,invariance,chains,triangle"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn corrupted_table_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut t = export_g2(dir.path());
    let e = t.brackets.iter_mut().find(|b| b.lhs == "x1" && b.rhs == "x3").unwrap();
    e.value[0].0 = format!("-{}", e.value[0].0).replace("--", "");
    let path = write_table(dir.path(), "bad.json", &t);
    let o = lieinv(&["verify", "--algebra", &path, "--suites", "jacobi,invariance"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    let jac = r.suites.iter().find(|s| s.suite == "jacobi").unwrap();
    let claim = jac.find("g2.jacobi").unwrap();
    assert_eq!(claim.status, Status::Fail);
    assert!(claim.detail.as_deref().unwrap().contains("witness ("), "{claim:?}");
    // every failure carries a witness or residual
    for s in &r.suites {
        for c in s.failures() {
            assert!(c.detail.as_deref().is_some_and(|d| !d.is_empty()));
        }
    }
}

#[test]
fn malformed_tables_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ \"name\": \"x\", \"basis\": [").unwrap();
    let o = lieinv(&["verify", "--algebra", garbage.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let mut t = export_g2(dir.path());
    t.brackets[0].value[0].1 = "nowhere".to_string();
    let path = write_table(dir.path(), "label.json", &t);
    assert_eq!(lieinv(&["verify", "--algebra", &path]).status.code(), Some(2));

    let mut t = export_g2(dir.path());
    t.brackets[0].value[0].0 = "1/0".to_string();
    let path = write_table(dir.path(), "coef.json", &t);
    assert_eq!(lieinv(&["verify", "--algebra", &path]).status.code(), Some(2));
}
