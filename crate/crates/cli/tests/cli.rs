use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn dextral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dextral")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn export(dir: &TempDir, id: &str, extra: &[&str]) -> PathBuf {
    let p = dir.path().join(format!("{id}.json"));
    let mut args = vec!["catalog", "export", id, "-o", p.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = dextral(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    p
}

fn report(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn check_json(dir: &TempDir, file: &Path, extra: &[&str]) -> (i32, Value) {
    let out = dir.path().join("report.json");
    let mut args = vec!["check", file.to_str().unwrap(), "--json", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = dextral(&args);
    (code(&o), report(&out))
}

fn record<'a>(r: &'a Value, id: &str) -> &'a Value {
    r["checks"].as_array().unwrap().iter().find(|c| c["id"] == id).unwrap_or_else(|| panic!("no record {id}"))
}

#[test]
fn check_reports_the_s2_witness() {
    let dir = TempDir::new().unwrap();
    let s2 = export(&dir, "S2", &[]);
    let (c, r) = check_json(&dir, &s2, &[]);
    assert_eq!(c, 0);
    let d = record(&r, "dextral");
    assert_eq!(d["status"], "pass");
    assert_eq!(d["result"]["status"], "no");
    let w = &d["result"]["witness"];
    assert_eq!(w["a"], serde_json::json!(["1", "0", "0", "0"]));
    assert_eq!(w["b"], serde_json::json!(["0", "0", "1", "0"]));
    assert_eq!(w["c"], serde_json::json!(["0", "0", "1", "0"]));
    assert_eq!(r["subject"]["dim"], 4);
    assert!(r["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert_eq!(r["tool"], "dextral");
}

#[test]
fn check_reports_r1_as_all_triples_zero() {
    let dir = TempDir::new().unwrap();
    let r1 = export(&dir, "R1", &[]);
    let (c, r) = check_json(&dir, &r1, &[]);
    assert_eq!(c, 0);
    assert_eq!(record(&r, "dextral")["result"], serde_json::json!({"status": "yes", "reason": "all-triples-zero"}));
    assert_eq!(record(&r, "predicate.right_nilpotent")["result"]["holds"], false);
    assert_eq!(record(&r, "predicate.left_nilpotent")["result"]["index"], 3);
}

#[test]
fn zero_dimensional_algebra_passes_everything() {
    let dir = TempDir::new().unwrap();
    let z = write(&dir, "z.json", r#"{"name":"zero","field":{"kind":"rational"},"basis":[],"products":[]}"#);
    let (c, r) = check_json(&dir, &z, &[]);
    assert_eq!(c, 0);
    assert_eq!(r["summary"]["fail"], 0);
    assert_eq!(r["summary"]["unknown"], 0);
    for rec in r["checks"].as_array().unwrap() {
        assert_eq!(rec["status"], "pass");
        if rec["id"].as_str().unwrap().starts_with("identity.") {
            assert_eq!(rec["result"]["holds"], true);
        }
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let a = export(&dir, "N20", &["--param", "alpha=1/2"]);
    let out1 = dir.path().join("1.json");
    let out2 = dir.path().join("2.json");
    dextral(&["check", a.to_str().unwrap(), "--json", out1.to_str().unwrap()]);
    dextral(&["check", a.to_str().unwrap(), "--json", out2.to_str().unwrap()]);
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());
    dextral(&["verify", "--only", "13", "--json", out1.to_str().unwrap()]);
    dextral(&["verify", "--only", "13", "--json", out2.to_str().unwrap()]);
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());
}

#[test]
fn field_flag_reinterprets_or_rejects() {
    let dir = TempDir::new().unwrap();
    let s2 = export(&dir, "S2", &[]);
    let (c, r) = check_json(&dir, &s2, &["--field", "gf:3"]);
    assert_eq!(c, 0);
    assert_eq!(r["subject"]["field"], "GF(3)");
    let lie = export(&dir, "lie7_char3", &[]);
    let o = dextral(&["check", lie.to_str().unwrap(), "--field", "rational"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("field mismatch"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{not json");
    assert_eq!(code(&dextral(&["check", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&dextral(&["check", "/nonexistent/file.json"])), 2);
    assert_eq!(code(&dextral(&["leavitt", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&dextral(&["check"])), 2);
    assert_eq!(code(&dextral(&["catalog", "show", "nope"])), 2);
    assert_eq!(code(&dextral(&["catalog", "export", "N20", "--param", "beta=1"])), 2);
    assert_eq!(code(&dextral(&["verify", "--only", "nothing"])), 2);
    assert_eq!(code(&dextral(&["verify", "--param-samples", "3..1"])), 2);
    assert_eq!(code(&dextral(&["check", bad.to_str().unwrap(), "--witness-depth", "4"])), 2);
}

#[test]
fn leavitt_classifies_small_graphs() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str, text: &str| {
        let g = write(&dir, name, text);
        let out = dir.path().join(format!("{name}.report"));
        let o = dextral(&["leavitt", g.to_str().unwrap(), "--json", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        report(&out)
    };
    let r = run("loop.json", r#"{"vertices":["v"],"edges":[{"name":"f","src":"v","rng":"v"}]}"#);
    let c = &record(&r, "classification")["result"];
    assert_eq!(c["dextral"], true);
    assert_eq!(c["iso_class"], "R[x,x^-1]");
    assert_eq!((c["I"].as_u64(), c["J"].as_u64()), (Some(0), Some(1)));

    let r = run("edge.json", r#"{"vertices":["u","v"],"edges":[{"name":"e","src":"u","rng":"v"}]}"#);
    assert_eq!(record(&r, "classification")["result"]["dextral"], false);
    let v = record(&r, "violation.1");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["result"]["validated"], true);
    assert_eq!(v["result"]["lemma"], "non-loop-edge");

    let r = run("empty.json", r#"{"vertices":[],"edges":[]}"#);
    assert_eq!(record(&r, "classification")["result"]["iso_class"], "0");
}

#[test]
fn catalog_subcommands() {
    let o = dextral(&["catalog", "list"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 42);
    let o = dextral(&["catalog", "show", "N18"]);
    assert!(stdout(&o).contains("note:"));
    let o = dextral(&["catalog", "export", "towers_n", "--param", "n=4"]);
    let text = stdout(&o);
    assert!(text.contains("\"x4\""));
    assert!(text.ends_with("}\n"));
}

#[test]
fn verify_subset_and_parameter_grid() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("v.json");
    let o = dextral(&["verify", "--only", "leavitt", "--json", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r = report(&out);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["id"], 13);
    let d1 = r["input_digest"].clone();

    let o = dextral(&["verify", "--only", "1", "--param-samples", "-1..1", "--json", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r = report(&out);
    assert_eq!(r["subject"]["param_range"], serde_json::json!([-1, 1]));
    assert_ne!(r["input_digest"], d1);
}

#[test]
fn full_suite_fails_only_the_mixed_bracket_criterion() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("all.json");
    let o = dextral(&["verify", "--json", out.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let r = report(&out);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 14);
    let failing: Vec<&Value> = checks.iter().filter(|c| c["status"] != "pass").map(|c| &c["id"]).collect();
    assert_eq!(failing, vec![&Value::from(8)]);
    assert!(checks.iter().all(|c| !c["source"].as_str().unwrap().is_empty()));
}
