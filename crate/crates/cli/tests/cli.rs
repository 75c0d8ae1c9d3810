use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn rho(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rho")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Runs with `--json`, expects success, and checks the output is canonical.
fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = rho(&all);
    assert!(out.status.success(), "{args:?} failed: {}", stderr(&out));
    let text = stdout(&out);
    let value: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text, "output is not canonical");
    assert_no_numbers(&value);
    value
}

fn assert_no_numbers(v: &Value) {
    match v {
        Value::Number(n) => panic!("bare number {n} in JSON output"),
        Value::Array(items) => items.iter().for_each(assert_no_numbers),
        Value::Object(map) => map.values().for_each(assert_no_numbers),
        _ => {}
    }
}

#[test]
fn lens_rho_all_methods_agree() {
    let v = json(&["lens-rho", "--p", "5", "--q", "4", "--chi", "3/5", "--method", "all"]);
    for m in ["sawtooth", "floor", "lattice"] {
        assert_eq!(v[m], "-7/5");
    }
    assert_eq!(v["agreement"], true);
}

#[test]
fn lens_rho_text_output() {
    let out = rho(&["lens-rho", "--p", "5", "--q", "1", "--chi", "1/5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("rho: 3/5"));
}

#[test]
fn lens_rho_negative_parameters() {
    let v = json(&["lens-rho", "--p", "-5", "--q", "1", "--chi", "1/5"]);
    assert_eq!(v["rho"], "-3/5");
}

#[test]
fn non_coprime_lens_is_rejected() {
    let out = rho(&["lens-rho", "--p", "4", "--q", "2", "--chi", "1/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("p and q must be coprime"));
}

#[test]
fn character_order_is_checked() {
    let out = rho(&["lens-rho", "--p", "5", "--q", "2", "--chi", "1/3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("5-th root of unity"));
}

#[test]
fn unknown_flags_are_rejected() {
    let out = rho(&["lens-rho", "--p", "5", "--q", "1", "--chi", "1/5", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn approx_renders_decimals() {
    let v = json(&["--approx", "lens-rho", "--p", "5", "--q", "4", "--chi", "3/5"]);
    assert_eq!(v["rho"], "-1.400000000000");
}

#[test]
fn torus_seifert_feeds_lt_signature() {
    let v = json(&["torus-seifert", "--r", "2", "--s", "3"]);
    assert_eq!(v["alexander_validated"], true);
    assert_eq!(v["matrix"], serde_json::json!([["-1", "1"], ["0", "-1"]]));
    let path = std::env::temp_dir().join(format!("rho-cli-t23-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let sigma = json(&["lt-signature", "--seifert", path.to_str().unwrap(), "--theta", "1/2"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(sigma["sigma"], "-2");
}

#[test]
fn torus_seifert_rejects_non_coprime() {
    let out = rho(&["torus-seifert", "--r", "2", "--s", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lt_and_cc_signatures_of_the_trefoil() {
    let lt = json(&["lt-signature", "--seifert", &fixture("trefoil_seifert.json"), "--theta", "1/2"]);
    assert_eq!(lt["sigma"], "-2");
    let lt = json(&["lt-signature", "--seifert", &fixture("trefoil_seifert.json"), "--theta", "1/7"]);
    assert_eq!(lt["sigma"], "0");
    let cc = json(&["cc-signature", "--ccomplex", &fixture("trefoil_ccomplex.json"), "--omega", "1/2"]);
    assert_eq!(cc["sigma"], "-2");
}

#[test]
fn maslov_of_plane_lines() {
    let v = json(&["maslov", "--file", &fixture("plane_lagrangians.json")]);
    assert_eq!(v["tau"], "-1");
    assert_eq!(v["form"], serde_json::json!([["-1,0"]]));
}

#[test]
fn trefoil_five_surgery() {
    let v = json(&[
        "surgery-rho",
        "--link",
        &fixture("knot.json"),
        "--framing",
        "5",
        "--omega",
        "1/5",
        "--sigma",
        &fixture("trefoil_sigma.json"),
    ]);
    assert_eq!(v["value"], "7/5");
    assert_eq!(v["consistent"], true);
    let theorems: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["theorem_used"].as_str().unwrap()).collect();
    for t in ["rational_surgery", "integer_surgery", "casson_gordon", "knot_rational_surgery"] {
        assert!(theorems.contains(&t), "{t} missing from {theorems:?}");
    }
}

#[test]
fn explicit_theorems_on_the_unknot() {
    let base = |framing: &'static str, theorem: &'static str| {
        vec![
            "surgery-rho".to_string(),
            "--link".into(),
            fixture("knot.json"),
            "--framing".into(),
            framing.into(),
            "--omega".into(),
            "1/5".into(),
            "--sigma".into(),
            fixture("unknot_sigma.json"),
            "--theorem".into(),
            theorem.into(),
        ]
    };
    let args = base("5/2", "rational-surgery");
    let v = json(&args.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(v["value"], "1/5");
    assert_eq!(v["lens_terms"][0]["rho"], "-1/5");
    for theorem in ["integer-surgery", "cimasoni-florens", "casson-gordon"] {
        let args = base("5", theorem);
        let v = json(&args.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(v["value"], "-3/5", "{theorem}");
    }
    let args = base("5/2", "integer-surgery");
    let out = rho(&args.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("integer_framing"));
}

#[test]
fn cf_sum_modes_are_selectable() {
    let args = [
        "surgery-rho",
        "--link",
        &fixture("knot.json"),
        "--framing",
        "5",
        "--omega",
        "1/5",
        "--sigma",
        &fixture("unknot_sigma.json"),
        "--theorem",
        "cimasoni-florens",
        "--cf-sum",
        "diagonal",
    ];
    let v = json(&args);
    // a single component: every mode sums the same single term
    assert_eq!(v["value"], "-3/5");
}

#[test]
fn incompatible_framing_is_reported() {
    let out = rho(&[
        "surgery-rho",
        "--link",
        &fixture("knot.json"),
        "--framing",
        "4",
        "--omega",
        "1/5",
        "--sigma",
        &fixture("unknot_sigma.json"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no surgery formula applies"));
}

#[test]
fn yl_rho_reports_plumbing() {
    let v = json(&["yl-rho", "--link", &fixture("hopf.json"), "--omega", "1/3,1/2", "--sigma", &fixture("small_table.json")]);
    assert_eq!(v["value"], "1");
    assert_eq!(v["descriptor"]["graph"]["vertices"].as_array().unwrap().len(), 2);
    let out = rho(&["yl-rho", "--link", &fixture("hopf.json"), "--omega", "1/3,1/3", "--sigma", &fixture("small_table.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn link_files_are_validated() {
    let path = std::env::temp_dir().join(format!("rho-cli-bad-link-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"components": 2, "coloring": [1, 1], "linking": [[0, 1], [2, 0]]}"#).unwrap();
    let out = rho(&["yl-rho", "--link", path.to_str().unwrap(), "--omega", "1/3", "--sigma", &fixture("small_table.json")]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("symmetric") || stderr(&out).contains("linking"), "{}", stderr(&out));
}

#[test]
fn config_file_supplies_defaults() {
    let out = rho(&["--config", &fixture("config.json"), "lens-rho", "--p", "3", "--q", "1", "--chi", "1/3"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rho"], "1/3");
}

#[test]
fn sweeps_are_ordered_tables() {
    let v = json(&["sweep", "lens", "--max-p", "5"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows[0]["p"], "1");
    assert!(rows.iter().any(|r| r["p"] == "5" && r["q"] == "4" && r["chi"] == "3/5" && r["rho"] == "-7/5"));
    let out = rho(&["sweep", "lens", "--max-p", "5", "--jobs", "2"]);
    assert!(stdout(&out).starts_with("p  q  chi  rho\n"));
    let torus = json(&["sweep", "torus", "--max-s", "4"]);
    assert!(torus.as_array().unwrap().iter().all(|r| r["epsilon"] == "-1"));
    let lt = json(&["sweep", "lt", "--seifert", &fixture("trefoil_seifert.json"), "--max-den", "6"]);
    let half = lt.as_array().unwrap().iter().find(|r| r["theta"] == "1/2").unwrap();
    assert_eq!(half["sigma"], "-2");
}

#[test]
fn crosscheck_passes() {
    let out = rho(&["crosscheck", "--max-p", "30"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("status"));
    assert!(!text.contains("FAIL"));
}
