use std::process::{Command, Output};

use motivecalc::{MotiveExpr, Wall};

fn motivecalc(args: &[&str], seed: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_motivecalc"));
    cmd.args(args).env_remove("MOTIVECALC_SEED");
    if let Some(s) = seed {
        cmd.env("MOTIVECALC_SEED", s);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["motive", "--space", "parabolic", "--g", "3", "--alpha", "1/3,2/7,5/11,1/2"];
    let a = motivecalc(&args, None);
    let b = motivecalc(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_round_trips() {
    let o = motivecalc(&["walls", "--g", "2", "--N", "4"], None);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let walls: Vec<Wall> = rows.iter().map(|r| serde_json::from_value(r["wall"].clone()).unwrap()).collect();
    assert_eq!(walls, motivecalc::weights::enumerate_walls(4, motivecalc::Parity::Odd));

    let o = motivecalc(&["motive", "--space", "NL", "--g", "4", "--expand"], None);
    let m: MotiveExpr = serde_json::from_str(&stdout(&o)).unwrap();
    let ctx = motivecalc::CurveContext::new(4, 0);
    let direct = motivecalc::motive::expand_rational(
        &MotiveExpr::atom(motivecalc::MotiveAtom::ModuliNL { d: 1 }),
        &ctx,
    );
    assert_eq!(m, direct);
}

#[test]
fn seed_falls_back_to_environment() {
    let args = ["chamber", "--alpha", "1/2,1/2", "--perturb", "--output", "plain"];
    let env7 = motivecalc(&args, Some("7"));
    let flag7 = motivecalc(&[&args[..], &["--seed", "7"]].concat(), None);
    let env8 = motivecalc(&args, Some("8"));
    assert_eq!(env7.status.code(), Some(0));
    assert_eq!(env7.stdout, flag7.stdout);
    assert_ne!(env7.stdout, env8.stdout);
    assert_eq!(motivecalc(&args, Some("not-a-number")).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(motivecalc(&["poincare", "--space", "NL", "--g", "2"], None).status.code(), Some(0));
    assert_eq!(motivecalc(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(motivecalc(&["chamber", "--alpha", "1/2,1/2"], None).status.code(), Some(3));
    assert_eq!(motivecalc(&["poincare", "--space", "higgs_fixed", "--g", "2"], None).status.code(), Some(4));
    let missing = motivecalc(&["poincare", "--space", "higgs", "--g", "2", "--tilde-betti", "/nonexistent.json"], None);
    assert_eq!(missing.status.code(), Some(4));
}

#[test]
fn tilde_betti_table_unlocks_fixed_higgs() {
    let dir = std::env::temp_dir().join(format!("motivecalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("betti.json");
    let table: serde_json::Map<String, serde_json::Value> =
        (0..=8).map(|n| (n.to_string(), serde_json::json!([1, 0, 1]))).collect();
    std::fs::write(&path, serde_json::to_string(&table).unwrap()).unwrap();
    let o = motivecalc(
        &["poincare", "--space", "higgs_fixed", "--g", "2", "--tilde-betti", path.to_str().unwrap()],
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_reports_failure_free_suites() {
    let o = motivecalc(&["verify", "--suite", "alpha-independence", "--g", "2", "--N", "3", "--trials", "20"], None);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports[0]["passed"], true);
    assert_eq!(reports[0]["checks"], 20);
}
