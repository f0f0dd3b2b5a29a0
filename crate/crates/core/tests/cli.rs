use std::process::Command;

use acue_lab::numeric::relative_error;
use acue_lab::{ComplexValue, Precision};
use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_acue-lab"));
    cmd.env_remove("ACUE_LAB_PRECISION_BITS");
    cmd
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn row_value(json: &Value, id: &str) -> ComplexValue {
    let row = json["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["formula_id"] == id)
        .unwrap();
    serde_json::from_value(row["value"].clone()).unwrap()
}

fn real(x: f64) -> ComplexValue {
    ComplexValue::from_f64(Precision::DEFAULT, x, 0.0)
}

#[test]
fn moments_both_ensembles() {
    let (code, out, err) = run(&[
        "moments",
        "--ensemble",
        "both",
        "-n",
        "1",
        "-k",
        "2",
        "-l",
        "2",
        "--shifts",
        "2,3,5,7",
    ]);
    assert_eq!(code, 0, "{err}");
    let json: Value = serde_json::from_str(&out).unwrap();
    assert!(relative_error(&row_value(&json, "acue_moment"), &real(312.0)) < 1e-70);
    assert!(relative_error(&row_value(&json, "cue_moment"), &real(101.0)) < 1e-70);
    assert!(!row_value(&json, "acue_minus_cue").is_zero());
    assert!(relative_error(&row_value(&json, "acue_enumeration"), &real(312.0)) < 1e-70);
}

#[test]
fn ratios_report_both_constructions_and_oracle() {
    let (code, out, err) = run(&[
        "ratios",
        "--ensemble",
        "acue",
        "-n",
        "2",
        "-j",
        "2",
        "--v",
        "0.5,-0.25+0.5i",
        "--u",
        "1.5i,(0.3,-0.2)",
    ]);
    assert_eq!(code, 0, "{err}");
    let json: Value = serde_json::from_str(&out).unwrap();
    let a = row_value(&json, "acue_ratio");
    assert_eq!(a, row_value(&json, "bos_compose"));
    assert!(relative_error(&a, &row_value(&json, "acue_enumeration")) < 1e-60);
}

#[test]
fn tao_scan_table_zero_set() {
    let (code, out, err) = run(&[
        "--format",
        "table",
        "compare",
        "--tao-scan",
        "-n",
        "2",
        "--kmax",
        "3",
        "--lmax",
        "3",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(
        out.contains("zero set is exactly the K, L <= N rectangle"),
        "{out}"
    );
    let (_, json, _) = run(&[
        "compare",
        "--tao-scan",
        "-n",
        "2",
        "--kmax",
        "3",
        "--lmax",
        "3",
    ]);
    let scan: Value = serde_json::from_str(&json).unwrap();
    for cell in scan["cells"].as_array().unwrap() {
        let inside = cell["k"].as_u64().unwrap() <= 2 && cell["l"].as_u64().unwrap() <= 2;
        assert_eq!(cell["agree"].as_bool().unwrap(), inside, "{cell}");
    }
}

#[test]
fn verify_all_passes() {
    let (code, out, err) = run(&["verify", "--suite", "all", "-n", "3", "--trials", "3"]);
    assert_eq!(code, 0, "{err}{out}");
    let json: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["passed"], true);
    for suite in json["suites"].as_array().unwrap() {
        assert!(suite["max_rel_err"].is_number(), "{suite}");
    }
}

#[test]
fn zeta_limit_with_average() {
    let (code, out, err) = run(&[
        "zeta-limit",
        "--mus",
        "0.6+0.2i,-0.9+0.5i",
        "--nus",
        "0.3-0.4i,-0.1+0.8i",
        "--kernel",
        "acue",
        "--avg",
        "--quadrature-points",
        "128",
    ]);
    assert_eq!(code, 0, "{err}");
    let json: Value = serde_json::from_str(&out).unwrap();
    let rows = json["results"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows[1]["rel_err"].as_f64().unwrap() < 1e-20);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(
        run(&["moments", "-n", "1", "-k", "1", "-l", "1", "--shifts", "1,x"]).0,
        1
    );
    let (code, _, err) = run(&[
        "moments", "-n", "1", "-k", "1", "-l", "1", "--shifts", "0.5,0.5",
    ]);
    assert_eq!(code, 2, "{err}");
    assert!(err.contains("coincide"));
    assert_eq!(run(&["ratios", "-n", "1", "--v", "0.2", "--u", "-1"]).0, 2);
    assert_eq!(
        run(&[
            "--precision-bits",
            "32",
            "moments",
            "-n",
            "1",
            "-k",
            "1",
            "-l",
            "1",
            "--shifts",
            "1,2"
        ])
        .0,
        1
    );
}

#[test]
fn verification_failure_exits_three() {
    // at 64 bits the identity tolerance 2^-24 is tight enough for rounding in
    // the Taylor-coefficient suite, whose fixed 1e-20 tolerance cannot be met
    let (code, out, _) = run(&[
        "--precision-bits",
        "64",
        "verify",
        "--suite",
        "p-taylor",
        "-n",
        "2",
    ]);
    assert_eq!(code, 3, "{out}");
}

#[test]
fn precision_flag_beats_env_beats_default() {
    let args = [
        "moments", "-n", "1", "-k", "1", "-l", "1", "--shifts", "1,2",
    ];
    let bits = |out: &[u8]| -> u64 {
        let json: Value = serde_json::from_slice(out).unwrap();
        json["precision_bits"].as_u64().unwrap()
    };
    assert_eq!(bits(&bin().args(args).output().unwrap().stdout), 256);
    let env = bin()
        .env("ACUE_LAB_PRECISION_BITS", "128")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(bits(&env.stdout), 128);
    let flag = bin()
        .env("ACUE_LAB_PRECISION_BITS", "128")
        .arg("--precision-bits")
        .arg("192")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(bits(&flag.stdout), 192);
}

#[test]
fn json_round_trips_and_is_deterministic() {
    let args = [
        "--seed",
        "9",
        "compare",
        "--tao-scan",
        "-n",
        "1",
        "--kmax",
        "2",
        "--lmax",
        "2",
        "--trials",
        "2",
    ];
    assert_eq!(run(&args).1, run(&args).1);
    let (_, out, _) = run(&[
        "moments",
        "-n",
        "2",
        "-k",
        "1",
        "-l",
        "2",
        "--shifts",
        "0.1,0.2i,-0.3+0.7i",
    ]);
    let json: Value = serde_json::from_str(&out).unwrap();
    for row in json["results"].as_array().unwrap() {
        let v: ComplexValue = serde_json::from_value(row["value"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&v).unwrap(), row["value"]);
    }
}

#[test]
fn csv_output() {
    let (code, out, _) = run(&[
        "--format", "csv", "moments", "-n", "2", "-k", "3", "-l", "1", "--shifts", "1,2,3,4",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "formula_id,paper_ref,n,k,l,j,value_re,value_im,oracle_re,oracle_im,rel_err"
    );
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("acue_moment,"));
}
