//! Golden-file tests for the `pieri` binary.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.

use std::path::PathBuf;
use std::process::{Command, Output};

use pieri_core::json::{self, Expansion};

fn pieri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pieri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn check_golden(name: &str, args: &[&str]) {
    let out = pieri(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let got = String::from_utf8(out.stdout).unwrap();
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "output differs from {}", path.display());
}

#[test]
fn expand_skew() {
    check_golden("expand_322_11_h2.txt", &["expand", "322/11", "--h", "2"]);
}

#[test]
fn expand_straight() {
    check_golden("expand_322_h2.txt", &["expand", "322", "--h", "2"]);
}

#[test]
fn expand_dual() {
    check_golden("expand_21_1_e2.txt", &["expand", "21/1", "--h", "2", "--dual"]);
}

#[test]
fn expand_schur_rule() {
    check_golden("expand_322_11_h2_schur.txt", &["expand", "322/11", "--h", "2", "--rule", "schur"]);
}

#[test]
fn product_skew_lr() {
    check_golden("product_21_1_x_21.txt", &["product", "21/1", "21"]);
}

#[test]
fn product_verbose() {
    check_golden("product_21_1_x_21_verbose.txt", &["product", "21/1", "21", "--verbose"]);
}

#[test]
fn trace_downward() {
    check_golden(
        "trace_down.txt",
        &[
            "trace",
            "slide",
            "7,5,4,1,1/3,1",
            "76441/31: [1,2,2,5][1,2,2,3,6][2,2,3,4][3,5,7,7][9]",
            "--op",
            "D",
        ],
    );
}

#[test]
fn trace_fixed_point() {
    check_golden(
        "trace_fixed.txt",
        &["trace", "slide", "653/21", "7631/21: [1,1,2,3,3][1,3,3,3,7][2,4,6][5]"],
    );
}

#[test]
fn verify_appendix_passes() {
    check_golden("verify_appendix.txt", &["verify", "appendix", "--max-deg", "4", "--max-n", "3"]);
}

#[test]
fn verify_small_sweeps_pass() {
    for h in ["skew-pieri", "involution", "skew-lr", "h-rho"] {
        let out = pieri(&["verify", h, "--max-outer", "3", "--max-n", "2", "--max-outer-b", "3"]);
        assert_eq!(out.status.code(), Some(0), "{h}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn repeated_runs_identical() {
    let args = ["--format", "json", "verify", "involution", "--max-outer", "4"];
    let strip = |o: Output| {
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let mut v = v;
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(pieri(&args)), strip(pieri(&args)));
}

#[test]
fn parse_errors_exit_2() {
    for args in [
        &["expand", "3x2", "--h", "2"][..],
        &["expand", "1/2", "--h", "1"],
        &["product", "21"],
        &["trace", "slide", "3", "21: [1,1][2]"],
        &["trace", "slide", "21/1", "21/1: [1][1]", "--op", "U"],
        &["verify", "nonsense"],
        &["bogus"],
    ] {
        let out = pieri(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn json_round_trip() {
    let out = pieri(&["--format", "json", "expand", "322/11", "--h", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed = json::parse(text.trim()).unwrap();
    let Expansion::Skew(f) = &parsed else { panic!("expected the skew basis") };
    assert_eq!(f.len(), 9);
    assert_eq!(json::to_string(&parsed), text.trim());

    let out = pieri(&["--format", "json", "product", "21/1", "21", "--rule", "schur"]);
    let parsed = json::parse(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert!(matches!(parsed, Expansion::Schur(_)));
}

#[test]
fn schur_rule_agrees_with_skew_pieri() {
    let skew = pieri(&["--format", "json", "expand", "421/2", "--h", "3"]);
    let schur = pieri(&["--format", "json", "expand", "421/2", "--h", "3", "--rule", "schur"]);
    let Expansion::Skew(a) = json::parse(std::str::from_utf8(&skew.stdout).unwrap().trim()).unwrap() else {
        panic!()
    };
    let Expansion::Schur(b) = json::parse(std::str::from_utf8(&schur.stdout).unwrap().trim()).unwrap() else {
        panic!()
    };
    assert_eq!(a.to_schur(), b);
}
