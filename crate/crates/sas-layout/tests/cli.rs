//! End-to-end checks of the command-line interface: output contracts, exit
//! codes, and file round-trips.

use std::path::PathBuf;
use std::process::Command;

use sas_layout::export;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sas-layout"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("spawn");
    assert!(
        out.status.success(),
        "args {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

fn run_fail(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("spawn");
    let code = out.status.code().expect("exit code");
    assert_ne!(code, 0, "args {args:?} unexpectedly succeeded");
    (code, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sas-layout-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir.join(name)
}

#[test]
fn count_reports_the_closed_forms_as_json() {
    let out = run_ok(&["count", "--mode", "surface", "--style", "le", "-m", "4", "-n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("count json");
    assert_eq!(v["eta_basic"], 36);
    assert_eq!(v["eta_conjectured"], 4);
    assert_eq!(v["xi"], 1);
    assert_eq!(v["mu_le"], 4);
    assert_eq!(v["mu_bt"], 2);

    let out = run_ok(&["count", "--mode", "facet", "--style", "bt", "-m", "4", "-n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("count json");
    assert_eq!(v["eta_basic"], 36);
    assert_eq!(v["eta_interleaved"], 16);
    assert_eq!(v["xi"], 4);
    assert_eq!(v["mu_le"], 9);
    assert_eq!(v["mu_bt"], 5);
}

#[test]
fn planar_sizes_still_price_the_unoptimized_drawing() {
    let out = run_ok(&["count", "--mode", "surface", "--style", "le", "-m", "2", "-n", "9"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("count json");
    assert_eq!(v["eta_basic"], 36);
    assert_eq!(v["eta_conjectured"], 0);
    assert_eq!(v["xi"], 0);
    assert_eq!(v["mu_le"], 0);
}

#[test]
fn tables_print_the_frozen_reference_rows() {
    let surface = run_ok(&["table", "--which", "1"]);
    assert!(surface.starts_with("size | crossings | LE overpasses"));
    assert!(surface.contains("4\u{d7}4 | 4 | 4 | 2 | 1 | 1\n"));
    assert!(surface.contains("64\u{d7}64 | 984064 | 3844 | 1922 | 961 | 1\n"));

    let facet = run_ok(&["table", "--which", "2"]);
    assert!(facet.contains("4\u{d7}4 | 16 | 9 | 5 | 4 | 1\n"));
    assert!(facet.contains("64\u{d7}64 | 2666496 | 3969 | 1985 | 1984 | 1\n"));
}

#[test]
fn penalty_prints_the_exact_contract_line() {
    let out = run_ok(&["penalty", "--crossings", "100", "--il-db", "0.04", "--xt-db", "-40"]);
    assert_eq!(out, "IL: 4.00 dB, worst-case coherent XT: 0.00 dB\n");

    let out = run_ok(&[
        "penalty", "--crossings", "100", "--il-db", "0.04", "--xt-db", "-40", "--incoherent",
    ]);
    assert_eq!(out, "IL: 4.00 dB, worst-case incoherent XT: -20.00 dB\n");

    let out = run_ok(&["penalty", "--crossings", "0", "--il-db", "0.1", "--xt-db", "-30"]);
    assert_eq!(out, "IL: 0.00 dB, worst-case coherent XT: -inf dB\n");
}

#[test]
fn verify_sweep_passes_and_summarizes() {
    let out = run_ok(&["verify", "--max-m", "5", "--max-n", "5", "--exhaustive-convex"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("verify json");
    assert_eq!(v["pass"], true);
    assert_eq!(v["instances"], 64);
    assert_eq!(v["failures"].as_array().expect("failures array").len(), 0);
    let convex = v["convex_search"].as_array().expect("convex array");
    assert_eq!(convex.len(), 3);
    assert!(convex.iter().all(|c| c["pass"] == true));
    assert_eq!(convex[2]["min_crossings"], 16);
}

#[test]
fn layout_round_trips_through_the_document_format() {
    let out = scratch("wop-5x4.json");
    let svg = scratch("wop-5x4.svg");
    run_ok(&[
        "layout", "--mode", "surface", "--style", "le", "-m", "5", "-n", "4",
        "--out", out.to_str().expect("path"), "--svg", svg.to_str().expect("path"),
    ]);
    let text = std::fs::read_to_string(&out).expect("layout json");
    let drawing = export::parse_drawing_json(&text).expect("parse back");
    assert_eq!(export::export_drawing_json(&drawing), text);
    let svg_text = std::fs::read_to_string(&svg).expect("layout svg");
    assert!(svg_text.contains("<svg"));
    assert!(svg_text.contains("stroke-dasharray"));
}

#[test]
fn layout_covers_the_named_variants() {
    for (mode, style, variant, m, n) in [
        ("surface", "le", "basic", "3", "3"),
        ("surface", "le", "zarankiewicz", "5", "4"),
        ("surface", "bt", "subgraph", "4", "4"),
        ("surface", "le", "chord-stub-wop", "4", "4"),
        ("facet", "le", "axes", "4", "4"),
        ("facet", "le", "interleaved", "4", "4"),
        ("facet", "bt", "wop", "4", "4"),
        ("facet", "le", "rerouted-clustered", "4", "4"),
        ("facet", "le", "rerouted-interleaved", "4", "4"),
    ] {
        let out = scratch(&format!("{mode}-{style}-{variant}-{m}x{n}.json"));
        run_ok(&[
            "layout", "--mode", mode, "--style", style, "-m", m, "-n", n,
            "--variant", variant, "--out", out.to_str().expect("path"),
        ]);
        let text = std::fs::read_to_string(&out).expect("layout json");
        export::parse_drawing_json(&text).expect("every variant parses back");
    }
}

#[test]
fn usage_errors_exit_two() {
    let (code, err) = run_fail(&["penalty", "--crossings", "5", "--il-db", "0.1", "--xt-db", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonpositive"));

    let (code, err) = run_fail(&[
        "layout", "--mode", "surface", "--style", "le", "-m", "4", "-n", "4",
        "--variant", "interleaved", "--out", "/dev/null",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("not defined for --mode surface"));

    let (code, _) = run_fail(&[
        "layout", "--mode", "facet", "--style", "le", "-m", "3", "-n", "4",
        "--variant", "rerouted-clustered", "--out", "/dev/null",
    ]);
    assert_eq!(code, 2);

    let (code, _) = run_fail(&[
        "layout", "--mode", "surface", "--style", "bt", "-m", "4", "-n", "4",
        "--variant", "chord-stub-wop", "--out", "/dev/null",
    ]);
    assert_eq!(code, 2);

    let (code, _) = run_fail(&["count", "--mode", "surface", "--style", "bt", "-m", "1", "-n", "4"]);
    assert_eq!(code, 2);

    let (code, _) = run_fail(&["table", "--which", "3"]);
    assert_eq!(code, 2);

    let (code, _) = run_fail(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn unwritable_output_exits_one() {
    let (code, _) = run_fail(&[
        "layout", "--mode", "surface", "--style", "le", "-m", "2", "-n", "2",
        "--out", "/nonexistent-dir/out.json",
    ]);
    assert_eq!(code, 1);
}
