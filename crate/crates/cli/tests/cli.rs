use std::process::Command;

use bent_ice_cli::*;

fn run(args: &str) -> Outcome {
    run_args(std::iter::once("bent-ice").chain(args.split_whitespace())).unwrap()
}

fn bin(args: &str) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bent-ice"))
        .args(args.split_whitespace())
        .env_remove("BENT_ICE_CAPS")
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn documented_examples() {
    assert_eq!(bin("enumerate --family A --lambda 2,1 --emit count"), (0, "2\n".into()));
    assert_eq!(
        bin("partition --family B --lambda 1 --scheme deformation --emit latex"),
        (0, "1 - t_{1} x_{1}\n".into())
    );
    let (code, out) = bin("verify okada --family B --n 2");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["verb"], "verify");
    for key in ["verb", "inputs", "verdict", "data", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bin("verify ybe --scheme ones").0, EXIT_FAIL);
    let (code, out) = bin("enumerate --family A --lambda 1,2");
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("strictly decreasing"));
    assert_eq!(bin("enumerate --family Q --lambda 2,1").0, EXIT_INPUT);
    assert_eq!(bin("enumerate --family B --lambda 9,1").0, EXIT_CAP);
    assert_eq!(bin("frobnicate").0, EXIT_USAGE);
    assert_eq!(bin("verify nothing").0, EXIT_USAGE);
    assert_eq!(bin("verify okada --family A --n 2").0, EXIT_INPUT);
    assert_eq!(bin("asm --family BC --lambda 2,1").0, EXIT_INPUT);
    assert_eq!(bin("partition --family B --lambda 2,1 --emit tikz").0, EXIT_INPUT);
    assert_eq!(bin("--help").0, 0);
}

#[test]
fn caps_from_env_and_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_bent-ice"))
        .args(["enumerate", "--family", "B", "--lambda", "4,1", "--emit", "count"])
        .env("BENT_ICE_CAPS", "2,3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_CAP));
    let out = Command::new(env!("CARGO_BIN_EXE_bent-ice"))
        .args(["enumerate", "--family", "B", "--lambda", "4,1", "--emit", "count", "--max-cols", "4"])
        .env("BENT_ICE_CAPS", "2,3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(bin("verify rho --family B --n 5").0, EXIT_CAP);
}

#[test]
fn emit_formats() {
    let o = run("enumerate --family B --lambda 1 --emit tikz");
    let text = o.text.unwrap();
    assert_eq!(text.matches("\\begin{tikzpicture}").count(), 2);
    assert!(!text.contains("-0)"));
    let o = run("enumerate --family B --lambda 1 --scheme deformation --emit latex");
    assert_eq!(o.text.unwrap().lines().count(), 2);
    assert_eq!(run("asm --family B --lambda 2,1 --emit count").text.unwrap(), "10");
    assert_eq!(run("verify bijection --n 2 --emit count").text.unwrap(), "10");
    let o = run("character --family C --lambda 3,1 --emit latex");
    assert_eq!(o.text.unwrap(), "x_{1}^{-1} + x_{2}^{-1} + x_{2} + x_{1}");
}

#[test]
fn relation_verbs_pass() {
    for args in [
        "verify ybe",
        "verify ybe --scheme deformation",
        "verify bend --family D --n 3",
        "verify fish --family B --n 2",
        "verify fish --family Cstar",
        "verify fish --family D",
        "verify fish --family D --lambda 3,2",
        "verify jellyfish --family C",
        "verify jellyfish --family Bstar",
        "verify jellyfish --family BC",
        "verify caduceus --family Bstar",
        "verify caduceus --family C",
        "verify caduceus --family BC --n 3",
        "verify divisibility --family Cstar --lambda 4,1",
        "verify rho --family A --n 2",
        "verify rho --family BC --n 2",
        "verify character --family Bstar --lambda 3,1",
        "verify tokuyama --lambda 4,1",
    ] {
        let o = run(args);
        assert_eq!(o.exit_code, 0, "{args}: {}", o.report.data);
        assert_eq!(o.report.verdict, Verdict::Pass);
    }
}

#[test]
fn reports_are_reproducible() {
    for args in [
        "enumerate --family C --lambda 2,1",
        "partition --family D --lambda 3,1 --scheme deformation",
        "verify divisibility --family B --lambda 3,1 --seed 11",
        "asm --family Bstar --lambda 2,1",
        "character --family B --lambda 3,1",
    ] {
        let a = run(args).report.canonical();
        let b = run(args).report.canonical();
        assert_eq!(a, b, "{args}");
        let one = run(&format!("{args} --workers 1")).report;
        let four = run(&format!("{args} --workers 4")).report;
        assert_eq!(one.data, four.data, "{args}");
    }
}
