use std::process::Command;

use lagrange::cli::{self, Config, Output, ResolventJson, SolvableJson};
use lagrange::galois::GaloisJson;
use lagrange::matrices::MatrixJson;

fn lagrange(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lagrange"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn galois_text_and_json() {
    let (code, out, _) = lagrange(&["galois", "x^4-x^3-3*x^2+x+1"]);
    assert_eq!(code, 0);
    assert!(out.contains("group: D4") && out.contains("order: 8") && out.contains("evidence:"));
    let (_, out, _) = lagrange(&["--json", "galois", "x^2+1"]);
    let g: GaloisJson = serde_json::from_str(&out).unwrap();
    assert_eq!((g.group_name.as_str(), g.order), ("S2", 2));
    assert_eq!(
        serde_json::from_str::<GaloisJson>(&serde_json::to_string(&g).unwrap()).unwrap(),
        g
    );
}

#[test]
fn solvable_exit_codes() {
    let (code, out, _) = lagrange(&["solvable", "x^5-x-1"]);
    assert_eq!((code, out.lines().next()), (1, Some("solvable: false")));
    let (code, out, _) = lagrange(&["--json", "solvable", "x^5-x^4-4*x^3+3*x^2+3*x-1"]);
    assert_eq!(code, 0);
    let v: SolvableJson = serde_json::from_str(&out).unwrap();
    assert!(v.solvable && v.witness.is_some());
    let (code, _, err) = lagrange(&["solvable", "x^4+1"]);
    assert_eq!(code, 3);
    assert!(err.starts_with("error:"));
}

#[test]
fn usage_errors() {
    assert_eq!(lagrange(&["galois"]).0, 2);
    assert_eq!(lagrange(&["galois", "x^"]).0, 2);
    assert_eq!(lagrange(&["matrix", "Q8"]).0, 2);
    assert_eq!(lagrange(&["--precision", "9000", "galois", "x^2+1"]).0, 2);
    assert_eq!(lagrange(&["resolvent", "x^3-2", "nonsense_name"]).0, 2);
}

#[test]
fn resolvent_output() {
    let (code, out, _) = lagrange(&["resolvent", "x^4-x^3-3*x^2+x+1", "pair_prod"]);
    assert_eq!(code, 0);
    assert!(out.contains("factorization: (x + 1)^2(x^4 + x^3 - 5*x^2 + x + 1)"));
    assert!(out.contains("separable: no"));
    let (_, out, _) = lagrange(&["resolvent", "x^2-1", "tchirnhaus:x1"]);
    assert!(out.starts_with("resolvent: x^2 - 1\n"));
    let (_, out, _) = lagrange(&["--json", "resolvent", "x^3-2", "x1 - x2"]);
    let r: ResolventJson = serde_json::from_str(&out).unwrap();
    assert_eq!(r.report.orbit_size, 6);
    assert_eq!(
        serde_json::from_str::<ResolventJson>(&serde_json::to_string(&r).unwrap()).unwrap(),
        r
    );
}

#[test]
fn relative_resolvent_from_ordering_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ordering.txt");
    std::fs::write(
        &path,
        "x2 = x1^3 - 3*x1\nx3 = 2 - x1^2\nx4 = x1^4 - x1^3 - 3*x1^2 + 2*x1 + 1\nx5 = 4*x1^2 - x1^4 - 2\n",
    )
    .unwrap();
    let (code, out, err) = lagrange(&[
        "resolvent",
        "x^5-x^4-4*x^3+3*x^2+3*x-1",
        "d5_m5",
        "--ambient",
        "M5 := (1,2,3,4,5),(1,2,4,3)",
        "--ordering-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("resolvent: x^2 + 4*x + 4\n"), "{out}");
    assert!(out.contains("case ii"));
}

#[test]
fn matrix_cache_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let cold = lagrange(&["--cache-dir", cache, "matrix", "S4"]);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let warm = lagrange(&["--cache-dir", cache, "matrix", "S4"]);
    assert_eq!(cold, warm);
    let plain = lagrange(&["matrix", "S4"]);
    assert_eq!(cold, plain);
    let json = lagrange(&["--json", "--cache-dir", cache, "matrix", "S4"]).1;
    let m: MatrixJson = serde_json::from_str(&json).unwrap();
    assert_eq!((m.partitions.len(), m.classes.len()), (11, 11));
    assert_eq!(
        serde_json::from_str::<MatrixJson>(&serde_json::to_string(&m).unwrap()).unwrap(),
        m
    );
}

#[test]
fn trivial_ambient() {
    let (code, out, _) = lagrange(&["--json", "matrix", "S1"]);
    assert_eq!(code, 0);
    let m: MatrixJson = serde_json::from_str(&out).unwrap();
    assert_eq!(m.partitions, vec![vec!["1".parse().unwrap()]]);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lagrange.conf");
    std::fs::write(&path, "output = json\nprecision = 256\n").unwrap();
    let (_, out, _) = lagrange(&["--config", path.to_str().unwrap(), "galois", "x^3-2"]);
    assert!(serde_json::from_str::<GaloisJson>(&out).is_ok());
    let cli = <cli::Cli as clap::Parser>::try_parse_from([
        "lagrange",
        "--config",
        path.to_str().unwrap(),
        "--precision",
        "512",
        "galois",
        "x",
    ])
    .unwrap();
    assert_eq!(
        cli.config().unwrap(),
        Config {
            precision_bits: 512,
            output: Output::Json,
            ..Config::default()
        }
    );
}
