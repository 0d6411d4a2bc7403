use std::path::Path;
use std::process::Command;

use equivariant_lines::cli;
use equivariant_lines::export::{parse_obj, surface_value, AffineChart};
use equivariant_lines::geometry::CubicSurface;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("eqlines").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn find_lines_fermat() {
    let (code, out, _) = run(&["find-lines", "--surface", "fermat", "--seed", "7"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lines"].as_array().unwrap().len(), 27);
    assert_eq!(v["seed"], 7);
    let line = &v["lines"][0];
    assert_eq!(line["span"].as_array().unwrap().len(), 2);
    assert_eq!(line["span"][0].as_array().unwrap().len(), 4);
    assert_eq!(line["plucker"].as_array().unwrap().len(), 6);
    assert!(line["plucker"][0]["re"].is_number() && line["plucker"][0]["im"].is_number());
    assert!(line["residual"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn output_is_byte_stable() {
    let args = ["find-lines", "--surface", "clebsch", "--seed", "11"];
    let a = run(&args).1;
    let b = run(&args).1;
    assert_eq!(a, b);
    let one = run(&[&args[..], &["--threads", "1"]].concat()).1;
    let four = run(&[&args[..], &["--threads", "4"]].concat()).1;
    assert_eq!(a, one);
    assert_eq!(a, four);
}

#[test]
fn find_lines_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lines.json");
    let (code, out, err) = run(&["find-lines", "--surface", "fermat", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert!(err.contains("27 lines"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["lines"].as_array().unwrap().len(), 27);
}

#[test]
fn surface_files() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.json", r#"{"monomials": []}"#);
    assert_eq!(run(&["find-lines", "--surface-file", &zero]).0, 2);
    let cone = write(
        dir.path(),
        "cone.json",
        r#"{"monomials": [{"exponents": [3,0,0,0], "re": 1}, {"exponents": [0,3,0,0], "re": 1}, {"exponents": [0,0,3,0], "re": 1}]}"#,
    );
    assert_eq!(run(&["find-lines", "--surface-file", &cone]).0, 2);
    let garbage = write(dir.path(), "bad.json", "{not json");
    assert_eq!(run(&["find-lines", "--surface-file", &garbage]).0, 1);
    let bad_degree = write(dir.path(), "deg.json", r#"{"monomials": [{"exponents": [2,0,0,0], "re": 1}]}"#);
    assert_eq!(run(&["find-lines", "--surface-file", &bad_degree]).0, 1);
    let fermat = serde_json::to_string(&CubicSurface::fermat().to_json()).unwrap();
    let fermat = write(dir.path(), "fermat.json", &fermat);
    let (code, out, _) = run(&["orbits", "--surface-file", &fermat, "--group", "S4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), "[S4/C2o] + [S4/C2e] + [S4/D8]");
}

#[test]
fn orbits_examples() {
    let first = |args: &[&str]| run(args).1.lines().next().unwrap().to_string();
    assert_eq!(first(&["orbits", "--surface", "clebsch", "--group", "S4"]), "[S4/C2o] + [S4/C2e] + [S4/D8]");
    assert_eq!(first(&["orbits", "--surface", "fermat", "--group", "e"]), "27[e/e]");
    assert_eq!(first(&["orbits", "--surface", "fermat", "--group", "A4"]), "[A4/e] + 2[A4/C2e] + [A4/K4norm]");
    let (code, out, _) = run(&["orbits", "--surface", "fermat", "--group", "S4", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let sizes: Vec<u64> = v["orbits"].as_array().unwrap().iter().map(|o| o["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, [12, 12, 3]);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["orbits", "--surface", "fermat", "--group", "Q8"]).0, 1);
    assert_eq!(run(&["orbits", "--surface", "cayley", "--group", "S4"]).0, 1);
    assert_eq!(run(&["orbits", "--group", "S4"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["verify-conservation", "--trials", "0"]).0, 1);
    assert_eq!(run(&["burnside", "mul", "[S4/e]", "[D8/e]"]).0, 1);
    assert_eq!(run(&["burnside", "marks", "[S4/X]"]).0, 1);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("find-lines"));
}

#[test]
fn bad_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "cfg.json", r#"{"tol_match": -1}"#);
    assert_eq!(run(&["find-lines", "--surface", "fermat", "--config", &cfg]).0, 1);
    let cfg = write(dir.path(), "cfg2.json", r#"{"seed": 3, "newton_starts": 100}"#);
    let (code, out, _) = run(&["find-lines", "--surface", "fermat", "--config", &cfg]);
    assert_eq!(code, 0);
    assert!(out.contains("\"seed\": 3"));
}

#[test]
fn not_closed_under_the_group() {
    // 2x3³ + x0³ + x1³ + x2³ is not S4-symmetric.
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "s3.json",
        r#"{"monomials": [{"exponents": [3,0,0,0], "re": 1}, {"exponents": [0,3,0,0], "re": 1},
                          {"exponents": [0,0,3,0], "re": 1}, {"exponents": [0,0,0,3], "re": 2}]}"#,
    );
    assert_eq!(run(&["orbits", "--surface-file", &f, "--group", "S4"]).0, 3);
    let (code, out, _) = run(&["orbits", "--surface-file", &f, "--group", "S3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("3[S3/e] + 3[S3/C2o]"));
}

#[test]
fn table1_text_and_json() {
    let (code, out, _) = run(&["table1", "--surface", "fermat"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 11);
    assert!(out.lines().all(|l| l.contains("restriction ok")));
    let (_, json, _) = run(&["table1", "--surface", "clebsch", "--json"]);
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    let (_, fermat_json, _) = run(&["table1", "--surface", "fermat", "--json"]);
    assert_eq!(json, fermat_json);
    assert_eq!(rows[6]["group"], "C4");
    assert_eq!(rows[6]["direct"], "5[C4/e] + 3[C4/C2e] + [C4/C4]");
    let (_, random_json, _) = run(&["table1", "--random", "42", "--json"]);
    assert_eq!(random_json, fermat_json);
}

#[test]
fn real_command() {
    let (code, out, _) = run(&["real", "--surface", "clebsch"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["real_count"].as_u64(), v["hyperbolic"].as_u64(), v["elliptic"].as_u64()), (Some(27), Some(15), Some(12)));
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "complex.json",
        r#"{"monomials": [{"exponents": [3,0,0,0], "re": 1}, {"exponents": [0,3,0,0], "re": 1},
                          {"exponents": [0,0,3,0], "re": 1}, {"exponents": [0,0,0,3], "re": 1},
                          {"exponents": [1,1,1,0], "re": 0, "im": 0.5}]}"#,
    );
    let (code, _, err) = run(&["real", "--surface-file", &f]);
    assert_eq!(code, 1);
    assert!(err.contains("surface not real"));
}

#[test]
fn burnside_commands() {
    let line = |args: &[&str]| {
        let (code, out, _) = run(args);
        assert_eq!(code, 0, "{args:?}");
        out.trim().to_string()
    };
    assert_eq!(line(&["burnside", "res", "--to", "C3", "[S4/C2o]+[S4/C2e]+[S4/D8]"]), "9[C3/e]");
    assert_eq!(line(&["burnside", "tr", "--from", "D8"]), "[S4/D8]");
    assert_eq!(line(&["burnside", "tr", "--from", "C2L", "--group", "K4"]), "[K4/C2L]");
    assert_eq!(line(&["burnside", "mul", "[S4/D8]", "[S4/D8]"]), "[S4/K4norm] + [S4/D8]");
    let marks: serde_json::Value = serde_json::from_str(&line(&["burnside", "marks", "[S4/D8]"])).unwrap();
    assert_eq!(marks["marks"][0], 3);
    let chi: serde_json::Value =
        serde_json::from_str(&line(&["burnside", "character", "[S4/C2o]+[S4/C2e]+[S4/D8]"])).unwrap();
    assert_eq!(chi["values"], serde_json::json!([27, 3, 7, 0, 1]));
    let d8: serde_json::Value =
        serde_json::from_str(&line(&["burnside", "solve-character", "--group", "D8", "--of-lines", "fermat"])).unwrap();
    assert_eq!(d8["unique"], false);
    assert!(d8["solutions"].as_array().unwrap().len() >= 2);
    let s4: serde_json::Value =
        serde_json::from_str(&line(&["burnside", "solve-character", "--group", "S4", "--values", "27,3,7,0,1"])).unwrap();
    assert_eq!(s4["unique"], true);
    assert_eq!(s4["solutions"][0], "[S4/C2o] + [S4/C2e] + [S4/D8]");
}

#[test]
fn export_round_trip() {
    for (surface, segments, groups) in [("clebsch", 54, vec![12, 12, 3]), ("fermat", 6, vec![3])] {
        let (code, out, _) = run(&["export-lines", "--surface", surface, "--format", "obj"]);
        assert_eq!(code, 0);
        let parsed = parse_obj(&out);
        assert_eq!(parsed.vertices.len(), segments);
        assert_eq!(parsed.groups.iter().map(|g| g.1).collect::<Vec<_>>(), groups);
        assert!(parsed.groups.iter().all(|g| g.0.starts_with("orbit-")));
        let chart = AffineChart::new("read", parsed.chart.unwrap());
        let f = CubicSurface::builtin(surface).unwrap();
        for v in &parsed.vertices {
            assert!(surface_value(&f, &chart, v) < 1e-6);
        }
    }
    let (_, out, _) = run(&["export-lines", "--surface", "clebsch"]);
    let names: Vec<String> = parse_obj(&out).groups.into_iter().map(|g| g.0).collect();
    assert_eq!(names, ["orbit-C2o", "orbit-C2e", "orbit-D8"]);
}

#[test]
fn export_with_nothing_visible() {
    // A radius too small for any line still writes a valid, empty file.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.obj");
    let (code, _, _) = run(&["export-lines", "--surface", "fermat", "--radius", "0.01", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let parsed = parse_obj(&std::fs::read_to_string(&path).unwrap());
    assert!(parsed.vertices.is_empty());
    assert!(parsed.chart.is_some());
}

#[test]
fn conservation_command() {
    let (code, out, _) = run(&["verify-conservation", "--trials", "3", "--seed", "1"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("3/3 equal to [S4/C2o] + [S4/C2e] + [S4/D8]\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_eqlines");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["find-lines", "--surface", "fermat", "--seed", "7"]);
    assert_eq!(ok.status.code(), Some(0));
    let again = status(&["find-lines", "--surface", "fermat", "--seed", "7"]);
    assert_eq!(ok.stdout, again.stdout);
    assert_eq!(status(&["orbits"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.json", r#"{"monomials": [{"exponents": [1,1,1,0], "re": 0}]}"#);
    assert_eq!(status(&["find-lines", "--surface-file", &zero]).status.code(), Some(2));
}
