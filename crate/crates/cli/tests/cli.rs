use std::path::Path;
use std::process::{Command, Output};

use a2web::io::{lattices_to_json, LatticeJson};
use a2web::series::{LaurentScalar, Rational};
use a2web::webs::{iso, Web};
use a2web::Lattice;

fn a2web(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a2web")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = a2web(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

/// The eight lattices of the octagon, as text generator columns.
fn octagon_json() -> String {
    let rows: [[[&str; 3]; 3]; 8] = [
        [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        [["t^-1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        [["t^-2", "0", "0"], ["0", "t^-1", "0"], ["0", "0", "1"]],
        [["t^-2", "0", "0"], ["0", "t^-2", "0"], ["0", "0", "1"]],
        [["t^-1", "0", "0"], ["0", "t^-2", "0"], ["0", "0", "1"]],
        [["t^-1", "0", "0"], ["0", "t^-2", "0"], ["t^-2", "0", "t^-1"]],
        [["t^-1", "0", "0"], ["0", "t^-1", "0"], ["t^-2", "t^-2", "t^-1"]],
        [["t^-1", "t^-1", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    ];
    let lattices: Vec<Lattice<Rational>> = rows
        .iter()
        .map(|cols| {
            let cols: Vec<Vec<LaurentScalar<Rational>>> =
                cols.iter().map(|c| c.iter().map(|e| LaurentScalar::parse(&(), e).unwrap()).collect()).collect();
            Lattice::from_columns(&cols, &()).unwrap()
        })
        .collect();
    lattices_to_json(&lattices).to_string()
}

#[test]
fn dim_matches_diagram_count() {
    assert_eq!(ok(&["dim", "121212"]), ok(&["diagrams", "121212", "--count"]));
    assert_eq!(ok(&["dim", "121212"]).trim(), "6");
    assert_eq!(ok(&["dim", "11"]).trim(), "0");
}

#[test]
fn verify_prints_a_line_per_component() {
    let text = ok(&["verify", "1212"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS component")).count(), 2);
    assert!(text.lines().last().unwrap().starts_with("PASS count"));
    let geometric = ok(&["verify", "1122", "--geometric", "--seed", "5"]);
    assert!(geometric.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn exit_codes() {
    assert_eq!(a2web(&["dim", "123"]).status.code(), Some(2));
    assert_eq!(a2web(&["hull", "whatever.json"]).status.code(), Some(2));
    assert_eq!(a2web(&["frobnicate"]).status.code(), Some(2));
    let out = a2web(&["realize", "1212", "--component", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
    assert_eq!(a2web(&["reduce", "/nonexistent/web.json"]).status.code(), Some(1));
    assert_eq!(a2web(&["realize", "1212", "--component", "0", "--p", "10"]).status.code(), Some(1));
}

#[test]
fn octagon_web_matches_the_golden_tikz() {
    let dir = tempfile::tempdir().unwrap();
    let listing = ok(&["webs", "12121212", "--format", "tikz", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(listing.lines().count(), 23);
    let tikz = std::fs::read_to_string(dir.path().join("12121212-8.tex")).unwrap();
    assert_eq!(tikz, include_str!("golden/octagon_web.tex"));
    // One arrow per boundary leg plus the eight around the face.
    let legs = tikz.lines().filter(|l| l.starts_with("  \\draw[->] (v") && l.matches("(v").count() == 2).count();
    assert_eq!(legs, 16);
}

#[test]
fn web_json_round_trips_through_reduce() {
    let webs: Vec<Web> = serde_json::from_str(&ok(&["webs", "121212"])).unwrap();
    assert_eq!(webs.len(), 6);
    let dir = tempfile::tempdir().unwrap();
    for web in &webs {
        let file = write(dir.path(), "web.json", &serde_json::to_string(web).unwrap());
        let reduced: serde_json::Value = serde_json::from_str(&ok(&["reduce", &file])).unwrap();
        let terms = reduced.as_array().unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0]["coefficient"], 1);
        let back: Web = serde_json::from_value(terms[0]["web"].clone()).unwrap();
        assert!(iso(&back, web));
    }
    let empty = write(dir.path(), "empty.json", &serde_json::to_string(&Web::empty()).unwrap());
    let reduced: serde_json::Value = serde_json::from_str(&ok(&["reduce", &empty])).unwrap();
    assert_eq!(reduced[0]["coefficient"], 1);
    assert_eq!(reduced[0]["web"], serde_json::json!({"vertices": [], "darts": [], "boundary": [], "loops": 0}));
}

#[test]
fn dualize_and_promote_read_files() {
    let dir = tempfile::tempdir().unwrap();
    let diskoid = r#"{"vertex_count": 3, "walk": [0, 1, 2], "triangles": [[0, 1, 2]], "arrows": [[0, 1], [1, 2], [2, 0]]}"#;
    let file = write(dir.path(), "diskoid.json", diskoid);
    let web: Web = serde_json::from_str(&ok(&["dualize", &file])).unwrap();
    assert_eq!(web.type_word().unwrap().to_string(), "111");
    assert!(ok(&["dualize", &file, "--format", "dot"]).starts_with("digraph"));

    let diagrams: Vec<serde_json::Value> = serde_json::from_str(&ok(&["diagrams", "12121212", "--json"])).unwrap();
    let file = write(dir.path(), "octagon.json", &diagrams[8].to_string());
    let once: serde_json::Value = serde_json::from_str(&ok(&["promote", &file])).unwrap();
    assert_eq!(once["word"], "21212121");
    let file = write(dir.path(), "once.json", &once.to_string());
    let twice: serde_json::Value = serde_json::from_str(&ok(&["promote", &file])).unwrap();
    assert_eq!(twice, diagrams[8]);
}

#[test]
fn distance_and_hull_on_the_octagon() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "octagon.json", &octagon_json());
    assert_eq!(ok(&["distance", &file, "0", "2"]).trim(), "(2,1,0)");
    assert_eq!(ok(&["distance", &file, "0", "7"]).trim(), "(1,0,0)");
    assert_eq!(a2web(&["distance", &file, "0", "8"]).status.code(), Some(1));

    let hull: serde_json::Value = serde_json::from_str(&ok(&["hull", "--conv", &file])).unwrap();
    assert_eq!(hull["classes"].as_array().unwrap().len(), 9);
    assert_eq!(hull["complex"]["triangles"].as_array().unwrap().len(), 8);
    for flag in ["--min", "--max"] {
        let h: serde_json::Value = serde_json::from_str(&ok(&["hull", flag, &file])).unwrap();
        assert_eq!(h["classes"].as_array().unwrap().len(), 11);
    }
    assert!(ok(&["hull", "--conv", "--dot", &file]).starts_with("graph complex"));
    assert_eq!(a2web(&["hull", "--min", "--max", &file]).status.code(), Some(2));
}

#[test]
fn realize_is_deterministic_and_checks_out() {
    let args = ["realize", "12121212", "--component", "8", "--seed", "42"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let lattices: Vec<LatticeJson> = serde_json::from_str(&first).unwrap();
    assert_eq!(lattices.len(), 8);
    assert!(lattices.iter().all(|l| l.field == "Fp" && l.p == Some(10007)));
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "polygon.json", &first);
    let expected = ["(0,0,0)", "(1,0,0)", "(2,1,0)", "(2,2,0)", "(2,1,0)", "(2,2,0)", "(2,1,0)", "(1,0,0)"];
    for (j, e) in expected.iter().enumerate() {
        assert_eq!(ok(&["distance", &file, "0", &j.to_string()]).trim(), *e, "vertex {j}");
    }
    let q = ok(&["realize", "1212", "--component", "1", "--field", "Q"]);
    assert!(q.contains("\"Q\""));
}
