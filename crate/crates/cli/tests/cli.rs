use std::path::PathBuf;
use std::process::Command;

use cliquelab::fixtures;
use cliquelab_cli::{run, EXIT_INPUT, EXIT_OK, EXIT_USAGE};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .display()
        .to_string()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cliquelab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn shipped_figures_are_canonical() {
    for (name, g) in [("fig1.clq", fixtures::figure1()), ("fig2.clq", fixtures::figure2())] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(text, cliquelab::to_dimacs(&g) + "\n", "{name}");
    }
}

#[test]
fn colour_and_detect_figure_two() {
    let fig2 = fixture("fig2.clq");
    assert_eq!(
        cli(&["colour", &fig2]),
        (EXIT_OK, "2 colours: [1,3,5,7] [2,4,6]\n".into(), String::new())
    );
    assert_eq!(
        cli(&["colour", &fig2, "--delete", "1"]).1,
        "3 colours: [2,3] [4,6] [5,7]\n"
    );
    assert_eq!(cli(&["detect", &fig2]).1, "vertex 1: 2 -> 3 colours\n");
    assert_eq!(
        cli(&["detect", &fig2, "--all"]).1,
        "vertex 1: 2 -> 3 colours\nvertex 3: 2 -> 3 colours\n"
    );
    assert_eq!(cli(&["detect", &fixture("fig1.clq")]).1, "no misleading vertex\n");
}

#[test]
fn solve_figure_one() {
    let fig1 = fixture("fig1.clq");
    for variant in ["baseline", "inherited"] {
        let (code, out, _) = cli(&["solve", &fig1, "--variant", variant]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "omega=4 clique={1,3,6,8} nodes=4 events=0\n");
    }
    let (_, out, _) = cli(&["solve", &fig1, "--order", "degree", "--threads", "3"]);
    assert!(out.starts_with("omega=4 clique={1,3,6,8}"), "{out}");
    assert_eq!(cli(&["oracle", &fig1]).1, "omega=4 clique={1,3,6,8}\n");
}

#[test]
fn json_outputs_are_well_formed() {
    let fig1 = fixture("fig1.clq");
    let fig2 = fixture("fig2.clq");
    let parse = |args: &[&str]| -> serde_json::Value {
        let (code, out, _) = cli(args);
        assert_eq!(code, EXIT_OK, "{args:?}");
        assert_eq!(out.lines().count(), 1);
        serde_json::from_str(&out).unwrap()
    };
    let v = parse(&["solve", &fig1, "--json"]);
    assert_eq!(v["omega"], 4);
    assert_eq!(v["clique"], serde_json::json!([1, 3, 6, 8]));
    assert_eq!(v["variant"], "baseline");
    let v = parse(&["colour", &fig2, "--json"]);
    assert_eq!(v["num_colours"], 2);
    assert_eq!(v["classes"], serde_json::json!([[1, 3, 5, 7], [2, 4, 6]]));
    let v = parse(&["compare", &fig1, "--json"]);
    assert_eq!(v["omega_equal"], true);
    assert_eq!(v["baseline"]["clique_labels"], serde_json::json!([1, 3, 6, 8]));
    let v = parse(&["detect", &fig2, "--json"]);
    assert_eq!(
        v,
        serde_json::json!({"vertex": 1, "colours_before": 2, "colours_after": 3})
    );
    assert_eq!(parse(&["detect", &fig1, "--json"]), serde_json::Value::Null);
    assert_eq!(parse(&["oracle", &fig1, "--json"])["omega"], 4);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["frobnicate"],
        vec!["solve"],
        vec!["solve", "x.clq", "--bogus"],
        vec!["solve", "x.clq", "--variant", "best"],
        vec!["gen", "--n", "5", "--p", "2", "--seed", "1"],
        vec!["experiment", "--seeds", "5..1"],
    ] {
        assert_eq!(cli(&args).0, EXIT_USAGE, "{args:?}");
    }
    let fig1 = fixture("fig1.clq");
    assert_eq!(cli(&["solve", &fig1, "--threads", "0"]).0, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).0, EXIT_OK);
}

#[test]
fn input_errors_exit_two_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.clq");
    std::fs::write(&bad, "p edge 3 1\ne 1 1\n").unwrap();
    let (code, _, err) = cli(&["solve", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 2") && err.contains("bad.clq"), "{err}");
    assert_eq!(cli(&["colour", "/nonexistent/graph.clq"]).0, EXIT_INPUT);

    let big = dir.path().join("big.clq");
    std::fs::write(&big, "p edge 40 0\n").unwrap();
    let (code, _, err) = cli(&["oracle", big.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("limit"), "{err}");
    assert_eq!(
        cli(&["oracle", big.to_str().unwrap(), "--limit", "40"]).1,
        "omega=1 clique={1}\n"
    );
}

#[test]
fn mismatched_edge_count_is_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.clq");
    std::fs::write(&path, "p edge 3 3\ne 1 2\ne 1 2\ne 2 3\n").unwrap();
    let (code, out, err) = cli(&["solve", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("omega=2"));
    assert!(err.contains("warning") && err.contains("3 edges"), "{err}");
}

#[test]
fn gen_writes_parseable_dimacs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.clq");
    let (code, _, _) = cli(&[
        "gen",
        "--n",
        "20",
        "--p",
        "0.5",
        "--seed",
        "42",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let parsed = cliquelab::parse_dimacs(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(parsed.graph, cliquelab::random_graph(20, 0.5, 42).unwrap());
    assert!(parsed.warnings.is_empty());
    let (_, stdout, _) = cli(&["gen", "--n", "20", "--p", "0.5", "--seed", "42"]);
    assert_eq!(stdout, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn experiment_on_figures() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("summary.json");
    let (code, out, _) = cli(&[
        "experiment",
        &fixture("fig1.clq"),
        &fixture("fig2.clq"),
        "--summary",
        summary.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "instance,n,m,variant,omega,nodes,events,elapsed_ms");
    assert_eq!(lines.len(), 5);
    let omegas: Vec<&str> = lines[1..].iter().map(|l| l.split(',').nth(4).unwrap()).collect();
    assert_eq!(omegas, ["4", "4", "2", "2"]);
    let s: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(s["instances"], 2);

    let (code, out, _) = cli(&["experiment"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "instance,n,m,variant,omega,nodes,events,elapsed_ms\n");

    let (code, out, _) = cli(&["experiment", &fixture("fig1.clq"), "--timing"]);
    assert_eq!(code, EXIT_OK);
    assert!(!out.lines().nth(1).unwrap().ends_with(','));
}

#[test]
fn experiment_aborts_on_bad_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("broken.clq");
    std::fs::write(&bad, "e 1 2\n").unwrap();
    let (code, out, err) = cli(&["experiment", &fixture("fig1.clq"), bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.is_empty());
    assert!(err.contains("broken.clq"), "{err}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cliquelab");
    let status = Command::new(bin)
        .args(["solve", &fixture("fig1.clq")])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_OK));
    let status = Command::new(bin).arg("--nope").output().unwrap().status;
    assert_eq!(status.code(), Some(EXIT_USAGE));
    let status = Command::new(bin)
        .args(["solve", "/no/such/file"])
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(EXIT_INPUT));
}
