use std::path::Path;
use std::process::Command;

use strgraph_cli::experiment::{load_config, GridSpec};
use strgraph_cli::instance::GenKind;
use strgraph_cli::params::ParamOverrides;
use strgraph_cli::report::Cell;
use strgraph_cli::verify::{CheckKind, Status};
use strgraph_cli::{run_experiment, verify_bounds, CliError};

fn config(json: &str) -> strgraph_cli::ExperimentConfig {
    load_config(json).unwrap()
}

fn run(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_strgraph"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn star_colors_need_n() {
    let c = config(
        r#"{"grids": [{"generator": "star", "n": [3, 4, 5, 6, 7, 8]}], "analyses": ["color"], "t": 9}"#,
    );
    let report = run_experiment(&c, ParamOverrides::default()).unwrap();
    assert_eq!(report.rows.len(), 6);
    for (row, n) in report.rows.iter().zip(3..) {
        assert_eq!(row.colors, Cell::Int(n));
        assert_eq!(row.coloring_proper, Cell::Bool(true));
    }
}

#[test]
fn disjoint_independent_sets_are_everything() {
    let c =
        config(r#"{"grids": [{"generator": "disjoint", "n": [20, 10]}], "analyses": ["indep"]}"#);
    let report = run_experiment(&c, ParamOverrides::default()).unwrap();
    let sizes: Vec<&Cell> = report.rows.iter().map(|r| &r.indep_size).collect();
    assert_eq!(sizes, [&Cell::Int(10), &Cell::Int(20)]);
}

#[test]
fn random_separators_are_valid_with_ratios() {
    let c = config(
        r#"{"grids": [{"generator": "random-seg", "n": [100], "seeds": [1,2,3,4,5,6,7,8,9,10]}],
            "analyses": ["separate"]}"#,
    );
    let report = run_experiment(&c, ParamOverrides::default()).unwrap();
    assert_eq!(report.rows.len(), 10);
    for row in &report.rows {
        assert_eq!(row.sep_valid, Cell::Bool(true));
        assert!(matches!(row.sep_ratio, Cell::Num(r) if r > 0.0));
    }
    let v = verify_bounds(&report);
    assert_eq!(v.hard_failures(), 0);
    assert!(v.checks.iter().any(|c| c.kind == CheckKind::Hard));
}

#[test]
fn exact_separator_on_large_graphs_is_marked_skipped() {
    let c = config(
        r#"{"grids": [{"generator": "path", "n": [12, 30]}], "analyses": ["separate"], "separator": "exact"}"#,
    );
    let report = run_experiment(&c, ParamOverrides::default()).unwrap();
    assert_eq!(report.rows[0].sep_size, Cell::Int(1));
    assert_eq!(report.rows[1].sep_size, Cell::skip("n>20"));
    assert!(report.to_csv().unwrap().contains("skip:n>20"));
}

#[test]
fn plane_rows_pass_the_planar_checks() {
    let c = config(
        r#"{"grids": [{"generator": "plane-draw", "n": [15, 30], "seeds": [1, 2]}],
            "analyses": ["crossings", "quasiplanar"], "t": 2}"#,
    );
    let report = run_experiment(&c, ParamOverrides::default()).unwrap();
    let v = verify_bounds(&report);
    for row in 0..report.rows.len() {
        assert_eq!(v.find(row, "quasi_planar").unwrap().status, Status::Pass);
        assert_eq!(
            v.find(row, "planar_edges_at_most_3n_minus_6")
                .unwrap()
                .status,
            Status::Pass
        );
    }
}

#[test]
fn k6_star_is_flagged_and_its_bound_not_applicable() {
    let c =
        config(r#"{"grids": [{"generator": "star", "n": [6]}], "analyses": ["color"], "t": 6}"#);
    let report = run_experiment(&c, ParamOverrides::default()).unwrap();
    let v = verify_bounds(&report);
    assert_eq!(v.find(0, "kt_free").unwrap().status, Status::Fail);
    assert_eq!(
        v.find(0, "colors_within_theorem1_bound").unwrap().status,
        Status::NotApplicable
    );
    assert_eq!(v.hard_failures(), 0);
}

#[test]
fn instance_order_ignores_config_order_within_a_grid() {
    let c = config(
        r#"{"grids": [{"generator": "random-seg", "n": [20, 10], "seeds": [3, 1, 3]}], "analyses": ["indep"]}"#,
    );
    let specs: Vec<(usize, u64)> = c.instances().iter().map(|s| (s.n, s.seed)).collect();
    assert_eq!(specs, [(10, 1), (10, 3), (20, 1), (20, 3)]);
    // seeds mean nothing to deterministic generators
    let grid = GridSpec {
        generator: GenKind::Star,
        n: vec![4],
        m: vec![],
        cols: vec![],
        span: None,
        seeds: vec![1, 2],
    };
    let c2 = strgraph_cli::ExperimentConfig {
        grids: vec![grid],
        ..c
    };
    assert_eq!(c2.instances().len(), 1);
}

#[test]
fn bad_configs_are_rejected() {
    for bad in [
        r#"{"grids": [], "analyses": ["color"]}"#,
        r#"{"grids": [{"generator": "star", "n": []}], "analyses": ["color"]}"#,
        r#"{"grids": [{"generator": "star", "n": [4]}], "analyses": ["color"], "t": 1}"#,
        r#"{"grids": [{"generator": "star", "n": [4]}], "analyses": ["paint"]}"#,
        r#"{"grids": [{"generator": "star", "n": [4]}], "analyses": ["color"], "typo": 1}"#,
    ] {
        assert!(
            matches!(load_config(bad), Err(CliError::BadInput(_))),
            "{bad}"
        );
    }
    let too_big =
        config(r#"{"grids": [{"generator": "convex", "n": [65]}], "analyses": ["crossings"]}"#);
    assert_eq!(
        run_experiment(&too_big, ParamOverrides::default())
            .unwrap_err()
            .exit_code(),
        2
    );
}

#[test]
fn flags_override_config_constants() {
    let c = config(
        r#"{"grids": [{"generator": "star", "n": [4]}], "analyses": ["bound"], "params": {"d": 2, "C": 20}}"#,
    );
    let from_config = run_experiment(&c, ParamOverrides::default()).unwrap();
    assert_eq!((from_config.params.d, from_config.params.c), (2.0, 20.0));
    let flags = ParamOverrides {
        c: Some(30.0),
        ..Default::default()
    };
    let both = run_experiment(&c, flags).unwrap();
    assert_eq!((both.params.d, both.params.c), (2.0, 30.0));
    assert!(both.metadata_json().unwrap().contains("\"C\": 30.0"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("bad.txt"), "3 1\n0 7\n").unwrap();
    std::fs::write(d.join("graph.txt"), "4 3\n0 1\n1 2\n2 3\n").unwrap();
    assert_eq!(run(d, &["indep", "graph.txt", "--t", "3"]).0, 0);
    assert_eq!(run(d, &["indep", "bad.txt"]).0, 2);
    assert_eq!(run(d, &["indep", "missing.txt"]).0, 2);
    assert_eq!(run(d, &["crossings", "graph.txt"]).0, 2);
    assert_eq!(run(d, &["bound", "--t", "1"]).0, 2);
    assert_eq!(run(d, &["gen", "--kind", "star", "--n", "400"]).0, 2);
    assert_eq!(run(d, &["nonsense"]).0, 2);
    assert_eq!(CliError::Invariant("x".into()).exit_code(), 1);
}

#[test]
fn gen_then_analyse_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let (code, stdout, _) = run(
        d,
        &["gen", "--kind", "grid", "--n", "3", "--out", "k33.txt"],
    );
    assert_eq!(code, 0);
    assert!(stdout.starts_with("kind,n,seed\ngrid,6,"));
    let (code, stdout, _) = run(d, &["biclique", "k33.txt", "--exact", "--out", "bic.txt"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("exact,6,9,3,true"));
    assert_eq!(
        std::fs::read_to_string(d.join("bic.txt")).unwrap(),
        "A: 0 1 2\nB: 3 4 5\n"
    );
    let (_, graph, _) = run(d, &["build", "k33.txt"]);
    assert!(graph.starts_with("6 9\n0 3\n"));
    let (code, json, _) = run(
        d,
        &["separate", "k33.txt", "--algo", "exact", "--format", "json"],
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    // two vertices of one side leave a 4-vertex component, and 4 <= 2 * 6 / 3
    assert_eq!(v["sep_size"], 2);
    assert_eq!(v["valid"], true);
}

#[test]
fn experiment_writes_csv_and_metadata_and_verify_reads_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("c.json"),
        r#"{"grids": [{"generator": "cycle", "n": [5, 9]}], "analyses": ["color", "separate"], "t": 3}"#,
    )
    .unwrap();
    assert_eq!(run(d, &["experiment", "c.json", "--out", "r.csv"]).0, 0);
    let csv = std::fs::read_to_string(d.join("r.csv")).unwrap();
    assert!(csv.starts_with("generator,n_param,m_param,cols_param,seed,n,m,"));
    assert_eq!(csv.lines().count(), 3);
    let (code, listing, _) = run(d, &["verify", "r.json"]);
    assert_eq!(code, 0);
    assert!(listing.contains("0,cycle n=5,coloring_proper,hard,pass,size 3"));
}
