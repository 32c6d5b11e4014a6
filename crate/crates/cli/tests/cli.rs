use std::process::{Command, Output};

use pauli_geom_cli::GraphExport;

fn run(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pauli-geom"));
    cmd.args(args).env_remove("PAULI_GEOM_THREADS");
    if let Some(t) = threads {
        cmd.env("PAULI_GEOM_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args, None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn two_qubit_json_export() {
    let g: GraphExport = serde_json::from_str(&stdout(&["graph", "--p", "2", "--n", "2", "--format", "json"])).unwrap();
    assert_eq!((g.invariants.v, g.invariants.e), (15, 45));
    assert_eq!(g.invariants.degree, Some(6));
    assert_eq!(g.invariants.spectrum, Some(vec![(-3, 5), (1, 9), (6, 1)]));
    assert_eq!(g.invariants.strongly_regular, Some([15, 6, 1, 3]));
    assert_eq!(g.vertices.iter().map(|v| v.label.as_str()).take(4).collect::<Vec<_>>(), ["1", "2", "3", "a"]);

    // Edges recomputed from the exported coordinates alone.
    let form = |u: &[u32], v: &[u32]| {
        let (u, v): (Vec<i64>, Vec<i64>) = (u.iter().map(|&x| x.into()).collect(), v.iter().map(|&x| x.into()).collect());
        (u[0] * v[2] + u[1] * v[3] - u[2] * v[0] - u[3] * v[1]).rem_euclid(2)
    };
    let mut expected = Vec::new();
    for a in &g.vertices {
        for b in &g.vertices[a.id + 1..] {
            if form(&a.symplectic, &b.symplectic) == 0 {
                expected.push([a.id, b.id]);
            }
        }
    }
    assert_eq!(g.edges, expected);
}

#[test]
fn qutrit_dot_has_80_named_nodes() {
    let dot = stdout(&["graph", "--p", "3", "--n", "2", "--format", "dot"]);
    let nodes: Vec<&str> = dot.lines().filter(|l| l.ends_with(';') && !l.contains("--")).collect();
    let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
    assert_eq!(nodes.len(), 80);
    assert_eq!(edges, 80 * 25 / 2);
    assert!(nodes.contains(&"  \"a\";") && nodes.contains(&"  \"72\";"));
}

#[test]
fn non_prime_is_a_usage_error() {
    let out = run(&["graph", "--p", "4", "--n", "1"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("prime"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["verify", "--suite", "nope"], None).status.code(), Some(2));
    assert_eq!(run(&["mcs", "--p", "2", "--n", "2", "--format", "dot"], None).status.code(), Some(2));
    assert_eq!(run(&["mermin", "--p", "3", "--n", "2"], None).status.code(), Some(2));
    assert_eq!(run(&["ringline", "--ring", "Z4"], None).status.code(), Some(2));
}

#[test]
fn output_is_identical_across_thread_counts() {
    let commands: [&[&str]; 5] = [
        &["graph", "--p", "3", "--n", "2", "--format", "json"],
        &["graph", "--p", "2", "--n", "3", "--format", "dot"],
        &["mcs", "--p", "2", "--n", "3"],
        &["spreads", "--p", "2", "--n", "2", "--format", "json"],
        &["hyperplanes", "--p", "3", "--n", "2", "--dual", "--limit", "5"],
    ];
    for args in commands {
        let reference = run(args, Some("1"));
        assert_eq!(reference.status.code(), Some(0));
        for t in ["2", "8"] {
            assert_eq!(run(args, Some(t)).stdout, reference.stdout, "{args:?} with {t} threads");
        }
        let flag = run(&[args, &["--threads", "3"]].concat(), None);
        assert_eq!(flag.stdout, reference.stdout);
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.json");
    let args = ["graph", "--p", "2", "--n", "2", "--format", "json"];
    let out = run(&[&args[..], &["--out", path.to_str().unwrap()]].concat(), None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&args));
}

#[test]
fn qutrit_mcs_listing() {
    let text = stdout(&["mcs", "--p", "3", "--n", "2"]);
    let lines: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(lines.len(), 40);
    assert_eq!(lines[0], "L1: 1 5 a 9 13 e 41 45");
    assert_eq!(lines[39], "Z8: 16 22 27 37 44 50 63 65");
}

#[test]
fn six_unbiased_spreads() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["spreads", "--p", "2", "--n", "2", "--format", "json"])).unwrap();
    let spreads = v["spreads"].as_array().unwrap();
    assert_eq!(spreads.len(), 6);
    for s in spreads {
        assert_eq!(s["lines"].as_array().unwrap().len(), 5);
        assert!(s["mub_deviation"].as_f64().unwrap() < 1e-8);
    }
}

#[test]
fn mermin_products() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["mermin", "--p", "2", "--n", "2", "--format", "json"])).unwrap();
    assert_eq!(v["row_products"], serde_json::json!(["-1", "-1", "-1"]));
    assert_eq!(v["column_products"], serde_json::json!(["+1", "+1", "+1"]));
    assert_eq!(v["contradiction"], true);
}

#[test]
fn hyperplane_subsets() {
    let text = stdout(&["hyperplanes", "--p", "2", "--n", "2", "--subset", "1,2,6,9,12", "--subset", "1,a,b,c,4,7,10"]);
    let rows: Vec<&str> = text.lines().collect();
    assert!(rows[0].contains("Ovoid"), "{text}");
    assert!(rows[1].contains("PerpSet of 1"), "{text}");
}

#[test]
fn ring_line_point_counts() {
    for (ring, points) in [("Z2", 3), ("F4", 5), ("Z2x_sq", 6), ("Z2xZ2", 9), ("M2Z2", 35)] {
        let v: serde_json::Value = serde_json::from_str(&stdout(&["ringline", "--ring", ring, "--format", "json"])).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), points, "{ring}");
    }
}

#[test]
fn exit_code_follows_the_report() {
    for suite in ["ring_lines", "two_qubit"] {
        let out = run(&["verify", "--suite", suite, "--format", "json"], None);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let expected = if v["passed"].as_bool().unwrap() { 0 } else { 1 };
        assert_eq!(out.status.code(), Some(expected), "{suite}");
    }
    assert_eq!(run(&["verify", "--suite", "ring_lines"], None).status.code(), Some(0));
}

#[test]
fn partitions_pass() {
    for name in ["FP_CB", "BP_MS", "I_PG", "QUTRIT_GRID", "QUTRIT_OVOID", "QUTRIT_PERP"] {
        let out = run(&["partition", "--name", name], None);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
