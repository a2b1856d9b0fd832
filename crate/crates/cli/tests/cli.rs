//! End-to-end runs of the `horizon` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use horizon_cli::formats::{parse_graph, print_graph};
use horizon_cli::ResultRecord;
use horizon_core::instances::{fig1, fig2, FIG2_DEFAULT_LOOPS};
use horizon_core::rational::{parse_rational, to_fraction_string};
use horizon_core::{
    expected_utility, lasso_utility_at, utility_sequence, FinitePath, Lasso, Rational,
    StoppingDistribution, WeightedGraph,
};
use tempfile::TempDir;

fn horizon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horizon"))
        .args(args)
        .env_remove("HORIZON_WORKERS")
        .output()
        .unwrap()
}

fn ok_record(args: &[&str]) -> ResultRecord {
    let out = horizon(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    ResultRecord::parse(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn value(r: &ResultRecord) -> Rational {
    let text = r.get("value").unwrap();
    let v = parse_rational(text).unwrap();
    assert_eq!(to_fraction_string(&v), text, "value string round-trips");
    v
}

fn parse_path(text: &str) -> FinitePath {
    FinitePath::from_vertices(text.split(' ').map(|v| v.parse().unwrap()).collect())
}

fn parse_lasso(text: &str) -> Lasso {
    let (stem, cycle) = text.split_once(" | ").unwrap();
    Lasso::new(parse_path(stem), parse_path(cycle)).unwrap()
}

fn fig1_file(dir: &TempDir) -> (PathBuf, WeightedGraph) {
    let g = fig1(3).unwrap();
    (write(dir, "fig1.g", &print_graph(&g)), g)
}

#[test]
fn fixed_on_the_cycle_exit_graph() {
    let dir = TempDir::new().unwrap();
    let (path, g) = fig1_file(&dir);
    for method in ["bellman", "maxplus", "both"] {
        let r = ok_record(&["fixed", s(&path), "--horizon", "7", "--method", method]);
        assert_eq!(value(&r), parse_rational("1").unwrap());
        if method != "maxplus" {
            let w = parse_path(r.get("witness").unwrap());
            assert_eq!(w.len(), 7);
            assert_eq!(w.weight(&g).unwrap(), value(&r));
        }
    }
}

#[test]
fn fixed_on_three_loops() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "fig2.g",
        &print_graph(&fig2(FIG2_DEFAULT_LOOPS).unwrap()),
    );
    let r = ok_record(&["fixed", s(&path), "--horizon", "32", "--method", "both"]);
    assert_eq!(r.get("value"), Some("1/1"));
}

#[test]
fn fixed_on_a_self_loop() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "loop.g", "vertices 1\nedge 0 0 2\n");
    let r = ok_record(&["fixed", s(&path), "--horizon", "5"]);
    assert_eq!(r.get("value"), Some("10/1"));
    assert_eq!(r.get("witness"), Some("0 0 0 0 0 0"));
}

#[test]
fn record_field_order_is_stable() {
    let dir = TempDir::new().unwrap();
    let (path, _) = fig1_file(&dir);
    let r = ok_record(&["fixed", s(&path), "--horizon", "4"]);
    let keys: Vec<&str> = r.fields().iter().map(|(k, _)| k.as_str()).collect();
    assert_eq!(
        keys,
        [
            "command",
            "inputs",
            "start",
            "horizon",
            "method",
            "value",
            "witness",
            "elapsed_ms"
        ]
    );
    let again = ok_record(&["fixed", s(&path), "--horizon", "4"]);
    assert_eq!(r.get("inputs"), again.get("inputs"));
    let other = ok_record(&["fixed", s(&path), "--horizon", "5"]);
    assert_ne!(r.get("inputs"), other.get("inputs"));
}

#[test]
fn fixed_methods_agree_on_random_graphs() {
    let dir = TempDir::new().unwrap();
    for seed in 0..6 {
        let path = dir.path().join(format!("r{seed}.g"));
        ok_record_gen(&[
            "gen",
            "random",
            "--vertices",
            "6",
            "--seed",
            &seed.to_string(),
            "--output",
            s(&path),
        ]);
        for t in ["0", "1", "17", "64"] {
            let b = ok_record(&["fixed", s(&path), "--horizon", t, "--method", "bellman"]);
            let m = ok_record(&["fixed", s(&path), "--horizon", t, "--method", "maxplus"]);
            assert_eq!(b.get("value"), m.get("value"));
        }
    }
}

fn ok_record_gen(args: &[&str]) -> Vec<u8> {
    let out = horizon(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn specified_dirac_matches_fixed() {
    let dir = TempDir::new().unwrap();
    let (path, _) = fig1_file(&dir);
    let dist = write(&dir, "d", "7 1\n");
    let layered = ok_record(&["specified", s(&path), s(&dist)]);
    let fixed = ok_record(&["fixed", s(&path), "--horizon", "7"]);
    assert_eq!(layered.get("value"), fixed.get("value"));
}

#[test]
fn specified_matches_path_enumeration() {
    let dir = TempDir::new().unwrap();
    let text =
        "vertices 3\nedge 0 1 2\nedge 0 2 -1\nedge 1 0 -3\nedge 1 2 1\nedge 2 2 1\nedge 2 0 4\n";
    let path = write(&dir, "g", text);
    let g = parse_graph(text, "g").unwrap();
    let dist_path = write(&dir, "d", "1 1/2\n3 1/2\n");
    let dist = StoppingDistribution::new(vec![
        (1, parse_rational("1/2").unwrap()),
        (3, parse_rational("1/2").unwrap()),
    ])
    .unwrap();
    let mut paths = vec![FinitePath::new(0)];
    for _ in 0..3 {
        paths = paths
            .into_iter()
            .flat_map(|p| {
                g.successors(p.end()).iter().map(move |(t, _)| {
                    let mut q = p.clone();
                    q.push(*t);
                    q
                })
            })
            .collect();
    }
    let best = paths
        .iter()
        .map(|p| expected_utility(&utility_sequence(p, &g).unwrap(), &dist).unwrap())
        .max()
        .unwrap();
    let r = ok_record(&["specified", s(&path), s(&dist_path)]);
    assert_eq!(value(&r), best);
    let w = parse_path(r.get("witness").unwrap());
    assert_eq!(
        expected_utility(&utility_sequence(&w, &g).unwrap(), &dist).unwrap(),
        best
    );
}

#[test]
fn specified_rejects_missing_mass() {
    let dir = TempDir::new().unwrap();
    let (path, _) = fig1_file(&dir);
    let dist = write(&dir, "d", "1 1/3\n4 1/3\n");
    let out = horizon(&["specified", s(&path), s(&dist)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("short of 1 by 1/3"));
}

#[test]
fn adversarial_cycle_beats_exit() {
    let dir = TempDir::new().unwrap();
    let (path, g) = fig1_file(&dir);
    let r = ok_record(&["adversarial", s(&path), "--expected-horizon", "7"]);
    assert_eq!(r.get("value"), Some("-1/1"));
    let plan = parse_lasso(r.get("witness").unwrap());
    assert!(plan.is_simple());
    assert_eq!(plan.cycle().vertices(), &[0, 1, 2, 0]);
    assert_eq!(plan.stem_len(), 0);
    // Cycling forever: utility -1 at every time 3k+1.
    for k in 0..5 {
        assert_eq!(
            lasso_utility_at(&plan, &g, 3 * k + 1).unwrap(),
            parse_rational("-1").unwrap()
        );
    }
}

#[test]
fn adversarial_three_loops_zero() {
    let dir = TempDir::new().unwrap();
    let g = fig2(FIG2_DEFAULT_LOOPS).unwrap();
    let path = write(&dir, "fig2.g", &print_graph(&g));
    let r = ok_record(&["adversarial", s(&path), "--expected-horizon", "32"]);
    assert_eq!(r.get("value"), Some("0/1"));
    let plan = parse_lasso(r.get("witness").unwrap());
    assert_eq!(plan.cycle_weight(&g).unwrap(), parse_rational("0").unwrap());
    assert_eq!(plan.cycle().start(), 0);
}

#[test]
fn adversarial_self_loop_line() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "loop.g", "vertices 1\nedge 0 0 -3\n");
    let r = ok_record(&["adversarial", s(&path), "--expected-horizon", "5/2"]);
    assert_eq!(r.get("value"), Some("-15/2"));
    assert_eq!(r.get("attained"), Some("true"));
}

#[test]
fn adversarial_decision_probe() {
    let dir = TempDir::new().unwrap();
    let (path, _) = fig1_file(&dir);
    let yes = ok_record(&[
        "adversarial",
        s(&path),
        "--expected-horizon",
        "7",
        "--decide-only",
        "-1",
    ]);
    assert_eq!(yes.get("decision"), Some("true"));
    assert!(yes.get("witness").unwrap().contains(" | "));
    let no = ok_record(&[
        "adversarial",
        s(&path),
        "--expected-horizon",
        "7",
        "--decide-only",
        "-99/100",
    ]);
    assert_eq!(no.get("decision"), Some("false"));
    assert_eq!(no.get("witness"), Some("none"));
}

#[test]
fn adversarial_rejects_nonpositive_horizon() {
    let dir = TempDir::new().unwrap();
    let (path, _) = fig1_file(&dir);
    assert_eq!(
        horizon(&["adversarial", s(&path), "--expected-horizon", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_fig1_matches_weights() {
    let text = String::from_utf8(ok_record_gen(&["gen", "fig1", "--n", "3"])).unwrap();
    assert_eq!(
        text,
        "vertices 4\nedge 0 1 -1\nedge 0 3 1\nedge 1 2 0\nedge 2 0 1\nedge 3 3 -1\n"
    );
}

#[test]
fn gen_fig2_validates_lengths() {
    let text = String::from_utf8(ok_record_gen(&["gen", "fig2"])).unwrap();
    assert_eq!(
        parse_graph(&text, "g").unwrap(),
        fig2(FIG2_DEFAULT_LOOPS).unwrap()
    );
    assert_eq!(
        horizon(&["gen", "fig2", "--loops", "6,10,14"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_np_gadget_sidecar() {
    let dir = TempDir::new().unwrap();
    let base = write(
        &dir,
        "tri.g",
        "vertices 3\nedge 0 1 0\nedge 1 2 0\nedge 2 0 0\n",
    );
    let sidecar = dir.path().join("gadget.rec");
    let out = dir.path().join("gadget.g");
    ok_record_gen(&[
        "gen",
        "np-gadget",
        s(&base),
        "--sidecar",
        s(&sidecar),
        "--output",
        s(&out),
    ]);
    let rec = ResultRecord::parse(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(rec.get("horizon"), Some("4"));
    assert_eq!(rec.get("threshold"), Some("5/1"));
    let g = parse_graph(&std::fs::read_to_string(&out).unwrap(), "g").unwrap();
    assert_eq!(g.vertex_count(), 5);
}

#[test]
fn gen_random_is_deterministic() {
    let args = [
        "gen",
        "random",
        "--vertices",
        "7",
        "--max-weight",
        "9",
        "--density",
        "0.4",
        "--seed",
        "1",
    ];
    let a = ok_record_gen(&args);
    assert_eq!(a, ok_record_gen(&args));
    let text = String::from_utf8(a).unwrap();
    assert_eq!(print_graph(&parse_graph(&text, "g").unwrap()), text);
}

#[test]
fn parse_errors_report_lines() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.g", "vertices 2\nedge 0 1 1\nedge 1 0 one\n");
    let out = horizon(&["fixed", s(&bad), "--horizon", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.g:3:"));
    let dead = write(&dir, "dead.g", "vertices 2\nedge 0 1 1\n");
    let out = horizon(&["fixed", s(&dead), "--horizon", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex 1 has no outgoing edge"));
}

#[test]
fn verify_default_corpus_passes() {
    let r = ok_record(&[
        "verify",
        "--corpus-size",
        "50",
        "--max-vertices",
        "4",
        "--seed",
        "7",
    ]);
    assert_eq!(r.get("mismatches"), Some("0"));
    for (k, v) in r.fields() {
        if k.starts_with("pass.") {
            let (p, t) = v.split_once('/').unwrap();
            assert_eq!(p, t, "{k}");
        }
    }
}

#[test]
fn verify_reports_injected_fault() {
    let out = horizon(&["verify", "--corpus-size", "5", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("counterexample: "));
    assert!(text.contains("graph:\nvertices "));
}

#[test]
fn verify_refuses_large_graphs() {
    assert_eq!(
        horizon(&["verify", "--max-vertices", "9"]).status.code(),
        Some(4)
    );
}

#[test]
fn worker_count_from_environment() {
    let dir = TempDir::new().unwrap();
    let (path, _) = fig1_file(&dir);
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_horizon"))
            .args(["adversarial", s(&path), "--expected-horizon", "7"])
            .env("HORIZON_WORKERS", workers)
            .output()
            .unwrap()
    };
    assert!(run("2").status.success());
    assert_eq!(run("zero").status.code(), Some(2));
}
