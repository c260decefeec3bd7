use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn paramdiam(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paramdiam"))
        .args(args)
        .current_dir(dir)
        .env_remove("PARAMDIAM_THREADS")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn scratch(files: &[(&str, &str)]) -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in files {
        fs::write(dir.path().join(name), body).unwrap();
    }
    dir
}

const P5: &str = "5 4\n0 1\n1 2\n2 3\n3 4\n";
const TRIANGLE_WITH_TAIL: &str = "4 4\n0 1\n0 2\n1 2\n2 3\n";

#[test]
fn path_via_fes_verifies() {
    let dir = scratch(&[("p5.txt", P5)]);
    let r = report(&paramdiam(&["solve", "p5.txt", "--algo", "fes", "--verify"], dir.path()));
    assert_eq!(r["diameter"], 4);
    assert_eq!(r["algorithm"], "fes");
    assert_eq!(r["parameters"]["feedback_edge_number"], 0);
    assert_eq!(r["verify"]["verdict"], "match");
}

#[test]
fn trace_goes_to_stderr_as_json_lines() {
    let dir = scratch(&[("p5.txt", P5)]);
    let out = paramdiam(&["solve", "p5.txt", "--algo", "fes", "--trace"], dir.path());
    report(&out);
    let lines: Vec<Value> = String::from_utf8(out.stderr)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|e| e["rule"] == "degree_one"));
}

#[test]
fn bisection_of_triangle_with_tail() {
    let dir = scratch(&[("g.txt", TRIANGLE_WITH_TAIL)]);
    let gen = paramdiam(&["generate", "bisection", "--input", "g.txt", "--seed", "0", "--out", "b.txt"], dir.path());
    assert!(gen.status.success());
    let side: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("b.txt.json")).unwrap()).unwrap();
    assert_eq!(side["relation"]["kind"], "input_plus");
    assert_eq!(side["witness"]["kind"], "bisection");
    let r = report(&paramdiam(&["solve", "b.txt", "--algo", "naive"], dir.path()));
    assert_eq!(r["diameter"], 6);
}

#[test]
fn every_solver_agrees_on_generated_graphs() {
    let dir = scratch(&[]);
    for (kind, extra) in [("tree-plus-k", "--k"), ("cograph-plus", "--extra"), ("er", "--p")] {
        let value = if kind == "er" { "0.15" } else { "3" };
        let gen = paramdiam(&["generate", kind, "--n", "40", extra, value, "--seed", "7", "--out", "g.txt"], dir.path());
        assert!(gen.status.success(), "{}", String::from_utf8_lossy(&gen.stderr));
        for algo in ["auto", "naive", "fes", "cograph", "hindex-diam", "clique", "deletion"] {
            let r = report(&paramdiam(&["solve", "g.txt", "--algo", algo, "--verify"], dir.path()));
            assert_eq!(r["verify"]["verdict"], "match", "{kind} {algo}");
        }
    }
}

#[test]
fn explicit_modulators() {
    // Removing two non-adjacent vertices of a 5-cycle leaves an edge plus an isolated vertex.
    let c5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    let dir = scratch(&[("c5.txt", c5), ("k.txt", "# deletion set\n0\n2\n"), ("hubs.txt", "0 3\n")]);
    let r = report(&paramdiam(&["solve", "c5.txt", "--algo", "cograph", "--modulator", "k.txt", "--verify"], dir.path()));
    assert_eq!((r["diameter"].as_u64(), r["parameters"]["modulator_size"].as_u64()), (Some(2), Some(2)));
    let r = report(&paramdiam(&["solve", "c5.txt", "--algo", "hindex-diam", "--modulator", "hubs.txt"], dir.path()));
    assert_eq!(r["diameter"], 2);
}

#[test]
fn exit_codes() {
    let dir = scratch(&[
        ("p5.txt", P5),
        ("bad.txt", "3 1\n0 x\n"),
        ("loop.txt", "2 1\n1 1\n"),
        ("split.txt", "4 2\n0 1\n2 3\n"),
        ("k.txt", "0\n"),
        ("far.txt", "9\n"),
    ]);
    let code = |args: &[&str]| paramdiam(args, dir.path()).status.code();
    assert_eq!(code(&["solve", "bad.txt"]), Some(2));
    assert_eq!(code(&["solve", "loop.txt"]), Some(2));
    assert_eq!(code(&["solve", "split.txt"]), Some(3));
    assert_eq!(code(&["solve", "split.txt", "--algo", "fes"]), Some(3));
    assert_eq!(code(&["solve", "p5.txt", "--algo", "clique", "--modulator", "k.txt"]), Some(4));
    assert_eq!(code(&["solve", "p5.txt", "--algo", "cograph", "--modulator", "far.txt"]), Some(4));
    assert_eq!(code(&["solve", "p5.txt", "--algo", "fes", "--modulator", "k.txt"]), Some(1));
    assert_eq!(code(&["solve", "missing.txt"]), Some(1));
    assert_eq!(code(&["params", "p5.txt"]), Some(0));
}

#[test]
fn sat_generation() {
    let dir = scratch(&[("f.cnf", "p cnf 3 2\n1 -2 0\n2 3 0\n"), ("empty.cnf", "p cnf 2 1\n0\n")]);
    let gen = paramdiam(&["generate", "sat", "--cnf", "f.cnf", "--seed", "0", "--out", "s.txt"], dir.path());
    assert!(gen.status.success());
    let r = report(&paramdiam(&["solve", "s.txt", "--algo", "naive"], dir.path()));
    assert_eq!(r["diameter"], 5);
    let bad = paramdiam(&["generate", "sat", "--cnf", "empty.cnf", "--seed", "0", "--out", "s.txt"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn generators_are_deterministic() {
    let dir = scratch(&[]);
    let run = |seed: &str, out: &str| {
        let gen = paramdiam(&["generate", "cograph-plus", "--n", "60", "--extra", "4", "--seed", seed, "--out", out], dir.path());
        assert!(gen.status.success());
        fs::read_to_string(dir.path().join(out)).unwrap()
    };
    assert_eq!(run("11", "a.txt"), run("11", "b.txt"));
    assert_ne!(run("11", "a.txt"), run("12", "c.txt"));
    let missing_seed = paramdiam(&["generate", "er", "--out", "x.txt"], dir.path());
    assert!(!missing_seed.status.success());
}

#[test]
fn bench_writes_csv() {
    let dir = scratch(&[]);
    let out = paramdiam(
        &["bench", "--family", "er", "--sizes", "20,30", "--repeats", "2", "--algos", "naive,hindex-diam", "--seed", "1", "--out", "b.csv", "--threads", "2"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(dir.path().join("b.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,param,algo,ms"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn thread_count_must_be_positive() {
    let dir = scratch(&[("p5.txt", P5)]);
    assert!(!paramdiam(&["--threads", "0", "solve", "p5.txt"], dir.path()).status.success());
    assert!(paramdiam(&["--threads", "3", "solve", "p5.txt"], dir.path()).status.success());
}
