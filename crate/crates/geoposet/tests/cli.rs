use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use geoposet::format::{self, ChainFile, ClassesFile, PosetFile, WitnessFile};

fn geoposet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geoposet")).args(args).env_remove("GEOPOSET_THREADS").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn enumerate_poset_hasse_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let classes = p(dir.path(), "p5.json");
    let o = geoposet(&["enumerate", "--family", "path", "--n", "5", "--out", &classes]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let file: ClassesFile = format::read_json(Path::new(&classes)).unwrap();
    let (_, ids, parsed) = format::classes_from_json(&file).unwrap();
    assert_eq!(ids, ["0.1", "1.1", "1.2", "2.1", "3.1"]);
    assert!(parsed.iter().all(|c| c.witness().is_some()));

    let poset = p(dir.path(), "p5-poset.json");
    let dot_a = p(dir.path(), "a.dot");
    assert_eq!(code(&geoposet(&["poset", "--classes", &classes, "--out", &poset, "--dot", &dot_a])), 0);
    let pf: PosetFile = format::read_json(Path::new(&poset)).unwrap();
    assert_eq!(pf.hasse.len(), 5);
    assert!(!pf.analyses.lattice || pf.analyses.graded);
    assert_eq!(pf.analyses.minimal, ["0.1"]);
    assert_eq!(pf.analyses.maximal, ["3.1"]);
    let (_, rebuilt) = format::poset_from_json(&pf).unwrap();
    assert_eq!(format::poset_to_json(&rebuilt, &pf.classes), pf);

    let dot_b = p(dir.path(), "b.dot");
    assert_eq!(code(&geoposet(&["hasse", "--poset", &poset, "--dot", &dot_b])), 0);
    let dot = fs::read_to_string(&dot_b).unwrap();
    assert_eq!(dot, fs::read_to_string(&dot_a).unwrap());
    assert_eq!(dot.matches("[label=").count(), 5);
    assert_eq!(dot.matches("->").count(), 5);
    assert!(dot.contains("\"0.1\" [label=\"0.1 (0)\"]"));
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, threads: &str, fam: &str, n: &str| {
        let out = p(dir.path(), name);
        let o = geoposet(&["--threads", threads, "enumerate", "--family", fam, "--n", n, "--samples", "3000", "--out", &out]);
        assert_eq!(code(&o), 0);
        fs::read(out).unwrap()
    };
    assert_eq!(run("a.json", "1", "cycle", "5"), run("b.json", "4", "cycle", "5"));
    assert_eq!(run("c.json", "1", "clique", "5"), run("d.json", "3", "clique", "5"));
    assert_eq!(run("e.json", "2", "clique", "5"), run("f.json", "2", "clique", "5"));

    let env_out = p(dir.path(), "g.json");
    let o = Command::new(env!("CARGO_BIN_EXE_geoposet"))
        .args(["enumerate", "--family", "cycle", "--n", "5", "--out", &env_out])
        .env("GEOPOSET_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read(env_out).unwrap(), run("h.json", "1", "cycle", "5"));
}

#[test]
fn realize_writes_a_rereadable_witness() {
    let a = geoposet(&["realize", "--family", "path", "--n", "6", "--crossings", "e1xe3"]);
    assert_eq!(code(&a), 0);
    let w: WitnessFile = serde_json::from_slice(&a.stdout).unwrap();
    let (d, x) = format::witness_from_json(&w).unwrap();
    assert_eq!(x.len(), 1);
    assert_eq!(d.positions().len(), 6);
    assert!(w.positions.values().all(|pt| pt.x.contains('/') && pt.y.contains('/')));
    let b = geoposet(&["--threads", "3", "realize", "--family", "path", "--n", "6", "--crossings", "e1xe3"]);
    assert_eq!(a.stdout, b.stdout);

    let k = geoposet(&["realize", "--family", "clique", "--n", "5", "--crossings", "e1-3xe2-4"]);
    assert_eq!(code(&k), 0);
    let w: WitnessFile = serde_json::from_slice(&k.stdout).unwrap();
    assert_eq!(w.crossings, vec![["e1-3".to_string(), "e2-4".to_string()]]);
}

#[test]
fn params_report_has_table_rows() {
    let dir = tempfile::tempdir().unwrap();
    let classes = p(dir.path(), "k5.json");
    assert_eq!(code(&geoposet(&["enumerate", "--family", "clique", "--n", "5", "--samples", "5000", "--out", &classes])), 0);
    let o = geoposet(&["params", "--classes", &classes]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 3);
    // id, cr, |E0|, omega, D0, M, hull
    assert_eq!(rows[0][..6], ["1.1", "1", "8", "4", "4,3,3,3,3", "1,1,1,1,0"]);
    assert_eq!(rows[2][..4], ["5.1", "5", "5", "5"]);
    assert_eq!(rows[2][6], "5");
}

#[test]
fn chain_outputs() {
    let o = geoposet(&["chain", "--n", "7"]);
    assert_eq!(code(&o), 0);
    let c: ChainFile = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c.steps.iter().map(|s| s.hull_size).collect::<Vec<_>>(), [3, 4, 5, 6, 7]);
    for s in &c.steps {
        let (_, x) = format::witness_from_json(&s.witness).unwrap();
        assert_eq!(x.len(), s.cr);
    }
    let o = geoposet(&["chain", "--n", "6", "--family", "path"]);
    assert_eq!(code(&o), 0);
    let c: ChainFile = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c.steps.iter().map(|s| s.cr).collect::<Vec<_>>(), [0, 1, 2, 3, 4, 5, 6]);
    assert_eq!(c.steps[0].id, "0.1");
    assert_eq!(c.steps[6].id, "6.1");
}

#[test]
fn verify_suites_report_and_exit() {
    let o = geoposet(&["verify", "--suite", "c5"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("PASS  C5: crossing counts are [0, 1, 2, 3, 5]"));
    assert!(!text.contains("FAIL"));

    // the chain suite carries the recorded 8.2 versus 9.2 conflict
    let o = geoposet(&["verify", "--suite", "chains"]);
    assert_eq!(code(&o), 1);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("FAIL")).count(), 1);
    assert!(text.contains("got [\"5.1\", \"8.2\", \"12.1\", \"15.1\"]"));
}

#[test]
fn usage_errors_and_unresolved_exit_codes() {
    assert_eq!(code(&geoposet(&["enumerate", "--family", "path", "--n", "9"])), 2);
    assert_eq!(code(&geoposet(&["enumerate", "--family", "tree", "--n", "5"])), 2);
    assert_eq!(code(&geoposet(&["realize", "--family", "path", "--n", "6", "--crossings", "e1xe2"])), 2);
    assert_eq!(code(&geoposet(&["realize", "--family", "path", "--n", "6", "--crossings", "e1xe3", "--grid", "1"])), 2);
    assert_eq!(code(&geoposet(&["verify", "--suite", "k7"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = p(dir.path(), "bad.json");
    fs::write(&bad, "{\"classes\": 3}").unwrap();
    assert_eq!(code(&geoposet(&["hasse", "--poset", &bad])), 2);
    assert_eq!(code(&geoposet(&["params", "--classes", &p(dir.path(), "missing.json")])), 2);

    // one search node cannot place a drawing
    let o = geoposet(&["realize", "--family", "path", "--n", "6", "--crossings", "e1xe3", "--max-nodes", "1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("BudgetExceeded"));
    let out = p(dir.path(), "p7.json");
    let o = geoposet(&["enumerate", "--family", "path", "--n", "7", "--max-nodes", "1", "--out", &out]);
    assert_eq!(code(&o), 3);
    let file: ClassesFile = format::read_json(Path::new(&out)).unwrap();
    assert!(!file.unresolved.is_empty());
}
