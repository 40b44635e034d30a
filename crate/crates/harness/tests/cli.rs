use std::path::Path;
use std::process::{Command, Output};

use eds_core::families::{cycle, path};
use eds_core::format::write_graph;
use eds_core::solver::parse_trace;
use eds_core::BipartiteGraph;

fn eds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eds")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn put(dir: &Path, name: &str, g: &BipartiteGraph) -> String {
    let p = dir.join(name);
    std::fs::write(&p, write_graph(g)).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn recognize_and_solve() {
    let dir = tempfile::tempdir().unwrap();
    let p8 = put(dir.path(), "p8", &path(8));
    let c4 = put(dir.path(), "c4", &cycle(4));
    let c6 = put(dir.path(), "c6", &cycle(6));

    let out = eds(&["recognize", &p8]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("in_class=true"));
    let out = eds(&["recognize", &c6]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("witness=cycle 6"));

    let trace = dir.path().join("p8.trace");
    let out = eds(&["solve", &p8, "--trace", trace.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("eds 3 : 0 3 6\nbase_case=direct"));
    let text = std::fs::read_to_string(&trace).unwrap();
    assert!(parse_trace(&text, 8).is_ok());

    assert_eq!(code(&eds(&["solve", &c4])), 1);
    assert_eq!(code(&eds(&["solve", &c6])), 2);
    let out = eds(&["solve", &c6, "--force"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("eds 2 :"));
    assert_eq!(code(&eds(&["solve", &put(dir.path(), "p14", &path(14)), "--branch-budget", "0"])), 3);
}

#[test]
fn oracle_modes() {
    let dir = tempfile::tempdir().unwrap();
    let p8 = put(dir.path(), "p8", &path(8));
    assert_eq!(stdout(&eds(&["oracle", &p8, "--count"])), "count 2\n");
    assert_eq!(stdout(&eds(&["oracle", &p8, "--all"])), "eds 3 : 0 3 6\neds 3 : 1 4 7\n");
    let out = eds(&["oracle", &put(dir.path(), "c4", &cycle(4))]);
    assert_eq!((code(&out), stdout(&out)), (1, "no-eds\n".to_string()));
    let out = eds(&["oracle", &put(dir.path(), "p30", &path(30)), "--all", "--budget", "1"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).starts_with("budget-exceeded"));
}

#[test]
fn gen_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for f in [&a, &b] {
        let out = eds(&["gen", "--n", "8", "--seed", "1", "--mode", "planted", "-o", f.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        assert!(stdout(&out).starts_with("planted eds 2 : 4 5\n"));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(code(&eds(&["recognize", a.to_str().unwrap()])), 0);
    assert_eq!(code(&eds(&["gen", "--n", "8", "--seed", "1", "--mode", "nope", "-o", "x"])), 4);
}

#[test]
fn lemmas_command() {
    let dir = tempfile::tempdir().unwrap();
    let p7 = put(dir.path(), "p7", &path(7));
    let good = dir.path().join("good");
    std::fs::write(&good, "eds 3 : 0 3 6\n").unwrap();
    let out = eds(&["lemmas", &p7, good.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("L12 hypothesis=true holds=true"));
    assert!(text.lines().filter(|l| l.contains("holds=")).count() == 24);
    let bad = dir.path().join("bad");
    std::fs::write(&bad, "eds 2 : 0 3\n").unwrap();
    assert_eq!(code(&eds(&["lemmas", &p7, bad.to_str().unwrap()])), 4);
}

#[test]
fn stress_command() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg");
    std::fs::write(&cfg, "instance_count = 20\nseed = 4\nsize_range = [4, 10]\n").unwrap();
    let out = eds(&["stress", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "mismatches=0"));
    std::fs::write(&cfg, "instance_count = 20\n").unwrap();
    assert_eq!(code(&eds(&["stress", "--config", cfg.to_str().unwrap()])), 4);
}

#[test]
fn io_errors() {
    assert_eq!(code(&eds(&["solve", "/nonexistent/graph"])), 4);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad");
    std::fs::write(&bad, "eds-graph 1\nn 2\nsides XX\ne 0 1\n").unwrap();
    assert_eq!(code(&eds(&["recognize", bad.to_str().unwrap()])), 4);
}
