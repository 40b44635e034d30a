use std::collections::HashSet;

use eds_core::oracle::{solve_exact, Mode};
use eds_core::{classify, solve, EdsResult, VertexSet};
use eds_harness::corpus::{corpus, lookup};

#[test]
fn names_are_unique_and_flags_match() {
    let all = corpus();
    let names: HashSet<_> = all.iter().map(|e| e.name.clone()).collect();
    assert_eq!(names.len(), all.len());
    for e in &all {
        assert_eq!(classify(&e.graph).in_class(), e.in_class, "{}", e.name);
    }
    for k in 1..=12 {
        assert!(lookup(&format!("p{k}")).is_some());
    }
}

#[test]
fn named_answers() {
    let p8 = lookup("p8").unwrap().graph;
    let sols: Vec<_> = solve_exact(&p8, Mode::All).unwrap().into_iter().map(|s| s.d.to_vec()).collect();
    assert_eq!(sols.len(), 2);
    assert!(sols.contains(&vec![0, 3, 6]) && sols.contains(&vec![1, 4, 7]));
    assert!(solve_exact(&lookup("c4").unwrap().graph, Mode::All).unwrap().is_empty());
    assert!(!lookup("c6").unwrap().in_class);
    let cfg = lookup("p7-config").unwrap().graph;
    let sols = solve_exact(&cfg, Mode::All).unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0].d, VertexSet::from_ids(9, [0, 3, 6]));
}

#[test]
fn solver_agrees_on_the_corpus() {
    for e in corpus().into_iter().filter(|e| e.in_class) {
        let oracle = !solve_exact(&e.graph, Mode::First).unwrap().is_empty();
        let out = solve(&e.graph).unwrap();
        assert_eq!(matches!(out.result, EdsResult::Eds(_)), oracle, "{}", e.name);
    }
}
