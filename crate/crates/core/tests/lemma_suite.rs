mod common;

use std::collections::BTreeMap;

use eds_core::oracle::{solve_exact, Mode, DEFAULT_NODE_BUDGET};
use eds_core::solver::{check_lemmas, closed_bases, LemmaId, LemmaReport};
use eds_core::{BipartiteGraph, VertexSet};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

/// Every closed basis the suite pairs with `d`: closures of subsets of size
/// at most two, of each `P_7` whose ends and midpoint lie in `d`, and `d`.
fn bases(g: &BipartiteGraph, d: &VertexSet) -> Vec<VertexSet> {
    closed_bases(g, d, DEFAULT_NODE_BUDGET).unwrap()
}

fn reports(g: &BipartiteGraph) -> Vec<(VertexSet, VertexSet, LemmaReport)> {
    let mut out = Vec::new();
    for sol in solve_exact(g, Mode::All).unwrap() {
        for b in bases(g, &sol.d) {
            let r = check_lemmas(g, &sol.d, &b).unwrap();
            out.push((sol.d.clone(), b, r));
        }
    }
    out
}

fn check_universal(g: &BipartiteGraph) -> Result<(), TestCaseError> {
    for (d, b, r) in reports(g) {
        for e in r.violations() {
            // E5 is known to fail under the global forced-set reading
            prop_assert!(e.id == LemmaId::E5, "{} violated: {:?} d={} basis={} witness={:?}", e.id, g, d, b, e.counterexample);
        }
        for e in &r.entries {
            prop_assert!(e.conclusion_holds || e.counterexample.is_some());
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lemmas_hold_on_random_graphs(g in common::connected_in_class(6, 18)) {
        check_universal(&g)?;
    }

    #[test]
    fn lemmas_hold_on_planted_graphs((g, _) in common::planted_graph(8, 3)) {
        check_universal(&g)?;
    }
}

fn set(n: usize, ids: &[usize]) -> VertexSet {
    VertexSet::from_ids(n, ids.iter().copied())
}

/// G[N0 u N1] disconnected although the basis is exactly what a P7
/// configuration forces.
#[test]
fn e5_counterexample() {
    let edges = [
        (0, 1), (0, 2), (0, 10), (0, 11), (0, 12), (1, 3), (1, 6), (1, 7), (1, 15), (2, 4), (2, 8), (3, 17), (4, 5),
        (4, 21), (6, 9), (6, 18), (7, 9), (7, 17), (8, 21), (10, 19), (10, 22), (11, 14), (11, 22), (12, 16),
        (12, 22), (15, 18), (15, 20),
    ];
    let g = BipartiteGraph::from_sides("XYYXXYXXXYYYYXXXXYYXYYX", &edges).unwrap();
    let d = set(23, &[5, 6, 8, 11, 13, 16, 17, 19, 20]);
    let basis = set(23, &[5, 6, 8, 13, 17, 20]);
    let r = check_lemmas(&g, &d, &basis).unwrap();
    let e5 = r.entry(LemmaId::E5);
    assert!(e5.hypothesis_met && !e5.conclusion_holds);
    assert_eq!(r.violations().count(), 1, "{r}");
    // independent check: N0 u N1 inside the component of the basis
    let levels = g.distance_levels(&basis).unwrap();
    let mut near = levels.level(0);
    near.union_with(&levels.level(1));
    near.remove(13);
    assert!(!g.induced_subgraph(&near).graph.is_connected());
}

/// Two D-P7s, midpoints 3 and 10 on the same side, plus linking edges.
/// These graphs are outside the class: no in-class graph meeting the
/// two-P7 hypothesis turned up in random search (see `two_p7_search`), so
/// they only exercise the predicates.
fn two_p7s(link: &[(usize, usize)], n: usize) -> BipartiteGraph {
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).chain((7..13).map(|i| (i, i + 1))).collect();
    edges.extend_from_slice(link);
    BipartiteGraph::two_colored(n, &edges).unwrap()
}

#[test]
fn two_p7_lemmas_hold_when_far_apart() {
    // 14 is dominated by the pendant 16; chords 14-2, 14-4, 15-8, 15-12 stop
    // the link from forming further D-P7s
    let g = two_p7s(&[(2, 14), (4, 14), (14, 15), (14, 16), (8, 15), (10, 15), (12, 15)], 17);
    let d = set(17, &[0, 3, 6, 7, 10, 13, 16]);
    let r = check_lemmas(&g, &d, &VertexSet::new(17)).unwrap();
    for id in [LemmaId::L18, LemmaId::L19, LemmaId::L20, LemmaId::L21] {
        let e = r.entry(id);
        assert!(e.hypothesis_met && e.conclusion_holds, "{r}");
    }
}

#[test]
fn two_p7_lemmas_report_witnesses() {
    let g = two_p7s(&[(5, 14), (8, 14), (14, 15)], 16);
    let d = set(16, &[0, 3, 6, 7, 10, 13, 15]);
    let r = check_lemmas(&g, &d, &VertexSet::new(16)).unwrap();
    assert!(r.entry(LemmaId::L18).conclusion_holds);
    for id in [LemmaId::L19, LemmaId::L20] {
        let w = r.entry(id).counterexample.clone().unwrap();
        assert!(w.contains(&3) && w.contains(&10), "{r}");
    }
}

#[test]
#[ignore = "census of hypothesis hits and violations; run with --ignored --nocapture"]
fn lemma_census() {
    let mut runner = TestRunner::deterministic();
    let mut met: BTreeMap<LemmaId, usize> = BTreeMap::new();
    let mut bad: BTreeMap<LemmaId, (usize, String)> = BTreeMap::new();
    let strat = common::in_class(8, 26);
    let planted = common::planted_graph(8, 3);
    for i in 0..60000 {
        let g = if i % 2 == 0 {
            strat.new_tree(&mut runner).unwrap().current()
        } else {
            planted.new_tree(&mut runner).unwrap().current().0
        };
        for (d, b, r) in reports(&g) {
            for e in &r.entries {
                if e.hypothesis_met {
                    *met.entry(e.id).or_default() += 1;
                }
                if !e.conclusion_holds {
                    let slot = bad.entry(e.id).or_insert((0, String::new()));
                    slot.0 += 1;
                    if slot.1.is_empty() || slot.1.len() > format!("{g:?}").len() + 60 {
                        slot.1 = format!("{g:?} d={d} basis={b} witness={:?}", e.counterexample);
                    }
                }
            }
        }
    }
    for id in LemmaId::ALL {
        println!("{id} met={} violated={}", met.get(&id).unwrap_or(&0), bad.get(&id).map_or(0, |b| b.0));
    }
    for (id, (_, ex)) in &bad {
        println!("{id}: {ex}");
    }
}

#[test]
#[ignore = "search for graphs meeting the two-P7 hypothesis"]
fn two_p7_search() {
    let mut runner = TestRunner::deterministic();
    let strat = (
        prop::collection::vec((any::<bool>(), 1usize..=3), 4..=12),
        prop::collection::vec((0..64usize, 0..64usize), 0..160),
    );
    let mut hits = 0;
    for _ in 0..300_000 {
        let (stars, extra) = strat.new_tree(&mut runner).unwrap().current();
        let (g, d) = common::planted(&stars, &extra);
        let r = check_lemmas(&g, &d, &VertexSet::new(g.n())).unwrap();
        if r.entry(LemmaId::L18).hypothesis_met {
            hits += 1;
            println!("{g:?} d={d}\n{r}");
        }
    }
    println!("hits={hits}");
}
