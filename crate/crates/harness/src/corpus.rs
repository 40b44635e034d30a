//! Named canonical instances.

use eds_core::families::{complete_bipartite, cycle, double_star, path, spider, star};
use eds_core::BipartiteGraph;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: BipartiteGraph,
    /// Whether the graph is meant to lie in the class. Out-of-class entries
    /// are negative controls for recognition.
    pub in_class: bool,
}

fn entry(name: impl Into<String>, graph: BipartiteGraph, in_class: bool) -> CorpusEntry {
    CorpusEntry { name: name.into(), graph, in_class }
}

/// `P_7` on `0..7` with `u1 = 0`, `v2 = 3`, `u4 = 6`, plus a leaf on `u1`
/// and one on `v2`. `{0, 3, 6}` is its only e.d.s. and the whole graph is
/// `N_0 ∪ N_1` around it.
pub fn p7_configuration() -> BipartiteGraph {
    let mut edges: Vec<_> = (1..7).map(|i| (i - 1, i)).collect();
    edges.extend([(0, 7), (3, 8)]);
    BipartiteGraph::two_colored(9, &edges).expect("tree")
}

pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for k in 1..=12 {
        out.push(entry(format!("p{k}"), path(k), true));
    }
    out.push(entry("c4", cycle(4), true));
    out.push(entry("c6", cycle(6), false));
    out.push(entry("c8", cycle(8), false));
    out.push(entry("k23", complete_bipartite(2, 3), true));
    for k in 1..=4 {
        out.push(entry(format!("star{k}"), star(k), true));
    }
    out.push(entry("dstar11", double_star(1, 1), true));
    out.push(entry("dstar22", double_star(2, 2), true));
    out.push(entry("dstar13", double_star(1, 3), true));
    out.push(entry("s125", spider(1, 2, 5), false));
    out.push(entry("s333", spider(3, 3, 3), false));
    out.push(entry("s124", spider(1, 2, 4), true));
    out.push(entry("s233", spider(2, 3, 3), true));
    out.push(entry("p7-config", p7_configuration(), true));
    out.push(entry("p8+c4", path(8).disjoint_union(&cycle(4)), true));
    out.push(entry("p4+star3", path(4).disjoint_union(&star(3)), true));
    out.push(entry("dstar22+p7", double_star(2, 2).disjoint_union(&path(7)), true));
    out.push(entry("p5+c6", path(5).disjoint_union(&cycle(6)), false));
    out
}

pub fn lookup(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}
