#![allow(dead_code)]

use eds_core::recognition::{edge_breaks_class, ClassParams};
use eds_core::{BipartiteGraph, Side, VertexSet};
use proptest::prelude::*;

/// Grows an in-class graph: vertex `i` hangs off `parents[i] % i`, then the
/// extra pairs are tried in order. Any edge that would create a hole or a
/// forbidden spider is skipped.
pub fn grow(n: usize, parents: &[usize], extra: &[(usize, usize)]) -> BipartiteGraph {
    let params = ClassParams::default();
    let mut sides = vec![Side::X; n];
    let mut attach = vec![None; n];
    for i in 1..n {
        let p = parents[i - 1] % i;
        sides[i] = sides[p].opposite();
        attach[i] = Some(p);
    }
    let mut g = BipartiteGraph::new(n, sides, &[]).unwrap();
    let tries = attach
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (p, i)))
        .chain(extra.iter().map(|&(a, b)| (a % n, b % n)));
    for (a, b) in tries {
        if a == b || g.side(a) == g.side(b) || g.has_edge(a, b) {
            continue;
        }
        let h = g.with_edge(a, b).unwrap();
        if !edge_breaks_class(&h, a, b, &params) {
            g = h;
        }
    }
    g
}

prop_compose! {
    pub fn in_class(lo: usize, hi: usize)(n in lo..=hi)
        (parents in prop::collection::vec(any::<usize>(), n.saturating_sub(1)),
         extra in prop::collection::vec((0..n, 0..n), 0..2 * n),
         n in Just(n)) -> BipartiteGraph {
        grow(n, &parents, &extra)
    }
}

pub fn all_subsets_up_to(d: &VertexSet, k: usize) -> Vec<VertexSet> {
    let ids = d.to_vec();
    let mut out = vec![VertexSet::new(d.universe())];
    for size in 1..=k {
        let mut idx: Vec<usize> = (0..size).collect();
        if size > ids.len() {
            break;
        }
        loop {
            out.push(VertexSet::from_ids(d.universe(), idx.iter().map(|&i| ids[i])));
            let mut i = size;
            while i > 0 && idx[i - 1] == ids.len() - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// A graph with a planted e.d.s.: disjoint stars, then edges between leaves
/// of different stars wherever the class allows. Returns the graph and the
/// star centers.
pub fn planted(stars: &[(bool, usize)], extra: &[(usize, usize)]) -> (BipartiteGraph, VertexSet) {
    let params = ClassParams::default();
    let mut sides = Vec::new();
    let mut owner = Vec::new();
    let mut edges = Vec::new();
    let mut centers = Vec::new();
    for (s, &(on_x, leaves)) in stars.iter().enumerate() {
        let c = sides.len();
        let side = if on_x { Side::X } else { Side::Y };
        centers.push(c);
        sides.push(side);
        owner.push(s);
        for _ in 0..leaves {
            edges.push((c, sides.len()));
            sides.push(side.opposite());
            owner.push(s);
        }
    }
    let n = sides.len();
    let mut g = BipartiteGraph::new(n, sides, &edges).unwrap();
    let leaf = |v: usize, cs: &[usize]| !cs.contains(&v);
    for &(a, b) in extra {
        let (a, b) = (a % n, b % n);
        if !leaf(a, &centers) || !leaf(b, &centers) || owner[a] == owner[b] {
            continue;
        }
        if g.side(a) == g.side(b) || g.has_edge(a, b) {
            continue;
        }
        let h = g.with_edge(a, b).unwrap();
        if !edge_breaks_class(&h, a, b, &params) {
            g = h;
        }
    }
    (g, VertexSet::from_ids(n, centers))
}

prop_compose! {
    pub fn planted_graph(max_stars: usize, max_leaves: usize)
        (stars in prop::collection::vec((any::<bool>(), 1..=max_leaves), 2..=max_stars))
        (extra in prop::collection::vec((0..64usize, 0..64usize), 0..48), stars in Just(stars))
        -> (BipartiteGraph, VertexSet) {
        planted(&stars, &extra)
    }
}

/// The largest component of `g`.
pub fn largest_component(g: &BipartiteGraph) -> BipartiteGraph {
    match g.components().into_iter().max_by_key(|c| c.len()) {
        Some(c) => g.induced_subgraph(&c).graph,
        None => g.clone(),
    }
}

prop_compose! {
    pub fn connected_in_class(lo: usize, hi: usize)(g in in_class(lo, hi)) -> BipartiteGraph {
        largest_component(&g)
    }
}

prop_compose! {
    /// Any bipartite graph, in the class or not.
    pub fn any_bipartite(max_n: usize)(n in 1..=max_n)
        (sides in prop::collection::vec(any::<bool>(), n),
         pairs in prop::collection::vec((0..n, 0..n), 0..2 * n), n in Just(n)) -> BipartiteGraph {
        let sides: Vec<Side> = sides.into_iter().map(|b| if b { Side::X } else { Side::Y }).collect();
        let mut edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(a, b)| sides[a] != sides[b])
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        BipartiteGraph::new(n, sides, &edges).unwrap()
    }
}
