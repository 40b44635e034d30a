//! Recognition against exhaustive subset enumeration.

use eds_core::recognition::{classify, find_induced_path, find_induced_spider, Pattern};
use eds_core::{families, BipartiteGraph, Side};
use proptest::prelude::*;

/// Degree sequence and shape of the subgraph induced by `mask`.
fn induced(g: &BipartiteGraph, mask: u32) -> (Vec<usize>, Vec<usize>, usize) {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
    let deg: Vec<usize> = vs.iter().map(|&v| vs.iter().filter(|&&u| g.has_edge(u, v)).count()).collect();
    let edges = deg.iter().sum::<usize>() / 2;
    (vs, deg, edges)
}

fn connected(g: &BipartiteGraph, vs: &[usize]) -> bool {
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &w in vs {
            if g.has_edge(u, w) && !seen.contains(&w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

fn brute_hole(g: &BipartiteGraph) -> bool {
    (0u32..1 << g.n()).any(|m| {
        if m.count_ones() < 6 {
            return false;
        }
        let (vs, deg, _) = induced(g, m);
        deg.iter().all(|&d| d == 2) && connected(g, &vs)
    })
}

fn leg_lengths(g: &BipartiteGraph, vs: &[usize], center: usize) -> Vec<usize> {
    let mut legs = Vec::new();
    for &first in vs.iter().filter(|&&u| g.has_edge(u, center)) {
        let (mut prev, mut cur, mut len) = (center, first, 1);
        loop {
            let next: Vec<usize> = vs.iter().copied().filter(|&w| w != prev && g.has_edge(w, cur)).collect();
            match next[..] {
                [w] => {
                    prev = cur;
                    cur = w;
                    len += 1;
                }
                _ => break,
            }
        }
        legs.push(len);
    }
    legs.sort_unstable();
    legs
}

fn brute_spider(g: &BipartiteGraph, legs: [usize; 3]) -> bool {
    let size = 1 + legs.iter().sum::<usize>() as u32;
    (0u32..1 << g.n()).any(|m| {
        if m.count_ones() != size {
            return false;
        }
        let (vs, deg, edges) = induced(g, m);
        if edges + 1 != vs.len() || !connected(g, &vs) {
            return false;
        }
        let centers: Vec<usize> = (0..vs.len()).filter(|&i| deg[i] == 3).collect();
        if centers.len() != 1 || deg.iter().any(|&d| d > 3) {
            return false;
        }
        leg_lengths(g, &vs, vs[centers[0]]) == legs
    })
}

fn brute_path(g: &BipartiteGraph, k: usize) -> bool {
    (0u32..1 << g.n()).any(|m| {
        if m.count_ones() as usize != k {
            return false;
        }
        let (vs, deg, edges) = induced(g, m);
        edges + 1 == k && deg.iter().all(|&d| d <= 2) && connected(g, &vs)
    })
}

prop_compose! {
    fn random_bipartite(max_n: usize)(n in 1..=max_n)
        (sides in prop::collection::vec(any::<bool>(), n),
         pairs in prop::collection::vec((0..n, 0..n), 0..3 * n), n in Just(n)) -> BipartiteGraph {
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

// a forbidden spider with random extra vertices and edges around it
prop_compose! {
    fn padded_spider()(legs in prop::sample::select(vec![(1, 2, 5), (3, 3, 3)]), extra in 0usize..=1)
        (pairs in prop::collection::vec((0..10 + extra, 0..10 + extra), 0..4), legs in Just(legs), extra in Just(extra))
        -> BipartiteGraph {
        let s = families::spider(legs.0, legs.1, legs.2);
        let mut g = s.disjoint_union(&families::edgeless(extra));
        for (a, b) in pairs {
            if a < g.n() && b < g.n() && g.side(a) != g.side(b) && !g.has_edge(a, b) {
                g = g.with_edge(a, b).unwrap();
            }
        }
        g
    }
}

fn agree(g: &BipartiteGraph) {
    let r = classify(g);
    assert_eq!(r.is_chordal_bipartite, !brute_hole(g), "{g:?}");
    assert_eq!(r.s125_free(), !brute_spider(g, [1, 2, 5]), "{g:?}");
    assert_eq!(r.s333_free(), !brute_spider(g, [3, 3, 3]), "{g:?}");
    if let Some(w) = r.counterexample() {
        assert!(w.verify(g));
        assert!(matches!(w.pattern, Pattern::Cycle(_) | Pattern::Spider(..)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classify_matches_brute_force(g in random_bipartite(11)) {
        agree(&g);
        for k in [5, 8] {
            let found = find_induced_path(&g, k);
            prop_assert_eq!(found.is_some(), brute_path(&g, k));
            if let Some(w) = found {
                prop_assert!(w.verify(&g));
            }
        }
    }

    #[test]
    fn spiders_near_the_boundary(g in padded_spider()) {
        agree(&g);
    }
}

#[test]
fn named_families() {
    for (g, in_class) in [
        (families::path(12), true),
        (families::cycle(4), true),
        (families::cycle(6), false),
        (families::cycle(8), false),
        (families::spider(1, 2, 5), false),
        (families::spider(3, 3, 3), false),
        (families::spider(1, 2, 4), true),
        (families::spider(2, 3, 3), true),
        (families::complete_bipartite(3, 4), true),
        (families::double_star(3, 4), true),
    ] {
        assert_eq!(classify(&g).in_class(), in_class, "{g:?}");
    }
    assert!(brute_hole(&families::cycle(6)) && !brute_hole(&families::cycle(4)));
    assert!(brute_spider(&families::spider(1, 2, 5), [1, 2, 5]));
    assert!(!brute_spider(&families::spider(1, 2, 4), [1, 2, 5]));
    assert!(brute_path(&families::path(8), 8) && !brute_path(&families::path(7), 8));
    let w = find_induced_spider(&families::spider(3, 3, 3), 3, 3, 3).unwrap();
    assert_eq!(w.to_string(), "spider 3 3 3 : 0 1 2 3 4 5 6 7 8 9");
}
