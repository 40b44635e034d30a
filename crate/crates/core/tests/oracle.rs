//! Exact-cover oracle against all `2^n` subsets.

use eds_core::oracle::{count_eds, forced_excluded_by_oracle, solve_exact, Mode};
use eds_core::{BipartiteGraph, Side, VertexSet};
use proptest::prelude::*;

fn brute(g: &BipartiteGraph) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    'sets: for m in 0u32..1 << n {
        for v in 0..n {
            let mut c = m >> v & 1;
            for &u in g.neighbors(v) {
                c += m >> u & 1;
            }
            if c != 1 {
                continue 'sets;
            }
        }
        out.push(VertexSet::from_ids(n, (0..n).filter(|&v| m >> v & 1 == 1)));
    }
    out
}

prop_compose! {
    fn random_bipartite(max_n: usize)(n in 0..=max_n)
        (sides in prop::collection::vec(any::<bool>(), n),
         pairs in prop::collection::vec((0..n.max(1), 0..n.max(1)), 0..2 * n + 1), n in Just(n)) -> BipartiteGraph {
        let sides: Vec<Side> = sides.into_iter().map(|b| if b { Side::X } else { Side::Y }).collect();
        let mut edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(a, b)| a < n && b < n && sides[a] != sides[b])
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        BipartiteGraph::new(n, sides, &edges).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn all_solutions_match(g in random_bipartite(16)) {
        let expected = brute(&g);
        let mut got: Vec<VertexSet> = solve_exact(&g, Mode::All).unwrap().into_iter().map(|s| s.d).collect();
        got.sort_by_key(|d| d.to_vec());
        let mut want = expected.clone();
        want.sort_by_key(|d| d.to_vec());
        prop_assert_eq!(&got, &want);
        prop_assert_eq!(count_eds(&g).unwrap(), expected.len() as u64);
        let first = solve_exact(&g, Mode::First).unwrap();
        prop_assert_eq!(first.len(), usize::from(!expected.is_empty()));
        if let Some(s) = first.first() {
            prop_assert!(expected.contains(&s.d) && s.certified);
        }
    }

    #[test]
    fn forced_sets_match(g in random_bipartite(12)) {
        let all = brute(&g);
        prop_assume!(!all.is_empty());
        let (forced, excluded) = forced_excluded_by_oracle(&g, &VertexSet::new(g.n())).unwrap();
        for v in 0..g.n() {
            prop_assert_eq!(forced.contains(v), all.iter().all(|d| d.contains(v)));
            prop_assert_eq!(excluded.contains(v), all.iter().all(|d| !d.contains(v)));
        }
    }
}
