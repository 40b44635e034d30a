//! Standard small graphs. Every constructor two-colors from vertex 0 (side `X`).

use crate::graph::BipartiteGraph;

fn build(n: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
    BipartiteGraph::two_colored(n, edges).expect("family graphs are bipartite")
}

pub fn edgeless(n: usize) -> BipartiteGraph {
    build(n, &[])
}

/// `P_k` with vertices `0..k` in path order.
pub fn path(k: usize) -> BipartiteGraph {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    build(k, &edges)
}

/// `C_len` with vertices in cyclic order. `len` must be even and at least 4.
pub fn cycle(len: usize) -> BipartiteGraph {
    assert!(len >= 4 && len % 2 == 0, "bipartite cycles have even length >= 4");
    let mut edges: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
    edges.push((0, len - 1));
    build(len, &edges)
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> BipartiteGraph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &edges)
}

/// Two adjacent centers 0 and 1 carrying `a` and `b` leaves.
pub fn double_star(a: usize, b: usize) -> BipartiteGraph {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    build(2 + a + b, &edges)
}

/// `K_{a,b}`; the first `a` vertices form one side.
pub fn complete_bipartite(a: usize, b: usize) -> BipartiteGraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    build(a + b, &edges)
}

/// `S_{i,j,k}`: center 0, then the three legs in the given order, each
/// listed from the center outwards.
pub fn spider(i: usize, j: usize, k: usize) -> BipartiteGraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [i, j, k] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    build(next, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(path(8).edge_count(), 7);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(star(3).n(), 4);
        assert_eq!(double_star(2, 3).n(), 7);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        let s = spider(1, 2, 5);
        assert_eq!((s.n(), s.edge_count(), s.degree(0)), (9, 8, 3));
        assert_eq!(spider(3, 3, 3).n(), 10);
    }
}
