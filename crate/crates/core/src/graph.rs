//! Immutable bipartite graphs with the neighborhood, distance and layering
//! queries every other module builds on.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::vertex_set::VertexSet;

/// Color class of a vertex: `X` (black) or `Y` (white).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }

    pub fn from_char(c: char) -> Option<Side> {
        match c {
            'X' => Some(Side::X),
            'Y' => Some(Side::Y),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Side::X => 'X',
            Side::Y => 'Y',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("side list has {got} entries, expected {expected}")]
    SideCountMismatch { expected: usize, got: usize },
    #[error("edge {u}-{v} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge {u}-{v} joins two vertices of the same side")]
    IntraSideEdge { u: usize, v: usize },
    #[error("edge {u}-{v} listed twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("distance levels need a nonempty seed")]
    EmptySeed,
}

/// A bipartite graph on dense vertex ids `0..n`.
///
/// Neighbor lists are sorted, so adjacency tests are binary searches.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    side: Vec<Side>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl BipartiteGraph {
    pub fn new(n: usize, side: Vec<Side>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if side.len() != n {
            return Err(GraphError::SideCountMismatch { expected: n, got: side.len() });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if side[u] == side[v] {
                return Err(GraphError::IntraSideEdge { u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
        }
        Ok(BipartiteGraph { side, adj, edge_count: edges.len() })
    }

    /// Convenience constructor taking sides as a string of `X`/`Y`.
    pub fn from_sides(sides: &str, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let side: Vec<Side> = sides
            .chars()
            .map(|c| Side::from_char(c).expect("sides must be X or Y"))
            .collect();
        Self::new(side.len(), side, edges)
    }

    /// Builds a graph from edges alone, two-coloring each component by BFS
    /// from its smallest vertex (which gets side `X`). Fails with
    /// `IntraSideEdge` when the edges are not bipartite.
    pub fn two_colored(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut side: Vec<Option<Side>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::X);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su.opposite());
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Err(GraphError::IntraSideEdge { u: u.min(w), v: u.max(w) })
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Self::new(n, side.into_iter().map(Option::unwrap).collect(), edges)
    }

    pub fn n(&self) -> usize {
        self.side.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices_on(&self, side: Side) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.side[v] == side)
    }

    /// `N(v)`.
    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_ids(self.n(), self.adj[v].iter().copied())
    }

    /// `N[v] = {v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.open_neighborhood(v);
        s.insert(v);
        s
    }

    /// Vertices at distance exactly two from `v`.
    pub fn second_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::new(self.n());
        for &u in &self.adj[v] {
            for &w in &self.adj[u] {
                if w != v {
                    s.insert(w);
                }
            }
        }
        // in a bipartite graph N(N(v)) never meets N(v)
        s
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn bfs(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest path length, `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        self.bfs(u)[v]
    }

    /// Multi-source BFS layering `N_0 = seed, N_1, N_2, ...`.
    pub fn distance_levels(&self, seed: &VertexSet) -> Result<DistanceLevels, GraphError> {
        if seed.is_empty() {
            return Err(GraphError::EmptySeed);
        }
        let n = self.n();
        let mut level_of = vec![None; n];
        let mut queue = VecDeque::new();
        for v in seed.iter() {
            level_of[v] = Some(0);
            queue.push_back(v);
        }
        let mut levels = vec![seed.clone()];
        while let Some(u) = queue.pop_front() {
            let next = level_of[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if level_of[w].is_none() {
                    level_of[w] = Some(next);
                    if levels.len() <= next {
                        levels.push(VertexSet::new(n));
                    }
                    levels[next].insert(w);
                    queue.push_back(w);
                }
            }
        }
        let unreachable = VertexSet::from_ids(n, (0..n).filter(|&v| level_of[v].is_none()));
        Ok(DistanceLevels { levels, level_of, unreachable })
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced by `keep`; child vertex `i` is parent vertex `map[i]`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Subgraph {
        let map: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); map.len()];
        let mut edge_count = 0;
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                    if index[w] > i {
                        edge_count += 1;
                    }
                }
            }
        }
        let side = map.iter().map(|&v| self.side[v]).collect();
        Subgraph { graph: BipartiteGraph { side, adj, edge_count }, to_parent: map }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &BipartiteGraph) -> BipartiteGraph {
        let shift = self.n();
        let mut side = self.side.clone();
        side.extend_from_slice(&other.side);
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + shift).collect()));
        BipartiteGraph { side, adj, edge_count: self.edge_count + other.edge_count }
    }

    /// A copy of the graph with one extra edge. The edge must join opposite
    /// sides and must not exist yet.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<BipartiteGraph, GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::EndpointOutOfRange { u, v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.side[u] == self.side[v] {
            return Err(GraphError::IntraSideEdge { u, v });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
        }
        let mut g = self.clone();
        let pos = g.adj[u].binary_search(&v).unwrap_err();
        g.adj[u].insert(pos, v);
        let pos = g.adj[v].binary_search(&u).unwrap_err();
        g.adj[v].insert(pos, u);
        g.edge_count += 1;
        Ok(g)
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sides: String = self.side.iter().map(|s| s.as_char()).collect();
        f.debug_struct("BipartiteGraph")
            .field("sides", &sides)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An induced subgraph together with the id map back to its parent.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: BipartiteGraph,
    pub to_parent: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, child: &VertexSet, parent_n: usize) -> VertexSet {
        VertexSet::from_ids(parent_n, child.iter().map(|v| self.to_parent[v]))
    }
}

/// BFS layers around a seed set.
#[derive(Clone, Debug)]
pub struct DistanceLevels {
    levels: Vec<VertexSet>,
    level_of: Vec<Option<usize>>,
    unreachable: VertexSet,
}

impl DistanceLevels {
    /// `N_i`; empty for indices past the last layer.
    pub fn level(&self, i: usize) -> VertexSet {
        self.levels
            .get(i)
            .cloned()
            .unwrap_or_else(|| VertexSet::new(self.level_of.len()))
    }

    pub fn levels(&self) -> &[VertexSet] {
        &self.levels
    }

    pub fn level_of(&self, v: usize) -> Option<usize> {
        self.level_of[v]
    }

    pub fn in_level(&self, v: usize, i: usize) -> bool {
        self.level_of[v] == Some(i)
    }

    /// Vertices with no path to the seed.
    pub fn unreachable(&self) -> &VertexSet {
        &self.unreachable
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }
}
