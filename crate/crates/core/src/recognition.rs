//! Induced path, even hole and spider detection, and membership in the
//! class of `(S_{1,2,5}, S_{3,3,3})`-free chordal bipartite graphs.
//!
//! Paths and spiders are trees, so both go through one backtracking matcher
//! over partial embeddings. A candidate vertex is accepted only when the
//! single already-placed vertex it touches is its pattern parent, which is
//! exactly the "induced" condition for tree patterns. Holes use a separate
//! search (see [`HoleStrategy`]).

use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;

use crate::graph::BipartiteGraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// `P_k`, `k` vertices.
    Path(usize),
    /// Chordless cycle with the given number of vertices.
    Cycle(usize),
    /// `S_{i,j,k}` with `i <= j <= k`.
    Spider(usize, usize, usize),
}

impl Pattern {
    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::Path(k) => k,
            Pattern::Cycle(len) => len,
            Pattern::Spider(i, j, k) => 1 + i + j + k,
        }
    }

    /// Pattern edges between embedding positions.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            Pattern::Path(k) => (1..k).map(|t| (t - 1, t)).collect(),
            Pattern::Cycle(len) => {
                let mut e: Vec<_> = (1..len).map(|t| (t - 1, t)).collect();
                e.push((0, len - 1));
                e
            }
            Pattern::Spider(i, j, k) => {
                let mut e = Vec::new();
                let mut next = 1;
                for len in [i, j, k] {
                    let mut prev = 0;
                    for _ in 0..len {
                        e.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                e
            }
        }
    }
}

/// Sorts spider legs ascending.
pub fn canonical_legs(i: usize, j: usize, k: usize) -> (usize, usize, usize) {
    let mut legs = [i, j, k];
    legs.sort_unstable();
    (legs[0], legs[1], legs[2])
}

/// An induced embedding of a pattern. `embedding[p]` is the graph vertex at
/// pattern position `p`: path order for paths, cyclic order for cycles, and
/// for spiders the center followed by each leg from the center outwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgraphWitness {
    pub pattern: Pattern,
    pub embedding: Vec<usize>,
}

impl SubgraphWitness {
    /// Re-checks injectivity and that the induced subgraph on the image has
    /// exactly the pattern edges.
    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        let m = self.pattern.vertex_count();
        if self.embedding.len() != m || self.embedding.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut seen = VertexSet::new(g.n());
        if !self.embedding.iter().all(|&v| seen.insert(v)) {
            return false;
        }
        let mut want = vec![vec![false; m]; m];
        for (a, b) in self.pattern.edges() {
            want[a][b] = true;
            want[b][a] = true;
        }
        for a in 0..m {
            for b in a + 1..m {
                if g.has_edge(self.embedding[a], self.embedding[b]) != want[a][b] {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for SubgraphWitness {
    /// `path 8 : ids`, `cycle 6 : ids`, `spider 1 2 5 : ids`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pattern {
            Pattern::Path(k) => write!(f, "path {k} :")?,
            Pattern::Cycle(len) => write!(f, "cycle {len} :")?,
            Pattern::Spider(i, j, k) => write!(f, "spider {i} {j} {k} :")?,
        }
        for v in &self.embedding {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// A tree pattern given by adjacency between positions.
#[derive(Clone, Debug)]
struct TreePattern {
    adj: Vec<Vec<usize>>,
}

impl TreePattern {
    fn from_edges(m: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); m];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        TreePattern { adj }
    }

    fn height_from(&self, p: usize, parent: usize) -> usize {
        self.adj[p]
            .iter()
            .filter(|&&c| c != parent)
            .map(|&c| 1 + self.height_from(c, p))
            .max()
            .unwrap_or(0)
    }

    /// Placement order growing from `starts` (one position, or two adjacent
    /// positions). Returns `(order, anchor)` where `anchor[i]` is the placed
    /// tree neighbor of `order[i]`. Deeper branches are placed first so long
    /// legs fail early.
    fn order_from(&self, starts: &[usize]) -> (Vec<usize>, Vec<Option<usize>>) {
        let m = self.adj.len();
        let mut placed = vec![false; m];
        let mut order = Vec::with_capacity(m);
        let mut anchor = Vec::with_capacity(m);
        for (i, &s) in starts.iter().enumerate() {
            placed[s] = true;
            order.push(s);
            anchor.push(if i == 0 { None } else { Some(starts[i - 1]) });
        }
        let mut stack: Vec<usize> = starts.iter().rev().copied().collect();
        while let Some(p) = stack.pop() {
            let mut kids: Vec<usize> = self.adj[p].iter().copied().filter(|&c| !placed[c]).collect();
            kids.sort_by_key(|&c| std::cmp::Reverse(self.height_from(c, p)));
            // depth first: place one child, then descend into it
            if let Some(&c) = kids.first() {
                placed[c] = true;
                order.push(c);
                anchor.push(Some(p));
                stack.push(p);
                stack.push(c);
            }
        }
        (order, anchor)
    }
}

struct Matcher<'a> {
    g: &'a BipartiteGraph,
    allowed: Option<&'a VertexSet>,
    pat_deg: Vec<usize>,
    order: Vec<usize>,
    anchor: Vec<Option<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    hits: Vec<u32>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a BipartiteGraph, pattern: &TreePattern, starts: &[usize], allowed: Option<&'a VertexSet>) -> Self {
        let (order, anchor) = pattern.order_from(starts);
        Matcher {
            g,
            allowed,
            pat_deg: pattern.adj.iter().map(Vec::len).collect(),
            order,
            anchor,
            map: vec![usize::MAX; pattern.adj.len()],
            used: vec![false; g.n()],
            hits: vec![0; g.n()],
        }
    }

    fn fits(&self, pos: usize, x: usize, anchored: bool) -> bool {
        !self.used[x]
            && self.allowed.is_none_or(|a| a.contains(x))
            && self.g.degree(x) >= self.pat_deg[pos]
            && self.hits[x] == anchored as u32
    }

    fn place(&mut self, pos: usize, x: usize) {
        self.used[x] = true;
        self.map[pos] = x;
        for &y in self.g.neighbors(x) {
            self.hits[y] += 1;
        }
    }

    fn unplace(&mut self, pos: usize, x: usize) {
        self.used[x] = false;
        self.map[pos] = usize::MAX;
        for &y in self.g.neighbors(x) {
            self.hits[y] -= 1;
        }
    }

    fn extend<F>(&mut self, i: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if i == self.order.len() {
            return visit(&self.map);
        }
        let pos = self.order[i];
        let g = self.g;
        match self.anchor[i] {
            None => {
                for x in 0..g.n() {
                    if self.fits(pos, x, false) {
                        self.place(pos, x);
                        let r = self.extend(i + 1, visit);
                        self.unplace(pos, x);
                        r?;
                    }
                }
            }
            Some(parent) => {
                let pv = self.map[parent];
                for &x in g.neighbors(pv) {
                    if self.fits(pos, x, true) {
                        self.place(pos, x);
                        let r = self.extend(i + 1, visit);
                        self.unplace(pos, x);
                        r?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }

    /// Runs with the first `fixed.len()` positions of the order pinned.
    fn run_pinned<F>(&mut self, fixed: &[usize], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        for (i, &x) in fixed.iter().enumerate() {
            let pos = self.order[i];
            let anchored = i > 0;
            let adjacent = i == 0 || self.g.has_edge(self.map[self.anchor[i].unwrap()], x);
            if !adjacent || !self.fits(pos, x, anchored) {
                for (j, &y) in fixed[..i].iter().enumerate().rev() {
                    self.unplace(self.order[j], y);
                }
                return ControlFlow::Continue(());
            }
            self.place(pos, x);
        }
        let r = self.extend(fixed.len(), visit);
        for (j, &y) in fixed.iter().enumerate().rev() {
            self.unplace(self.order[j], y);
        }
        r
    }
}

fn first_match(mut m: Matcher<'_>, pattern: Pattern) -> Option<SubgraphWitness> {
    let mut found = None;
    let _ = m.extend(0, &mut |map: &[usize]| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    found.map(|embedding| SubgraphWitness { pattern, embedding })
}

/// Calls `visit` on every induced `P_k` inside `allowed` (or the whole
/// graph), once per orientation. The slice is the path in order.
pub fn for_each_induced_path<F>(g: &BipartiteGraph, k: usize, allowed: Option<&VertexSet>, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k == 0 {
        return ControlFlow::Continue(());
    }
    let pat = TreePattern::from_edges(k, &Pattern::Path(k).edges());
    let mut m = Matcher::new(g, &pat, &[0], allowed);
    m.extend(0, &mut visit)
}

/// Induced paths of `k` vertices starting at `start`.
pub fn for_each_induced_path_from<F>(
    g: &BipartiteGraph,
    k: usize,
    start: usize,
    allowed: Option<&VertexSet>,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k == 0 {
        return ControlFlow::Continue(());
    }
    let pat = TreePattern::from_edges(k, &Pattern::Path(k).edges());
    let mut m = Matcher::new(g, &pat, &[0], allowed);
    m.run_pinned(&[start], &mut visit)
}

/// Induced paths of `k >= 2` vertices whose first two vertices are `a, b`.
pub fn for_each_induced_path_via<F>(
    g: &BipartiteGraph,
    k: usize,
    a: usize,
    b: usize,
    allowed: Option<&VertexSet>,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    assert!(k >= 2);
    let pat = TreePattern::from_edges(k, &Pattern::Path(k).edges());
    let mut m = Matcher::new(g, &pat, &[0, 1], allowed);
    m.run_pinned(&[a, b], &mut visit)
}

pub fn find_induced_path(g: &BipartiteGraph, k: usize) -> Option<SubgraphWitness> {
    assert!(k >= 1, "paths have at least one vertex");
    let pat = TreePattern::from_edges(k, &Pattern::Path(k).edges());
    first_match(Matcher::new(g, &pat, &[0], None), Pattern::Path(k))
}

fn spider_pattern(i: usize, j: usize, k: usize) -> (Pattern, TreePattern) {
    let (i, j, k) = canonical_legs(i, j, k);
    let pattern = Pattern::Spider(i, j, k);
    let tree = TreePattern::from_edges(pattern.vertex_count(), &pattern.edges());
    (pattern, tree)
}

/// Finds an induced `S_{i,j,k}`. Legs are canonicalized to ascending order,
/// and the witness lists the center, then the legs in that order.
pub fn find_induced_spider(g: &BipartiteGraph, i: usize, j: usize, k: usize) -> Option<SubgraphWitness> {
    let (pattern, tree) = spider_pattern(i, j, k);
    first_match(Matcher::new(g, &tree, &[0], None), pattern)
}

/// Finds an induced `S_{i,j,k}` using the edge `a-b`. After inserting a
/// single edge into a spider-free graph, any new spider must contain it.
pub fn find_spider_through_edge(
    g: &BipartiteGraph,
    (i, j, k): (usize, usize, usize),
    a: usize,
    b: usize,
) -> Option<SubgraphWitness> {
    let (pattern, tree) = spider_pattern(i, j, k);
    for (p, q) in pattern.edges() {
        for (x, y) in [(a, b), (b, a)] {
            let mut m = Matcher::new(g, &tree, &[p, q], None);
            let mut found = None;
            let _ = m.run_pinned(&[x, y], &mut |map: &[usize]| {
                found = Some(map.to_vec());
                ControlFlow::Break(())
            });
            if let Some(embedding) = found {
                return Some(SubgraphWitness { pattern, embedding });
            }
        }
    }
    None
}

/// How [`find_induced_even_hole`] searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoleStrategy {
    /// Pick the cheapest strategy able to answer the query: `AnchoredP4`
    /// when `min_len == 6`, `Enumerate` otherwise.
    Auto,
    /// For every induced `P_4` `a-b-c-d`, a shortest `a`–`d` path avoiding
    /// `N[b] ∪ N[c]` closes an induced cycle of length at least 6; every such
    /// hole arises this way. Polynomial, but only answers `min_len == 6`.
    AnchoredP4,
    /// DFS over induced paths rooted at the smallest cycle vertex, closing
    /// when the path returns to the root without chords.
    Enumerate,
}

pub fn find_induced_even_hole(g: &BipartiteGraph, min_len: usize) -> Option<SubgraphWitness> {
    find_induced_even_hole_with(g, min_len, HoleStrategy::Auto)
}

pub fn find_induced_even_hole_with(g: &BipartiteGraph, min_len: usize, strategy: HoleStrategy) -> Option<SubgraphWitness> {
    assert!(min_len >= 6 && min_len % 2 == 0, "even holes have even length >= 6");
    match strategy {
        HoleStrategy::AnchoredP4 => {
            assert_eq!(min_len, 6, "anchored search only answers min_len = 6");
            (0..g.n()).find_map(|b| g.neighbors(b).iter().find_map(|&c| hole_through_edge(g, b, c)))
        }
        HoleStrategy::Auto if min_len == 6 => find_induced_even_hole_with(g, 6, HoleStrategy::AnchoredP4),
        _ => enumerate_hole(g, min_len),
    }
}

/// An induced cycle of length >= 6 in which `b-c` is an edge, with `b`, `c`
/// the middle of the anchoring `P_4`.
pub fn hole_through_edge(g: &BipartiteGraph, b: usize, c: usize) -> Option<SubgraphWitness> {
    let n = g.n();
    let mut blocked = vec![false; n];
    for &x in g.neighbors(b).iter().chain(g.neighbors(c)) {
        blocked[x] = true;
    }
    blocked[b] = true;
    blocked[c] = true;
    let mut parent = vec![usize::MAX; n];
    let mut seen_stamp = vec![usize::MAX; n];
    for &a in g.neighbors(b) {
        if a == c {
            continue;
        }
        let targets: Vec<usize> = g
            .neighbors(c)
            .iter()
            .copied()
            .filter(|&d| d != b && !g.has_edge(a, d))
            .collect();
        if targets.is_empty() {
            continue;
        }
        let is_target = |x: usize| targets.binary_search(&x).is_ok();
        // BFS from a through unblocked vertices until a target is adjacent
        let mut queue = VecDeque::from([a]);
        seen_stamp[a] = a;
        let mut hit = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if u != a && is_target(w) {
                    hit = Some((u, w));
                    break 'bfs;
                }
                if !blocked[w] && seen_stamp[w] != a {
                    seen_stamp[w] = a;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if let Some((last, d)) = hit {
            let mut inner = vec![last];
            let mut x = last;
            while parent[x] != a {
                x = parent[x];
                inner.push(x);
            }
            inner.reverse();
            let mut cycle = vec![b, a];
            cycle.extend(inner);
            cycle.push(d);
            cycle.push(c);
            return Some(SubgraphWitness { pattern: Pattern::Cycle(cycle.len()), embedding: cycle });
        }
    }
    None
}

fn enumerate_hole(g: &BipartiteGraph, min_len: usize) -> Option<SubgraphWitness> {
    let n = g.n();
    let mut path = Vec::new();
    let mut used = vec![false; n];
    let mut hits = vec![0u32; n];

    fn push(g: &BipartiteGraph, x: usize, path: &mut Vec<usize>, used: &mut [bool], hits: &mut [u32]) {
        path.push(x);
        used[x] = true;
        for &y in g.neighbors(x) {
            hits[y] += 1;
        }
    }
    fn pop(g: &BipartiteGraph, path: &mut Vec<usize>, used: &mut [bool], hits: &mut [u32]) {
        let x = path.pop().unwrap();
        used[x] = false;
        for &y in g.neighbors(x) {
            hits[y] -= 1;
        }
    }
    fn dfs(
        g: &BipartiteGraph,
        root: usize,
        min_len: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        hits: &mut [u32],
    ) -> bool {
        let last = *path.last().unwrap();
        for &x in g.neighbors(last) {
            if x <= root || used[x] {
                continue;
            }
            if path.len() >= 2 && g.has_edge(x, root) {
                // closes the cycle when root and last are its only path neighbors
                if hits[x] == 2 && path.len() + 1 >= min_len {
                    path.push(x);
                    return true;
                }
                continue;
            }
            if hits[x] == 1 {
                push(g, x, path, used, hits);
                if dfs(g, root, min_len, path, used, hits) {
                    return true;
                }
                pop(g, path, used, hits);
            }
        }
        false
    }

    for root in 0..n {
        push(g, root, &mut path, &mut used, &mut hits);
        if dfs(g, root, min_len, &mut path, &mut used, &mut hits) {
            return Some(SubgraphWitness { pattern: Pattern::Cycle(path.len()), embedding: path });
        }
        pop(g, &mut path, &mut used, &mut hits);
    }
    None
}

/// True when `v` is the midpoint of some induced `P_5`: two neighbors of `v`
/// with incomparable neighborhoods.
pub fn is_p5_midpoint(g: &BipartiteGraph, v: usize) -> bool {
    let nb = g.neighbors(v);
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
    for (i, &b) in nb.iter().enumerate() {
        for &c in &nb[i + 1..] {
            let (nbb, nbc) = (g.neighbors(b), g.neighbors(c));
            if !subset(nbb, nbc) && !subset(nbc, nbb) {
                return true;
            }
        }
    }
    false
}

pub fn p5_midpoints(g: &BipartiteGraph) -> VertexSet {
    VertexSet::from_ids(g.n(), (0..g.n()).filter(|&v| is_p5_midpoint(g, v)))
}

/// The forbidden spiders defining the class. The defaults are `S_{1,2,5}`
/// and `S_{3,3,3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassParams {
    pub forbidden_spiders: Vec<(usize, usize, usize)>,
}

impl Default for ClassParams {
    fn default() -> Self {
        ClassParams { forbidden_spiders: vec![(1, 2, 5), (3, 3, 3)] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderCheck {
    pub legs: (usize, usize, usize),
    pub witness: Option<SubgraphWitness>,
}

impl SpiderCheck {
    pub fn free(&self) -> bool {
        self.witness.is_none()
    }
}

/// Result of [`classify`]. Every failed predicate carries a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    /// Always true: [`BipartiteGraph`] cannot hold an intra-side edge.
    pub is_bipartite: bool,
    pub is_chordal_bipartite: bool,
    pub hole: Option<SubgraphWitness>,
    pub spiders: Vec<SpiderCheck>,
}

impl ClassReport {
    fn spider_free(&self, legs: (usize, usize, usize)) -> bool {
        self.spiders.iter().filter(|s| s.legs == legs).all(SpiderCheck::free)
    }

    pub fn s125_free(&self) -> bool {
        self.spider_free((1, 2, 5))
    }

    pub fn s333_free(&self) -> bool {
        self.spider_free((3, 3, 3))
    }

    pub fn in_class(&self) -> bool {
        self.is_bipartite && self.is_chordal_bipartite && self.spiders.iter().all(SpiderCheck::free)
    }

    /// The first failing predicate's witness, if any.
    pub fn counterexample(&self) -> Option<&SubgraphWitness> {
        self.hole.as_ref().or_else(|| self.spiders.iter().find_map(|s| s.witness.as_ref()))
    }
}

pub fn classify(g: &BipartiteGraph) -> ClassReport {
    classify_with(g, &ClassParams::default())
}

pub fn classify_with(g: &BipartiteGraph, params: &ClassParams) -> ClassReport {
    let hole = find_induced_even_hole(g, 6);
    let spiders = params
        .forbidden_spiders
        .iter()
        .map(|&(i, j, k)| {
            let legs = canonical_legs(i, j, k);
            SpiderCheck { legs, witness: find_induced_spider(g, legs.0, legs.1, legs.2) }
        })
        .collect();
    ClassReport { is_bipartite: true, is_chordal_bipartite: hole.is_none(), hole, spiders }
}

/// For an in-class graph `g` that already contains the edge `a-b`: does the
/// edge create a hole or a forbidden spider? Every new induced structure
/// must use the inserted edge, so the search stays local to it.
pub fn edge_breaks_class(g: &BipartiteGraph, a: usize, b: usize, params: &ClassParams) -> bool {
    hole_through_edge(g, a, b).is_some()
        || params
            .forbidden_spiders
            .iter()
            .any(|&legs| find_spider_through_edge(g, legs, a, b).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn path_detection() {
        let p8 = families::path(8);
        let w = find_induced_path(&p8, 8).unwrap();
        assert!(w.verify(&p8));
        assert_eq!(w.embedding, (0..8).collect::<Vec<_>>());
        assert!(find_induced_path(&families::cycle(4), 4).is_none());
        assert!(find_induced_path(&families::cycle(4), 3).is_some());
        assert!(find_induced_path(&families::star(3), 4).is_none());
        assert!(find_induced_path(&families::edgeless(1), 1).is_some());
        assert!(find_induced_path(&families::edgeless(0), 1).is_none());
    }

    #[test]
    fn hole_detection() {
        let c6 = families::cycle(6);
        for strategy in [HoleStrategy::AnchoredP4, HoleStrategy::Enumerate] {
            let w = find_induced_even_hole_with(&c6, 6, strategy).unwrap();
            assert!(w.verify(&c6));
            assert_eq!(w.pattern, Pattern::Cycle(6));
            assert!(find_induced_even_hole_with(&families::cycle(4), 6, strategy).is_none());
            assert!(find_induced_even_hole_with(&families::complete_bipartite(2, 3), 6, strategy).is_none());
        }
        assert!(find_induced_even_hole(&c6, 8).is_none());
        let c10 = families::cycle(10);
        assert_eq!(find_induced_even_hole(&c10, 8).unwrap().pattern, Pattern::Cycle(10));
    }

    #[test]
    fn spider_detection() {
        let claw = families::star(3);
        let w = find_induced_spider(&claw, 1, 1, 1).unwrap();
        assert!(w.verify(&claw));
        assert_eq!(w.embedding[0], 0);
        let s125 = families::spider(1, 2, 5);
        let w = find_induced_spider(&s125, 5, 1, 2).unwrap();
        assert_eq!(w.pattern, Pattern::Spider(1, 2, 5));
        assert!(w.verify(&s125));
        assert!(find_induced_spider(&families::path(8), 1, 2, 5).is_none());
        let s333 = families::spider(3, 3, 3);
        assert!(find_induced_spider(&s333, 3, 3, 3).unwrap().verify(&s333));
        // S_{0,0,k} is a path
        assert!(find_induced_spider(&families::path(4), 0, 0, 3).is_some());
    }

    #[test]
    fn spider_through_edge_is_local() {
        let s125 = families::spider(1, 2, 5);
        for (a, b) in s125.edges() {
            let w = find_spider_through_edge(&s125, (1, 2, 5), a, b).unwrap();
            assert!(w.verify(&s125));
        }
        let p9 = families::path(9);
        assert!(find_spider_through_edge(&p9, (1, 2, 5), 3, 4).is_none());
    }

    #[test]
    fn classification() {
        let rep = classify(&families::path(8));
        assert!(rep.in_class() && rep.s125_free() && rep.s333_free());
        assert!(rep.counterexample().is_none());
        let rep = classify(&families::cycle(6));
        assert!(!rep.is_chordal_bipartite);
        assert_eq!(rep.hole.as_ref().unwrap().pattern, Pattern::Cycle(6));
        let s333 = families::spider(3, 3, 3);
        let rep = classify(&s333);
        assert!(rep.is_chordal_bipartite && rep.s125_free() && !rep.s333_free());
        assert!(rep.counterexample().unwrap().verify(&s333));
    }

    #[test]
    fn midpoints() {
        let p5 = families::path(5);
        assert_eq!(p5_midpoints(&p5).to_vec(), vec![2]);
        assert!(p5_midpoints(&families::cycle(4)).is_empty());
        assert_eq!(p5_midpoints(&families::path(8)).to_vec(), vec![2, 3, 4, 5]);
    }

    #[test]
    fn witness_records() {
        let w = SubgraphWitness { pattern: Pattern::Spider(1, 1, 1), embedding: vec![0, 1, 2, 3] };
        assert_eq!(w.to_string(), "spider 1 1 1 : 0 1 2 3");
        assert!(!SubgraphWitness { pattern: Pattern::Path(3), embedding: vec![0, 1, 1] }.verify(&families::path(3)));
    }
}
