//! Exact e.d.s. search. An e.d.s. is an exact cover of the vertex set by
//! closed neighborhoods, so this is Algorithm X with dancing links: one
//! column per vertex, one row `N[v]` per vertex.

use std::fmt;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::BipartiteGraph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    First,
    All,
    Count,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("search node budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("no e.d.s. contains the assumed set")]
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdsSolution {
    pub d: VertexSet,
    pub certified: bool,
}

impl EdsSolution {
    fn certify(g: &BipartiteGraph, d: VertexSet) -> Self {
        let certified = verify_eds(g, &d).is_ok();
        EdsSolution { d, certified }
    }
}

impl fmt::Display for EdsSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eds {} :", self.d.len())?;
        for v in self.d.iter() {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// A vertex whose closed neighborhood does not meet `d` exactly once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("vertex {vertex} is dominated {count} times")]
pub struct EdsViolation {
    pub vertex: usize,
    pub count: usize,
}

/// Checks `|N[v] ∩ d| = 1` for every `v`, reporting the smallest violator.
pub fn verify_eds(g: &BipartiteGraph, d: &VertexSet) -> Result<(), EdsViolation> {
    for v in 0..g.n() {
        let count = d.contains(v) as usize + g.neighbors(v).iter().filter(|&&u| d.contains(u)).count();
        if count != 1 {
            return Err(EdsViolation { vertex: v, count });
        }
    }
    Ok(())
}

/// Pairwise distance rules every e.d.s. obeys: members are at distance at
/// least 3, and at least 4 when on the same side.
pub fn distance_rules_hold(g: &BipartiteGraph, d: &VertexSet) -> bool {
    let ids = d.to_vec();
    ids.iter().all(|&u| {
        let dist = g.bfs(u);
        ids.iter().filter(|&&v| v != u).all(|&v| match dist[v] {
            None => true,
            Some(k) => k >= 3 && (g.side(u) != g.side(v) || k >= 4),
        })
    })
}

/// Restrictions on the search.
#[derive(Clone, Debug)]
pub struct Constraints {
    /// Vertices every reported solution must contain.
    pub required: Vec<usize>,
    /// Vertices no reported solution may contain.
    pub forbidden: Vec<usize>,
    pub budget: u64,
}

impl Default for Constraints {
    fn default() -> Self {
        Constraints { required: Vec::new(), forbidden: Vec::new(), budget: DEFAULT_NODE_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    /// Empty in `Count` mode.
    pub solutions: Vec<EdsSolution>,
    pub count: u64,
    pub nodes: u64,
}

/// Dancing links over the closed-neighborhood incidence matrix. Node 0 is
/// the root, nodes `1..=n` are column headers, the rest are row cells.
struct Dlx {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    col: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Dlx {
    fn new(g: &BipartiteGraph, forbidden: &VertexSet) -> Self {
        let n = g.n();
        let cap = 1 + n + (0..n).map(|v| g.degree(v) + 1).sum::<usize>();
        let mut x = Dlx {
            left: Vec::with_capacity(cap),
            right: Vec::with_capacity(cap),
            up: Vec::with_capacity(cap),
            down: Vec::with_capacity(cap),
            col: Vec::with_capacity(cap),
            row: Vec::with_capacity(cap),
            size: vec![0; n + 1],
            nodes: 0,
            budget: 0,
        };
        for h in 0..=n {
            x.left.push(if h == 0 { n } else { h - 1 });
            x.right.push(if h == n { 0 } else { h + 1 });
            x.up.push(h);
            x.down.push(h);
            x.col.push(h);
            x.row.push(usize::MAX);
        }
        for v in 0..n {
            if forbidden.contains(v) {
                continue;
            }
            let mut cells: Vec<usize> = g.neighbors(v).to_vec();
            cells.push(v);
            cells.sort_unstable();
            let first = x.col.len();
            for (i, &u) in cells.iter().enumerate() {
                let id = x.col.len();
                let h = u + 1;
                x.left.push(if i == 0 { first + cells.len() - 1 } else { id - 1 });
                x.right.push(if i + 1 == cells.len() { first } else { id + 1 });
                x.up.push(x.up[h]);
                x.down.push(h);
                let last = x.up[h];
                x.down[last] = id;
                x.up[h] = id;
                x.col.push(h);
                x.row.push(v);
                x.size[h] += 1;
            }
        }
        x
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.col[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.size[self.col[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// Covers the columns of every other cell in `cell`s row.
    fn select_row_cells(&mut self, cell: usize) {
        let mut j = self.right[cell];
        while j != cell {
            self.cover(self.col[j]);
            j = self.right[j];
        }
    }

    fn deselect_row_cells(&mut self, cell: usize) {
        let mut j = self.left[cell];
        while j != cell {
            self.uncover(self.col[j]);
            j = self.left[j];
        }
    }

    fn search<F>(&mut self, chosen: &mut Vec<usize>, visit: &mut F) -> Result<ControlFlow<()>, OracleError>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExceeded { nodes: self.nodes });
        }
        if self.right[0] == 0 {
            return Ok(visit(chosen));
        }
        // fewest candidates first; headers stay in ascending order, so the
        // strict comparison breaks ties by smallest vertex id
        let mut c = self.right[0];
        let mut j = self.right[c];
        while j != 0 {
            if self.size[j] < self.size[c] {
                c = j;
            }
            j = self.right[j];
        }
        if self.size[c] == 0 {
            return Ok(ControlFlow::Continue(()));
        }
        self.cover(c);
        let mut r = self.down[c];
        let mut flow = ControlFlow::Continue(());
        while r != c {
            chosen.push(self.row[r]);
            self.select_row_cells(r);
            let res = self.search(chosen, visit);
            self.deselect_row_cells(r);
            chosen.pop();
            match res {
                Err(e) => {
                    self.uncover(c);
                    return Err(e);
                }
                Ok(ControlFlow::Break(())) => {
                    flow = ControlFlow::Break(());
                    break;
                }
                Ok(ControlFlow::Continue(())) => {}
            }
            r = self.down[r];
        }
        self.uncover(c);
        Ok(flow)
    }
}

/// Streams every e.d.s. satisfying `cons` to `visit` as a sorted id list
/// (the required vertices included). Returns the number of search nodes.
pub fn for_each_eds<F>(g: &BipartiteGraph, cons: &Constraints, mut visit: F) -> Result<u64, OracleError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    let forbidden = VertexSet::from_ids(n, cons.forbidden.iter().copied());
    let mut required = cons.required.clone();
    required.sort_unstable();
    required.dedup();
    // required rows must be present and pairwise disjoint
    let mut covered = VertexSet::new(n);
    for &r in &required {
        if forbidden.contains(r) {
            return Ok(0);
        }
        let nb = g.closed_neighborhood(r);
        if !nb.is_disjoint(&covered) {
            return Ok(0);
        }
        covered.union_with(&nb);
    }
    let mut x = Dlx::new(g, &forbidden);
    x.budget = cons.budget;
    // pin the required rows: cover their columns via one of their cells
    let mut pinned = Vec::new();
    for &r in &required {
        let h = r + 1;
        let mut cell = x.down[h];
        while x.row[cell] != r {
            cell = x.down[cell];
        }
        x.cover(h);
        x.select_row_cells(cell);
        pinned.push((h, cell));
    }
    let mut chosen = required.clone();
    let mut sorted = Vec::new();
    let res = x.search(&mut chosen, &mut |rows: &[usize]| {
        sorted.clear();
        sorted.extend_from_slice(rows);
        sorted.sort_unstable();
        visit(&sorted)
    });
    for &(h, cell) in pinned.iter().rev() {
        x.deselect_row_cells(cell);
        x.uncover(h);
    }
    res.map(|_| x.nodes)
}

pub fn solve_exact_with(g: &BipartiteGraph, mode: Mode, cons: &Constraints) -> Result<ExactResult, OracleError> {
    let mut solutions = Vec::new();
    let mut count = 0u64;
    let nodes = for_each_eds(g, cons, |ids| {
        count += 1;
        match mode {
            Mode::Count => ControlFlow::Continue(()),
            Mode::All => {
                solutions.push(EdsSolution::certify(g, VertexSet::from_ids(g.n(), ids.iter().copied())));
                ControlFlow::Continue(())
            }
            Mode::First => {
                solutions.push(EdsSolution::certify(g, VertexSet::from_ids(g.n(), ids.iter().copied())));
                ControlFlow::Break(())
            }
        }
    })?;
    Ok(ExactResult { solutions, count, nodes })
}

/// Solutions in search order; an empty list means no e.d.s. exists.
/// `Count` mode returns no sets, use [`count_eds`] for the number.
pub fn solve_exact(g: &BipartiteGraph, mode: Mode) -> Result<Vec<EdsSolution>, OracleError> {
    solve_exact_with(g, mode, &Constraints::default()).map(|r| r.solutions)
}

pub fn count_eds(g: &BipartiteGraph) -> Result<u64, OracleError> {
    solve_exact_with(g, Mode::Count, &Constraints::default()).map(|r| r.count)
}

/// Intersection and union-complement of all e.d.s. containing `assumed`.
pub fn forced_excluded_by_oracle(g: &BipartiteGraph, assumed: &VertexSet) -> Result<(VertexSet, VertexSet), OracleError> {
    forced_excluded_with(g, assumed, &VertexSet::new(g.n()), DEFAULT_NODE_BUDGET)
}

/// As [`forced_excluded_by_oracle`], restricted to e.d.s. avoiding
/// `avoided`.
pub fn forced_excluded_with(
    g: &BipartiteGraph,
    assumed: &VertexSet,
    avoided: &VertexSet,
    budget: u64,
) -> Result<(VertexSet, VertexSet), OracleError> {
    let n = g.n();
    let cons = Constraints { required: assumed.to_vec(), forbidden: avoided.to_vec(), budget };
    let mut inter = VertexSet::full(n);
    let mut union = VertexSet::new(n);
    let mut any = false;
    for_each_eds(g, &cons, |ids| {
        any = true;
        let d = VertexSet::from_ids(n, ids.iter().copied());
        inter.intersect_with(&d);
        union.union_with(&d);
        ControlFlow::Continue(())
    })?;
    if !any {
        return Err(OracleError::Infeasible);
    }
    Ok((inter, union.complement()))
}

/// The oracle's text output: one `eds <k> : <ids>` line per solution, or
/// `no-eds`.
pub fn format_solutions(sols: &[EdsSolution]) -> String {
    if sols.is_empty() {
        return "no-eds\n".to_string();
    }
    sols.iter().map(|s| format!("{s}\n")).collect()
}

pub fn format_budget_exceeded(nodes: u64) -> String {
    format!("budget-exceeded {nodes}\n")
}

/// Parses the first `eds <k> : <ids>` line of `text` (comments skipped).
/// `Ok(None)` means the text says `no-eds`.
pub fn parse_solution(text: &str, n: usize) -> Result<Option<VertexSet>, String> {
    let line = text
        .lines()
        .find(|l| !l.starts_with('#') && !l.trim().is_empty())
        .ok_or("empty solution file")?;
    if line == "no-eds" {
        return Ok(None);
    }
    let rest = line.strip_prefix("eds ").ok_or_else(|| format!("expected `eds <k> : <ids>`, got `{line}`"))?;
    let (k, ids) = rest.split_once(" :").ok_or("missing ` :` separator")?;
    let k: usize = k.parse().map_err(|_| format!("bad count `{k}`"))?;
    let mut d = VertexSet::new(n);
    for tok in ids.split_whitespace() {
        let v: usize = tok.parse().map_err(|_| format!("bad vertex `{tok}`"))?;
        if v >= n {
            return Err(format!("vertex {v} out of range"));
        }
        d.insert(v);
    }
    if d.len() != k {
        return Err(format!("count {k} does not match {} ids", d.len()));
    }
    Ok(Some(d))
}
