//! Partial solutions and the propagation rules.

use std::cell::OnceCell;
use std::fmt;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{BipartiteGraph, DistanceLevels, Subgraph};
use crate::recognition::{for_each_induced_path_via, p5_midpoints};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Open,
    InD,
    Excluded,
}

/// Why a vertex was forced or excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Unit,
    Levels,
    Deg,
    P5Mid,
    P8,
    /// A branching decision.
    Branch,
    /// Assigned by the exact-cover oracle on a residual.
    Oracle,
    /// The `|D| = 1` screen and single vertices.
    Trivial,
    /// Direct calls to [`DominationState::assert_in_d`] from outside.
    External,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::Unit => "R-unit",
            Rule::Levels => "R-levels",
            Rule::Deg => "R-deg",
            Rule::P5Mid => "R-p5mid",
            Rule::P8 => "R-p8",
            Rule::Branch => "branch",
            Rule::Oracle => "oracle",
            Rule::Trivial => "trivial",
            Rule::External => "-",
        }
    }

    pub fn from_id(s: &str) -> Option<Rule> {
        Some(match s {
            "R-unit" => Rule::Unit,
            "R-levels" => Rule::Levels,
            "R-deg" => Rule::Deg,
            "R-p5mid" => Rule::P5Mid,
            "R-p8" => Rule::P8,
            "branch" => Rule::Branch,
            "oracle" => Rule::Oracle,
            "trivial" => Rule::Trivial,
            "-" => Rule::External,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Choice {
    /// Assume no vertex of `D` is the midpoint of an induced `P_5`.
    NoMidpoint,
    /// Assume the vertex is in `D`.
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    Seeded(usize),
    Forced(usize, Rule),
    Excluded(usize, Rule),
    Reduced(VertexSet),
    Branched { depth: usize, choice: Choice },
    Infeasible(Rule),
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Seeded(v) => write!(f, "seeded {v} -"),
            Event::Forced(v, r) => write!(f, "forced {v} {}", r.id()),
            Event::Excluded(v, r) => write!(f, "excluded {v} {}", r.id()),
            Event::Reduced(s) => write!(f, "reduced {s} -"),
            Event::Branched { depth, choice: Choice::NoMidpoint } => write!(f, "branched {depth}/no-midpoint -"),
            Event::Branched { depth, choice: Choice::Vertex(v) } => write!(f, "branched {depth}/{v} -"),
            Event::Infeasible(r) => write!(f, "infeasible - {}", r.id()),
        }
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum StateError {
    #[error("vertex {0} is already excluded")]
    ConflictExcluded(usize),
    #[error("vertex {0} would be dominated twice")]
    DominationClash(usize),
}

/// Graph facts that do not depend on the partial solution, computed once.
pub struct GraphFacts<'g> {
    g: &'g BipartiteGraph,
    midpoints: VertexSet,
    p8_roles: OnceCell<(VertexSet, VertexSet)>,
}

impl<'g> GraphFacts<'g> {
    pub fn new(g: &'g BipartiteGraph) -> Self {
        GraphFacts { g, midpoints: p5_midpoints(g), p8_roles: OnceCell::new() }
    }

    pub fn graph(&self) -> &'g BipartiteGraph {
        self.g
    }

    /// Midpoints of induced `P_5`s.
    pub fn midpoints(&self) -> &VertexSet {
        &self.midpoints
    }

    /// `(ends, seconds)`: vertices at position 1 (or 8) and position 2 (or 7)
    /// of some induced `P_8`.
    pub fn p8_roles(&self) -> &(VertexSet, VertexSet) {
        self.p8_roles.get_or_init(|| {
            let g = self.g;
            let mut ends = VertexSet::new(g.n());
            let mut seconds = VertexSet::new(g.n());
            for a in 0..g.n() {
                for &b in g.neighbors(a) {
                    if ends.contains(a) && seconds.contains(b) {
                        continue;
                    }
                    let found = for_each_induced_path_via(g, 8, a, b, None, |_| ControlFlow::Break(())).is_break();
                    if found {
                        ends.insert(a);
                        seconds.insert(b);
                    }
                }
            }
            (ends, seconds)
        })
    }
}

/// Which rules [`DominationState::propagate`] may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleSet {
    /// R-p5mid, and R-p8 once the no-midpoint hypothesis is set. Both rely
    /// on the graph being in the class.
    pub class_rules: bool,
    /// Failed-literal probing inside R-unit.
    pub probing: bool,
}

impl Default for RuleSet {
    fn default() -> Self {
        RuleSet { class_rules: true, probing: true }
    }
}

/// A partial e.d.s.: per-vertex status, domination counts and the distance
/// levels of the current basis (the `InD` vertices).
#[derive(Clone)]
pub struct DominationState<'g> {
    g: &'g BipartiteGraph,
    status: Vec<Status>,
    dominated_by: Vec<u32>,
    d_basis: VertexSet,
    levels: Option<DistanceLevels>,
    feasible: bool,
    no_midpoint: bool,
    p8_applied: bool,
    p5_done: VertexSet,
    rules: RuleSet,
    events: Vec<Event>,
}

impl<'g> DominationState<'g> {
    pub fn new(g: &'g BipartiteGraph) -> Self {
        Self::with_rules(g, RuleSet::default())
    }

    pub fn with_rules(g: &'g BipartiteGraph, rules: RuleSet) -> Self {
        let n = g.n();
        DominationState {
            g,
            status: vec![Status::Open; n],
            dominated_by: vec![0; n],
            d_basis: VertexSet::new(n),
            levels: None,
            feasible: true,
            no_midpoint: false,
            p8_applied: false,
            p5_done: VertexSet::new(n),
            rules,
            events: Vec::new(),
        }
    }

    pub fn graph(&self) -> &'g BipartiteGraph {
        self.g
    }

    pub fn status(&self, v: usize) -> Status {
        self.status[v]
    }

    pub fn statuses(&self) -> &[Status] {
        &self.status
    }

    pub fn dominated_by(&self, v: usize) -> u32 {
        self.dominated_by[v]
    }

    pub fn d_basis(&self) -> &VertexSet {
        &self.d_basis
    }

    /// Distance levels of the basis, `None` while it is empty.
    pub fn levels(&self) -> Option<&DistanceLevels> {
        self.levels.as_ref()
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible
    }

    pub fn rules(&self) -> RuleSet {
        self.rules
    }

    pub fn no_midpoint_hypothesis(&self) -> bool {
        self.no_midpoint
    }

    /// Restricts to e.d.s. in which no vertex is an induced-`P_5` midpoint,
    /// which enables R-p8.
    pub fn assume_no_midpoint(&mut self) {
        self.no_midpoint = true;
    }

    pub fn excluded(&self) -> VertexSet {
        self.with_status(Status::Excluded)
    }

    fn with_status(&self, s: Status) -> VertexSet {
        VertexSet::from_ids(self.g.n(), (0..self.g.n()).filter(|&v| self.status[v] == s))
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub(crate) fn take_events(&mut self) -> Vec<Event> {
        std::mem::take(&mut self.events)
    }

    /// Every vertex dominated exactly once.
    pub fn is_complete(&self) -> bool {
        self.feasible && self.dominated_by.iter().all(|&c| c == 1)
    }

    pub fn undominated(&self) -> VertexSet {
        VertexSet::from_ids(self.g.n(), (0..self.g.n()).filter(|&v| self.dominated_by[v] == 0))
    }

    pub fn mark_infeasible(&mut self, rule: Rule) {
        if self.feasible {
            self.feasible = false;
            self.events.push(Event::Infeasible(rule));
        }
    }

    /// Adds `v` to the basis as a seed.
    pub fn seed(&mut self, v: usize) -> Result<(), StateError> {
        self.events.push(Event::Seeded(v));
        self.apply_assert(v, Rule::External)
    }

    /// Puts `v` in `D`: excludes `N(v)` and counts the domination of `N[v]`.
    /// A conflict marks the state infeasible and is returned as an error.
    pub fn assert_in_d(&mut self, v: usize, rule: Rule) -> Result<(), StateError> {
        self.events.push(Event::Forced(v, rule));
        self.apply_assert(v, rule)
    }

    fn apply_assert(&mut self, v: usize, rule: Rule) -> Result<(), StateError> {
        match self.status[v] {
            Status::InD => return Ok(()),
            Status::Excluded => {
                self.mark_infeasible(rule);
                return Err(StateError::ConflictExcluded(v));
            }
            Status::Open => {}
        }
        self.status[v] = Status::InD;
        self.d_basis.insert(v);
        let g = self.g;
        let mut clash = None;
        for u in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            self.dominated_by[u] += 1;
            if self.dominated_by[u] > 1 && clash.is_none() {
                clash = Some(u);
            }
        }
        for &u in g.neighbors(v) {
            if self.status[u] == Status::Open {
                self.status[u] = Status::Excluded;
            }
        }
        self.levels = Some(g.distance_levels(&self.d_basis).expect("basis is nonempty"));
        if let Some(u) = clash {
            self.mark_infeasible(rule);
            return Err(StateError::DominationClash(u));
        }
        Ok(())
    }

    /// Marks `v` excluded. Excluding a vertex of `D` makes the state
    /// infeasible. Returns whether the status changed.
    pub fn exclude(&mut self, v: usize, rule: Rule) -> bool {
        match self.status[v] {
            Status::Excluded => false,
            Status::InD => {
                self.events.push(Event::Excluded(v, rule));
                self.mark_infeasible(rule);
                true
            }
            Status::Open => {
                self.events.push(Event::Excluded(v, rule));
                self.status[v] = Status::Excluded;
                true
            }
        }
    }

    /// Applies an event without recording it again. Used by replay.
    pub(crate) fn apply_event(&mut self, e: &Event) {
        match *e {
            Event::Seeded(v) | Event::Forced(v, _) => {
                let _ = self.apply_assert(v, Rule::External);
            }
            Event::Excluded(v, _) => {
                if self.status[v] == Status::Open {
                    self.status[v] = Status::Excluded;
                }
            }
            Event::Infeasible(_) => self.feasible = false,
            Event::Branched { choice: Choice::NoMidpoint, .. } => self.no_midpoint = true,
            Event::Reduced(_) | Event::Branched { .. } => {}
        }
        self.events.clear();
    }

    /// Open and every closed neighbor undominated: putting `c` in `D` clashes
    /// with nothing.
    pub fn admissible(&self, c: usize) -> bool {
        self.status[c] == Status::Open
            && self.dominated_by[c] == 0
            && self.g.neighbors(c).iter().all(|&u| self.dominated_by[u] == 0)
    }

    /// Admissible dominators of `w`, ascending.
    pub fn candidates(&self, w: usize) -> Vec<usize> {
        let mut c: Vec<usize> = std::iter::once(w)
            .chain(self.g.neighbors(w).iter().copied())
            .filter(|&u| self.admissible(u))
            .collect();
        c.sort_unstable();
        c
    }

    /// Runs the rules to a fixpoint in the order R-levels, R-deg, R-unit,
    /// R-p5mid, R-p8, restarting from the top after every change.
    pub fn propagate(&mut self, facts: &GraphFacts<'_>) {
        while self.feasible {
            if self.rule_levels() {
                continue;
            }
            if self.rule_deg() {
                continue;
            }
            if self.rule_unit() {
                continue;
            }
            if self.rules.class_rules && self.rule_p5mid() {
                continue;
            }
            if self.rules.class_rules && self.no_midpoint && self.rule_p8(facts) {
                continue;
            }
            break;
        }
    }

    /// Runs one named rule once. Used to check that the fixpoint does not
    /// depend on rule order.
    pub fn propagate_in_order(&mut self, facts: &GraphFacts<'_>, order: &[Rule]) {
        'outer: while self.feasible {
            for &r in order {
                let changed = match r {
                    Rule::Levels => self.rule_levels(),
                    Rule::Deg => self.rule_deg(),
                    Rule::Unit => self.rule_unit(),
                    Rule::P5Mid => self.rules.class_rules && self.rule_p5mid(),
                    Rule::P8 => self.rules.class_rules && self.no_midpoint && self.rule_p8(facts),
                    _ => false,
                };
                if changed || !self.feasible {
                    continue 'outer;
                }
            }
            break;
        }
    }

    /// `D ∩ (N₁ ∪ N₂) = ∅`.
    fn rule_levels(&mut self) -> bool {
        let Some(levels) = &self.levels else { return false };
        let mut targets = levels.level(1);
        targets.union_with(&levels.level(2));
        let mut changed = false;
        for v in targets.iter().filter(|&v| self.status[v] == Status::Open).collect::<Vec<_>>() {
            changed |= self.exclude(v, Rule::Levels);
        }
        changed
    }

    /// Every `N₂` vertex needs a possible dominator in `N₃`.
    fn rule_deg(&mut self) -> bool {
        let Some(levels) = &self.levels else { return false };
        let dead = levels
            .level(2)
            .iter()
            .find(|&u| !self.g.neighbors(u).iter().any(|&w| levels.in_level(w, 3) && self.admissible(w)));
        if dead.is_some() {
            self.mark_infeasible(Rule::Deg);
            return true;
        }
        false
    }

    /// No candidate: infeasible. One candidate: forced. Otherwise probe:
    /// exclude `c` when putting it in `D` leaves some vertex at distance 2 or
    /// 3 without a candidate.
    fn rule_unit(&mut self) -> bool {
        let n = self.g.n();
        for w in 0..n {
            if self.dominated_by[w] != 0 {
                continue;
            }
            let cands = self.candidates(w);
            match cands.len() {
                0 => {
                    self.mark_infeasible(Rule::Unit);
                    return true;
                }
                1 => {
                    let _ = self.assert_in_d(cands[0], Rule::Unit);
                    return true;
                }
                _ => {}
            }
        }
        if !self.rules.probing {
            return false;
        }
        let doomed: Vec<usize> = (0..n).filter(|&c| self.admissible(c) && self.probe_fails(c)).collect();
        for &c in &doomed {
            self.exclude(c, Rule::Unit);
        }
        !doomed.is_empty()
    }

    fn probe_fails(&self, c: usize) -> bool {
        let g = self.g;
        let n = g.n();
        // dist from c up to 3
        let mut dist = vec![u8::MAX; n];
        dist[c] = 0;
        let mut frontier = vec![c];
        let mut ring = Vec::new();
        for d in 1..=3u8 {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in g.neighbors(x) {
                    if dist[y] == u8::MAX {
                        dist[y] = d;
                        next.push(y);
                    }
                }
            }
            if d >= 2 {
                ring.extend(next.iter().copied());
            }
            frontier = next;
        }
        ring.into_iter().any(|w| {
            self.dominated_by[w] == 0
                && std::iter::once(w)
                    .chain(g.neighbors(w).iter().copied())
                    .filter(|&u| self.admissible(u))
                    .all(|u| dist[u] <= 2)
        })
    }

    /// For `u₂ ∈ D` and every endpoint `u₁` of an induced `P_5` with midpoint
    /// `u₂`, exactly one neighbor of `u₁` lies outside `N(u₂)`, and it is in
    /// `D`.
    fn rule_p5mid(&mut self) -> bool {
        let g = self.g;
        let roots: Vec<usize> = self.d_basis.iter().filter(|&u| !self.p5_done.contains(u)).collect();
        for u2 in roots {
            let mut pending = false;
            for u1 in p5_endpoints(g, u2) {
                let cands: Vec<usize> = g.neighbors(u1).iter().copied().filter(|&v| !g.has_edge(v, u2)).collect();
                if cands.len() != 1 {
                    self.mark_infeasible(Rule::P5Mid);
                    return true;
                }
                let v = cands[0];
                match self.status[v] {
                    Status::InD => {}
                    Status::Excluded => {
                        self.events.push(Event::Forced(v, Rule::P5Mid));
                        self.mark_infeasible(Rule::P5Mid);
                        return true;
                    }
                    Status::Open => {
                        let _ = self.assert_in_d(v, Rule::P5Mid);
                        pending = true;
                        break;
                    }
                }
            }
            if pending {
                return true;
            }
            self.p5_done.insert(u2);
        }
        false
    }

    /// Under the no-midpoint hypothesis: midpoints and `P_8` ends are
    /// excluded, second vertices of `P_8`s are forced.
    fn rule_p8(&mut self, facts: &GraphFacts<'_>) -> bool {
        if self.p8_applied {
            return false;
        }
        self.p8_applied = true;
        let n = self.g.n();
        if facts.midpoints().iter().any(|v| self.status[v] == Status::InD) {
            self.mark_infeasible(Rule::P8);
            return true;
        }
        let (ends, seconds) = facts.p8_roles();
        let mut changed = false;
        for v in 0..n {
            if facts.midpoints().contains(v) || ends.contains(v) {
                changed |= self.exclude(v, Rule::P8);
            }
        }
        for v in seconds.iter() {
            if !self.feasible {
                break;
            }
            if self.status[v] != Status::InD {
                let _ = self.assert_in_d(v, Rule::P8);
                changed = true;
            }
        }
        changed || !self.feasible
    }

    /// `G' = G \ N[u]` with `N²(u)` and the current exclusions carried over.
    pub fn reduce_by_forced(&self, u: usize) -> Reduction {
        assert_eq!(self.status[u], Status::InD, "reduce_by_forced needs u in D");
        let g = self.g;
        let removed = g.closed_neighborhood(u);
        let keep = removed.complement();
        let sub = g.induced_subgraph(&keep);
        let mut excluded = g.second_neighborhood(u);
        excluded.union_with(&self.excluded());
        let child_excluded = VertexSet::from_ids(
            sub.graph.n(),
            (0..sub.graph.n()).filter(|&c| excluded.contains(sub.to_parent[c])),
        );
        Reduction { sub, excluded: child_excluded }
    }
}

/// Result of [`DominationState::reduce_by_forced`]: the child graph, its id
/// map to the parent, and the child ids that start excluded.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub sub: Subgraph,
    pub excluded: VertexSet,
}

/// Endpoints `u₁` of induced `P_5`s `(u₁, v₁, u₂, v₂, u₃)` with midpoint `u₂`,
/// ascending.
pub fn p5_endpoints(g: &BipartiteGraph, u2: usize) -> Vec<usize> {
    let nb = g.neighbors(u2);
    let mut out = VertexSet::new(g.n());
    for &v1 in nb {
        for &v2 in nb {
            if v1 == v2 {
                continue;
            }
            // some u₃ hangs off v₂ but not v₁
            let tail = g.neighbors(v2).iter().any(|&u3| !g.has_edge(u3, v1));
            if !tail {
                continue;
            }
            for &u1 in g.neighbors(v1) {
                if u1 != u2 && !g.has_edge(u1, v2) {
                    out.insert(u1);
                }
            }
        }
    }
    out.to_vec()
}

impl fmt::Debug for DominationState<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DominationState")
            .field("d_basis", &self.d_basis)
            .field("excluded", &self.excluded())
            .field("feasible", &self.feasible)
            .finish()
    }
}
