//! Forced-vertex branch and reduce.
//!
//! Each connected component is solved on its own. A component that has no
//! induced `P_8` goes to the exact-cover oracle. Otherwise the search
//! propagates, splits the undominated remainder into components (solved in
//! sequence, since they share no constraints), hands `P_8`-free remainders to
//! the oracle, and branches on the rest: first the hypothesis that no vertex
//! of `D` is a `P_5` midpoint (which switches on R-p8), then on the
//! dominator of the undominated vertex with the fewest candidates.

mod lemmas;
mod state;
mod trace;

use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::BipartiteGraph;
use crate::oracle::{self, Constraints, OracleError};
use crate::recognition::{classify_with, for_each_induced_path, ClassParams, ClassReport};
use crate::vertex_set::VertexSet;

pub use lemmas::{check_lemmas, check_lemmas_with, closed_bases, LemmaEntry, LemmaError, LemmaId, LemmaReport};
pub use state::{p5_endpoints, Choice, DominationState, Event, GraphFacts, Reduction, Rule, RuleSet, StateError, Status};
pub use trace::{parse_trace, replay, ReductionTrace};

pub const DEFAULT_BRANCH_BUDGET: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Skip the class check and every rule that depends on it.
    pub force: bool,
    pub branch_budget: u64,
    pub oracle_budget: u64,
    pub class: ClassParams,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            force: false,
            branch_budget: DEFAULT_BRANCH_BUDGET,
            oracle_budget: oracle::DEFAULT_NODE_BUDGET,
            class: ClassParams::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdsResult {
    Eds(VertexSet),
    NoEds,
}

/// How the answer was reached. With several components the strongest
/// applies: `OracleFallback` over `NoP8Residual` over `Direct`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BaseCase {
    /// Propagation and branching alone.
    Direct,
    /// After reductions, a `P_8`-free remainder was handed to the oracle.
    NoP8Residual,
    /// A whole component without an induced `P_8` was handed to the oracle.
    OracleFallback,
}

impl BaseCase {
    pub fn as_str(self) -> &'static str {
        match self {
            BaseCase::Direct => "direct",
            BaseCase::NoP8Residual => "no-p8-residual",
            BaseCase::OracleFallback => "oracle-fallback",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub result: EdsResult,
    pub trace: ReductionTrace,
    pub base_case: BaseCase,
    /// Status of every vertex in the last state the search held: the
    /// solution on success, the final dead end otherwise.
    pub final_status: Vec<Status>,
    pub branches: u64,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("graph is not in the class")]
    NotInClass(Box<ClassReport>),
    #[error("branch budget exceeded after {branches} branches")]
    BudgetExceeded { branches: u64 },
    #[error("oracle budget exceeded after {nodes} nodes")]
    OracleBudget { nodes: u64 },
}

impl From<OracleError> for SolveError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { nodes } => SolveError::OracleBudget { nodes },
            OracleError::Infeasible => unreachable!("the solver never asks for a constrained forced set"),
        }
    }
}

struct Search<'a, 'g> {
    facts: &'a GraphFacts<'g>,
    opts: &'a SolveOptions,
    trace: Vec<Event>,
    branches: u64,
    base: BaseCase,
    last: Vec<Status>,
}

impl<'a, 'g> Search<'a, 'g> {
    fn flush(&mut self, st: &mut DominationState<'g>) {
        self.trace.extend(st.take_events());
        self.last.clear();
        self.last.extend_from_slice(st.statuses());
    }

    fn branch_point(&mut self, depth: usize, choice: Choice) -> Result<(), SolveError> {
        self.branches += 1;
        if self.branches > self.opts.branch_budget {
            return Err(SolveError::BudgetExceeded { branches: self.branches });
        }
        self.trace.push(Event::Branched { depth, choice });
        Ok(())
    }

    /// Solves the undominated part of `scope`. `depth` counts committed
    /// branch points on the current path; `hypothesis` says whether the
    /// no-midpoint branch may still be tried.
    fn search(
        &mut self,
        mut st: DominationState<'g>,
        scope: &VertexSet,
        depth: usize,
        hypothesis: bool,
    ) -> Result<Option<(DominationState<'g>, usize)>, SolveError> {
        let g = self.facts.graph();
        st.propagate(self.facts);
        if !st.is_feasible() {
            self.flush(&mut st);
            return Ok(None);
        }
        let mut open = st.undominated();
        open.intersect_with(scope);
        if open.is_empty() {
            self.flush(&mut st);
            return Ok(Some((st, depth)));
        }
        self.flush(&mut st);

        // The hypothesis constrains every part at once, so it is decided
        // before the remainder is split.
        if hypothesis && st.rules().class_rules && !st.no_midpoint_hypothesis() && has_p8(g, &open) {
            self.branch_point(depth, Choice::NoMidpoint)?;
            let mut child = st.clone();
            child.assume_no_midpoint();
            if let Some(found) = self.search(child, scope, depth + 1, false)? {
                return Ok(Some(found));
            }
        }

        let sub = g.induced_subgraph(&open);
        let parts = sub.graph.components();
        if parts.len() > 1 {
            let mut gone = scope.clone();
            gone.difference_with(&open);
            self.trace.push(Event::Reduced(gone));
            let mut depth = depth;
            for part in parts {
                let part = sub.lift(&part, g.n());
                match self.search(st, &part, depth, false)? {
                    Some((next, d)) => {
                        st = next;
                        depth = d;
                    }
                    None => return Ok(None),
                }
            }
            return Ok(Some((st, depth)));
        }

        if !has_p8(g, &open) {
            return self.residual_to_oracle(st, &open, depth);
        }

        // pivot: undominated vertex with fewest candidates, smallest id
        let (_, cands) = open
            .iter()
            .map(|w| (w, st.candidates(w)))
            .min_by_key(|(w, c)| (c.len(), *w))
            .expect("open is nonempty");
        for (i, &c) in cands.iter().enumerate() {
            self.branch_point(depth, Choice::Vertex(c))?;
            let mut child = st.clone();
            for &prev in &cands[..i] {
                child.exclude(prev, Rule::Branch);
            }
            let _ = child.assert_in_d(c, Rule::Branch);
            if let Some(found) = self.search(child, scope, depth + 1, false)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    fn residual_to_oracle(
        &mut self,
        mut st: DominationState<'g>,
        part: &VertexSet,
        depth: usize,
    ) -> Result<Option<(DominationState<'g>, usize)>, SolveError> {
        let g = self.facts.graph();
        let sub = g.induced_subgraph(part);
        let forbidden: Vec<usize> = (0..sub.graph.n()).filter(|&c| !st.admissible(sub.to_parent[c])).collect();
        let cons = Constraints { required: Vec::new(), forbidden, budget: self.opts.oracle_budget };
        let res = oracle::solve_exact_with(&sub.graph, oracle::Mode::First, &cons)?;
        self.base = self.base.max(BaseCase::NoP8Residual);
        match res.solutions.first() {
            Some(sol) => {
                for c in sol.d.iter() {
                    let _ = st.assert_in_d(sub.to_parent[c], Rule::Oracle);
                }
                self.flush(&mut st);
                Ok(Some((st, depth)))
            }
            None => {
                st.mark_infeasible(Rule::Oracle);
                self.flush(&mut st);
                Ok(None)
            }
        }
    }
}

fn has_p8(g: &BipartiteGraph, within: &VertexSet) -> bool {
    within.len() >= 8 && for_each_induced_path(g, 8, Some(within), |_| ControlFlow::Break(())).is_break()
}

/// A vertex adjacent to every other vertex of its component: `{x}` is an
/// e.d.s. of that component.
fn universal_vertex(g: &BipartiteGraph, comp: &VertexSet) -> Option<usize> {
    comp.iter().find(|&x| g.degree(x) + 1 == comp.len())
}

pub fn solve(g: &BipartiteGraph) -> Result<SolveOutcome, SolveError> {
    solve_with(g, &SolveOptions::default())
}

pub fn solve_with(g: &BipartiteGraph, opts: &SolveOptions) -> Result<SolveOutcome, SolveError> {
    if !opts.force {
        let report = classify_with(g, &opts.class);
        if !report.in_class() {
            return Err(SolveError::NotInClass(Box::new(report)));
        }
    }
    let facts = GraphFacts::new(g);
    let rules = RuleSet { class_rules: !opts.force, probing: true };
    let mut st = DominationState::with_rules(g, rules);
    let mut search = Search { facts: &facts, opts, trace: Vec::new(), branches: 0, base: BaseCase::Direct, last: vec![Status::Open; g.n()] };
    let mut depth = 0;
    let mut ok = true;
    for comp in g.components() {
        if let Some(x) = universal_vertex(g, &comp) {
            let _ = st.assert_in_d(x, Rule::Trivial);
            search.flush(&mut st);
            continue;
        }
        if !has_p8(g, &comp) {
            search.base = search.base.max(BaseCase::OracleFallback);
            let sub = g.induced_subgraph(&comp);
            let cons = Constraints { budget: opts.oracle_budget, ..Constraints::default() };
            let res = oracle::solve_exact_with(&sub.graph, oracle::Mode::First, &cons)?;
            match res.solutions.first() {
                Some(sol) => {
                    for c in sol.d.iter() {
                        let _ = st.assert_in_d(sub.to_parent[c], Rule::Oracle);
                    }
                    search.flush(&mut st);
                }
                None => {
                    st.mark_infeasible(Rule::Oracle);
                    search.flush(&mut st);
                    ok = false;
                    break;
                }
            }
            continue;
        }
        match search.search(st.clone(), &comp, depth, true)? {
            Some((next, d)) => {
                st = next;
                depth = d;
            }
            None => {
                ok = false;
                break;
            }
        }
    }
    let result = if ok {
        let d = st.d_basis().clone();
        debug_assert!(oracle::verify_eds(g, &d).is_ok());
        EdsResult::Eds(d)
    } else {
        EdsResult::NoEds
    };
    Ok(SolveOutcome {
        result,
        trace: ReductionTrace { events: search.trace },
        base_case: search.base,
        final_status: search.last,
        branches: search.branches,
    })
}
