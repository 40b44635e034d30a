//! Line-oriented traces and their replay.

use std::fmt;

use crate::graph::BipartiteGraph;
use crate::vertex_set::VertexSet;

use super::state::{Choice, DominationState, Event, Rule, RuleSet};

/// Every event of a search in the order it happened, dead branches included.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub events: Vec<Event>,
}

impl ReductionTrace {
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Parses the output of [`ReductionTrace::serialize`] for a graph on `n`
/// vertices.
pub fn parse_trace(text: &str, n: usize) -> Result<ReductionTrace, String> {
    let mut events = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| format!("line {}: {msg}", i + 1);
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [kind, arg, rule] = parts[..] else {
            return Err(err("expected three fields"));
        };
        let vertex = || -> Result<usize, String> {
            let v: usize = arg.parse().map_err(|_| err("bad vertex"))?;
            if v >= n {
                return Err(err("vertex out of range"));
            }
            Ok(v)
        };
        let rule_id = || Rule::from_id(rule).ok_or_else(|| err("unknown rule id"));
        let e = match kind {
            "seeded" => Event::Seeded(vertex()?),
            "forced" => Event::Forced(vertex()?, rule_id()?),
            "excluded" => Event::Excluded(vertex()?, rule_id()?),
            "infeasible" => Event::Infeasible(rule_id()?),
            "reduced" => {
                let mut s = VertexSet::new(n);
                if arg != "-" {
                    for t in arg.split(',') {
                        let v: usize = t.parse().map_err(|_| err("bad vertex set"))?;
                        if v >= n {
                            return Err(err("vertex out of range"));
                        }
                        s.insert(v);
                    }
                }
                Event::Reduced(s)
            }
            "branched" => {
                let (d, c) = arg.split_once('/').ok_or_else(|| err("expected depth/choice"))?;
                let depth = d.parse().map_err(|_| err("bad depth"))?;
                let choice = if c == "no-midpoint" {
                    Choice::NoMidpoint
                } else {
                    let v: usize = c.parse().map_err(|_| err("bad choice"))?;
                    if v >= n {
                        return Err(err("vertex out of range"));
                    }
                    Choice::Vertex(v)
                };
                Event::Branched { depth, choice }
            }
            _ => return Err(err("unknown event")),
        };
        events.push(e);
    }
    Ok(ReductionTrace { events })
}

/// Rebuilds the final state of a search from its trace. A branch event at
/// depth `k` rolls back to the state saved at the `k`-th open branch point.
pub fn replay<'g>(g: &'g BipartiteGraph, trace: &ReductionTrace, rules: RuleSet) -> DominationState<'g> {
    let mut st = DominationState::with_rules(g, rules);
    let mut saved: Vec<DominationState<'g>> = Vec::new();
    for e in &trace.events {
        if let Event::Branched { depth, .. } = *e {
            if saved.len() > depth {
                saved.truncate(depth + 1);
                st = saved[depth].clone();
            } else {
                saved.push(st.clone());
            }
        }
        st.apply_event(e);
    }
    st
}
