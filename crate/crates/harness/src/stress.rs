//! Oracle-vs-solver stress runs.
//!
//! Every instance is classified, solved by the oracle and by the solver
//! (forced for out-of-class instances), and the two decisions compared.
//! In-class instances also get their lemmas checked against every oracle
//! e.d.s. and every closed basis of it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::mpsc;
use std::time::Instant;

use eds_core::oracle::{solve_exact_with, Constraints, Mode, DEFAULT_NODE_BUDGET};
use eds_core::solver::{check_lemmas_with, closed_bases, LemmaError, SolveError, DEFAULT_BRANCH_BUDGET};
use eds_core::{classify, solve_with, verify_eds, BipartiteGraph, EdsResult, SolveOptions};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::corpus;
use crate::gen::{generate, GenMode, GenSpec, Rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MixMode {
    /// Even ids rejection, odd ids planted.
    Mixed,
    Rejection,
    Planted,
}

/// Parsed from TOML `key = value` lines. Only `instance_count` and `seed`
/// are required.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StressConfig {
    pub instance_count: usize,
    /// Inclusive bounds on `n`.
    #[serde(default = "default_size_range")]
    pub size_range: (usize, usize),
    #[serde(default = "default_oracle_budget")]
    pub oracle_budget: u64,
    #[serde(default = "default_solver_budget")]
    pub solver_budget: u64,
    pub seed: u64,
    #[serde(default = "default_mode")]
    pub mode: MixMode,
    #[serde(default = "default_rejection_prob")]
    pub rejection_edge_prob: f64,
    #[serde(default = "default_planted_prob")]
    pub planted_edge_prob: f64,
    #[serde(default = "default_retries")]
    pub max_retries: u32,
    #[serde(default = "yes")]
    pub include_corpus: bool,
    #[serde(default = "yes")]
    pub lemmas: bool,
    /// Upper limit for `size_range`, since the oracle is exponential.
    #[serde(default = "default_size_cap")]
    pub size_cap: usize,
    /// Worker threads; 0 uses rayon's default.
    #[serde(default)]
    pub threads: usize,
}

fn default_size_range() -> (usize, usize) {
    (1, 16)
}
fn default_oracle_budget() -> u64 {
    DEFAULT_NODE_BUDGET
}
fn default_solver_budget() -> u64 {
    DEFAULT_BRANCH_BUDGET
}
fn default_mode() -> MixMode {
    MixMode::Mixed
}
fn default_rejection_prob() -> f64 {
    0.25
}
fn default_planted_prob() -> f64 {
    0.3
}
fn default_retries() -> u32 {
    1000
}
fn default_size_cap() -> usize {
    16
}
fn yes() -> bool {
    true
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

impl StressConfig {
    pub fn new(instance_count: usize, seed: u64) -> Self {
        toml::from_str(&format!("instance_count = {instance_count}\nseed = {seed}\n")).expect("defaults parse")
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let cfg: StressConfig = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let (lo, hi) = self.size_range;
        let bad = |m: String| Err(ConfigError::Invalid(m));
        if lo == 0 || lo > hi {
            return bad(format!("size_range ({lo}, {hi}) must satisfy 1 <= lo <= hi"));
        }
        if hi > self.size_cap {
            return bad(format!("size_range upper bound {hi} exceeds size_cap {}", self.size_cap));
        }
        for p in [self.rejection_edge_prob, self.planted_edge_prob] {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("edge probability {p} is outside [0, 1]"));
            }
        }
        Ok(())
    }

    /// The generated part of the suite. Sizes and seeds are drawn in id
    /// order from one SplitMix64 stream seeded with `seed`: per instance,
    /// first `n = lo + below(hi - lo + 1)`, then the instance seed.
    pub fn specs(&self) -> Vec<GenSpec> {
        let mut rng = Rng::new(self.seed);
        let (lo, hi) = self.size_range;
        (0..self.instance_count)
            .map(|i| {
                let n = lo + rng.below(hi - lo + 1);
                let seed = rng.next_u64();
                let mode = match self.mode {
                    MixMode::Rejection => GenMode::Rejection,
                    MixMode::Planted => GenMode::Planted,
                    MixMode::Mixed if i % 2 == 0 => GenMode::Rejection,
                    MixMode::Mixed => GenMode::Planted,
                };
                let edge_prob = match mode {
                    GenMode::Rejection => self.rejection_edge_prob,
                    GenMode::Planted => self.planted_edge_prob,
                };
                GenSpec { n, edge_prob, seed, mode, max_retries: self.max_retries }
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decision {
    Eds,
    NoEds,
    Budget,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub lemma: String,
    pub d: Vec<usize>,
    pub basis: Vec<usize>,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub id: usize,
    pub name: String,
    pub spec: Option<GenSpec>,
    pub n: usize,
    pub edges: usize,
    /// Set when generation failed; nothing else was run.
    pub gen_error: Option<String>,
    pub in_class: bool,
    pub oracle: Option<Decision>,
    pub solver: Option<Decision>,
    /// The solver's set failed `verify_eds`.
    pub invalid_output: bool,
    pub planted_invalid: bool,
    pub lemma_solutions: usize,
    pub lemma_checks: usize,
    pub lemma_budget: bool,
    pub violations: Vec<Violation>,
    pub hypotheses_met: Vec<String>,
    pub solve_us: u64,
    pub oracle_us: u64,
}

impl InstanceResult {
    /// Both decisions are in and differ.
    pub fn mismatch(&self) -> bool {
        match (self.oracle, self.solver) {
            (Some(a), Some(b)) => a != Decision::Budget && b != Decision::Budget && a != b,
            _ => false,
        }
    }

    pub fn compared(&self) -> bool {
        matches!((self.oracle, self.solver), (Some(a), Some(b)) if a != Decision::Budget && b != Decision::Budget)
    }
}

/// One suite member before it is run.
#[derive(Clone, Debug)]
pub struct Job {
    pub id: usize,
    pub name: String,
    pub spec: Option<GenSpec>,
    pub graph: Option<BipartiteGraph>,
}

pub fn jobs(cfg: &StressConfig) -> Vec<Job> {
    let mut out = Vec::new();
    if cfg.include_corpus {
        for e in corpus() {
            out.push(Job { id: out.len(), name: e.name, spec: None, graph: Some(e.graph) });
        }
    }
    for (i, spec) in cfg.specs().into_iter().enumerate() {
        out.push(Job { id: out.len(), name: format!("gen-{i}"), spec: Some(spec), graph: None });
    }
    out
}

pub fn run_job(job: &Job, cfg: &StressConfig) -> InstanceResult {
    let mut r = InstanceResult {
        id: job.id,
        name: job.name.clone(),
        spec: job.spec.clone(),
        n: 0,
        edges: 0,
        gen_error: None,
        in_class: false,
        oracle: None,
        solver: None,
        invalid_output: false,
        planted_invalid: false,
        lemma_solutions: 0,
        lemma_checks: 0,
        lemma_budget: false,
        violations: Vec::new(),
        hypotheses_met: Vec::new(),
        solve_us: 0,
        oracle_us: 0,
    };
    let (g, planted) = match (&job.graph, &job.spec) {
        (Some(g), _) => (g.clone(), None),
        (None, Some(spec)) => match generate(spec) {
            Ok(inst) => (inst.graph, inst.planted),
            Err(e) => {
                r.gen_error = Some(e.to_string());
                return r;
            }
        },
        (None, None) => unreachable!("a job carries a graph or a spec"),
    };
    r.n = g.n();
    r.edges = g.edge_count();
    r.in_class = classify(&g).in_class();
    if let Some(p) = &planted {
        r.planted_invalid = verify_eds(&g, p).is_err();
    }

    let cons = Constraints { budget: cfg.oracle_budget, ..Constraints::default() };
    let t = Instant::now();
    let exact = solve_exact_with(&g, Mode::All, &cons);
    r.oracle_us = t.elapsed().as_micros() as u64;
    r.oracle = Some(match &exact {
        Ok(res) if res.count > 0 => Decision::Eds,
        Ok(_) => Decision::NoEds,
        Err(_) => Decision::Budget,
    });

    let opts = SolveOptions {
        force: !r.in_class,
        branch_budget: cfg.solver_budget,
        oracle_budget: cfg.oracle_budget,
        ..SolveOptions::default()
    };
    let t = Instant::now();
    let out = solve_with(&g, &opts);
    r.solve_us = t.elapsed().as_micros() as u64;
    r.solver = Some(match out {
        Ok(o) => match o.result {
            EdsResult::Eds(d) => {
                r.invalid_output = verify_eds(&g, &d).is_err();
                Decision::Eds
            }
            EdsResult::NoEds => Decision::NoEds,
        },
        Err(SolveError::BudgetExceeded { .. } | SolveError::OracleBudget { .. }) => Decision::Budget,
        Err(SolveError::NotInClass(_)) => unreachable!("out-of-class instances run forced"),
    });

    if cfg.lemmas && r.in_class {
        if let Ok(res) = &exact {
            if lemma_pass(&g, res, cfg, &mut r).is_err() {
                r.lemma_budget = true;
            }
        }
    }
    r
}

fn lemma_pass(
    g: &BipartiteGraph,
    res: &eds_core::oracle::ExactResult,
    cfg: &StressConfig,
    r: &mut InstanceResult,
) -> Result<(), LemmaError> {
    let mut met = std::collections::BTreeSet::new();
    for sol in &res.solutions {
        r.lemma_solutions += 1;
        for basis in closed_bases(g, &sol.d, cfg.oracle_budget)? {
            let rep = check_lemmas_with(g, &sol.d, &basis, cfg.oracle_budget)?;
            r.lemma_checks += 1;
            for e in &rep.entries {
                if e.hypothesis_met {
                    met.insert(e.id.as_str().to_string());
                }
                if let Some(w) = &e.counterexample {
                    r.violations.push(Violation {
                        lemma: e.id.as_str().to_string(),
                        d: sol.d.to_vec(),
                        basis: basis.to_vec(),
                        witness: w.clone(),
                    });
                }
            }
        }
    }
    r.hypotheses_met = met.into_iter().collect();
    Ok(())
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Percentiles {
    pub p50: u64,
    pub p90: u64,
    pub p99: u64,
    pub max: u64,
}

impl Percentiles {
    /// Nearest rank.
    pub fn of(mut xs: Vec<u64>) -> Self {
        if xs.is_empty() {
            return Percentiles::default();
        }
        xs.sort_unstable();
        let at = |q: f64| xs[((q * xs.len() as f64).ceil() as usize).clamp(1, xs.len()) - 1];
        Percentiles { p50: at(0.5), p90: at(0.9), p99: at(0.99), max: *xs.last().unwrap() }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct StressReport {
    pub instances: usize,
    pub gen_failed: usize,
    pub in_class: usize,
    pub out_of_class: usize,
    /// In-class instances where both decisions came back within budget.
    pub compared: usize,
    pub decision_matches: usize,
    pub mismatches: usize,
    pub forced_compared: usize,
    pub forced_mismatches: usize,
    pub eds_found: usize,
    pub no_eds: usize,
    pub oracle_budget_exceeded: usize,
    pub solver_budget_exceeded: usize,
    pub invalid_outputs: usize,
    pub planted_invalid: usize,
    pub lemma_solutions: usize,
    pub lemma_checks: usize,
    pub lemma_budget_exceeded: usize,
    pub lemma_violations: usize,
    pub violations_by_lemma: BTreeMap<String, usize>,
    /// Instances on which each lemma's hypothesis was met at least once.
    pub hypotheses_met: BTreeMap<String, usize>,
    pub solve_us: Percentiles,
    pub oracle_us: Percentiles,
    #[serde(skip)]
    pub results: Vec<InstanceResult>,
}

impl StressReport {
    pub fn from_results(results: Vec<InstanceResult>) -> Self {
        let mut rep = StressReport { instances: results.len(), ..StressReport::default() };
        for r in &results {
            if r.gen_error.is_some() {
                rep.gen_failed += 1;
                continue;
            }
            if r.in_class {
                rep.in_class += 1;
            } else {
                rep.out_of_class += 1;
            }
            match (r.in_class, r.compared(), r.mismatch()) {
                (true, true, false) => {
                    rep.compared += 1;
                    rep.decision_matches += 1;
                }
                (true, true, true) => {
                    rep.compared += 1;
                    rep.mismatches += 1;
                }
                (false, true, m) => {
                    rep.forced_compared += 1;
                    rep.forced_mismatches += m as usize;
                }
                _ => {}
            }
            match r.oracle {
                Some(Decision::Eds) => rep.eds_found += 1,
                Some(Decision::NoEds) => rep.no_eds += 1,
                _ => rep.oracle_budget_exceeded += 1,
            }
            rep.solver_budget_exceeded += (r.solver == Some(Decision::Budget)) as usize;
            rep.invalid_outputs += r.invalid_output as usize;
            rep.planted_invalid += r.planted_invalid as usize;
            rep.lemma_solutions += r.lemma_solutions;
            rep.lemma_checks += r.lemma_checks;
            rep.lemma_budget_exceeded += r.lemma_budget as usize;
            rep.lemma_violations += r.violations.len();
            for v in &r.violations {
                *rep.violations_by_lemma.entry(v.lemma.clone()).or_default() += 1;
            }
            for h in &r.hypotheses_met {
                *rep.hypotheses_met.entry(h.clone()).or_default() += 1;
            }
        }
        let ran = || results.iter().filter(|r| r.gen_error.is_none());
        rep.solve_us = Percentiles::of(ran().map(|r| r.solve_us).collect());
        rep.oracle_us = Percentiles::of(ran().map(|r| r.oracle_us).collect());
        rep.results = results;
        rep
    }

    /// No decision mismatch, no invalid output and no lemma violation.
    pub fn passed(&self) -> bool {
        self.mismatches == 0
            && self.forced_mismatches == 0
            && self.invalid_outputs == 0
            && self.planted_invalid == 0
            && self.lemma_violations == 0
    }

    /// `key=value` lines, one `failure` line per problem instance, then
    /// `summary=` followed by the same counts as one JSON object.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let json = serde_json::to_value(self).expect("report serializes");
        for (k, v) in json.as_object().expect("object") {
            match v {
                serde_json::Value::Object(m) => {
                    for (k2, v2) in m {
                        let _ = writeln!(s, "{k}.{k2}={v2}");
                    }
                }
                _ => {
                    let _ = writeln!(s, "{k}={v}");
                }
            }
        }
        for r in &self.results {
            let spec = r
                .spec
                .as_ref()
                .map(|g| format!(" mode={} n={} seed={} edge_prob={}", g.mode, g.n, g.seed, g.edge_prob))
                .unwrap_or_default();
            if let Some(e) = &r.gen_error {
                let _ = writeln!(s, "failure id={} name={} kind=gen{spec} detail=\"{e}\"", r.id, r.name);
            }
            if r.mismatch() {
                let _ = writeln!(
                    s,
                    "failure id={} name={} kind=mismatch{spec} oracle={:?} solver={:?}",
                    r.id, r.name, r.oracle, r.solver
                );
            }
            if r.invalid_output {
                let _ = writeln!(s, "failure id={} name={} kind=invalid-output{spec}", r.id, r.name);
            }
            if r.planted_invalid {
                let _ = writeln!(s, "failure id={} name={} kind=planted-invalid{spec}", r.id, r.name);
            }
            for v in &r.violations {
                let _ = writeln!(
                    s,
                    "failure id={} name={} kind=lemma lemma={} d={:?} basis={:?} witness={:?}{spec}",
                    r.id, r.name, v.lemma, v.d, v.basis, v.witness
                );
            }
        }
        let _ = writeln!(s, "summary={json}");
        s
    }
}

/// Runs the suite on a worker pool. Workers send tagged results down a
/// channel; the report sorts them by id before aggregating.
pub fn stress(cfg: &StressConfig) -> StressReport {
    let jobs = jobs(cfg);
    let (tx, rx) = mpsc::channel();
    let work = || {
        jobs.par_iter().for_each_with(tx, |tx, job| {
            tx.send(run_job(job, cfg)).expect("receiver outlives the workers");
        })
    };
    if cfg.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .expect("thread pool")
            .install(work);
    } else {
        work();
    }
    let mut results: Vec<InstanceResult> = rx.into_iter().collect();
    results.sort_by_key(|r| r.id);
    StressReport::from_results(results)
}
