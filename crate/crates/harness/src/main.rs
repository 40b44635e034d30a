use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use eds_core::format::{parse_graph, write_graph};
use eds_core::oracle::{format_budget_exceeded, format_solutions, parse_solution, solve_exact_with, Constraints, Mode};
use eds_core::solver::{check_lemmas, closed_bases, LemmaError, LemmaId, SolveError};
use eds_core::{classify, solve_with, BipartiteGraph, EdsResult, SolveOptions};
use eds_harness::scaling::{loglog_slope, measure, ScalingConfig};
use eds_harness::{generate, GenMode, GenSpec, StressConfig};

const OK: u8 = 0;
const NO_EDS: u8 = 1;
const NOT_IN_CLASS: u8 = 2;
const BUDGET: u8 = 3;
const IO: u8 = 4;

#[derive(Parser)]
#[command(name = "eds", version, about = "Efficient dominating sets on chordal bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report bipartiteness, chordality and the forbidden spiders.
    Recognize { file: PathBuf },
    /// Decide e.d.s. with the forced-vertex solver.
    Solve {
        file: PathBuf,
        /// Run even if the graph is outside the class.
        #[arg(long)]
        force: bool,
        /// Write the reduction trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, default_value_t = eds_core::solver::DEFAULT_BRANCH_BUDGET)]
        branch_budget: u64,
    },
    /// Exact-cover oracle.
    Oracle {
        file: PathBuf,
        #[arg(long, conflicts_with = "count")]
        all: bool,
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = eds_core::oracle::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Generate an in-class graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// rejection or planted
        #[arg(long)]
        mode: GenMode,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long, default_value_t = 1000)]
        max_retries: u32,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Oracle-vs-solver stress run.
    Stress {
        #[arg(long)]
        config: PathBuf,
    },
    /// Check the structural lemmas for an e.d.s. against all of its closed
    /// bases.
    Lemmas { graph: PathBuf, eds: PathBuf },
    /// Time the solver on planted graphs of growing size.
    Scale {
        #[arg(long, value_delimiter = ',', default_value = "100,200,400,800")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        per_size: usize,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

struct Fail(u8, String);

type Res = Result<u8, Fail>;

fn io_err(path: &Path, e: impl std::fmt::Display) -> Fail {
    Fail(IO, format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn load_graph(path: &Path) -> Result<BipartiteGraph, Fail> {
    parse_graph(&read(path)?).map_err(|e| io_err(path, e))
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which here means NotInClass
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { IO } else { OK });
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("eds: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Cmd) -> Res {
    match cmd {
        Cmd::Recognize { file } => recognize(&file),
        Cmd::Solve { file, force, trace, branch_budget } => solve(&file, force, trace.as_deref(), branch_budget),
        Cmd::Oracle { file, all, count, budget } => oracle(&file, all, count, budget),
        Cmd::Gen { n, seed, mode, edge_prob, max_retries, out } => {
            let spec = GenSpec { n, edge_prob, seed, mode, max_retries };
            let inst = generate(&spec).map_err(|e| Fail(IO, e.to_string()))?;
            write(&out, &write_graph(&inst.graph))?;
            if let Some(p) = inst.planted {
                println!("planted {}", eds_core::EdsSolution { d: p, certified: true });
            }
            println!("attempts {}", inst.attempts);
            Ok(OK)
        }
        Cmd::Stress { config } => {
            let cfg = StressConfig::load(&config).map_err(|e| io_err(&config, e))?;
            let rep = eds_harness::stress(&cfg);
            print!("{}", rep.render());
            Ok(if rep.passed() { OK } else { NO_EDS })
        }
        Cmd::Lemmas { graph, eds } => lemmas(&graph, &eds),
        Cmd::Scale { sizes, per_size, edge_prob, seed } => {
            if sizes.len() < 2 || per_size == 0 {
                return Err(Fail(IO, "need at least two sizes and one instance per size".into()));
            }
            let cfg = ScalingConfig { sizes, per_size, edge_prob, seed, ..ScalingConfig::default() };
            let pts = measure(&cfg);
            for p in &pts {
                println!(
                    "n={} seconds={:.6} edges={} max_branches={} budget_hits={}",
                    p.n, p.seconds, p.edges, p.max_branches, p.budget_hits
                );
            }
            println!("slope={:.3}", loglog_slope(&pts));
            Ok(if pts.iter().any(|p| p.budget_hits > 0) { BUDGET } else { OK })
        }
    }
}

fn recognize(file: &Path) -> Res {
    let g = load_graph(file)?;
    let rep = classify(&g);
    println!("bipartite={}", rep.is_bipartite);
    println!("chordal_bipartite={}", rep.is_chordal_bipartite);
    println!("s125_free={}", rep.s125_free());
    println!("s333_free={}", rep.s333_free());
    println!("in_class={}", rep.in_class());
    if let Some(w) = rep.counterexample() {
        println!("witness={w}");
    }
    Ok(if rep.in_class() { OK } else { NOT_IN_CLASS })
}

fn solve(file: &Path, force: bool, trace: Option<&Path>, branch_budget: u64) -> Res {
    let g = load_graph(file)?;
    let opts = SolveOptions { force, branch_budget, ..SolveOptions::default() };
    match solve_with(&g, &opts) {
        Ok(out) => {
            if let Some(path) = trace {
                write(path, &out.trace.serialize())?;
            }
            let code = match &out.result {
                EdsResult::Eds(d) => {
                    println!("{}", eds_core::EdsSolution { d: d.clone(), certified: true });
                    OK
                }
                EdsResult::NoEds => {
                    println!("no-eds");
                    NO_EDS
                }
            };
            println!("base_case={} branches={}", out.base_case.as_str(), out.branches);
            Ok(code)
        }
        Err(SolveError::NotInClass(rep)) => {
            let why = rep.counterexample().map(|w| format!(" ({w})")).unwrap_or_default();
            Err(Fail(NOT_IN_CLASS, format!("graph is not in the class{why}; use --force to solve anyway")))
        }
        Err(e) => {
            println!("budget-exceeded");
            Err(Fail(BUDGET, e.to_string()))
        }
    }
}

fn oracle(file: &Path, all: bool, count: bool, budget: u64) -> Res {
    let g = load_graph(file)?;
    let mode = if count {
        Mode::Count
    } else if all {
        Mode::All
    } else {
        Mode::First
    };
    let cons = Constraints { budget, ..Constraints::default() };
    match solve_exact_with(&g, mode, &cons) {
        Ok(res) => {
            if count {
                println!("count {}", res.count);
            } else {
                print!("{}", format_solutions(&res.solutions));
            }
            Ok(if res.count > 0 { OK } else { NO_EDS })
        }
        Err(eds_core::OracleError::BudgetExceeded { nodes }) => {
            print!("{}", format_budget_exceeded(nodes));
            Ok(BUDGET)
        }
        Err(e) => Err(Fail(IO, e.to_string())),
    }
}

/// Aggregates over every closed basis: a lemma is met if any basis meets
/// it and holds if every basis satisfies it.
fn lemmas(graph: &Path, eds: &Path) -> Res {
    let g = load_graph(graph)?;
    let d = parse_solution(&read(eds)?, g.n())
        .map_err(|e| io_err(eds, e))?
        .ok_or_else(|| Fail(IO, format!("{}: says no-eds, nothing to check", eds.display())))?;
    let lemma_fail = |e: LemmaError| match e {
        LemmaError::OracleBudget { .. } => Fail(BUDGET, e.to_string()),
        _ => Fail(IO, e.to_string()),
    };
    let bases = closed_bases(&g, &d, eds_core::oracle::DEFAULT_NODE_BUDGET).map_err(lemma_fail)?;
    let mut met = vec![false; LemmaId::ALL.len()];
    let mut witness: Vec<Option<(Vec<usize>, Vec<usize>)>> = vec![None; LemmaId::ALL.len()];
    for b in &bases {
        let rep = check_lemmas(&g, &d, b).map_err(lemma_fail)?;
        for (i, e) in rep.entries.iter().enumerate() {
            met[i] |= e.hypothesis_met;
            if let (None, Some(w)) = (&witness[i], &e.counterexample) {
                witness[i] = Some((b.to_vec(), w.clone()));
            }
        }
    }
    println!("bases={}", bases.len());
    for (i, id) in LemmaId::ALL.iter().enumerate() {
        match &witness[i] {
            None => println!("{id} hypothesis={} holds=true", met[i]),
            Some((b, w)) => println!("{id} hypothesis=true holds=false basis={} witness={}", join(b), join(w)),
        }
    }
    Ok(if witness.iter().all(Option::is_none) { OK } else { NO_EDS })
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
