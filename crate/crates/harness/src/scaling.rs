//! Wall-clock scaling of the solver on planted instances.

use std::time::Instant;

use eds_core::solver::SolveError;
use eds_core::{solve_with, SolveOptions};
use rayon::prelude::*;
use serde::Serialize;

use crate::gen::{generate, GenMode, GenSpec, Rng};

#[derive(Clone, Debug)]
pub struct ScalingConfig {
    pub sizes: Vec<usize>,
    pub per_size: usize,
    /// Planted edge probability. Most offered leaf pairs are refused by the
    /// class check, so even high values give sparse graphs.
    pub edge_prob: f64,
    pub seed: u64,
    pub opts: SolveOptions,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        ScalingConfig { sizes: vec![100, 200, 400, 800], per_size: 5, edge_prob: 0.5, seed: 1, opts: SolveOptions::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalePoint {
    pub n: usize,
    /// Mean solve time in seconds.
    pub seconds: f64,
    pub max_branches: u64,
    pub edges: usize,
    /// Solves that ran out of branch or oracle budget.
    pub budget_hits: usize,
}

/// Generates `per_size` planted graphs per size and times `solve_with` on
/// each, one at a time. One untimed warm-up solve precedes every size.
pub fn measure(cfg: &ScalingConfig) -> Vec<ScalePoint> {
    let mut rng = Rng::new(cfg.seed);
    let mut out = Vec::new();
    for &n in &cfg.sizes {
        let seeds: Vec<u64> = (0..cfg.per_size).map(|_| rng.next_u64()).collect();
        let graphs: Vec<_> = seeds
            .par_iter()
            .map(|&s| generate(&GenSpec::new(n, cfg.edge_prob, s, GenMode::Planted)).expect("planted never fails").graph)
            .collect();
        let _ = solve_with(&graphs[0], &cfg.opts);
        let mut pt = ScalePoint { n, seconds: 0.0, max_branches: 0, edges: 0, budget_hits: 0 };
        for g in &graphs {
            let t = Instant::now();
            let res = solve_with(g, &cfg.opts);
            pt.seconds += t.elapsed().as_secs_f64();
            pt.edges += g.edge_count();
            match res {
                Ok(o) => pt.max_branches = pt.max_branches.max(o.branches),
                Err(SolveError::BudgetExceeded { .. } | SolveError::OracleBudget { .. }) => pt.budget_hits += 1,
                Err(SolveError::NotInClass(_)) => unreachable!("generated graphs are in the class"),
            }
        }
        pt.seconds /= graphs.len() as f64;
        pt.edges /= graphs.len();
        out.push(pt);
    }
    out
}

/// Least-squares slope of `ln seconds` against `ln n`.
pub fn loglog_slope(points: &[ScalePoint]) -> f64 {
    let xs: Vec<f64> = points.iter().map(|p| (p.n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.seconds.max(1e-9).ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}
