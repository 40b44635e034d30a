//! Seeded generation of in-class instances.
//!
//! All randomness comes from SplitMix64 (see the README for the exact
//! derivations), so a [`GenSpec`] pins its output down to the byte.

use std::fmt;
use std::str::FromStr;

use eds_core::recognition::{edge_breaks_class, ClassParams};
use eds_core::{classify, verify_eds, BipartiteGraph, Side, VertexSet};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of leaves a planted star gets.
pub const MAX_STAR_LEAVES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenMode {
    Rejection,
    #[serde(alias = "planted-eds")]
    Planted,
}

impl FromStr for GenMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rejection" => Ok(GenMode::Rejection),
            "planted" | "planted-eds" => Ok(GenMode::Planted),
            _ => Err(format!("unknown mode `{s}` (expected rejection or planted)")),
        }
    }
}

impl fmt::Display for GenMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenMode::Rejection => "rejection",
            GenMode::Planted => "planted",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    /// Rejection mode: probability of each cross-side pair. Planted mode:
    /// probability that a leaf pair is offered as a cross edge.
    pub edge_prob: f64,
    pub seed: u64,
    pub mode: GenMode,
    /// Rejection mode only: how many samples to draw before giving up.
    pub max_retries: u32,
}

impl GenSpec {
    pub fn new(n: usize, edge_prob: f64, seed: u64, mode: GenMode) -> Self {
        GenSpec { n, edge_prob, seed, mode, max_retries: 1000 }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("n must be at least 1")]
    EmptyGraph,
    #[error("edge_prob {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("no in-class sample in {attempts} attempts")]
    RetriesExhausted { attempts: u32 },
}

/// A generated graph, with the planted e.d.s. when there is one.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: BipartiteGraph,
    pub planted: Option<VertexSet>,
    /// Samples drawn, counting the accepted one.
    pub attempts: u32,
}

/// SplitMix64 with the few derived draws the generators need.
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `next_u64() % k`. The modulo bias is below `2^-50` for the sizes used
    /// here and keeps the derivation trivial to port.
    pub fn below(&mut self, k: usize) -> usize {
        (self.next_u64() % k as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn side(&mut self) -> Side {
        if self.next_u64() >> 63 == 0 {
            Side::X
        } else {
            Side::Y
        }
    }
}

pub fn gen_in_class(spec: &GenSpec) -> Result<BipartiteGraph, GenError> {
    generate(spec).map(|i| i.graph)
}

pub fn generate(spec: &GenSpec) -> Result<Instance, GenError> {
    if spec.n == 0 {
        return Err(GenError::EmptyGraph);
    }
    if !(0.0..=1.0).contains(&spec.edge_prob) {
        return Err(GenError::BadProbability(spec.edge_prob));
    }
    let mut rng = Rng::new(spec.seed);
    match spec.mode {
        GenMode::Rejection => rejection(spec, &mut rng),
        GenMode::Planted => Ok(planted(spec, &mut rng)),
    }
}

fn rejection(spec: &GenSpec, rng: &mut Rng) -> Result<Instance, GenError> {
    let n = spec.n;
    let attempts = spec.max_retries.max(1);
    for attempt in 1..=attempts {
        let sides: Vec<Side> = (0..n).map(|_| rng.side()).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if sides[u] != sides[v] && rng.chance(spec.edge_prob) {
                    edges.push((u, v));
                }
            }
        }
        let g = BipartiteGraph::new(n, sides, &edges).expect("edges join opposite sides");
        if classify(&g).in_class() {
            return Ok(Instance { graph: g, planted: None, attempts: attempt });
        }
    }
    Err(GenError::RetriesExhausted { attempts })
}

/// Stars first (their closed neighborhoods partition the vertices, so the
/// centers form an e.d.s.), then leaf-to-leaf edges between different stars.
/// Leaf edges never touch a center, so the centers stay efficient; an edge is
/// kept only if the graph stays in the class. Labels are shuffled at the end.
fn planted(spec: &GenSpec, rng: &mut Rng) -> Instance {
    let n = spec.n;
    let mut sides = Vec::with_capacity(n);
    let mut star_of = Vec::with_capacity(n);
    let mut is_center = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut stars = 0;
    while sides.len() < n {
        let center = sides.len();
        let side = rng.side();
        let leaves = rng.below(MAX_STAR_LEAVES + 1).min(n - center - 1);
        sides.push(side);
        star_of.push(stars);
        is_center.push(true);
        for _ in 0..leaves {
            edges.push((center, sides.len()));
            sides.push(side.opposite());
            star_of.push(stars);
            is_center.push(false);
        }
        stars += 1;
    }

    let perm = permutation(n, rng);
    let mut new_sides = vec![Side::X; n];
    for v in 0..n {
        new_sides[perm[v]] = sides[v];
    }
    let edges: Vec<_> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    let mut g = BipartiteGraph::new(n, new_sides, &edges).expect("stars are bipartite");
    let mut owner = vec![0; n];
    let mut leaf = vec![false; n];
    let mut planted = VertexSet::new(n);
    for v in 0..n {
        owner[perm[v]] = star_of[v];
        leaf[perm[v]] = !is_center[v];
        if is_center[v] {
            planted.insert(perm[v]);
        }
    }

    let params = ClassParams::default();
    for a in 0..n {
        for b in a + 1..n {
            if !leaf[a] || !leaf[b] || owner[a] == owner[b] || g.side(a) == g.side(b) {
                continue;
            }
            if !rng.chance(spec.edge_prob) {
                continue;
            }
            let h = g.with_edge(a, b).expect("opposite sides");
            if !edge_breaks_class(&h, a, b, &params) {
                g = h;
            }
        }
    }
    debug_assert!(verify_eds(&g, &planted).is_ok());
    Instance { graph: g, planted: Some(planted), attempts: 1 }
}

/// Fisher-Yates from the top: for `i = n-1 .. 1`, swap `p[i]` with
/// `p[below(i + 1)]`.
fn permutation(n: usize, rng: &mut Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i + 1);
        p.swap(i, j);
    }
    p
}
