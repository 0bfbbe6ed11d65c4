//! Seeded random block-graph generation for test corpora.

use crate::graph::{Graph, Vertex};
use std::fmt;

/// Small deterministic PRNG (splitmix64). Kept local so generated corpora are
/// byte-stable across platforms and dependency upgrades.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as usize
    }

    pub fn f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Parameters for [`generate_block_graph`].
#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    /// Number of cliques to lay down, at least 1.
    pub num_blocks: usize,
    /// Clique sizes are drawn uniformly from `2..=max_block_size`, at least 2.
    pub max_block_size: usize,
    /// Probability of attaching the next clique to the previously added one
    /// (deep, path-like shapes) instead of a uniformly random vertex
    /// (shallow, star-like shapes). Must lie in `0.0..=1.0`.
    pub tree_shape_bias: f64,
}

impl GenConfig {
    pub fn new(num_blocks: usize, max_block_size: usize) -> Self {
        GenConfig { num_blocks, max_block_size, tree_shape_bias: 0.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidGenConfig(pub String);

impl fmt::Display for InvalidGenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid generator config: {}", self.0)
    }
}

impl std::error::Error for InvalidGenConfig {}

/// Builds a connected block graph by iteratively attaching a random clique at
/// an existing vertex. Deterministic for a fixed `(config, seed)` pair; the
/// result always passes block-graph validation because new cliques share
/// exactly one vertex with the rest.
pub fn generate_block_graph(config: &GenConfig, seed: u64) -> Result<Graph, InvalidGenConfig> {
    if config.num_blocks < 1 {
        return Err(InvalidGenConfig("num_blocks must be >= 1".into()));
    }
    if config.max_block_size < 2 {
        return Err(InvalidGenConfig("max_block_size must be >= 2".into()));
    }
    if !(0.0..=1.0).contains(&config.tree_shape_bias) {
        return Err(InvalidGenConfig("tree_shape_bias must lie in 0.0..=1.0".into()));
    }

    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut n: usize = 0;
    // vertices of the most recently added clique, for biased attachment
    let mut last_clique: Vec<Vertex> = Vec::new();

    for b in 0..config.num_blocks {
        let size = rng.range(2, config.max_block_size);
        let mut clique: Vec<Vertex> = Vec::with_capacity(size);
        if b > 0 {
            let anchor = if rng.f64() < config.tree_shape_bias {
                last_clique[rng.range(0, last_clique.len() - 1)]
            } else {
                rng.range(1, n) as Vertex
            };
            clique.push(anchor);
        }
        while clique.len() < size {
            n += 1;
            clique.push(n as Vertex);
        }
        for i in 0..clique.len() {
            for j in (i + 1)..clique.len() {
                let (u, v) = (clique[i].min(clique[j]), clique[i].max(clique[j]));
                edges.push((u, v));
            }
        }
        last_clique = clique;
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}
