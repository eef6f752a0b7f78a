//! Seeded synthetic graphs: cycles, paths, grids, perturbed grids, random
//! trees and connected random graphs.
//!
//! Every generator is a pure function of its arguments. Randomness comes from
//! [`RNG_ALGORITHM`] seeded with a 64-bit seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{largest_biconnected_component, Graph, VertexId};

/// Name of the PRNG behind all seeded generators, reported in run statistics.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng/seed_from_u64";

const RANDOM_GRAPH_ATTEMPTS: usize = 1000;

pub(crate) fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Description of a synthetic graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenSpec {
    Cycle { n: usize },
    Path { n: usize },
    Grid { rows: usize, cols: usize },
    GridPerturbed { side: usize, fraction: f64, seed: u64 },
    Tree { n: usize, seed: u64 },
    RandomConnected { n: usize, edge_prob: f64, seed: u64 },
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            GenSpec::Cycle { n } => gen_cycle(n),
            GenSpec::Path { n } => gen_path(n),
            GenSpec::Grid { rows, cols } => gen_grid(rows, cols),
            GenSpec::GridPerturbed { side, fraction, seed } => {
                gen_grid_perturbed(side, fraction, seed)
            }
            GenSpec::Tree { n, seed } => gen_tree(n, seed),
            GenSpec::RandomConnected { n, edge_prob, seed } => {
                gen_random_connected(n, edge_prob, seed)
            }
        }
    }
}

/// Cycle `0-1-...-(n-1)-0`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let n32 = n as VertexId;
    Ok(Graph::from_edges(n, (0..n32).map(|i| (i, (i + 1) % n32))))
}

pub fn gen_path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Ok(Graph::from_edges(n, (1..n as VertexId).map(|i| (i - 1, i))))
}

/// Complete graph on `n` vertices.
pub fn gen_clique(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("clique needs n >= 1".into()));
    }
    let n32 = n as VertexId;
    Ok(Graph::from_edges(
        n,
        (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))),
    ))
}

/// `rows x cols` four-neighbour lattice; vertex `(r, c)` has id `r * cols + c`.
pub fn gen_grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows < 2 || cols < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid sides must be at least 2, got {rows}x{cols}"
        )));
    }
    Ok(Graph::from_edges(rows * cols, grid_edges(rows, cols)))
}

fn grid_edges(rows: usize, cols: usize) -> Vec<(VertexId, VertexId)> {
    let id = |r: usize, c: usize| (r * cols + c) as VertexId;
    let mut edges = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    edges
}

/// Square `(side+1) x (side+1)` grid with a `fraction` of its edges deleted,
/// restricted to its largest biconnected component.
///
/// Edges are visited in a seeded random order; an edge is deleted only if the
/// graph stays connected without it, until `round(fraction * m)` edges are gone
/// or every edge has been tried.
pub fn gen_grid_perturbed(side: usize, fraction: f64, seed: u64) -> Result<Graph> {
    if side < 2 {
        return Err(Error::InvalidParameter(format!("grid side must be at least 2, got {side}")));
    }
    if !(0.0..1.0).contains(&fraction) {
        return Err(Error::InvalidParameter(format!(
            "deletion fraction must lie in [0, 1), got {fraction}"
        )));
    }
    let w = side + 1;
    let n = w * w;
    let mut edges = grid_edges(w, w);
    let target = (fraction * edges.len() as f64).round() as usize;

    let mut rng = seeded_rng(seed);
    edges.shuffle(&mut rng);

    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }

    let mut seen = vec![0u32; n];
    let mut round = 0u32;
    let mut queue = Vec::new();
    let mut removed = vec![false; edges.len()];
    let mut deleted = 0;
    for (idx, &(u, v)) in edges.iter().enumerate() {
        if deleted == target {
            break;
        }
        detach(&mut adj, u, v);
        round += 1;
        if reaches(&adj, u, v, &mut seen, round, &mut queue) {
            removed[idx] = true;
            deleted += 1;
        } else {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
    }

    let kept = edges
        .iter()
        .zip(&removed)
        .filter(|(_, &r)| !r)
        .map(|(&e, _)| e);
    let graph = Graph::from_edges(n, kept.collect::<Vec<_>>());
    Ok(largest_biconnected_component(&graph)?.0)
}

fn detach(adj: &mut [Vec<VertexId>], u: VertexId, v: VertexId) {
    for (a, b) in [(u, v), (v, u)] {
        let list = &mut adj[a as usize];
        if let Some(pos) = list.iter().position(|&x| x == b) {
            list.swap_remove(pos);
        }
    }
}

fn reaches(
    adj: &[Vec<VertexId>],
    from: VertexId,
    to: VertexId,
    seen: &mut [u32],
    round: u32,
    queue: &mut Vec<VertexId>,
) -> bool {
    queue.clear();
    queue.push(from);
    seen[from as usize] = round;
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &y in &adj[x as usize] {
            if y == to {
                return true;
            }
            if seen[y as usize] != round {
                seen[y as usize] = round;
                queue.push(y);
            }
        }
    }
    false
}

/// Random recursive tree: vertex `i > 0` attaches to a uniform vertex in `0..i`.
pub fn gen_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("tree needs n >= 1".into()));
    }
    let mut rng = seeded_rng(seed);
    let edges: Vec<_> = (1..n as VertexId)
        .map(|i| (rng.random_range(0..i), i))
        .collect();
    Ok(Graph::from_edges(n, edges))
}

/// Erdős–Rényi `G(n, p)`, resampled until connected.
pub fn gen_random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("random graph needs n >= 2, got {n}")));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {edge_prob}"
        )));
    }
    let mut rng = seeded_rng(seed);
    let n32 = n as VertexId;
    for _ in 0..RANDOM_GRAPH_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n32 {
            for v in u + 1..n32 {
                if rng.random::<f64>() < edge_prob {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(RANDOM_GRAPH_ATTEMPTS))
}
