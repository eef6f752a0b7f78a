//! Exhaustive Θ(n⁴) evaluation over all vertex quadruples.

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, VertexId};

use super::value::delta4;
use super::QuadrupleResult;

pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 600;

pub fn brute_force_hyperbolicity(graph: &Graph) -> Result<QuadrupleResult> {
    brute_force_hyperbolicity_with_limit(graph, DEFAULT_BRUTE_FORCE_LIMIT)
}

/// Maximum δ over all quadruples `i < j < k < l`. With fewer than four
/// vertices the answer is 0.
pub fn brute_force_hyperbolicity_with_limit(graph: &Graph, limit: usize) -> Result<QuadrupleResult> {
    let n = graph.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist: Vec<Vec<u32>> = graph.vertices().map(|s| bfs_distances(graph, s)).collect();
    let mut best = QuadrupleResult::trivial(n);
    for i in 0..n {
        for j in i + 1..n {
            let dij = dist[i][j];
            for k in j + 1..n {
                let (dik, djk) = (dist[i][k], dist[j][k]);
                for l in k + 1..n {
                    let d = delta4(dij, dist[k][l], dik, dist[j][l], dist[i][l], djk);
                    if d > best.delta {
                        best = QuadrupleResult {
                            delta: d,
                            witness: [i, j, k, l].map(|v| v as VertexId),
                        };
                    }
                }
            }
        }
    }
    Ok(best)
}
