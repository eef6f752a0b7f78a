use super::{Graph, VertexId, UNREACHED};
use crate::error::{Error, Result};

struct Block {
    vertices: Vec<VertexId>,
    edges: usize,
}

/// Iterative Hopcroft–Tarjan. Calls `emit` once per block with its vertex
/// set (unsorted) and edge count.
fn for_each_block<F: FnMut(Block)>(graph: &Graph, mut emit: F) {
    let n = graph.n();
    let mut disc = vec![UNREACHED; n];
    let mut low = vec![0u32; n];
    let mut stamp = vec![usize::MAX; n];
    let mut timer = 0u32;
    let mut block_id = 0usize;
    // (vertex, parent, next neighbor position)
    let mut frames: Vec<(VertexId, VertexId, usize)> = Vec::new();
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();

    for root in graph.vertices() {
        if disc[root as usize] != UNREACHED {
            continue;
        }
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        frames.push((root, UNREACHED, 0));

        while let Some(frame) = frames.last_mut() {
            let (v, parent, pos) = *frame;
            let nbrs = graph.neighbors(v);
            if pos < nbrs.len() {
                frame.2 += 1;
                let w = nbrs[pos];
                if disc[w as usize] == UNREACHED {
                    edge_stack.push((v, w));
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w as usize] < disc[v as usize] {
                    edge_stack.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
                continue;
            }
            frames.pop();
            if parent == UNREACHED {
                continue;
            }
            let (p, vi) = (parent as usize, v as usize);
            low[p] = low[p].min(low[vi]);
            if low[vi] >= disc[p] {
                let mut block = Block { vertices: Vec::new(), edges: 0 };
                while let Some((a, b)) = edge_stack.pop() {
                    block.edges += 1;
                    for x in [a, b] {
                        if stamp[x as usize] != block_id {
                            stamp[x as usize] = block_id;
                            block.vertices.push(x);
                        }
                    }
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                block_id += 1;
                emit(block);
            }
        }
    }
}

/// Extracts the biconnected component with the most vertices (ties: most
/// edges, then smallest minimum vertex id). The result is relabeled densely
/// in increasing order of the ids in `graph`; the returned map sends new ids
/// to old ones. A bridge counts as a two-vertex block.
pub fn largest_biconnected_component(graph: &Graph) -> Result<(Graph, Vec<VertexId>)> {
    if graph.n() < 2 {
        return Err(Error::InvalidParameter(format!(
            "biconnected extraction needs at least 2 vertices, got {}",
            graph.n()
        )));
    }
    let mut best: Option<(usize, usize, VertexId, Vec<VertexId>)> = None;
    for_each_block(graph, |mut block| {
        block.vertices.sort_unstable();
        let key = (block.vertices.len(), block.edges, block.vertices[0]);
        let better = match &best {
            None => true,
            Some((nv, ne, min_id, _)) => {
                key.0 > *nv || (key.0 == *nv && (key.1 > *ne || (key.1 == *ne && key.2 < *min_id)))
            }
        };
        if better {
            best = Some((key.0, key.1, key.2, block.vertices));
        }
    });
    let (_, _, _, vertices) = best.ok_or(Error::EmptyGraph)?;
    Ok(graph.induced_subgraph(&vertices))
}
