//! Immutable undirected simple graphs in compressed adjacency form.

mod bcc;
mod bfs;
mod io;

pub use bcc::largest_biconnected_component;
pub use bfs::{bfs_distances, truncated_multi_source_bfs, BfsScratch, Reached, UNREACHED};
pub use io::{load_edge_list, read_edge_list_file, write_edge_list, EdgeListFormat, LoadedGraph};

use serde::Serialize;

/// Dense vertex identifier in `0..n`.
pub type VertexId = u32;

/// Undirected simple graph. Neighbor lists are sorted and symmetric, with no
/// self-loops and no duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops and repeated edges are dropped.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for {n} vertices"
            );
            if u != v {
                pairs.push((u, v));
                pairs.push((v, u));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Graph { offsets, targets }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n() as VertexId
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        bfs_distances(self, 0).iter().all(|&d| d != UNREACHED)
    }

    /// Subgraph induced by `vertices`, relabeled densely in the given order.
    /// Returns the subgraph and the map from new ids to ids in `self`.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut new_id = vec![UNREACHED; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v as usize] = i as VertexId;
        }
        let edges = vertices.iter().flat_map(|&u| {
            let nu = new_id[u as usize];
            let new_id = &new_id;
            self.neighbors(u).iter().filter_map(move |&w| {
                let nw = new_id[w as usize];
                (nw != UNREACHED && nu < nw).then_some((nu, nw))
            })
        });
        let sub = Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>());
        (sub, vertices.to_vec())
    }

    pub fn summary(&self) -> GraphSummary {
        graph_summary(self)
    }
}

/// Vertex/edge counts and degree statistics.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub mean_degree: f64,
    pub max_degree: usize,
}

pub fn graph_summary(graph: &Graph) -> GraphSummary {
    let n = graph.n();
    let degrees = graph.vertices().map(|v| graph.degree(v));
    let (min_degree, max_degree) = degrees
        .fold(None, |acc: Option<(usize, usize)>, d| match acc {
            None => Some((d, d)),
            Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
        })
        .unwrap_or((0, 0));
    let mean_degree = if n == 0 {
        0.0
    } else {
        2.0 * graph.m() as f64 / n as f64
    };
    GraphSummary {
        n,
        m: graph.m(),
        min_degree,
        mean_degree,
        max_degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_drops_loops_and_duplicates() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 1), (1, 2)]);
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn summary_of_star() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]);
        let s = g.summary();
        assert_eq!((s.n, s.m, s.min_degree, s.max_degree), (5, 4, 1, 4));
        assert!((s.mean_degree - 1.6).abs() < 1e-12);
    }

    #[test]
    fn summary_of_cycle_and_triangle() {
        let c8 = Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8)));
        let s = c8.summary();
        assert_eq!((s.min_degree, s.max_degree), (2, 2));
        assert_eq!(s.mean_degree, 2.0);

        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]);
        let s = tri.summary();
        assert_eq!((s.n, s.m, s.min_degree, s.max_degree), (3, 3, 2, 2));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let (sub, map) = g.induced_subgraph(&[4, 0, 1]);
        assert_eq!(map, vec![4, 0, 1]);
        assert_eq!(sub.m(), 2);
        assert!(sub.has_edge(0, 1));
        assert!(sub.has_edge(1, 2));
        assert!(!sub.has_edge(0, 2));
    }

    #[test]
    fn edges_iterates_each_edge_once() {
        let g = Graph::from_edges(4, [(3, 0), (0, 1), (2, 1)]);
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 3), (1, 2)]);
    }
}
