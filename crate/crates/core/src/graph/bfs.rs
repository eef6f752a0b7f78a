use super::{Graph, VertexId};

/// Marker distance for vertices not reached by a search.
pub const UNREACHED: u32 = u32::MAX;

/// Hop distances from `source` to every vertex. Unreachable vertices get
/// [`UNREACHED`].
pub fn bfs_distances(graph: &Graph, source: VertexId) -> Vec<u32> {
    let mut dist = vec![UNREACHED; graph.n()];
    let mut queue = Vec::with_capacity(graph.n());
    dist[source as usize] = 0;
    queue.push(source);
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let next = dist[v as usize] + 1;
        for &w in graph.neighbors(v) {
            if dist[w as usize] == UNREACHED {
                dist[w as usize] = next;
                queue.push(w);
            }
        }
    }
    dist
}

/// A vertex reached by a truncated multi-source search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reached {
    pub vertex: VertexId,
    pub dist: u32,
    /// Nearest source; the smallest id among equally near ones.
    pub source: VertexId,
}

/// Reusable buffers for bounded searches. Resetting costs only the number of
/// vertices touched by the previous run, so many small searches on a large
/// graph stay cheap.
pub struct BfsScratch {
    dist: Vec<u32>,
    source: Vec<VertexId>,
    queue: Vec<VertexId>,
}

impl BfsScratch {
    pub fn new(n: usize) -> Self {
        BfsScratch {
            dist: vec![UNREACHED; n],
            source: vec![0; n],
            queue: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.queue {
            self.dist[v as usize] = UNREACHED;
        }
        self.queue.clear();
    }

    /// Vertices reached by the last run, in non-decreasing distance order.
    pub fn reached(&self) -> &[VertexId] {
        &self.queue
    }

    #[inline]
    pub fn dist(&self, v: VertexId) -> u32 {
        self.dist[v as usize]
    }

    #[inline]
    pub fn source(&self, v: VertexId) -> VertexId {
        self.source[v as usize]
    }

    /// Layered search from all `sources` at once, stopping at depth `radius`.
    /// Every reached vertex records its distance to the nearest source and
    /// that source, ties going to the smallest source id.
    pub fn run(&mut self, graph: &Graph, sources: &[VertexId], radius: u32) {
        self.reset();
        for &s in sources {
            let i = s as usize;
            if self.dist[i] == UNREACHED {
                self.dist[i] = 0;
                self.source[i] = s;
                self.queue.push(s);
            } else if s < self.source[i] {
                self.source[i] = s;
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            let d = self.dist[v as usize];
            if d == radius {
                continue;
            }
            let src = self.source[v as usize];
            for &w in graph.neighbors(v) {
                let wi = w as usize;
                if self.dist[wi] == UNREACHED {
                    self.dist[wi] = d + 1;
                    self.source[wi] = src;
                    self.queue.push(w);
                } else if self.dist[wi] == d + 1 && src < self.source[wi] {
                    self.source[wi] = src;
                }
            }
        }
    }
}

/// Multi-source search bounded by `radius`. Returns, for every vertex within
/// `radius` of some source that passes `filter`, its distance and nearest
/// source (smallest id on ties), ordered by vertex id.
pub fn truncated_multi_source_bfs<F>(
    graph: &Graph,
    sources: &[VertexId],
    radius: u32,
    filter: F,
) -> Vec<Reached>
where
    F: Fn(VertexId) -> bool,
{
    let mut scratch = BfsScratch::new(graph.n());
    scratch.run(graph, sources, radius);
    let mut out: Vec<Reached> = scratch
        .reached()
        .iter()
        .filter(|&&v| filter(v))
        .map(|&v| Reached {
            vertex: v,
            dist: scratch.dist(v),
            source: scratch.source(v),
        })
        .collect();
    out.sort_unstable_by_key(|r| r.vertex);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        Graph::from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn path(n: u32) -> Graph {
        Graph::from_edges(n as usize, (1..n).map(|i| (i - 1, i)))
    }

    #[test]
    fn path_and_cycle_distances() {
        assert_eq!(bfs_distances(&path(5), 0), vec![0, 1, 2, 3, 4]);
        assert_eq!(bfs_distances(&cycle(8), 0), vec![0, 1, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn multi_source_matches_per_source_searches() {
        let g = cycle(8);
        let out = truncated_multi_source_bfs(&g, &[3, 0], 2, |_| true);
        let (d0, d3) = (bfs_distances(&g, 0), bfs_distances(&g, 3));
        for r in &out {
            let v = r.vertex as usize;
            let expect = if d0[v] <= d3[v] { (d0[v], 0) } else { (d3[v], 3) };
            assert_eq!((r.dist, r.source), expect, "vertex {v}");
        }
        let v2 = out.iter().find(|r| r.vertex == 2).unwrap();
        assert_eq!((v2.dist, v2.source), (1, 3));
        // 0 and 3 cover everything within radius 2 on C8
        assert_eq!(out.len(), 8);
    }

    #[test]
    fn equidistant_vertex_goes_to_smaller_source() {
        let g = cycle(8);
        let out = truncated_multi_source_bfs(&g, &[4, 0], 2, |_| true);
        let v2 = out.iter().find(|r| r.vertex == 2).unwrap();
        assert_eq!((v2.dist, v2.source), (2, 0));
        let v6 = out.iter().find(|r| r.vertex == 6).unwrap();
        assert_eq!((v6.dist, v6.source), (2, 0));
    }

    #[test]
    fn zero_radius_reaches_sources_only() {
        let g = cycle(8);
        let out = truncated_multi_source_bfs(&g, &[1, 5], 0, |_| true);
        assert_eq!(
            out,
            vec![
                Reached { vertex: 1, dist: 0, source: 1 },
                Reached { vertex: 5, dist: 0, source: 5 },
            ]
        );
    }

    #[test]
    fn all_sources_are_self_assigned() {
        let g = path(6);
        let all: Vec<u32> = g.vertices().collect();
        for r in truncated_multi_source_bfs(&g, &all, 3, |_| true) {
            assert_eq!((r.dist, r.source), (0, r.vertex));
        }
    }

    #[test]
    fn filter_only_limits_reporting() {
        // Path 0-1-2: vertex 2 is reached through the filtered-out vertex 1.
        let g = path(3);
        let out = truncated_multi_source_bfs(&g, &[0], 2, |v| v != 1);
        assert_eq!(out.len(), 2);
        assert_eq!(out[1], Reached { vertex: 2, dist: 2, source: 0 });
    }

    #[test]
    fn scratch_is_reusable() {
        let g = cycle(10);
        let mut s = BfsScratch::new(g.n());
        s.run(&g, &[0], 1);
        assert_eq!(s.reached().len(), 3);
        s.run(&g, &[5], 2);
        assert_eq!(s.reached().len(), 5);
        assert_eq!(s.dist(0), UNREACHED);
        assert_eq!(s.dist(7), 2);
    }
}
