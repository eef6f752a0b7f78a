//! 2-hop hub labels built by pruned BFS.
//!
//! Vertices are processed in a fixed order. The BFS from the `r`-th vertex `h`
//! stops expanding at any vertex `v` whose current labels already certify
//! `d(h, v)`; otherwise `(h, d(h, v))` is appended to `v`'s label. After
//! construction every pair of labels shares a hub on a shortest path, so
//! `d(u, v)` is the minimum of `d(u, h) + d(h, v)` over common hubs.

use std::io::{BufRead, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, UNREACHED};

/// Order in which vertices become hubs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum LabelOrdering {
    /// Degree descending, id ascending on ties.
    #[default]
    DegreeDescending,
    /// Caller-provided permutation of the vertices.
    Custom(Vec<VertexId>),
}

/// Per-vertex `(hub, distance)` lists sorted by hub id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HubLabels {
    offsets: Vec<usize>,
    hubs: Vec<VertexId>,
    dists: Vec<u32>,
    /// Vertices in the order they were used as hubs.
    pub order: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LabelStats {
    pub total_entries: usize,
    pub mean_size: f64,
    pub max_size: usize,
}

fn hub_order(graph: &Graph, ordering: &LabelOrdering) -> Result<Vec<VertexId>> {
    match ordering {
        LabelOrdering::DegreeDescending => {
            let mut order: Vec<VertexId> = graph.vertices().collect();
            order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
            Ok(order)
        }
        LabelOrdering::Custom(order) => {
            let mut seen = vec![false; graph.n()];
            let valid = order.len() == graph.n()
                && order.iter().all(|&v| {
                    (v as usize) < graph.n() && !std::mem::replace(&mut seen[v as usize], true)
                });
            if !valid {
                return Err(Error::InvalidParameter(
                    "custom hub order must be a permutation of the vertices".into(),
                ));
            }
            Ok(order.clone())
        }
    }
}

/// Builds labels satisfying the cover property on a connected graph.
pub fn build_hub_labels(graph: &Graph, ordering: &LabelOrdering) -> Result<HubLabels> {
    let n = graph.n();
    let order = hub_order(graph, ordering)?;

    // Labels hold (rank, dist); ranks are appended in increasing order so each
    // list stays sorted by rank during construction.
    let mut labels: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    let mut dist = vec![UNREACHED; n];
    let mut via_root = vec![UNREACHED; n];
    let mut queue: Vec<VertexId> = Vec::with_capacity(n);

    for (rank, &root) in order.iter().enumerate() {
        let rank = rank as u32;
        for &(r, d) in &labels[root as usize] {
            via_root[r as usize] = d;
        }
        queue.clear();
        queue.push(root);
        dist[root as usize] = 0;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            let dv = dist[v as usize];
            let certified = labels[v as usize].iter().any(|&(r, d)| {
                let through = via_root[r as usize];
                through != UNREACHED && through + d <= dv
            });
            if certified {
                continue;
            }
            labels[v as usize].push((rank, dv));
            for &w in graph.neighbors(v) {
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = dv + 1;
                    queue.push(w);
                }
            }
        }
        for &v in &queue {
            dist[v as usize] = UNREACHED;
        }
        for &(r, _) in &labels[root as usize] {
            via_root[r as usize] = UNREACHED;
        }
    }

    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    let mut hubs = Vec::new();
    let mut dists = Vec::new();
    for label in &labels {
        let mut entries: Vec<(VertexId, u32)> = label
            .iter()
            .map(|&(r, d)| (order[r as usize], d))
            .collect();
        entries.sort_unstable();
        for (h, d) in entries {
            hubs.push(h);
            dists.push(d);
        }
        offsets.push(hubs.len());
    }
    Ok(HubLabels { offsets, hubs, dists, order })
}

impl HubLabels {
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// `(hub, distance)` entries of `v`, sorted by hub id.
    pub fn label(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        let range = self.offsets[v as usize]..self.offsets[v as usize + 1];
        self.hubs[range.clone()]
            .iter()
            .copied()
            .zip(self.dists[range].iter().copied())
    }

    pub fn label_len(&self, v: VertexId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Exact `d(u, v)` by merging the two sorted labels.
    #[inline]
    pub fn query_distance(&self, u: VertexId, v: VertexId) -> u32 {
        let (a0, a1) = (self.offsets[u as usize], self.offsets[u as usize + 1]);
        let (b0, b1) = (self.offsets[v as usize], self.offsets[v as usize + 1]);
        let (ha, hb) = (&self.hubs[a0..a1], &self.hubs[b0..b1]);
        let (da, db) = (&self.dists[a0..a1], &self.dists[b0..b1]);
        let (mut i, mut j) = (0, 0);
        let mut best = UNREACHED;
        while i < ha.len() && j < hb.len() {
            match ha[i].cmp(&hb[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    best = best.min(da[i] + db[j]);
                    i += 1;
                    j += 1;
                }
            }
        }
        best
    }

    pub fn stats(&self) -> LabelStats {
        label_stats(self)
    }

    /// Writes one line per vertex: `v: (h1,d1) (h2,d2) ...`.
    pub fn dump<W: Write>(&self, mut out: W) -> Result<()> {
        for v in 0..self.n() as VertexId {
            write!(out, "{v}:")?;
            for (h, d) in self.label(v) {
                write!(out, " ({h},{d})")?;
            }
            writeln!(out)?;
        }
        out.flush()?;
        Ok(())
    }

    /// Reads a dump produced by [`HubLabels::dump`]. The hub order is not part
    /// of the format and comes back empty.
    pub fn read_dump<R: BufRead>(reader: R) -> Result<HubLabels> {
        let mut offsets = vec![0];
        let mut hubs = Vec::new();
        let mut dists = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let bad = |message: &str| Error::Parse { line: idx + 1, message: message.to_string() };
            if line.trim().is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(':').ok_or_else(|| bad("missing `:`"))?;
            let v: usize = head.trim().parse().map_err(|_| bad("bad vertex id"))?;
            if v != offsets.len() - 1 {
                return Err(bad("vertices must appear in order"));
            }
            let mut entries = Vec::new();
            for tok in rest.split_whitespace() {
                let inner = tok
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| bad("expected (hub,dist)"))?;
                let (h, d) = inner.split_once(',').ok_or_else(|| bad("expected (hub,dist)"))?;
                let h: VertexId = h.parse().map_err(|_| bad("bad hub id"))?;
                let d: u32 = d.parse().map_err(|_| bad("bad distance"))?;
                entries.push((h, d));
            }
            entries.sort_unstable();
            for (h, d) in entries {
                hubs.push(h);
                dists.push(d);
            }
            offsets.push(hubs.len());
        }
        Ok(HubLabels { offsets, hubs, dists, order: Vec::new() })
    }
}

pub fn label_stats(labels: &HubLabels) -> LabelStats {
    let n = labels.n();
    let max_size = (0..n as VertexId).map(|v| labels.label_len(v)).max().unwrap_or(0);
    LabelStats {
        total_entries: labels.hubs.len(),
        mean_size: if n == 0 { 0.0 } else { labels.hubs.len() as f64 / n as f64 },
        max_size,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_path};
    use crate::graph::bfs_distances;

    fn assert_exact(graph: &Graph, labels: &HubLabels) {
        for u in graph.vertices() {
            let d = bfs_distances(graph, u);
            for v in graph.vertices() {
                assert_eq!(labels.query_distance(u, v), d[v as usize], "pair ({u},{v})");
            }
        }
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, [(0, 1)]);
        let l = build_hub_labels(&g, &LabelOrdering::default()).unwrap();
        assert_eq!(l.query_distance(0, 1), 1);
        assert_eq!(l.query_distance(0, 0), 0);
    }

    #[test]
    fn cycle_all_pairs() {
        let g = gen_cycle(8).unwrap();
        let l = build_hub_labels(&g, &LabelOrdering::default()).unwrap();
        assert_exact(&g, &l);
    }

    #[test]
    fn every_label_contains_itself() {
        let g = gen_cycle(11).unwrap();
        let l = build_hub_labels(&g, &LabelOrdering::default()).unwrap();
        for v in g.vertices() {
            assert!(l.label(v).any(|(h, d)| h == v && d == 0));
            let hubs: Vec<_> = l.label(v).map(|(h, _)| h).collect();
            assert!(hubs.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn single_vertex_stats() {
        let l = build_hub_labels(&Graph::from_edges(1, []), &LabelOrdering::default()).unwrap();
        assert_eq!(l.stats().total_entries, 1);
    }

    #[test]
    fn path_labels_stay_small_with_a_good_order() {
        // Hubs in bisection order give logarithmic labels on a path.
        let n = 255u32;
        let g = gen_path(n as usize).unwrap();
        let mut order = Vec::new();
        let mut spans = vec![(0u32, n)];
        while !spans.is_empty() {
            let mut next = Vec::new();
            for (lo, hi) in spans {
                if lo < hi {
                    let mid = (lo + hi) / 2;
                    order.push(mid);
                    next.push((lo, mid));
                    next.push((mid + 1, hi));
                }
            }
            spans = next;
        }
        let l = build_hub_labels(&g, &LabelOrdering::Custom(order)).unwrap();
        assert_exact(&g, &l);
        let stats = l.stats();
        let counted: usize = g.vertices().map(|v| l.label_len(v)).sum();
        assert_eq!(stats.total_entries, counted);
        assert!(stats.max_size <= 8, "max label {}", stats.max_size);
        assert!(stats.mean_size <= 8.0);
    }

    #[test]
    fn custom_order_must_be_permutation() {
        let g = gen_path(3).unwrap();
        assert!(build_hub_labels(&g, &LabelOrdering::Custom(vec![0, 0, 1])).is_err());
        assert!(build_hub_labels(&g, &LabelOrdering::Custom(vec![0, 1])).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let g = gen_cycle(6).unwrap();
        let l = build_hub_labels(&g, &LabelOrdering::default()).unwrap();
        let mut buf = Vec::new();
        l.dump(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("0: (0,0)"));
        let back = HubLabels::read_dump(buf.as_slice()).unwrap();
        assert_exact(&g, &back);
    }
}
