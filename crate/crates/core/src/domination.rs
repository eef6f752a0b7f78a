//! Hierarchy of distance-k dominating sets.
//!
//! Level `i` (the top) is a greedy `k_i`-dominating set of the whole graph.
//! Each lower level `j` re-dominates every level-`(j+1)` cell at radius `k_j`
//! using only members of that cell as dominators, with distances measured in
//! the whole graph. Level 0 has radius 0, so its dominators are all vertices.
//! Every vertex is assigned to its closest dominator (smallest id on ties).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BfsScratch, Graph, VertexId, UNREACHED};

/// Strictly decreasing domination radii `k_i > ... > k_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationSequence(Vec<u32>);

impl DominationSequence {
    pub fn new(radii: Vec<u32>) -> Result<Self> {
        let ok = radii.last() == Some(&0) && radii.windows(2).all(|w| w[0] > w[1]);
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "domination radii must strictly decrease to 0, got {radii:?}"
            )));
        }
        Ok(DominationSequence(radii))
    }

    pub fn radii(&self) -> &[u32] {
        &self.0
    }

    pub fn max_radius(&self) -> u32 {
        self.0[0]
    }

    /// Index of the top level (`i`).
    pub fn top(&self) -> usize {
        self.0.len() - 1
    }
}

/// `k, floor(k/r), ...` down to 0, forcing a decrease of at least one per step.
pub fn derive_sequence(k: u32, ratio: f64) -> Result<DominationSequence> {
    if !(ratio > 1.0) || !ratio.is_finite() {
        return Err(Error::InvalidParameter(format!("ratio must exceed 1, got {ratio}")));
    }
    let mut radii = vec![k];
    let mut cur = k;
    while cur > 0 {
        let scaled = (cur as f64 / ratio).floor() as u32;
        cur = scaled.min(cur - 1);
        radii.push(cur);
    }
    DominationSequence::new(radii)
}

/// One level of the hierarchy. Dominators are indexed `0..len()`; at every
/// level below the top they are stored grouped by parent, so each parent's
/// children form a contiguous index range of the level below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationLevel {
    pub k: u32,
    pub dominators: Vec<VertexId>,
    /// Effective radius: largest distance from a dominator to its cell.
    pub radius: Vec<u32>,
    /// Per vertex, the index of the dominator whose cell contains it.
    pub owner: Vec<u32>,
    pub cell_offsets: Vec<usize>,
    pub cell_members: Vec<VertexId>,
    /// Per dominator, its range of child indices in the level below. Empty
    /// at level 0.
    pub child_offsets: Vec<usize>,
}

impl DominationLevel {
    pub fn len(&self) -> usize {
        self.dominators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominators.is_empty()
    }

    pub fn cell(&self, idx: usize) -> &[VertexId] {
        &self.cell_members[self.cell_offsets[idx]..self.cell_offsets[idx + 1]]
    }

    pub fn children(&self, idx: usize) -> std::ops::Range<usize> {
        self.child_offsets[idx]..self.child_offsets[idx + 1]
    }

    fn with_cells(
        k: u32,
        dominators: Vec<VertexId>,
        radius: Vec<u32>,
        owner: Vec<u32>,
    ) -> DominationLevel {
        let d = dominators.len();
        let mut cell_offsets = vec![0usize; d + 1];
        for &o in &owner {
            cell_offsets[o as usize + 1] += 1;
        }
        for i in 0..d {
            cell_offsets[i + 1] += cell_offsets[i];
        }
        let mut fill = cell_offsets.clone();
        let mut cell_members = vec![0; owner.len()];
        for (v, &o) in owner.iter().enumerate() {
            cell_members[fill[o as usize]] = v as VertexId;
            fill[o as usize] += 1;
        }
        DominationLevel {
            k,
            dominators,
            radius,
            owner,
            cell_offsets,
            cell_members,
            child_offsets: Vec::new(),
        }
    }
}

/// Levels `0..=i`, indexed by level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationHierarchy {
    pub levels: Vec<DominationLevel>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevelSummary {
    pub level: usize,
    pub k: u32,
    pub dominators: usize,
    /// `radius_histogram[r]` counts dominators with effective radius `r`.
    pub radius_histogram: Vec<usize>,
}

impl DominationHierarchy {
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn top_level(&self) -> &DominationLevel {
        &self.levels[self.top()]
    }

    pub fn level(&self, j: usize) -> &DominationLevel {
        &self.levels[j]
    }

    pub fn summary(&self) -> Vec<LevelSummary> {
        self.levels
            .iter()
            .enumerate()
            .rev()
            .map(|(j, lvl)| {
                let mut hist = vec![0usize; lvl.k as usize + 1];
                for &r in &lvl.radius {
                    if (r as usize) < hist.len() {
                        hist[r as usize] += 1;
                    }
                }
                LevelSummary {
                    level: j,
                    k: lvl.k,
                    dominators: lvl.len(),
                    radius_histogram: hist,
                }
            })
            .collect()
    }
}

fn greedy_order(graph: &Graph, vertices: &mut [VertexId]) {
    vertices.sort_unstable_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
}

/// Builds the hierarchy for `seq` on a connected graph.
pub fn hierarchical_dominating_set(graph: &Graph, seq: &DominationSequence) -> DominationHierarchy {
    let n = graph.n();
    let radii = seq.radii();
    let mut scratch = BfsScratch::new(n);
    let mut levels_top_down: Vec<DominationLevel> = Vec::with_capacity(radii.len());

    let mut all: Vec<VertexId> = graph.vertices().collect();
    greedy_order(graph, &mut all);
    levels_top_down.push(dominate_top(graph, radii[0], &all, &mut scratch));

    let mut stamp = vec![u32::MAX; n];
    let mut index_of = vec![u32::MAX; n];
    for &k in &radii[1..] {
        stamp.fill(u32::MAX);
        let parent = levels_top_down.last_mut().unwrap();
        let mut dominators = Vec::new();
        let mut radius = Vec::new();
        let mut owner = vec![0u32; n];
        let mut child_offsets = Vec::with_capacity(parent.len() + 1);
        child_offsets.push(0);
        let mut members = Vec::new();

        for p in 0..parent.len() {
            members.clear();
            members.extend_from_slice(parent.cell(p));
            greedy_order(graph, &mut members);
            let first = dominators.len();

            if k == 0 {
                for &v in &members {
                    owner[v as usize] = dominators.len() as u32;
                    dominators.push(v);
                    radius.push(0);
                }
            } else {
                let tag = p as u32;
                for &v in &members {
                    if stamp[v as usize] == tag {
                        continue;
                    }
                    index_of[v as usize] = dominators.len() as u32;
                    dominators.push(v);
                    scratch.run(graph, &[v], k);
                    for &w in scratch.reached() {
                        if parent.owner[w as usize] == tag {
                            stamp[w as usize] = tag;
                        }
                    }
                }
                let chosen = &dominators[first..];
                radius.extend(std::iter::repeat_n(0, chosen.len()));
                scratch.run(graph, chosen, k);
                for &w in &members {
                    let d = scratch.dist(w);
                    debug_assert_ne!(d, UNREACHED);
                    let idx = index_of[scratch.source(w) as usize] as usize;
                    owner[w as usize] = idx as u32;
                    radius[idx] = radius[idx].max(d);
                }
            }
            child_offsets.push(dominators.len());
        }
        parent.child_offsets = child_offsets;
        levels_top_down.push(DominationLevel::with_cells(k, dominators, radius, owner));
    }

    levels_top_down.reverse();
    DominationHierarchy { levels: levels_top_down }
}

fn dominate_top(
    graph: &Graph,
    k: u32,
    order: &[VertexId],
    scratch: &mut BfsScratch,
) -> DominationLevel {
    let n = graph.n();
    if k == 0 {
        let owner: Vec<u32> = {
            let mut o = vec![0u32; n];
            for (i, &v) in order.iter().enumerate() {
                o[v as usize] = i as u32;
            }
            o
        };
        return DominationLevel::with_cells(0, order.to_vec(), vec![0; n], owner);
    }
    let mut dominated = vec![false; n];
    let mut dominators = Vec::new();
    for &v in order {
        if dominated[v as usize] {
            continue;
        }
        dominators.push(v);
        scratch.run(graph, &[v], k);
        for &w in scratch.reached() {
            dominated[w as usize] = true;
        }
    }
    let mut index_of = vec![u32::MAX; n];
    for (i, &d) in dominators.iter().enumerate() {
        index_of[d as usize] = i as u32;
    }
    scratch.run(graph, &dominators, k);
    let mut owner = vec![0u32; n];
    let mut radius = vec![0u32; dominators.len()];
    for v in graph.vertices() {
        let idx = index_of[scratch.source(v) as usize];
        owner[v as usize] = idx;
        radius[idx as usize] = radius[idx as usize].max(scratch.dist(v));
    }
    DominationLevel::with_cells(k, dominators, radius, owner)
}

/// Outcome of [`hierarchy_check`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HierarchyReport {
    pub violations: Vec<String>,
}

impl HierarchyReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies partition, radius (including tightness), bottom-level and nesting
/// invariants. Distances come from BFS truncated just past each level's radius.
pub fn hierarchy_check(graph: &Graph, h: &DominationHierarchy) -> HierarchyReport {
    let n = graph.n();
    let mut out = Vec::new();
    let mut scratch = BfsScratch::new(n);

    if h.levels.is_empty() {
        out.push("hierarchy has no levels".to_string());
        return HierarchyReport { violations: out };
    }
    for (j, lvl) in h.levels.iter().enumerate() {
        if lvl.owner.len() != n || lvl.radius.len() != lvl.len() || lvl.cell_offsets.len() != lvl.len() + 1 {
            out.push(format!("level {j}: array sizes inconsistent"));
            continue;
        }
        if j > 0 && h.levels[j - 1].k >= lvl.k {
            out.push(format!("level {j}: radius {} not above level below", lvl.k));
        }

        // partition
        let mut seen = vec![0u32; n];
        for idx in 0..lvl.len() {
            for &v in lvl.cell(idx) {
                seen[v as usize] += 1;
                if lvl.owner[v as usize] as usize != idx {
                    out.push(format!("level {j}: vertex {v} listed in cell {idx} but owned by {}", lvl.owner[v as usize]));
                }
            }
        }
        for (v, &c) in seen.iter().enumerate() {
            match c {
                0 => out.push(format!("level {j}: vertex {v} is in no cell")),
                1 => {}
                _ => out.push(format!("level {j}: vertex {v} is in {c} cells (overlap)")),
            }
        }

        // radii
        for idx in 0..lvl.len() {
            let u = lvl.dominators[idx];
            if lvl.owner[u as usize] as usize != idx {
                out.push(format!("level {j}: dominator {u} outside its own cell"));
            }
            if lvl.radius[idx] > lvl.k {
                out.push(format!("level {j}: dominator {u} radius {} exceeds k={}", lvl.radius[idx], lvl.k));
            }
            scratch.run(graph, &[u], lvl.k + 1);
            let mut far = 0;
            for &v in lvl.cell(idx) {
                let d = scratch.dist(v);
                if d == UNREACHED || d > lvl.radius[idx] {
                    out.push(format!(
                        "level {j}: vertex {v} beyond radius {} of dominator {u}",
                        lvl.radius[idx]
                    ));
                } else {
                    far = far.max(d);
                }
            }
            if far < lvl.radius[idx] {
                out.push(format!("level {j}: dominator {u} radius {} not tight ({far})", lvl.radius[idx]));
            }
        }
    }

    let bottom = &h.levels[0];
    if bottom.k != 0 || bottom.len() != n {
        out.push("level 0 does not consist of every vertex at radius 0".to_string());
    }

    // nesting
    for j in 0..h.top() {
        let (lower, upper) = (&h.levels[j], &h.levels[j + 1]);
        if upper.child_offsets.len() != upper.len() + 1 {
            out.push(format!("level {}: child ranges missing", j + 1));
            continue;
        }
        for p in 0..upper.len() {
            for c in upper.children(p) {
                let Some(&w) = lower.dominators.get(c) else {
                    out.push(format!("level {}: child index {c} out of range", j + 1));
                    continue;
                };
                if upper.owner[w as usize] as usize != p {
                    out.push(format!("level {j}: dominator {w} lies outside its parent's cell"));
                }
                for &v in lower.cell(c) {
                    if upper.owner[v as usize] as usize != p {
                        out.push(format!("level {j}: cell of {w} leaks outside parent cell (vertex {v})"));
                    }
                }
            }
        }
        if upper.child_offsets.last() != Some(&lower.len()) {
            out.push(format!("level {}: children do not cover level {j}", j + 1));
        }
    }
    HierarchyReport { violations: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_grid, gen_random_connected};

    #[test]
    fn sequences() {
        assert_eq!(derive_sequence(8, 1.5).unwrap().radii(), &[8, 5, 3, 2, 1, 0]);
        assert_eq!(derive_sequence(0, 2.0).unwrap().radii(), &[0]);
        assert_eq!(
            derive_sequence(8, 1.01).unwrap().radii(),
            &[8, 7, 6, 5, 4, 3, 2, 1, 0]
        );
        assert_eq!(derive_sequence(10, 3.0).unwrap().radii(), &[10, 3, 1, 0]);
        assert!(derive_sequence(4, 1.0).is_err());
        assert!(derive_sequence(4, f64::NAN).is_err());
    }

    #[test]
    fn explicit_sequence_validation() {
        assert!(DominationSequence::new(vec![3, 1, 0]).is_ok());
        assert!(DominationSequence::new(vec![3, 3, 0]).is_err());
        assert!(DominationSequence::new(vec![3, 1]).is_err());
        assert!(DominationSequence::new(vec![]).is_err());
    }

    #[test]
    fn star_center_dominates() {
        let g = Graph::from_edges(6, (1..6).map(|i| (0, i)));
        let h = hierarchical_dominating_set(&g, &derive_sequence(1, 2.0).unwrap());
        let top = h.top_level();
        assert_eq!(top.dominators, vec![0]);
        assert_eq!(top.radius, vec![1]);
        assert_eq!(top.cell(0).len(), 6);
        assert!(hierarchy_check(&g, &h).is_ok());
    }

    #[test]
    fn cycle_with_radius_two() {
        let g = gen_cycle(8).unwrap();
        let h = hierarchical_dominating_set(&g, &DominationSequence::new(vec![2, 0]).unwrap());
        let top = h.top_level();
        assert_eq!(top.dominators, vec![0, 3]);
        // vertex 2 is one step from 3 and two from 0
        assert_eq!(top.cell(0), &[0, 1, 6, 7]);
        assert_eq!(top.cell(1), &[2, 3, 4, 5]);
        assert_eq!(top.radius, vec![2, 2]);
        assert!(hierarchy_check(&g, &h).is_ok());
    }

    #[test]
    fn zero_sequence_is_flat() {
        let g = gen_cycle(5).unwrap();
        let h = hierarchical_dominating_set(&g, &derive_sequence(0, 2.0).unwrap());
        assert_eq!(h.levels.len(), 1);
        assert_eq!(h.levels[0].len(), 5);
        assert!(h.levels[0].radius.iter().all(|&r| r == 0));
        assert!(hierarchy_check(&g, &h).is_ok());
    }

    #[test]
    fn deep_hierarchy_on_grid() {
        let g = gen_grid(9, 11).unwrap();
        let h = hierarchical_dominating_set(&g, &derive_sequence(6, 1.5).unwrap());
        assert_eq!(h.levels.len(), 5);
        let report = hierarchy_check(&g, &h);
        assert!(report.is_ok(), "{:?}", report.violations);
        assert!(h.top_level().len() < g.n() / 4);
    }

    #[test]
    fn random_graphs_pass_the_checker() {
        for seed in 0..25 {
            let g = gen_random_connected(40, 0.08, seed).unwrap();
            for k in [1, 2, 3] {
                let h = hierarchical_dominating_set(&g, &derive_sequence(k, 1.5).unwrap());
                let report = hierarchy_check(&g, &h);
                assert!(report.is_ok(), "seed {seed} k {k}: {:?}", report.violations);
            }
        }
    }

    #[test]
    fn checker_catches_radius_fault() {
        let g = gen_cycle(8).unwrap();
        let mut h = hierarchical_dominating_set(&g, &DominationSequence::new(vec![2, 0]).unwrap());
        h.levels[1].radius[0] = 1;
        let report = hierarchy_check(&g, &h);
        assert!(!report.is_ok());
        assert!(report.violations.iter().any(|v| v.contains("beyond radius")));
    }

    #[test]
    fn checker_catches_overlap() {
        let g = gen_cycle(8).unwrap();
        let mut h = hierarchical_dominating_set(&g, &DominationSequence::new(vec![2, 0]).unwrap());
        // list vertex 1 in both top cells
        let lvl = &mut h.levels[1];
        lvl.cell_members.insert(lvl.cell_offsets[2], 1);
        lvl.cell_offsets[2] += 1;
        let report = hierarchy_check(&g, &h);
        assert!(report.violations.iter().any(|v| v.contains("overlap")), "{:?}", report.violations);
    }
}
