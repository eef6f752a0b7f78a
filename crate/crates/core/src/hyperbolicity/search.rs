//! Exact hyperbolicity by pruned search over a hierarchy of dominating sets.
//!
//! Pairs `(x, y)` of top-level dominators are visited by non-increasing
//! distance. For each pair, dominators are classified as acceptable or
//! valuable, and every valuable `u` is combined with each acceptable `v` whose
//! pair `{u, v}` was handled earlier. A dominator quadruple whose τ plus the
//! sum of its cell radii can still beat the lower bound is refined one level
//! down, until level 0 where cells are single vertices.
//!
//! The agenda is swept twice. The first sweep only evaluates dominator
//! quadruples, which already gives a lower bound within `4k` of the answer,
//! and records for each pair the best upper bound it produced. The second
//! sweep starts from that bound, skips pairs whose record cannot beat it, and
//! refines everything else.

use std::cell::Cell;
use std::collections::HashMap;
use std::ops::Range;
use std::rc::Rc;
use std::time::Instant;

use log::{debug, info};
use serde::Serialize;

use crate::cache::{CacheStats, Fetched, MatrixCache, MatrixKey, RectMatrix, DEFAULT_CAPACITY, DEFAULT_SIDE_LIMIT};
use crate::domination::{derive_sequence, hierarchical_dominating_set, DominationHierarchy, LevelSummary};
use crate::eccentricity::{compute_all_eccentricities, EccentricitySummary};
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph, VertexId};
use crate::labeling::{build_hub_labels, HubLabels, LabelOrdering, LabelStats};

use super::brute::brute_force_hyperbolicity_with_limit;
use super::classify::{classify, Candidate, PairBounds, SkipRule, Verdict};
use super::value::{tau4, Doubled};
use super::QuadrupleResult;

/// Largest top-level distance matrix accepted by default, in entries.
pub const DEFAULT_MEMORY_BUDGET: u64 = 2_000_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum SearchMode {
    #[default]
    #[serde(rename = "exact")]
    Exact,
    /// First sweep only: a lower bound certified to be within `4k` of δ.
    #[serde(rename = "approx-pass1")]
    ApproxPass1,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchConfig {
    /// Maximum domination distance of the top level.
    pub k: u32,
    /// Ratio between consecutive domination distances.
    pub ratio: f64,
    pub cache_capacity: usize,
    /// Matrices with a side longer than this are never cached.
    pub side_limit: usize,
    pub memory_budget: u64,
    pub mode: SearchMode,
    #[serde(skip)]
    pub label_ordering: LabelOrdering,
    /// Count how often each quadruple is evaluated (tests only; costly).
    #[serde(skip)]
    pub trace_visits: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            k: 2,
            ratio: 2.0,
            cache_capacity: DEFAULT_CAPACITY,
            side_limit: DEFAULT_SIDE_LIMIT,
            memory_budget: DEFAULT_MEMORY_BUDGET,
            mode: SearchMode::Exact,
            label_ordering: LabelOrdering::default(),
            trace_visits: false,
        }
    }
}

impl SearchConfig {
    pub fn new(k: u32, ratio: f64) -> Self {
        SearchConfig { k, ratio, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        derive_sequence(self.k, self.ratio)?;
        if self.memory_budget == 0 {
            return Err(Error::InvalidParameter("memory budget must be positive".into()));
        }
        Ok(())
    }
}

/// Work done on quadruples of level-`level` dominators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub level: usize,
    pub k: u32,
    pub dominators: usize,
    pub considered: u64,
    pub explored: u64,
    pub pair_skips: u64,
    pub skipped_near: u64,
    pub skipped_eccentric: u64,
    pub skipped_far: u64,
    pub acceptable: u64,
    pub valuable: u64,
}

/// Where a sweep hit the stop condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StopPoint {
    pub position: usize,
    pub distance: u32,
    pub lower: Doubled,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PassStats {
    pub pass: u32,
    pub explore: bool,
    pub start: Doubled,
    pub end: Doubled,
    pub pairs_processed: u64,
    pub pair_skips: u64,
    pub record_skips: u64,
    pub self_pairs_used: bool,
    pub stop: Option<StopPoint>,
    /// Successive improvements of the lower bound.
    pub trajectory: Vec<Doubled>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Timings {
    pub hierarchy_s: f64,
    pub eccentricity_s: f64,
    pub labels_s: f64,
    pub top_matrix_s: f64,
    pub pass1_s: f64,
    pub pass2_s: f64,
    pub total_s: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunStats {
    /// The graph was small enough to go straight to the oracle.
    pub brute_force: bool,
    pub sequence: Vec<u32>,
    pub central_vertex: Option<VertexId>,
    pub eccentricity: Option<EccentricitySummary>,
    pub labels: Option<LabelStats>,
    pub hierarchy: Vec<LevelSummary>,
    /// Indexed by level; level 0 holds single vertices.
    pub levels: Vec<LevelStats>,
    pub agenda_pairs: usize,
    pub passes: Vec<PassStats>,
    pub cache: CacheStats,
    pub direct_label_queries: u64,
    /// Certified upper bound on δ when only the first sweep ran.
    pub upper_bound: Option<Doubled>,
    pub timings: Timings,
    /// Per sweep, evaluations of each quadruple up to τ's symmetries.
    #[serde(skip)]
    pub visit_counts: Vec<HashMap<[VertexId; 4], u32>>,
}

/// δ of a connected graph with default settings for everything but `k` and `r`.
pub fn hyperbolicity(graph: &Graph, k: u32, ratio: f64) -> Result<QuadrupleResult> {
    Ok(compute_hyperbolicity(graph, &SearchConfig::new(k, ratio))?.0)
}

/// Exact δ (or the first-sweep bound in approximate mode) with run statistics.
pub fn compute_hyperbolicity(graph: &Graph, config: &SearchConfig) -> Result<(QuadrupleResult, RunStats)> {
    config.validate()?;
    let n = graph.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let started = Instant::now();
    let mut stats = RunStats::default();
    if n < 4 {
        let result = brute_force_hyperbolicity_with_limit(graph, 4)?;
        stats.brute_force = true;
        stats.timings.total_s = started.elapsed().as_secs_f64();
        return Ok((result, stats));
    }

    let seq = derive_sequence(config.k, config.ratio)?;
    stats.sequence = seq.radii().to_vec();
    let t = Instant::now();
    let hierarchy = hierarchical_dominating_set(graph, &seq);
    stats.timings.hierarchy_s = t.elapsed().as_secs_f64();
    stats.hierarchy = hierarchy.summary();
    let top = hierarchy.top_level();
    let d = top.len();
    let entries = (d as u128) * (d as u128);
    if entries > config.memory_budget as u128 {
        return Err(Error::MemoryBudget { dominators: d, entries, budget: config.memory_budget });
    }
    info!("hierarchy {:?}: {} top dominators", seq.radii(), d);

    let t = Instant::now();
    let ecc = compute_all_eccentricities(graph);
    let central = ecc.central_vertex;
    let dist_c = bfs_distances(graph, central);
    stats.timings.eccentricity_s = t.elapsed().as_secs_f64();
    stats.eccentricity = Some(ecc.summary());
    stats.central_vertex = Some(central);

    let t = Instant::now();
    let labels = build_hub_labels(graph, &config.label_ordering)?;
    stats.timings.labels_s = t.elapsed().as_secs_f64();
    stats.labels = Some(labels.stats());

    let t = Instant::now();
    let mut dtop = vec![0u32; d * d];
    for (a, &w) in top.dominators.iter().enumerate() {
        let dist = bfs_distances(graph, w);
        for (b, &z) in top.dominators.iter().enumerate() {
            dtop[a * d + b] = dist[z as usize];
        }
    }
    let agenda = pair_agenda(&top.dominators, &dtop);
    stats.agenda_pairs = agenda.len();
    stats.timings.top_matrix_s = t.elapsed().as_secs_f64();

    let ctx = Ctx {
        h: &hierarchy,
        labels: &labels,
        ecc: &ecc.ecc,
        dist_c: &dist_c,
        direct_queries: Cell::new(0),
    };
    let mut search = Search {
        ctx: &ctx,
        dtop: &dtop,
        cache: MatrixCache::new(config.cache_capacity, config.side_limit),
        lower2: 0,
        witness: QuadrupleResult::trivial(n).witness,
        levels: hierarchy
            .levels
            .iter()
            .enumerate()
            .map(|(j, l)| LevelStats { level: j, k: l.k, dominators: l.len(), ..Default::default() })
            .collect(),
        trajectory: Vec::new(),
        explore: false,
        trace: None,
    };

    let mut records = vec![i64::MIN; agenda.len()];
    let t = Instant::now();
    let pass1 = search.sweep(1, &agenda, &mut records, false, config.trace_visits);
    stats.timings.pass1_s = t.elapsed().as_secs_f64();
    info!("pass 1 lower bound {}", pass1.end);
    stats.passes.push(pass1);
    if let Some(tr) = search.trace.take() {
        stats.visit_counts.push(tr);
    }

    match config.mode {
        SearchMode::ApproxPass1 => {
            stats.upper_bound = Some(Doubled(search.lower2 + 8 * hierarchy.top_level().k as i64));
        }
        SearchMode::Exact => {
            let t = Instant::now();
            let pass2 = search.sweep(2, &agenda, &mut records, true, config.trace_visits);
            stats.timings.pass2_s = t.elapsed().as_secs_f64();
            info!("pass 2 value {}", pass2.end);
            stats.passes.push(pass2);
            if let Some(tr) = search.trace.take() {
                stats.visit_counts.push(tr);
            }
        }
    }

    let result = QuadrupleResult { delta: Doubled(search.lower2), witness: search.witness };
    stats.levels = search.levels;
    stats.cache = search.cache.stats();
    stats.direct_label_queries = ctx.direct_queries.get();
    stats.timings.total_s = started.elapsed().as_secs_f64();
    Ok((result, stats))
}

/// Pairs `x < y` (by vertex id) of top dominators, sorted by non-increasing
/// distance then by ids, followed by the self-pairs `(x, x)`. Entries are
/// indices into the top level.
fn pair_agenda(dominators: &[VertexId], dtop: &[u32]) -> Vec<(u32, u32)> {
    let d = dominators.len();
    let mut pairs = Vec::with_capacity(d * (d + 1) / 2);
    for a in 0..d {
        for b in 0..d {
            if dominators[a] < dominators[b] {
                pairs.push((a as u32, b as u32));
            }
        }
    }
    pairs.sort_unstable_by_key(|&(a, b)| {
        (
            std::cmp::Reverse(dtop[a as usize * d + b as usize]),
            dominators[a as usize],
            dominators[b as usize],
        )
    });
    let mut selfs: Vec<u32> = (0..d as u32).collect();
    selfs.sort_unstable_by_key(|&a| dominators[a as usize]);
    pairs.extend(selfs.into_iter().map(|a| (a, a)));
    pairs
}

/// Immutable inputs shared by the whole search.
struct Ctx<'a> {
    h: &'a DominationHierarchy,
    labels: &'a HubLabels,
    ecc: &'a [u32],
    dist_c: &'a [u32],
    direct_queries: Cell<u64>,
}

/// Distances between the children of two dominators.
#[derive(Clone)]
enum Block<'a> {
    Cached(Rc<RectMatrix>),
    Direct {
        rows: &'a [VertexId],
        cols: &'a [VertexId],
        labels: &'a HubLabels,
        queries: &'a Cell<u64>,
    },
}

impl Block<'_> {
    #[inline]
    fn get(&self, i: usize, j: usize) -> u32 {
        match self {
            Block::Cached(m) => m.get(i, j),
            Block::Direct { rows, cols, labels, queries } => {
                queries.set(queries.get() + 1);
                labels.query_distance(rows[i], cols[j])
            }
        }
    }
}

struct Search<'a> {
    ctx: &'a Ctx<'a>,
    dtop: &'a [u32],
    cache: MatrixCache,
    lower2: i64,
    witness: [VertexId; 4],
    levels: Vec<LevelStats>,
    trajectory: Vec<Doubled>,
    explore: bool,
    trace: Option<HashMap<[VertexId; 4], u32>>,
}

fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Representative of a quadruple under `u<->v`, `x<->y` and swapping the pairs.
fn canonical(q: [VertexId; 4]) -> [VertexId; 4] {
    let p = (q[0].min(q[1]), q[0].max(q[1]));
    let r = (q[2].min(q[3]), q[2].max(q[3]));
    let (a, b) = if p <= r { (p, r) } else { (r, p) };
    [a.0, a.1, b.0, b.1]
}

impl<'a> Search<'a> {
    fn sweep(
        &mut self,
        pass: u32,
        agenda: &[(u32, u32)],
        records: &mut [i64],
        explore: bool,
        trace: bool,
    ) -> PassStats {
        self.explore = explore;
        self.trace = trace.then(HashMap::new);
        self.trajectory.clear();
        let h = self.ctx.h;
        let top_idx = h.top();
        let top = h.top_level();
        let d = top.len();
        let k_top = top.k as i64;
        let mut ps = PassStats { pass, explore, start: Doubled(self.lower2), ..Default::default() };

        let mut mates: Vec<Vec<u32>> = vec![Vec::new(); d];
        let mut flags = vec![0u8; d];
        let mut valuable: Vec<usize> = Vec::new();

        for (pos, &(x, y)) in agenda.iter().enumerate() {
            let (x, y) = (x as usize, y as usize);
            let dxy = self.dtop[x * d + y];
            if dxy as i64 + 2 * k_top <= self.lower2 {
                ps.stop = Some(StopPoint { position: pos, distance: dxy, lower: Doubled(self.lower2) });
                break;
            }
            if x == y && self.lower2 >= 4 * k_top {
                break;
            }
            let (kx, ky) = (top.radius[x], top.radius[y]);
            if dxy as i64 + kx as i64 + ky as i64 <= self.lower2 {
                ps.pair_skips += 1;
                self.levels[top_idx].pair_skips += 1;
                continue;
            }
            let self_mate = self.lower2 < 4 * k_top;
            if explore && records[pos] <= self.lower2 {
                ps.record_skips += 1;
                add_mate(&mut mates, x, y);
                continue;
            }
            ps.pairs_processed += 1;
            ps.self_pairs_used |= x == y;
            if self_mate {
                add_mate(&mut mates, x, y);
            }

            let pair = PairBounds { d_xy: dxy, k_x: kx, k_y: ky, lower2: self.lower2 };
            valuable.clear();
            for u in 0..d {
                let w = top.dominators[u] as usize;
                let c = Candidate {
                    ecc: self.ctx.ecc[w],
                    k: top.radius[u],
                    d_x: self.dtop[u * d + x],
                    d_y: self.dtop[u * d + y],
                    d_c: self.ctx.dist_c[w],
                };
                flags[u] = self.tally(top_idx, classify(&pair, &c));
                if flags[u] == 2 {
                    valuable.push(u);
                }
            }

            let mut record = records[pos];
            for &u in &valuable {
                for &v in &mates[u] {
                    let v = v as usize;
                    let fv = flags[v];
                    if fv == 0 || (fv == 2 && v < u) {
                        continue;
                    }
                    let dist = [
                        self.dtop[u * d + v],
                        dxy,
                        self.dtop[u * d + x],
                        self.dtop[v * d + y],
                        self.dtop[u * d + y],
                        self.dtop[v * d + x],
                    ];
                    let ub = self.visit(top_idx, [u, v, x, y], dist);
                    record = record.max(ub);
                }
            }
            records[pos] = record;
            if !self_mate {
                add_mate(&mut mates, x, y);
            }
        }
        ps.end = Doubled(self.lower2);
        ps.trajectory = std::mem::take(&mut self.trajectory);
        debug!("pass {pass}: {ps:?}");
        ps
    }

    /// Counts a verdict; returns 0 for skip, 1 for acceptable, 2 for valuable.
    fn tally(&mut self, level: usize, v: Verdict) -> u8 {
        let s = &mut self.levels[level];
        match v {
            Verdict::Skip(SkipRule::Near) => {
                s.skipped_near += 1;
                0
            }
            Verdict::Skip(SkipRule::Eccentric) => {
                s.skipped_eccentric += 1;
                0
            }
            Verdict::Skip(SkipRule::Far) => {
                s.skipped_far += 1;
                0
            }
            Verdict::Acceptable => {
                s.acceptable += 1;
                1
            }
            Verdict::Valuable => {
                s.acceptable += 1;
                s.valuable += 1;
                2
            }
        }
    }

    /// Evaluates τ on a quadruple of level-`j` dominators, refines it when its
    /// cells may hold something better, and returns `2τ + 2 K4`.
    fn visit(&mut self, j: usize, q: [usize; 4], dist: [u32; 6]) -> i64 {
        let lvl = &self.ctx.h.levels[j];
        self.levels[j].considered += 1;
        let t = tau4(dist[0], dist[1], dist[2], dist[3], dist[4], dist[5]).0;
        if t > self.lower2 {
            self.lower2 = t;
            self.witness = q.map(|i| lvl.dominators[i]);
            self.trajectory.push(Doubled(t));
            debug!("lower bound {} at level {j} on {:?}", Doubled(t), self.witness);
        }
        if let Some(tr) = self.trace.as_mut() {
            *tr.entry(canonical(q.map(|i| lvl.dominators[i]))).or_default() += 1;
        }
        let k4: i64 = q.iter().map(|&i| lvl.radius[i] as i64).sum();
        let ub = t + 2 * k4;
        if self.explore && j >= 1 && ub > self.lower2 {
            self.levels[j].explored += 1;
            self.refine(j, q);
        }
        ub
    }

    fn fetch(&mut self, j: usize, a: usize, b: usize) -> Block<'a> {
        let ctx = self.ctx;
        let parent = &ctx.h.levels[j];
        let child = &ctx.h.levels[j - 1];
        let rows = &child.dominators[parent.children(a)];
        let cols = &child.dominators[parent.children(b)];
        let key = MatrixKey { level: j as u32, a: a as u32, b: b as u32 };
        match self.cache.get_matrix(key, rows, cols, ctx.labels) {
            Fetched::Matrix(m) => Block::Cached(m),
            Fetched::Bypass => Block::Direct { rows, cols, labels: ctx.labels, queries: &ctx.direct_queries },
        }
    }

    /// Classifies the children in `range` (level `level`) against the pair of
    /// children at columns `ix`, `iy`.
    #[allow(clippy::too_many_arguments)]
    fn classify_children(
        &mut self,
        level: usize,
        pair: &PairBounds,
        range: Range<usize>,
        bx: &Block<'_>,
        by: &Block<'_>,
        ix: usize,
        iy: usize,
        out: &mut Vec<(usize, bool)>,
    ) {
        out.clear();
        let lvl = &self.ctx.h.levels[level];
        for (i, g) in range.enumerate() {
            let w = lvl.dominators[g] as usize;
            let c = Candidate {
                ecc: self.ctx.ecc[w],
                k: lvl.radius[g],
                d_x: bx.get(i, ix),
                d_y: by.get(i, iy),
                d_c: self.ctx.dist_c[w],
            };
            match self.tally(level, classify(pair, &c)) {
                0 => {}
                f => out.push((i, f == 2)),
            }
        }
    }

    /// Visits the quadruples of children of the level-`j` quadruple `q`.
    fn refine(&mut self, j: usize, q: [usize; 4]) {
        let [mut u, mut v, x, y] = q;
        if u == y && v == x {
            std::mem::swap(&mut u, &mut v);
        }
        // The quadruple maps to itself when its two pairs are swapped; visit
        // only one of each mirrored pair of child quadruples.
        let mirror = u == x && v == y;
        let same_uv = u == v;
        let same_xy = x == y;

        let h = self.ctx.h;
        let parent = &h.levels[j];
        let c = j - 1;
        let child_radius = &h.levels[c].radius;
        let (cu, cv, cx, cy) = (parent.children(u), parent.children(v), parent.children(x), parent.children(y));

        let b_xy = self.fetch(j, x, y);
        let b_ux = self.fetch(j, u, x);
        let b_uy = self.fetch(j, u, y);
        let b_vx = self.fetch(j, v, x);
        let b_vy = self.fetch(j, v, y);
        let b_uv = self.fetch(j, u, v);
        let b_vu = if same_uv { b_uv.clone() } else { self.fetch(j, v, u) };

        let mut acc_u: Vec<(usize, bool)> = Vec::with_capacity(cu.len());
        let mut acc_v: Vec<(usize, bool)> = Vec::with_capacity(cv.len());

        for ix in 0..cx.len() {
            let gx = cx.start + ix;
            let iy0 = if same_xy { ix } else { 0 };
            for iy in iy0..cy.len() {
                let gy = cy.start + iy;
                let d_xy = b_xy.get(ix, iy);
                let (kx, ky) = (child_radius[gx], child_radius[gy]);
                if d_xy as i64 + kx as i64 + ky as i64 <= self.lower2 {
                    self.levels[c].pair_skips += 1;
                    continue;
                }
                let pair = PairBounds { d_xy, k_x: kx, k_y: ky, lower2: self.lower2 };
                self.classify_children(c, &pair, cu.clone(), &b_ux, &b_uy, ix, iy, &mut acc_u);
                if acc_u.is_empty() {
                    continue;
                }
                if !same_uv {
                    self.classify_children(c, &pair, cv.clone(), &b_vx, &b_vy, ix, iy, &mut acc_v);
                }
                let side_v = if same_uv { &acc_u } else { &acc_v };
                let xy_key = minmax(gx, gy);

                // valuable on the u side
                for &(iu, val_u) in &acc_u {
                    if !val_u {
                        continue;
                    }
                    let gu = cu.start + iu;
                    for &(iv, val_v) in side_v {
                        if same_uv && val_v && iv < iu {
                            continue;
                        }
                        let gv = cv.start + iv;
                        if mirror && minmax(gu, gv) < xy_key {
                            continue;
                        }
                        let dist = [
                            b_uv.get(iu, iv),
                            d_xy,
                            b_ux.get(iu, ix),
                            b_vy.get(iv, iy),
                            b_uy.get(iu, iy),
                            b_vx.get(iv, ix),
                        ];
                        self.visit(c, [gu, gv, gx, gy], dist);
                    }
                }
                if same_uv {
                    continue;
                }
                // valuable on the v side, u side acceptable only
                for &(iv, val_v) in &acc_v {
                    if !val_v {
                        continue;
                    }
                    let gv = cv.start + iv;
                    for &(iu, val_u) in &acc_u {
                        if val_u {
                            continue;
                        }
                        let gu = cu.start + iu;
                        if mirror && minmax(gu, gv) < xy_key {
                            continue;
                        }
                        let dist = [
                            b_vu.get(iv, iu),
                            d_xy,
                            b_vx.get(iv, ix),
                            b_uy.get(iu, iy),
                            b_vy.get(iv, iy),
                            b_ux.get(iu, ix),
                        ];
                        self.visit(c, [gv, gu, gx, gy], dist);
                    }
                }
            }
        }
    }
}

fn add_mate(mates: &mut [Vec<u32>], x: usize, y: usize) {
    mates[x].push(y as u32);
    if x != y {
        mates[y].push(x as u32);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_grid};

    #[test]
    fn cycle_twelve() {
        assert_eq!(hyperbolicity(&gen_cycle(12).unwrap(), 2, 2.0).unwrap().delta, Doubled(6));
    }

    #[test]
    fn grid_three_by_five() {
        assert_eq!(hyperbolicity(&gen_grid(3, 5).unwrap(), 1, 2.0).unwrap().delta, Doubled(4));
    }

    #[test]
    fn agenda_order() {
        // path 0-1-2 as dominators
        let dtop = [0, 1, 2, 1, 0, 1, 2, 1, 0];
        let a = pair_agenda(&[0, 1, 2], &dtop);
        assert_eq!(a, vec![(0, 2), (0, 1), (1, 2), (0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical([5, 1, 3, 2]), [1, 5, 2, 3]);
        assert_eq!(canonical([3, 2, 1, 5]), [1, 5, 2, 3]);
        assert_eq!(canonical([2, 3, 5, 1]), [1, 5, 2, 3]);
    }

    #[test]
    fn tiny_graph_uses_oracle() {
        let (r, s) = compute_hyperbolicity(&gen_cycle(3).unwrap(), &SearchConfig::default()).unwrap();
        assert!(s.brute_force);
        assert_eq!(r.delta, Doubled(0));
    }

    #[test]
    fn rejects_disconnected_and_bad_ratio() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]);
        assert!(matches!(hyperbolicity(&g, 1, 2.0), Err(Error::Disconnected)));
        assert!(matches!(hyperbolicity(&gen_cycle(6).unwrap(), 1, 1.0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn memory_guard() {
        let cfg = SearchConfig { memory_budget: 10, ..SearchConfig::new(0, 2.0) };
        assert!(matches!(
            compute_hyperbolicity(&gen_cycle(8).unwrap(), &cfg),
            Err(Error::MemoryBudget { dominators: 8, .. })
        ));
    }
}
