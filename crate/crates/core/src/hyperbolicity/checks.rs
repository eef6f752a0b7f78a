//! Randomized checkers for the inequalities the search relies on.
//!
//! Both checkers draw quadruples of vertices (exhaustively when `n⁴` does not
//! exceed the sample size), map them to their dominators at every level of a
//! hierarchy, and compare directly computed values against the bounds that
//! justify pruning. Effective radii are used throughout.

use rand::Rng;

use crate::domination::{DominationHierarchy, DominationLevel};
use crate::eccentricity::pick_central_vertex;
use crate::generators::seeded_rng;
use crate::graph::{bfs_distances, Graph, VertexId};

use super::classify::{classify, valuable_bound2, Candidate, PairBounds, Verdict};
use super::value::{delta4, tau4};

const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    /// Quadruple-level combinations examined.
    pub checked: u64,
    pub violation_count: u64,
    /// The first few violations, described.
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.violation_count == 0
    }

    fn fail(&mut self, msg: impl FnOnce() -> String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_REPORTED {
            self.violations.push(msg());
        }
    }
}

struct Apsp {
    n: usize,
    d: Vec<u32>,
}

impl Apsp {
    fn new(graph: &Graph) -> Apsp {
        let n = graph.n();
        let mut d = Vec::with_capacity(n * n);
        for s in graph.vertices() {
            d.extend(bfs_distances(graph, s));
        }
        Apsp { n, d }
    }

    #[inline]
    fn get(&self, a: VertexId, b: VertexId) -> u32 {
        self.d[a as usize * self.n + b as usize]
    }

    /// Six distances in `delta4` / `tau4` argument order.
    fn six(&self, q: [VertexId; 4]) -> [u32; 6] {
        let [u, v, x, y] = q;
        [self.get(u, v), self.get(x, y), self.get(u, x), self.get(v, y), self.get(u, y), self.get(v, x)]
    }
}

fn for_each_sample<F: FnMut([VertexId; 4])>(n: usize, samples: u64, seed: u64, mut f: F) {
    let total = (n as u128).pow(4);
    if total <= samples as u128 {
        let n = n as VertexId;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        f([a, b, c, d]);
                    }
                }
            }
        }
    } else {
        let mut rng = seeded_rng(seed);
        let n = n as VertexId;
        for _ in 0..samples {
            f([0; 4].map(|_| rng.random_range(0..n)));
        }
    }
}

fn dominated(level: &DominationLevel, q: [VertexId; 4]) -> ([VertexId; 4], [u32; 4]) {
    let idx = q.map(|w| level.owner[w as usize] as usize);
    (idx.map(|i| level.dominators[i]), idx.map(|i| level.radius[i]))
}

/// `δ(u,v,x,y) - K4 <= δ(u',v',x',y') <= δ(u,v,x,y) + K4` (and the same for τ)
/// where `u..y` dominate `u'..y'` at some level and `K4` sums their radii.
pub fn lemma_sandwich_check(graph: &Graph, h: &DominationHierarchy, samples: u64, seed: u64) -> CheckReport {
    let apsp = Apsp::new(graph);
    let mut report = CheckReport::default();
    for_each_sample(graph.n(), samples, seed, |q| {
        let dq = apsp.six(q);
        let (d_prime, t_prime) = (delta4(dq[0], dq[1], dq[2], dq[3], dq[4], dq[5]).0, tau4(dq[0], dq[1], dq[2], dq[3], dq[4], dq[5]).0);
        for (j, level) in h.levels.iter().enumerate() {
            let (dom, r) = dominated(level, q);
            let k4 = r.iter().map(|&k| k as i64).sum::<i64>();
            let dd = apsp.six(dom);
            let big_d = delta4(dd[0], dd[1], dd[2], dd[3], dd[4], dd[5]).0;
            let big_t = tau4(dd[0], dd[1], dd[2], dd[3], dd[4], dd[5]).0;
            report.checked += 1;
            if (d_prime - big_d).abs() > 2 * k4 || (t_prime - big_t).abs() > 2 * k4 {
                report.fail(|| {
                    format!(
                        "level {j}: {q:?} under {dom:?}: 2δ' = {d_prime}, 2δ = {big_d}, 2τ' = {t_prime}, 2τ = {big_t}, K4 = {k4}"
                    )
                });
            }
        }
    });
    report
}

/// Upper bounds on τ of dominated quadruples used to prune the search.
///
/// For each sampled quadruple, each level, and each of the six ways of
/// splitting it into a candidate pair and a target pair:
///
/// * `δ' <= min (d(a,b) + k_a + k_b)` over the six dominator pairs;
/// * `2τ' <= min(d(u,v) + k_u + k_v, d(x,y) + k_x + k_y)`;
/// * for each skip rule, at the least `2δ_L >= 0` under which the rule skips
///   `u` (resp. `v`), `τ' <= δ_L`;
/// * `2τ' <= f_c(u) + f_c(v)`;
/// * with `2δ_L = 2τ' - 1`, both `u` and `v` are acceptable and one is
///   valuable.
pub fn bound_lemmas_check(graph: &Graph, h: &DominationHierarchy, samples: u64, seed: u64) -> CheckReport {
    let apsp = Apsp::new(graph);
    let n = graph.n();
    let ecc: Vec<u32> = (0..n).map(|v| *apsp.d[v * n..(v + 1) * n].iter().max().unwrap()).collect();
    let c = pick_central_vertex(&ecc);
    let mut report = CheckReport::default();

    for_each_sample(n, samples, seed, |q| {
        for (j, level) in h.levels.iter().enumerate() {
            let (dom, r) = dominated(level, q);
            for order in [[0, 1, 2, 3], [2, 3, 0, 1], [0, 2, 1, 3], [1, 3, 0, 2], [0, 3, 1, 2], [1, 2, 0, 3]] {
                let qp = order.map(|i| q[i]);
                let dm = order.map(|i| dom[i]);
                let k = order.map(|i| r[i] as i64);
                report.checked += 1;
                let dq = apsp.six(qp);
                let delta2 = delta4(dq[0], dq[1], dq[2], dq[3], dq[4], dq[5]).0;
                let t = tau4(dq[0], dq[1], dq[2], dq[3], dq[4], dq[5]).0;
                let dd = |a: usize, b: usize| apsp.get(dm[a], dm[b]) as i64 + k[a] + k[b];

                let pair_min = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
                    .iter()
                    .map(|&(a, b)| dd(a, b))
                    .min()
                    .unwrap();
                if delta2 > 2 * pair_min {
                    report.fail(|| format!("level {j}: 2δ' = {delta2} above twice the pair bound {pair_min} for {qp:?}"));
                }
                if t > dd(0, 1).min(dd(2, 3)) {
                    report.fail(|| format!("level {j}: 2τ' = {t} above the pair-distance bound for {qp:?}"));
                }

                let (x, y) = (dm[2], dm[3]);
                let d_xy = apsp.get(x, y);
                let cand = |i: usize| Candidate {
                    ecc: ecc[dm[i] as usize],
                    k: k[i] as u32,
                    d_x: apsp.get(dm[i], x),
                    d_y: apsp.get(dm[i], y),
                    d_c: apsp.get(dm[i], c),
                };
                let (kx, ky) = (k[2], k[3]);
                for i in [0, 1] {
                    let cu = cand(i);
                    let (dx, dy, ku, e) = (cu.d_x as i64, cu.d_y as i64, k[i], cu.ecc as i64);
                    let near = 2 * (dx + ku + kx).min(dy + ku + ky);
                    let b = 2 * e + d_xy as i64 - dx - dy + 4 * ku + 2 * kx + 2 * ky;
                    let ecc_rule = ceil_div((b - 1).max(0), 2);
                    let big_e = e + d_xy as i64 + 2 * ku + kx + ky;
                    let m = (dx - kx).max(dy - ky);
                    let far = ceil_div((2 * big_e - 2 * m - 2).max(0), 3);
                    for (name, l2) in [("near", near), ("eccentricity", ecc_rule), ("far", far)] {
                        if t > l2 {
                            report.fail(|| {
                                format!("level {j}: {name} rule skips position {i} of {dm:?} at 2δ_L = {l2} but 2τ' = {t} for {qp:?}")
                            });
                        }
                    }
                }

                let pair = PairBounds { d_xy, k_x: kx as u32, k_y: ky as u32, lower2: 0 };
                let f_sum = valuable_bound2(&pair, &cand(0)) + valuable_bound2(&pair, &cand(1));
                if 2 * t > f_sum {
                    report.fail(|| format!("level {j}: 4τ' = {} above f_c(u) + f_c(v) = {f_sum} for {qp:?}", 2 * t));
                }

                if t > 0 {
                    let pair = PairBounds { lower2: t - 1, ..pair };
                    let (vu, vv) = (classify(&pair, &cand(0)), classify(&pair, &cand(1)));
                    let complete = vu.is_acceptable()
                        && vv.is_acceptable()
                        && (vu == Verdict::Valuable || vv == Verdict::Valuable);
                    if !complete {
                        report.fail(|| {
                            format!("level {j}: {qp:?} has 2τ' = {t} but {dm:?} classify as {vu:?}, {vv:?} at 2δ_L = {}", t - 1)
                        });
                    }
                }
            }
        }
    });
    report
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1) / b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{derive_sequence, hierarchical_dominating_set};
    use crate::generators::{gen_cycle, gen_random_connected};

    #[test]
    fn flat_hierarchy_is_exact() {
        let g = gen_cycle(7).unwrap();
        let h = hierarchical_dominating_set(&g, &derive_sequence(0, 2.0).unwrap());
        let r = lemma_sandwich_check(&g, &h, 10_000, 1);
        assert!(r.is_ok(), "{:?}", r.violations);
        assert_eq!(r.checked, 7u64.pow(4));
    }

    #[test]
    fn random_graph_bounds() {
        let g = gen_random_connected(30, 0.1, 4).unwrap();
        let h = hierarchical_dominating_set(&g, &derive_sequence(2, 1.5).unwrap());
        let r = bound_lemmas_check(&g, &h, 5_000, 9);
        assert!(r.is_ok(), "{:?}", r.violations);
        let r = lemma_sandwich_check(&g, &h, 5_000, 9);
        assert!(r.is_ok(), "{:?}", r.violations);
    }

    #[test]
    fn wrong_radius_is_caught() {
        let g = gen_cycle(16).unwrap();
        let mut h = hierarchical_dominating_set(&g, &derive_sequence(3, 2.0).unwrap());
        let top = h.levels.len() - 1;
        for r in h.levels[top].radius.iter_mut() {
            *r = 0;
        }
        assert!(!lemma_sandwich_check(&g, &h, 20_000, 3).is_ok());
    }
}
