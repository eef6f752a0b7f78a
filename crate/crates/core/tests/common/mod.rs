//! Reference implementations used as oracles. Deliberately naive and
//! independent of the library's own distance and four-point code.

#![allow(dead_code)]

use hypdom::graph::{Graph, VertexId};

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd–Warshall on the adjacency matrix.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in g.edges() {
        d[u as usize][v as usize] = 1;
        d[v as usize][u as usize] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Twice δ of one quadruple from the three pair sums.
pub fn doubled_delta(d: &[Vec<u32>], q: [usize; 4]) -> i64 {
    let [a, b, c, e] = q;
    let mut s = [
        (d[a][b] + d[c][e]) as i64,
        (d[a][c] + d[b][e]) as i64,
        (d[a][e] + d[b][c]) as i64,
    ];
    s.sort();
    s[2] - s[1]
}

/// Twice τ with `(u, v)` and `(x, y)` as the pairs.
pub fn doubled_tau(d: &[Vec<u32>], q: [usize; 4]) -> i64 {
    let [u, v, x, y] = q;
    (d[u][v] + d[x][y]) as i64 - ((d[u][x] + d[v][y]).max(d[u][y] + d[v][x])) as i64
}

/// Twice δ(G) over all quadruples, repeated vertices included.
pub fn oracle_doubled_delta(g: &Graph) -> i64 {
    let d = floyd_warshall(g);
    let n = g.n();
    let mut best = 0;
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                for e in c..n {
                    best = best.max(doubled_delta(&d, [a, b, c, e]));
                }
            }
        }
    }
    best
}

pub fn witness_doubled(g: &Graph, w: [VertexId; 4]) -> i64 {
    let d = floyd_warshall(g);
    doubled_delta(&d, w.map(|v| v as usize))
}

/// Closed form for cycles: with `n = 4p + e`, δ = p - 1/2 when e = 1, else p.
pub fn cycle_doubled(n: usize) -> i64 {
    let p = (n / 4) as i64;
    if n % 4 == 1 {
        2 * p - 1
    } else {
        2 * p
    }
}
