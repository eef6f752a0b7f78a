//! Cross-checks the pruned search against exhaustive enumeration on random
//! graphs for a spread of hierarchy parameters.
//!
//! Usage: `oracle_equivalence [graphs] [n]`

use hypdom::generators::gen_random_connected;
use hypdom::hyperbolicity::{brute_force_hyperbolicity, compute_hyperbolicity, SearchConfig};

fn main() -> hypdom::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let graphs = args.next().unwrap_or(20);
    let n = args.next().unwrap_or(40);

    let mut mismatches = 0;
    for seed in 0..graphs as u64 {
        let g = gen_random_connected(n, 3.0 / n as f64 + 0.02, seed)?;
        let want = brute_force_hyperbolicity(&g)?.delta;
        let mut row = format!("seed {seed:>3}  n={} m={:<4} oracle {want}", g.n(), g.m());
        for (k, r) in [(0, 2.0), (1, 2.0), (2, 1.5), (3, 2.0), (5, 3.0)] {
            let (got, _) = compute_hyperbolicity(&g, &SearchConfig::new(k, r))?;
            if got.delta != want {
                mismatches += 1;
                row.push_str(&format!("  MISMATCH k={k} r={r}: {}", got.delta));
            }
        }
        println!("{row}");
    }
    println!("{mismatches} mismatches");
    if mismatches > 0 {
        std::process::exit(1);
    }
    Ok(())
}
