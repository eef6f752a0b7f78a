//! Running only the first sweep gives a lower bound δ_L with δ <= δ_L + 4k.
//! This prints the certified interval for several k next to the exact value.

use hypdom::generators::gen_grid_perturbed;
use hypdom::hyperbolicity::{compute_hyperbolicity, SearchConfig, SearchMode};

fn main() -> hypdom::Result<()> {
    let g = gen_grid_perturbed(30, 0.1, 11)?;
    let (exact, _) = compute_hyperbolicity(&g, &SearchConfig::new(2, 2.0))?;
    println!("n={} exact {}", g.n(), exact.delta);
    for k in [1, 2, 4, 8] {
        let cfg = SearchConfig { mode: SearchMode::ApproxPass1, ..SearchConfig::new(k, 2.0) };
        let (res, stats) = compute_hyperbolicity(&g, &cfg)?;
        let upper = stats.upper_bound.expect("first sweep reports an upper bound");
        println!("k={k}: [{}, {}]  ({:.3}s)", res.delta, upper, stats.timings.total_s);
    }
    Ok(())
}
