//! Per-level pruning counters of one run, then the whole statistics record
//! as JSON.
//!
//! Usage: `run_statistics [side] [seed]`

use hypdom::generators::gen_grid_perturbed;
use hypdom::hyperbolicity::{compute_hyperbolicity, SearchConfig};

fn main() -> hypdom::Result<()> {
    let mut args = std::env::args().skip(1);
    let side: usize = args.next().map_or(40, |a| a.parse().expect("side"));
    let seed: u64 = args.next().map_or(2024, |a| a.parse().expect("seed"));

    let g = gen_grid_perturbed(side, 0.1, seed)?;
    let (res, stats) = compute_hyperbolicity(&g, &SearchConfig::new(4, 2.0))?;
    println!("n={} m={} delta={}", g.n(), g.m(), res.delta);

    println!("{:>5} {:>4} {:>6} {:>10} {:>10} {:>9} {:>9} {:>9}", "level", "k", "doms", "considered", "explored", "near", "eccentric", "far");
    for l in stats.levels.iter().rev() {
        println!(
            "{:>5} {:>4} {:>6} {:>10} {:>10} {:>9} {:>9} {:>9}",
            l.level, l.k, l.dominators, l.considered, l.explored, l.skipped_near, l.skipped_eccentric, l.skipped_far
        );
    }
    for p in &stats.passes {
        println!("pass {}: {} -> {}, {} pairs, stop {:?}", p.pass, p.start, p.end, p.pairs_processed, p.stop);
    }
    println!();
    println!("{}", serde_json::to_string_pretty(&stats).expect("serializable"));
    Ok(())
}
