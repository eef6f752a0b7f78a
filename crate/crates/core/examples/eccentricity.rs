//! All eccentricities with far fewer than n BFS runs on graphs with a small
//! radius-to-diameter gap.

use hypdom::eccentricity::compute_all_eccentricities;
use hypdom::generators::{gen_cycle, gen_grid, gen_grid_perturbed, gen_tree};

fn main() -> hypdom::Result<()> {
    let graphs = [
        ("cycle 500", gen_cycle(500)?),
        ("grid 40x40", gen_grid(40, 40)?),
        ("perturbed grid 40", gen_grid_perturbed(40, 0.1, 1)?),
        ("tree 2000", gen_tree(2000, 1)?),
    ];
    for (name, g) in &graphs {
        let t = compute_all_eccentricities(g);
        println!(
            "{name:<18} n={:<5} radius {:<3} mean {:<7.2} diameter {:<3} center {:<5} BFS runs {}",
            g.n(),
            t.radius,
            t.mean(),
            t.diameter,
            t.central_vertex,
            t.bfs_runs
        );
    }
    Ok(())
}
