//! Builds 2-hop hub labels on a perturbed grid and compares a few queries
//! with BFS.

use hypdom::generators::gen_grid_perturbed;
use hypdom::graph::bfs_distances;
use hypdom::labeling::{build_hub_labels, LabelOrdering};

fn main() -> hypdom::Result<()> {
    let g = gen_grid_perturbed(40, 0.1, 7)?;
    let labels = build_hub_labels(&g, &LabelOrdering::DegreeDescending)?;
    let s = labels.stats();
    println!("n={} m={}", g.n(), g.m());
    println!("label entries {} (mean {:.1}, max {})", s.total_entries, s.mean_size, s.max_size);
    println!("first hubs: {:?}", &labels.order[..8]);

    let n = g.n() as u32;
    for u in [0, n / 3, n - 1] {
        let bfs = bfs_distances(&g, u);
        let wrong = (0..n).filter(|&v| labels.query_distance(u, v) != bfs[v as usize]).count();
        println!("from {u:>5}: label size {:>3}, {wrong} disagreements with BFS", labels.label_len(u));
    }
    Ok(())
}
