//! The LRU cache of rectangular distance matrices between dominator cells.

use hypdom::cache::{Fetched, MatrixCache, MatrixKey};
use hypdom::generators::gen_grid;
use hypdom::labeling::{build_hub_labels, LabelOrdering};

fn main() -> hypdom::Result<()> {
    let g = gen_grid(10, 10)?;
    let labels = build_hub_labels(&g, &LabelOrdering::DegreeDescending)?;
    let rows: Vec<u32> = (0..10).collect();
    let cols: Vec<u32> = (90..100).collect();

    let mut cache = MatrixCache::new(8, 50);
    for round in 0..2 {
        let order: Vec<u32> = if round == 0 { (0..10).collect() } else { (0..10).rev().collect() };
        for b in order {
            let key = MatrixKey { level: 1, a: 0, b };
            if let Fetched::Matrix(m) = cache.get_matrix(key, &rows, &cols, &labels) {
                if round == 0 && b == 0 {
                    println!("d(row 0, col 0) = {}, d(row 0, col 9) = {}", m.get(0, 0), m.get(0, 9));
                }
            }
        }
        println!("after round {round}: {} resident, {:?}", cache.len(), cache.stats());
    }

    let mut narrow = MatrixCache::new(8, 5);
    let fetched = narrow.get_matrix(MatrixKey { level: 1, a: 0, b: 1 }, &rows, &cols, &labels);
    println!("side limit 5 on a 10x10 block: bypassed = {}", matches!(fetched, Fetched::Bypass));
    Ok(())
}
