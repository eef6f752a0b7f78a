//! Loads an edge list, keeps its largest biconnected component and computes
//! δ there. The witness is reported with the file's own vertex labels.
//!
//! Usage: `load_and_bcc [path]`. Without a path a small built-in graph is
//! used: two 6-cycles joined through a pendant path.

use std::io::Cursor;

use hypdom::graph::{largest_biconnected_component, load_edge_list, read_edge_list_file, EdgeListFormat};
use hypdom::hyperbolicity::hyperbolicity;

const BUILTIN: &str = "\
# two hexagons and a tail
10 11\n11 12\n12 13\n13 14\n14 15\n15 10
15 20\n20 21
21 30\n30 31\n31 32\n32 33\n33 34\n34 35\n35 36\n36 37\n37 21
";

fn main() -> hypdom::Result<()> {
    let loaded = match std::env::args().nth(1) {
        Some(path) => read_edge_list_file(path.as_ref(), EdgeListFormat::EdgeList)?,
        None => load_edge_list(Cursor::new(BUILTIN), EdgeListFormat::EdgeList)?,
    };
    println!(
        "loaded n={} m={} (self-loops dropped: {}, duplicate edges dropped: {})",
        loaded.graph.n(),
        loaded.graph.m(),
        loaded.self_loops,
        loaded.duplicate_edges
    );

    let (bcc, map) = largest_biconnected_component(&loaded.graph)?;
    println!("largest biconnected component: n={} m={}", bcc.n(), bcc.m());

    let res = hyperbolicity(&bcc, 2, 2.0)?;
    let witness: Vec<u64> = res.witness.iter().map(|&v| loaded.original_ids[map[v as usize] as usize]).collect();
    println!("hyperbolicity: {}", res.delta);
    println!("witness: {witness:?}");
    Ok(())
}
