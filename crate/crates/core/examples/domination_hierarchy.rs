//! The nested dominating sets behind the search, level by level, plus the
//! distance bounds they guarantee.
//!
//! Usage: `domination_hierarchy [k] [ratio]`

use hypdom::domination::{derive_sequence, hierarchical_dominating_set, hierarchy_check};
use hypdom::generators::gen_grid_perturbed;
use hypdom::hyperbolicity::{bound_lemmas_check, lemma_sandwich_check};

fn main() -> hypdom::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: u32 = args.next().map_or(6, |a| a.parse().expect("k"));
    let ratio: f64 = args.next().map_or(2.0, |a| a.parse().expect("ratio"));

    let g = gen_grid_perturbed(30, 0.1, 3)?;
    let seq = derive_sequence(k, ratio)?;
    println!("sequence {:?} on n={}", seq.radii(), g.n());

    let h = hierarchical_dominating_set(&g, &seq);
    for s in h.summary() {
        println!("level {} k={:<3} dominators {:>5}  radius histogram {:?}", s.level, s.k, s.dominators, s.radius_histogram);
    }

    let report = hierarchy_check(&g, &h);
    println!("structure: {}", if report.is_ok() { "ok" } else { "BROKEN" });
    for v in report.violations.iter().take(5) {
        println!("  {v}");
    }
    for (name, r) in [
        ("sandwich", lemma_sandwich_check(&g, &h, 20_000, 1)),
        ("pruning bounds", bound_lemmas_check(&g, &h, 5_000, 1)),
    ] {
        println!("{name}: {} checks, {} violations", r.checked, r.violation_count);
    }
    Ok(())
}
