//! Hyperbolicity of cycles and grids next to their closed forms.
//!
//! A cycle on `4p + e` vertices has δ = p - ½ when e = 1 and p otherwise; an
//! `a x b` grid has δ = min(a, b) - 1.

use hypdom::generators::{gen_cycle, gen_grid};
use hypdom::hyperbolicity::hyperbolicity;

fn main() -> hypdom::Result<()> {
    println!("{:>8} {:>8} {:>8}", "cycle", "delta", "expected");
    for n in [5, 8, 12, 13, 17, 30, 101] {
        let res = hyperbolicity(&gen_cycle(n)?, 2, 2.0)?;
        let p = (n / 4) as f64;
        let want = if n % 4 == 1 { p - 0.5 } else { p };
        println!("{n:>8} {:>8} {want:>8.1}", res.delta);
    }

    println!();
    println!("{:>8} {:>8} {:>8}", "grid", "delta", "expected");
    for (a, b) in [(3, 3), (3, 10), (6, 6), (10, 15), (20, 20)] {
        let res = hyperbolicity(&gen_grid(a, b)?, 2, 2.0)?;
        println!("{:>8} {:>8} {:>8.1}", format!("{a}x{b}"), res.delta, (a.min(b) - 1) as f64);
    }
    Ok(())
}
