//! The planar estimators on the C-shaped scene as its arms get thinner.
//!
//! `cargo run --example planar_separation`

use convex_components::gallery::{make_c, regime_search_c};

fn main() -> convex_components::Result<()> {
    println!("{:>6} {:>6} {:>6} {:>7} {:>6}", "h/l", "basic", "cglp", "planar", "upper");
    for t in [0.05, 0.1, 0.13, 0.15, 0.2, 0.3] {
        let r = make_c(1.0, t)?.report()?;
        println!(
            "{t:>6} {:>6} {:>6} {:>7} {:>6}",
            r.basic,
            r.cglp_planar.unwrap_or(0),
            r.planar_main.unwrap_or(0),
            r.upper.map(|u| u.to_string()).unwrap_or_default()
        );
    }
    let interval = regime_search_c(10_000)?;
    println!("planar bound reaches 3 while the diameter variant stays at 2 for h/l in [{:.6}, {:.6}]", interval.lo, interval.hi);
    Ok(())
}
