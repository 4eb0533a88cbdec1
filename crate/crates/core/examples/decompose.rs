//! Greedy convex decomposition of a planar union, giving an upper bound.
//!
//! `cargo run --example decompose`

use convex_components::decomposer::{greedy_convex_decomposition, sandwich, to_simple_polygon};
use convex_components::gallery::make_c;

fn main() -> convex_components::Result<()> {
    let scene = make_c(1.0, 0.15)?;
    let union = scene.kernel.as_ref().expect("C is planar");
    let poly = to_simple_polygon(union)?;
    println!("boundary polygon: {} vertices, {} reflex", poly.vertices().len(), poly.reflex_count());
    let pieces = greedy_convex_decomposition(&poly)?;
    for (i, p) in pieces.iter().enumerate() {
        println!("piece {i}: {} vertices, area {:.4}", p.num_vertices(), p.volume());
    }
    let report = sandwich(union, scene.report()?)?;
    println!("lower {} <= k_min <= upper {}", report.best_lower(), report.upper.unwrap_or(0));
    Ok(())
}
