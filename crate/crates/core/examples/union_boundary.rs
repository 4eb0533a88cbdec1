//! Boundary measure of a union of convex pieces, checked by Monte-Carlo.
//!
//! `cargo run --release --example union_boundary`

use convex_components::{ConvexPolytope, SolidUnion};

fn main() -> convex_components::Result<()> {
    // A plus sign made of two overlapping bars.
    let u = SolidUnion::new(
        "plus",
        vec![
            ConvexPolytope::cuboid(&[-3.0, -1.0], &[3.0, 1.0])?,
            ConvexPolytope::cuboid(&[-1.0, -3.0], &[1.0, 3.0])?,
        ],
    )?;
    let exact = u.boundary_measure()?;
    println!("boundary length   {exact}");
    println!("enclosed area     {}", u.enclosed_volume()?);
    println!("hull perimeter    {:.6}", u.hull()?.surface_measure());
    println!("connected pieces  {}", u.connected_component_count());
    for f in u.boundary_fragments()? {
        println!("  component {} facet {} length {}", f.component, f.facet, f.measure);
    }
    let mc = u.monte_carlo_boundary_measure(200_000, 1)?;
    println!("Monte-Carlo       {:.4} +- {:.4} (z = {:.2})", mc.estimate, mc.stderr, (mc.estimate - exact).abs() / mc.stderr);
    Ok(())
}
