//! Nested Hausdorff distance, its witness half-space and the deficit it forces.
//!
//! `cargo run --example hausdorff_witness`

use convex_components::bounds::{omega, quantitative_deficit_lb};
use convex_components::geometry::{hausdorff_distance_nested, witness_halfspace};
use convex_components::{ConvexPolytope, Direction, HalfSpace, Point};

fn main() -> convex_components::Result<()> {
    let outer = ConvexPolytope::cuboid(&[0.0, 0.0], &[4.0, 2.0])?;
    // Cut off everything right of x = 3.
    let inner = outer.clip(&HalfSpace::through(&Point::xy(3.0, 0.0), Direction::axis(2, 0, -1.0)))?;

    let pair = hausdorff_distance_nested(&inner, &outer)?;
    println!("h(inner, outer) = {}", pair.distance);
    println!("attained from b = {:?} to a = {:?}", pair.b.coords(), pair.a.coords());

    let h = witness_halfspace(&pair.a, &pair.b)?;
    println!("witness half-space: normal {:?}, offset {}", h.normal.components(), h.offset);

    let section = outer.section_measure(&h.normal, h.offset);
    let r = section / omega(1);
    let deficit = outer.surface_measure() - inner.surface_measure();
    let lb = quantitative_deficit_lb(r, pair.distance, 2);
    println!("perimeter deficit {deficit:.6} >= lower bound {lb:.6}");
    Ok(())
}
