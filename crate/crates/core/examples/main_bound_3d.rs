//! Sectional-radius bound on a 3D union, assembled by hand from the kernel.
//!
//! `cargo run --example main_bound_3d`

use convex_components::bounds::{evaluate, measure_witness, SceneMeasures};
use convex_components::gallery::make_l;

fn main() -> convex_components::Result<()> {
    // Two plates glued along an edge; the ratio bound alone cannot tell it
    // from a convex body.
    let scene = make_l(10.0, 0.1)?;
    let u = scene.kernel.as_ref().expect("L is built explicitly");
    let hull = u.hull()?;
    let measures = SceneMeasures {
        dim: 3,
        boundary_e: u.boundary_measure()?,
        boundary_hull: hull.surface_measure(),
        diam: hull.diameter(),
        connected_components: u.connected_component_count(),
    };
    let pin = &scene.pins[0];
    println!("pin {:?} pushed along {:?}", pin.point.coords(), pin.normal.components());
    let w = measure_witness(&hull, &pin.point, &pin.normal)?;
    println!("gap {:.4}, section {:.4}, rho {:.4}", w.gap, w.section, w.rho);
    let report = evaluate("L", &measures, None, &[w])?;
    println!("basic {} (ratio {:.5})", report.basic, report.basic_ratio);
    println!("main  {} (ratio {:.5})", report.main, report.main_ratio);
    Ok(())
}
