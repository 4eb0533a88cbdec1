//! Boundary of a product `E x [0, l]^(n-2)` from the base alone, checked
//! against an explicit extrusion in 3D.
//!
//! `cargo run --example coarea_product`

use convex_components::union::extrude;
use convex_components::{ConvexPolytope, ProductSolid, SolidUnion};

fn main() -> convex_components::Result<()> {
    let base = SolidUnion::new(
        "L",
        vec![
            ConvexPolytope::cuboid(&[0.0, 0.0], &[3.0, 1.0])?,
            ConvexPolytope::cuboid(&[0.0, 0.0], &[1.0, 3.0])?,
        ],
    )?;
    let (perimeter, area) = (base.boundary_measure()?, base.enclosed_volume()?);
    let edge = 2.0;
    let formula = ProductSolid::new(perimeter, area, edge, 3)?;
    let prism = extrude(&base, edge)?;
    println!("product formula   boundary {:.6} volume {:.6}", formula.boundary_measure(), formula.volume());
    println!("extruded kernel   boundary {:.6} volume {:.6}", prism.boundary_measure()?, prism.enclosed_volume()?);
    for n in 4..=6 {
        let p = ProductSolid::new(perimeter, area, edge, n)?;
        println!("n = {n}: boundary {:.4}", p.boundary_measure());
    }
    Ok(())
}
