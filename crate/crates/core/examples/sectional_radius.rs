//! Sections of a body by parallel hyperplanes and the maximal sectional radius.
//!
//! `cargo run --example sectional_radius`

use convex_components::bounds::omega;
use convex_components::{ConvexPolytope, Direction, Point};

fn main() -> convex_components::Result<()> {
    // Square pyramid: base [-1,1]^2 at z = 0, apex at height 2.
    let pts = [
        Point::xyz(-1.0, -1.0, 0.0),
        Point::xyz(1.0, -1.0, 0.0),
        Point::xyz(1.0, 1.0, 0.0),
        Point::xyz(-1.0, 1.0, 0.0),
        Point::xyz(0.0, 0.0, 2.0),
    ];
    let p = ConvexPolytope::hull(&pts, 3)?;
    let up = Direction::axis(3, 2, 1.0);
    for t in [0.0, 0.5, 1.0, 1.5] {
        let area = p.section_measure(&up, t);
        println!("z = {t:<4} section area {area:.4}  radius {:.4}", (area / omega(2)).sqrt());
    }
    let (t, area) = p.max_section(&up);
    println!("largest section at z = {t:.4} with area {area:.4}");
    println!("maximal sectional radius along z: {:.6}", p.max_sectional_radius(&up));
    let side = Direction::new(&[1.0, 1.0, 0.0])?;
    println!("maximal sectional radius along (1,1,0): {:.6}", p.max_sectional_radius(&side));
    Ok(())
}
