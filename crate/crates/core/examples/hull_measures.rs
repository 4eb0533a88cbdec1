//! Convex hull of a point cloud and its basic measures.
//!
//! `cargo run --example hull_measures`

use convex_components::{ConvexPolytope, Point};

fn main() -> convex_components::Result<()> {
    // A unit cube plus one point above the top face.
    let mut pts = Vec::new();
    for x in [0.0, 1.0] {
        for y in [0.0, 1.0] {
            for z in [0.0, 1.0] {
                pts.push(Point::xyz(x, y, z));
            }
        }
    }
    pts.push(Point::xyz(0.5, 0.5, 1.5));
    pts.push(Point::xyz(0.5, 0.5, 0.5)); // interior, dropped by the hull

    let hull = ConvexPolytope::hull(&pts, 3)?;
    println!("vertices : {}", hull.num_vertices());
    println!("facets   : {}", hull.facets().len());
    println!("surface  : {:.6}", hull.surface_measure());
    println!("volume   : {:.6}", hull.volume());
    println!("diameter : {:.6}", hull.diameter());

    let square = ConvexPolytope::polygon(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)])?;
    println!("rectangle perimeter {} area {}", square.surface_measure(), square.volume());
    Ok(())
}
