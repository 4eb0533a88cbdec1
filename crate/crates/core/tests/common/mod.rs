#![allow(dead_code)]

use convex_components::{ConvexPolytope, Direction, HalfSpace, Point, SolidUnion};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_point(rng: &mut ChaCha8Rng, dim: usize, half: f64) -> Point {
    Point::new((0..dim).map(|_| rng.gen_range(-half..half)).collect()).unwrap()
}

pub fn random_direction(rng: &mut ChaCha8Rng, dim: usize) -> Direction {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n2: f64 = v.iter().map(|x| x * x).sum();
        if n2 > 1e-4 && n2 <= 1.0 {
            return Direction::new(&v).unwrap();
        }
    }
}

/// Hull of a random point cloud in `[-1, 1]^dim`, retried until full-dimensional.
pub fn random_polytope(rng: &mut ChaCha8Rng, dim: usize) -> ConvexPolytope {
    loop {
        let k = rng.gen_range(dim + 1..=dim * 6 + 2);
        let pts: Vec<Point> = (0..k).map(|_| random_point(rng, dim, 1.0)).collect();
        if let Ok(p) = ConvexPolytope::hull(&pts, dim) {
            if p.volume() > 1e-3 {
                return p;
            }
        }
    }
}

/// Random convex combination of the vertices of `p`.
pub fn random_inside(rng: &mut ChaCha8Rng, p: &ConvexPolytope) -> Point {
    let verts = p.vertices();
    let w: Vec<f64> = verts.iter().map(|_| rng.gen::<f64>().powi(3)).collect();
    let total: f64 = w.iter().sum();
    let dim = p.dim();
    let coords: Vec<f64> = (0..dim)
        .map(|i| verts.iter().zip(&w).map(|(v, wi)| v.coords()[i] * wi).sum::<f64>() / total)
        .collect();
    Point::new(coords).unwrap()
}

/// A convex body nested in `outer`: either a hull of interior points or a
/// half-space cut of `outer`.
pub fn random_nested(rng: &mut ChaCha8Rng, outer: &ConvexPolytope) -> ConvexPolytope {
    let dim = outer.dim();
    loop {
        let candidate = if rng.gen_bool(0.5) {
            let k = rng.gen_range(dim + 1..=dim * 4 + 2);
            let pts: Vec<Point> = (0..k).map(|_| random_inside(rng, outer)).collect();
            ConvexPolytope::hull(&pts, dim)
        } else {
            let through = random_inside(rng, outer);
            outer.clip(&HalfSpace::through(&through, random_direction(rng, dim)))
        };
        if let Ok(c) = candidate {
            if c.volume() > 1e-4 {
                return c;
            }
        }
    }
}

/// Union of one to three random planar pieces (boxes or hulls), overlapping or not.
pub fn random_planar_union(rng: &mut ChaCha8Rng) -> SolidUnion {
    let k = rng.gen_range(1..=3);
    let comps = (0..k)
        .map(|_| {
            let (cx, cy) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if rng.gen_bool(0.5) {
                let (w, h) = (rng.gen_range(0.2..1.5), rng.gen_range(0.2..1.5));
                ConvexPolytope::cuboid(&[cx, cy], &[cx + w, cy + h]).unwrap()
            } else {
                let p = random_polytope(rng, 2);
                let shifted: Vec<Point> =
                    p.vertices().iter().map(|v| Point::xy(v.coords()[0] + cx, v.coords()[1] + cy)).collect();
                ConvexPolytope::hull(&shifted, 2).unwrap()
            }
        })
        .collect();
    SolidUnion::new("random", comps).unwrap()
}

