//! Convex geometry kernel for `n = 2, 3`.

mod hull;
mod point;
mod polytope;

pub(crate) use point::V3;
pub use point::{Direction, HalfSpace, Point};
pub use polytope::{ConvexPolytope, Facet, PolytopeJson};

use crate::error::{Error, Result};

/// Snapping tolerance for geometric predicates, relative to coordinate extent.
pub const SNAP: f64 = 1e-9;

/// Smallest convex set containing `points`.
pub fn convex_hull(points: &[Point], dim: usize) -> Result<ConvexPolytope> {
    ConvexPolytope::hull(points, dim)
}

/// Euclidean distance from `x` to `body`.
pub fn distance_to_body(body: &ConvexPolytope, x: &Point) -> f64 {
    body.distance_to(x)
}

/// Hausdorff distance realization for nested bodies `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq)]
pub struct HausdorffPair {
    pub distance: f64,
    /// Projection of `b` onto the inner body.
    pub a: Point,
    /// Vertex of the outer body farthest from the inner body.
    pub b: Point,
}

/// `h(inner, outer) = max_{b in outer} dist(inner, b)`, attained at a vertex of
/// `outer` because the distance to a convex set is convex. Among vertices
/// attaining the maximum, the lexicographically smallest is returned.
pub fn hausdorff_distance_nested(inner: &ConvexPolytope, outer: &ConvexPolytope) -> Result<HausdorffPair> {
    if inner.dim() != outer.dim() {
        return Err(Error::InvalidInput("bodies differ in dimension".into()));
    }
    let tol = inner.tolerance().max(outer.tolerance());
    for (i, v) in inner.vertices().iter().enumerate() {
        let depth = outer.depth(v);
        if depth < -tol {
            return Err(Error::NotNested { vertex: i, excess: -depth });
        }
    }
    let tie = 1e-12 * outer.diameter().max(1.0);
    let mut best: Option<HausdorffPair> = None;
    for b in outer.vertices() {
        let (d, a) = inner.closest_point(&b);
        let replace = match &best {
            None => true,
            Some(cur) if d > cur.distance + tie => true,
            Some(cur) if (d - cur.distance).abs() <= tie => b.lex_cmp(&cur.b).is_lt(),
            _ => false,
        };
        if replace {
            best = Some(HausdorffPair { distance: d, a, b });
        }
    }
    Ok(best.expect("polytope has vertices"))
}

/// Half-space through `a` with inward normal `(a - b)/|a - b|`; `b` lies
/// strictly outside.
pub fn witness_halfspace(a: &Point, b: &Point) -> Result<HalfSpace> {
    let gap = a.distance(b);
    if gap < 1e-12 {
        return Err(Error::DegeneratePair(gap));
    }
    let diff: Vec<f64> = a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect();
    let normal = Direction::new(&diff)?;
    Ok(HalfSpace::through(a, normal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn square() -> ConvexPolytope {
        ConvexPolytope::cuboid(&[0.0, 0.0], &[1.0, 1.0]).unwrap()
    }

    fn cube() -> ConvexPolytope {
        ConvexPolytope::cuboid(&[0.0; 3], &[1.0; 3]).unwrap()
    }

    #[test]
    fn hull_drops_interior_points() {
        let pts = vec![
            Point::xy(0.0, 0.0),
            Point::xy(1.0, 0.0),
            Point::xy(1.0, 1.0),
            Point::xy(0.0, 1.0),
            Point::xy(0.5, 0.5),
            Point::xy(0.5, 0.0),
        ];
        let p = convex_hull(&pts, 2).unwrap();
        assert_eq!(p.num_vertices(), 4);
        assert_relative_eq!(p.surface_measure(), 4.0);
        assert_relative_eq!(p.volume(), 1.0);
    }

    #[test]
    fn cube_measures() {
        let c = cube();
        assert_eq!(c.num_vertices(), 8);
        assert_eq!(c.facets().len(), 6);
        assert_relative_eq!(c.surface_measure(), 6.0, epsilon = 1e-12);
        assert_relative_eq!(c.volume(), 1.0, epsilon = 1e-12);
        assert!(c.minkowski_residual() < 1e-8);
        assert_relative_eq!(c.diameter(), 3.0_f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn cube_with_redundant_points() {
        let mut pts = cube().vertices();
        pts.push(Point::xyz(0.5, 0.5, 0.5));
        pts.push(Point::xyz(0.5, 0.0, 0.0));
        pts.push(Point::xyz(0.5, 0.5, 1.0));
        pts.push(Point::xyz(1.0, 1.0, 1.0));
        let c = convex_hull(&pts, 3).unwrap();
        assert_eq!(c.num_vertices(), 8);
        assert_eq!(c.facets().len(), 6);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let flat = vec![Point::xy(0.0, 0.0), Point::xy(1.0, 1.0), Point::xy(2.0, 2.0)];
        assert!(matches!(convex_hull(&flat, 2), Err(Error::DegenerateInput(_))));
        let planar = vec![
            Point::xyz(0.0, 0.0, 0.0),
            Point::xyz(1.0, 0.0, 0.0),
            Point::xyz(0.0, 1.0, 0.0),
            Point::xyz(1.0, 1.0, 0.0),
        ];
        assert!(matches!(convex_hull(&planar, 3), Err(Error::DegenerateInput(_))));
        assert!(matches!(convex_hull(&flat[..2], 2), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn every_vertex_satisfies_every_facet() {
        let c = ConvexPolytope::prism(&[(0.0, 0.0), (3.0, 0.5), (2.0, 2.0), (-1.0, 1.5)], 0.0, 1.0).unwrap();
        for v in c.vertices() {
            for f in c.facets() {
                assert!(f.normal.dot(&v) <= f.offset + 1e-9);
            }
        }
        let total: f64 = c.facets().iter().map(|f| f.measure).sum();
        assert_relative_eq!(total, c.surface_measure());
    }

    #[test]
    fn clip_square_and_cube() {
        let h = HalfSpace::new(Direction::axis(2, 0, -1.0), -0.5);
        let r = square().clip(&h).unwrap();
        assert_relative_eq!(r.surface_measure(), 3.0, epsilon = 1e-12);
        let h3 = HalfSpace::new(Direction::axis(3, 0, -1.0), -0.5);
        let b = cube().clip(&h3).unwrap();
        assert_relative_eq!(b.surface_measure(), 4.0, epsilon = 1e-12);
        assert!(b.surface_measure() <= cube().surface_measure());
    }

    #[test]
    fn clip_without_interior_fails() {
        let h = HalfSpace::new(Direction::axis(2, 0, 1.0), 1.0);
        assert_eq!(square().clip(&h).unwrap_err(), Error::EmptyClip);
        let h = HalfSpace::new(Direction::axis(2, 0, 1.0), 2.0);
        assert_eq!(square().clip(&h).unwrap_err(), Error::EmptyClip);
    }

    #[test]
    fn sections() {
        let e1 = Direction::axis(2, 0, 1.0);
        assert_relative_eq!(square().section_measure(&e1, 0.5), 1.0, epsilon = 1e-12);
        assert_relative_eq!(square().section_measure(&e1, 0.0), 1.0, epsilon = 1e-12);
        let e1 = Direction::axis(3, 0, 1.0);
        assert_eq!(cube().section_measure(&e1, 1.5), 0.0);
        assert_eq!(cube().section_measure(&e1, -0.1), 0.0);
        assert_relative_eq!(cube().section_measure(&e1, 0.3), 1.0, epsilon = 1e-12);
        let diag = Direction::new(&[1.0, 1.0, 1.0]).unwrap();
        // Regular hexagon through the cube center, side 1/sqrt(2).
        let hex = 3.0 * 3.0_f64.sqrt() / 2.0 * 0.5;
        assert_relative_eq!(cube().section_measure(&diag, 1.5 / 3.0_f64.sqrt()), hex, epsilon = 1e-12);
    }

    #[test]
    fn sectional_radius_of_square() {
        let e1 = Direction::axis(2, 0, 1.0);
        assert_relative_eq!(square().max_sectional_radius(&e1), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn sectional_radius_interior_maximum() {
        // Octahedron: sections orthogonal to e3 peak at the equator with area 2.
        let pts = vec![
            Point::xyz(1.0, 0.0, 0.0),
            Point::xyz(-1.0, 0.0, 0.0),
            Point::xyz(0.0, 1.0, 0.0),
            Point::xyz(0.0, -1.0, 0.0),
            Point::xyz(0.0, 0.0, 1.0),
            Point::xyz(0.0, 0.0, -1.0),
        ];
        let oct = convex_hull(&pts, 3).unwrap();
        let nu = Direction::new(&[0.0, 0.3, 1.0]).unwrap();
        let (_, m) = oct.max_section(&nu);
        // Brute-force scan of the section function.
        let (lo, hi) = oct.support_interval(&nu);
        let brute = (0..=20000)
            .map(|i| oct.section_measure(&nu, lo + (hi - lo) * i as f64 / 20000.0))
            .fold(0.0, f64::max);
        assert!(m >= brute - 1e-9);
        assert!(m <= brute + 1e-6);
    }

    #[test]
    fn distances() {
        assert_relative_eq!(square().distance_to(&Point::xy(2.0, 0.5)), 1.0, epsilon = 1e-12);
        assert_eq!(square().distance_to(&Point::xy(0.3, 0.7)), 0.0);
        assert_relative_eq!(square().distance_to(&Point::xy(2.0, 2.0)), 2.0_f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(cube().distance_to(&Point::xyz(0.5, 0.5, 3.0)), 2.0, epsilon = 1e-12);
        assert_relative_eq!(cube().distance_to(&Point::xyz(2.0, 2.0, 0.5)), 2.0_f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(cube().distance_to(&Point::xyz(2.0, 2.0, 2.0)), 3.0_f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn distance_matches_boundary_sampling() {
        // Dense sampling of the square boundary as an independent oracle.
        let x = Point::xy(2.0, 2.0);
        let n = 400_000;
        let brute = (0..n)
            .map(|i| {
                let s = 4.0 * i as f64 / n as f64;
                let (px, py) = match s as usize {
                    0 => (s, 0.0),
                    1 => (1.0, s - 1.0),
                    2 => (3.0 - s, 1.0),
                    _ => (0.0, 4.0 - s),
                };
                x.distance(&Point::xy(px, py))
            })
            .fold(f64::INFINITY, f64::min);
        assert!((square().distance_to(&x) - brute).abs() < 1e-9);
    }

    #[test]
    fn hausdorff_nested_cases() {
        let s = square();
        let same = hausdorff_distance_nested(&s, &s).unwrap();
        assert_eq!(same.distance, 0.0);
        let wide = ConvexPolytope::cuboid(&[0.0, 0.0], &[2.0, 1.0]).unwrap();
        let pair = hausdorff_distance_nested(&s, &wide).unwrap();
        assert_relative_eq!(pair.distance, 1.0, epsilon = 1e-12);
        assert_eq!(pair.b, Point::xy(2.0, 0.0));
        assert_eq!(pair.a, Point::xy(1.0, 0.0));
        assert!(matches!(
            hausdorff_distance_nested(&wide, &s),
            Err(Error::NotNested { .. })
        ));
    }

    #[test]
    fn witness_halfspaces() {
        let h = witness_halfspace(&Point::xy(1.0, 0.0), &Point::xy(2.0, 0.0)).unwrap();
        assert_eq!(h.normal.components(), vec![-1.0, 0.0]);
        assert_relative_eq!(h.offset, -1.0);
        assert!(h.contains(&Point::xy(0.5, 7.0), 0.0));
        assert!(!h.contains(&Point::xy(2.0, 0.0), 0.0));
        let h = witness_halfspace(&Point::xy(0.0, 0.0), &Point::xy(0.0, 3.0)).unwrap();
        assert_eq!(h.normal.components(), vec![0.0, -1.0]);
        assert!(h.contains(&Point::xy(5.0, -1.0), 0.0));
        assert!(matches!(
            witness_halfspace(&Point::xy(1.0, 1.0), &Point::xy(1.0, 1.0)),
            Err(Error::DegeneratePair(_))
        ));
    }

    #[test]
    fn directions_are_unit() {
        let d = Direction::new(&[3.0, 4.0]).unwrap();
        let c = d.components();
        assert!((c[0].hypot(c[1]) - 1.0).abs() < 1e-12);
        assert!(Direction::new(&[0.0, 0.0]).is_err());
        assert!(Point::new(vec![f64::NAN, 0.0]).is_err());
    }
}
