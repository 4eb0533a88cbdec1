mod common;

use approx::assert_relative_eq;
use convex_components::bounds::{
    auxiliary, basic_lower_bound, cglp_planar_ratio, main_summand, omega, planar_ratio, quantitative_deficit_lb,
};
use convex_components::geometry::{hausdorff_distance_nested, witness_halfspace};
use convex_components::{ConvexPolytope, Point};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn xy(p: &Point) -> (f64, f64) {
    (p.coords()[0], p.coords()[1])
}

/// Boundary ring of a 2D polytope, ordered by angle about the vertex mean.
fn ring(p: &ConvexPolytope) -> Vec<(f64, f64)> {
    let mut v: Vec<(f64, f64)> = p.vertices().iter().map(xy).collect();
    let n = v.len() as f64;
    let c = (v.iter().map(|q| q.0).sum::<f64>() / n, v.iter().map(|q| q.1).sum::<f64>() / n);
    v.sort_by(|a, b| (a.1 - c.1).atan2(a.0 - c.0).total_cmp(&(b.1 - c.1).atan2(b.0 - c.0)));
    v
}

fn segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let t = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
    ((p.0 - a.0 - t * dx).powi(2) + (p.1 - a.1 - t * dy).powi(2)).sqrt()
}

/// Distance from `p` to a convex polygon given as a CCW ring, by brute force.
fn polygon_distance(p: (f64, f64), r: &[(f64, f64)]) -> f64 {
    let n = r.len();
    let inside = (0..n).all(|i| {
        let (a, b) = (r[i], r[(i + 1) % n]);
        (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0) >= 0.0
    });
    if inside {
        return 0.0;
    }
    (0..n).map(|i| segment_distance(p, r[i], r[(i + 1) % n])).fold(f64::INFINITY, f64::min)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_measures_match_shoelace(seed in any::<u64>()) {
        let p = common::random_polytope(&mut rng(seed), 2);
        let r = ring(&p);
        let n = r.len();
        let area: f64 = (0..n).map(|i| r[i].0 * r[(i + 1) % n].1 - r[(i + 1) % n].0 * r[i].1).sum::<f64>() / 2.0;
        let perim: f64 = (0..n).map(|i| (r[(i + 1) % n].0 - r[i].0).hypot(r[(i + 1) % n].1 - r[i].1)).sum();
        prop_assert!((p.volume() - area).abs() < 1e-10);
        prop_assert!((p.surface_measure() - perim).abs() < 1e-10);
    }

    #[test]
    fn hull_contains_its_inputs(seed in any::<u64>(), dim in 2usize..=3) {
        let mut g = rng(seed);
        let pts: Vec<Point> = (0..12).map(|_| common::random_point(&mut g, dim, 1.0)).collect();
        let h = ConvexPolytope::hull(&pts, dim).unwrap();
        for q in &pts {
            prop_assert!(h.depth(q) >= -1e-9);
        }
        for v in h.vertices() {
            prop_assert!(pts.iter().any(|q| q.distance(&v) < 1e-12));
        }
    }

    #[test]
    fn diameter_is_the_largest_vertex_distance(seed in any::<u64>(), dim in 2usize..=3) {
        let p = common::random_polytope(&mut rng(seed), dim);
        let v = p.vertices();
        let brute = v.iter().flat_map(|a| v.iter().map(move |b| a.distance(b))).fold(0.0, f64::max);
        prop_assert!((p.diameter() - brute).abs() < 1e-12);
    }

    #[test]
    fn nested_hausdorff_matches_sampling(seed in any::<u64>()) {
        let mut g = rng(seed);
        let outer = common::random_polytope(&mut g, 2);
        let inner = common::random_nested(&mut g, &outer);
        let pair = hausdorff_distance_nested(&inner, &outer).unwrap();
        let r = ring(&inner);
        // Vertices plus random interior points of the outer body.
        let mut sampled = outer.vertices().iter().map(|v| polygon_distance(xy(v), &r)).fold(0.0, f64::max);
        for _ in 0..200 {
            sampled = sampled.max(polygon_distance(xy(&common::random_inside(&mut g, &outer)), &r));
        }
        prop_assert!((pair.distance - sampled).abs() < 1e-9, "{} vs {}", pair.distance, sampled);
        prop_assert!((pair.a.distance(&pair.b) - pair.distance).abs() < 1e-9);
        if pair.distance > 1e-9 {
            let h = witness_halfspace(&pair.a, &pair.b).unwrap();
            prop_assert!(h.depth(&pair.b) < 0.0);
            for v in inner.vertices() {
                prop_assert!(h.depth(&v) >= -1e-9);
            }
        }
    }

    #[test]
    fn main_summand_is_increasing_in_alpha(a in 0.01f64..0.98, da in 0.001f64..0.01, rho in 0.01f64..5.0, n in 2usize..=5) {
        let beta = if n == 2 { 0.0 } else { 0.5 };
        prop_assert!(main_summand(n, 3.0, a + da, beta, rho) > main_summand(n, 3.0, a, beta, rho));
    }

    #[test]
    fn auxiliary_is_increasing_and_below_s(s in 0.001f64..10.0, ds in 0.001f64..1.0, c in 0.001f64..10.0) {
        prop_assert!(auxiliary(s + ds, c) > auxiliary(s, c));
        prop_assert!(auxiliary(s, c) < s);
        prop_assert!(auxiliary(s, c) <= s * s / (2.0 * c) + 1e-12);
    }

    #[test]
    fn planar_dominates_the_diameter_variant(
        e in 1.0f64..50.0, grow in 1.0f64..3.0, diam in 0.5f64..10.0, alpha in 0.01f64..0.99,
        fracs in proptest::collection::vec(0.01f64..=1.0, 1..4),
    ) {
        let hull = e / grow;
        let rhos: Vec<f64> = fracs.iter().map(|f| f * diam / 2.0).collect();
        let planar = planar_ratio(e, hull, diam, alpha, &rhos).unwrap();
        let cglp = cglp_planar_ratio(e, hull, diam, alpha, rhos.len()).unwrap();
        prop_assert!(planar >= cglp - 1e-12);
        // Closed form of the diameter variant.
        let a2 = alpha * alpha;
        let want = (e + rhos.len() as f64 * 4.0 * a2 * diam / (1.0 + (1.0 + 4.0 * a2).sqrt())) / hull;
        prop_assert!((cglp - want).abs() <= 1e-12 * want);
    }

    #[test]
    fn basic_bound_is_the_ceiling(e in 0.1f64..100.0, hull in 0.1f64..100.0) {
        let k = basic_lower_bound(e, hull).unwrap() as f64;
        prop_assert!(k >= e / hull - 1e-9 && k < e / hull + 1.0);
    }
}

#[test]
fn quantitative_deficit_in_the_plane_is_the_triangle_excess() {
    // Isosceles cap of half-width r and height h over a chord of length 2r.
    let (r, h) = (1.5_f64, 0.4);
    let excess = 2.0 * (r * r + h * h).sqrt() - 2.0 * r;
    assert_relative_eq!(quantitative_deficit_lb(r, h, 2), excess, max_relative = 1e-12);
    assert_eq!(quantitative_deficit_lb(r, 0.0, 3), 0.0);
    assert_relative_eq!(omega(5), 8.0 * std::f64::consts::PI.powi(2) / 15.0, max_relative = 1e-14);
}
