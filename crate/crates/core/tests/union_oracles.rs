mod common;

use std::collections::HashSet;

use convex_components::union::extrude;
use convex_components::{ConvexPolytope, SolidUnion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Cell = [i32; 3];

/// Random boxes with integer corners in `[0, 6]^dim`.
fn integer_boxes(rng: &mut ChaCha8Rng, dim: usize) -> Vec<(Vec<i32>, Vec<i32>)> {
    let k = rng.gen_range(1..=4);
    (0..k)
        .map(|_| {
            let lo: Vec<i32> = (0..dim).map(|_| rng.gen_range(0..5)).collect();
            let hi: Vec<i32> = lo.iter().map(|&l| rng.gen_range(l + 1..=6)).collect();
            (lo, hi)
        })
        .collect()
}

fn cells(boxes: &[(Vec<i32>, Vec<i32>)], dim: usize) -> HashSet<Cell> {
    let mut set = HashSet::new();
    for (lo, hi) in boxes {
        let z = if dim == 3 { lo[2]..hi[2] } else { 0..1 };
        for x in lo[0]..hi[0] {
            for y in lo[1]..hi[1] {
                for w in z.clone() {
                    set.insert([x, y, w]);
                }
            }
        }
    }
    set
}

/// Unit faces (edges in 2D) separating an occupied cell from an empty one.
fn voxel_boundary(set: &HashSet<Cell>, dim: usize) -> usize {
    let mut count = 0;
    for c in set {
        for axis in 0..dim {
            for step in [-1, 1] {
                let mut n = *c;
                n[axis] += step;
                count += usize::from(!set.contains(&n));
            }
        }
    }
    count
}

fn to_union(boxes: &[(Vec<i32>, Vec<i32>)]) -> SolidUnion {
    let comps = boxes
        .iter()
        .map(|(lo, hi)| {
            let lo: Vec<f64> = lo.iter().map(|&v| v as f64).collect();
            let hi: Vec<f64> = hi.iter().map(|&v| v as f64).collect();
            ConvexPolytope::cuboid(&lo, &hi).unwrap()
        })
        .collect();
    SolidUnion::new("boxes", comps).unwrap()
}

#[test]
fn box_unions_match_voxel_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for dim in [2, 3] {
        for _ in 0..60 {
            let boxes = integer_boxes(&mut rng, dim);
            let set = cells(&boxes, dim);
            let u = to_union(&boxes);
            let b = u.boundary_measure().unwrap();
            assert!((b - voxel_boundary(&set, dim) as f64).abs() < 1e-9, "{boxes:?}: {b}");
            assert!((u.enclosed_volume().unwrap() - set.len() as f64).abs() < 1e-9);
        }
    }
}

#[test]
fn boundary_fragments_sum_to_the_measure() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let u = common::random_planar_union(&mut rng);
        let frags = u.boundary_fragments().unwrap();
        let total: f64 = frags.iter().map(|f| f.measure).sum();
        assert!((total - u.boundary_measure().unwrap()).abs() < 1e-9);
        // Every fragment lies on the boundary: just outside along its normal is outside.
        for f in &frags {
            let c = f.centroid();
            let n = f.normal.components();
            let out = convex_components::Point::xy(c.coords()[0] + 1e-6 * n[0], c.coords()[1] + 1e-6 * n[1]);
            assert!(!u.contains(&out));
        }
    }
}

#[test]
fn union_boundary_never_exceeds_the_component_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let u = common::random_planar_union(&mut rng);
        let sum: f64 = u.components().iter().map(|c| c.surface_measure()).sum();
        assert!(u.boundary_measure().unwrap() <= sum + 1e-9);
        let hull = u.hull().unwrap();
        if u.connected_component_count() == 1 {
            assert!(hull.surface_measure() <= u.boundary_measure().unwrap() + 1e-9);
        }
    }
}

#[test]
fn monte_carlo_tracks_random_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for seed in 0..6 {
        let u = common::random_planar_union(&mut rng);
        let exact = u.boundary_measure().unwrap();
        let mc = u.monte_carlo_boundary_measure(200_000, seed).unwrap();
        assert!((mc.estimate - exact).abs() <= 4.5 * mc.stderr.max(1e-12), "{} vs {exact}", mc.estimate);
    }
}

#[test]
fn extrusion_of_a_unit_square() {
    let sq = SolidUnion::new("sq", vec![ConvexPolytope::cuboid(&[0.0, 0.0], &[1.0, 1.0]).unwrap()]).unwrap();
    let prism = extrude(&sq, 2.0).unwrap();
    assert!((prism.boundary_measure().unwrap() - 10.0).abs() < 1e-12);
    assert!((prism.enclosed_volume().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn scene_json_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let u = common::random_planar_union(&mut rng);
    let json = serde_json::to_string(&u.to_json(&[])).unwrap();
    let back = SolidUnion::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back.components().len(), u.components().len());
    assert!((back.boundary_measure().unwrap() - u.boundary_measure().unwrap()).abs() < 1e-12);
}
