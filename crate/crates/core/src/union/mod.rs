//! Compact sets given as finite unions of convex polytopes.

mod boundary;
mod monte_carlo;
mod product;

pub use boundary::BoundaryFragment;
pub use monte_carlo::{MonteCarloEstimate, MonteCarloSummary, MIN_MC_SAMPLES};
pub use product::{extrude, ProductScene, ProductSceneJson, ProductSolid};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallery::GalleryTag;
use crate::geometry::{ConvexPolytope, Direction, Point, PolytopeJson, V3};

/// A pinned boundary point with the inward normal of the half-space every
/// convex component through it must respect.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Pin {
    pub point: Point,
    pub normal: Direction,
}

/// Scene JSON: `{"name", "dim", "components": [...], "pins": [...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SceneJson {
    pub name: String,
    pub dim: usize,
    pub components: Vec<PolytopeJson>,
    #[serde(default)]
    pub pins: Vec<Pin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gallery: Option<GalleryTag>,
}

/// `E = E_1 ∪ ... ∪ E_k` with every `E_i` a convex polytope of the same dimension.
#[derive(Clone, Debug)]
pub struct SolidUnion {
    name: String,
    dim: usize,
    components: Vec<ConvexPolytope>,
}

impl SolidUnion {
    pub fn new(name: impl Into<String>, components: Vec<ConvexPolytope>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidInput("a union needs at least one component".into()));
        };
        let dim = first.dim();
        if components.iter().any(|c| c.dim() != dim) {
            return Err(Error::InvalidInput("components differ in dimension".into()));
        }
        Ok(Self { name: name.into(), dim, components })
    }

    pub fn from_json(json: &SceneJson) -> Result<Self> {
        let comps = json
            .components
            .iter()
            .map(|c| {
                if c.dim != json.dim {
                    return Err(Error::InvalidInput(format!(
                        "component of dimension {} in a scene of dimension {}",
                        c.dim, json.dim
                    )));
                }
                ConvexPolytope::from_json(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.name.clone(), comps)
    }

    pub fn to_json(&self, pins: &[Pin]) -> SceneJson {
        SceneJson {
            name: self.name.clone(),
            dim: self.dim,
            components: self.components.iter().map(ConvexPolytope::to_json).collect(),
            pins: pins.to_vec(),
            gallery: None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[ConvexPolytope] {
        &self.components
    }

    /// Convex hull of the union.
    pub fn hull(&self) -> Result<ConvexPolytope> {
        let pts: Vec<V3> = self.components.iter().flat_map(|c| c.verts_v3().iter().copied()).collect();
        ConvexPolytope::hull_v3(&pts, self.dim)
    }

    /// Membership in the closed union.
    pub fn contains(&self, x: &Point) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    /// Necessary condition for a pin: it lies in `E` on a face with `E`
    /// locally inside the half-space, so a step against `normal` leaves `E`.
    pub fn check_pin(&self, pin: &Pin) -> Result<()> {
        if pin.point.dim() != self.dim || pin.normal.dim() != self.dim {
            return Err(Error::InvalidInput(format!("pin dimension differs from scene dimension {}", self.dim)));
        }
        let eps = 1e-7 * self.extent();
        let outside: Vec<f64> =
            pin.point.coords().iter().zip(pin.normal.components()).map(|(x, n)| x - eps * n).collect();
        if !self.contains(&pin.point) || self.contains(&Point::new(outside)?) {
            return Err(Error::AssumptionViolated {
                witness: 0,
                inequality: format!("pin {:?} lies on the boundary of E with E behind its face", pin.point.coords()),
            });
        }
        Ok(())
    }

    pub(crate) fn contains_v3(&self, x: &V3) -> bool {
        self.components.iter().any(|c| c.depth_v3(x) >= -c.tolerance())
    }

    /// Largest absolute coordinate, at least 1.
    pub(crate) fn extent(&self) -> f64 {
        self.components
            .iter()
            .flat_map(|c| c.verts_v3().iter().flat_map(|v| v.iter().map(|x| x.abs())))
            .fold(1.0_f64, f64::max)
    }

    /// `H^{n-1}(∂E)`.
    pub fn boundary_measure(&self) -> Result<f64> {
        Ok(self.boundary_fragments()?.iter().map(|f| f.measure).sum())
    }

    /// `H^n(E)` from the divergence theorem over the boundary fragments.
    pub fn enclosed_volume(&self) -> Result<f64> {
        let frags = self.boundary_fragments()?;
        let total: f64 = frags.iter().map(|f| f.measure * f.normal.dot(&f.centroid())).sum();
        Ok(total / self.dim as f64)
    }

    /// Number of connected components of the overlap graph; two components
    /// are adjacent when their intersection is non-empty.
    pub fn connected_component_count(&self) -> usize {
        let k = self.components.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = i;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for i in 0..k {
            for j in i + 1..k {
                if polytopes_intersect(&self.components[i], &self.components[j]) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[rj] = ri;
                    }
                }
            }
        }
        (0..k).filter(|&i| find(&mut parent, i) == i).count()
    }
}

/// Separating-axis test: candidate axes are the facet normals of both bodies
/// and, in 3D, cross products of their edge directions. Touching counts as
/// intersecting.
pub fn polytopes_intersect(p: &ConvexPolytope, q: &ConvexPolytope) -> bool {
    let tol = p.tolerance().max(q.tolerance());
    let mut axes: Vec<V3> = p
        .facets()
        .iter()
        .chain(q.facets())
        .map(|f| f.normal.v3())
        .collect();
    if p.dim() == 3 {
        let dirs = |c: &ConvexPolytope| -> Vec<V3> {
            c.edges()
                .into_iter()
                .map(|(a, b)| c.verts_v3()[b] - c.verts_v3()[a])
                .collect()
        };
        let (dp, dq) = (dirs(p), dirs(q));
        for a in &dp {
            for b in &dq {
                let c = a.cross(b);
                let n = c.norm();
                if n > 1e-12 * a.norm() * b.norm() {
                    axes.push(c / n);
                }
            }
        }
    }
    let range = |c: &ConvexPolytope, axis: &V3| {
        c.verts_v3().iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            let s = axis.dot(v);
            (lo.min(s), hi.max(s))
        })
    };
    !axes.iter().any(|axis| {
        let (plo, phi) = range(p, axis);
        let (qlo, qhi) = range(q, axis);
        phi < qlo - tol || qhi < plo - tol
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sq(x0: f64, y0: f64, s: f64) -> ConvexPolytope {
        ConvexPolytope::cuboid(&[x0, y0], &[x0 + s, y0 + s]).unwrap()
    }

    #[test]
    fn disjoint_squares() {
        let u = SolidUnion::new("two", vec![sq(0.0, 0.0, 1.0), sq(3.0, 0.0, 1.0)]).unwrap();
        assert_relative_eq!(u.boundary_measure().unwrap(), 8.0, epsilon = 1e-12);
        assert_eq!(u.connected_component_count(), 2);
        assert_relative_eq!(u.enclosed_volume().unwrap(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn single_polytope() {
        let u = SolidUnion::new("one", vec![sq(0.0, 0.0, 1.0)]).unwrap();
        assert_eq!(u.connected_component_count(), 1);
        assert_relative_eq!(u.boundary_measure().unwrap(), 4.0, epsilon = 1e-12);
    }

    #[test]
    fn overlapping_and_glued_squares() {
        let overlap = SolidUnion::new("o", vec![sq(0.0, 0.0, 2.0), sq(1.0, 1.0, 2.0)]).unwrap();
        assert_relative_eq!(overlap.boundary_measure().unwrap(), 12.0, epsilon = 1e-12);
        assert_relative_eq!(overlap.enclosed_volume().unwrap(), 7.0, epsilon = 1e-12);
        let glued = SolidUnion::new("g", vec![sq(0.0, 0.0, 1.0), sq(1.0, 0.0, 1.0)]).unwrap();
        assert_relative_eq!(glued.boundary_measure().unwrap(), 6.0, epsilon = 1e-12);
        let same = SolidUnion::new("s", vec![sq(0.0, 0.0, 1.0), sq(0.0, 0.0, 1.0)]).unwrap();
        assert_relative_eq!(same.boundary_measure().unwrap(), 4.0, epsilon = 1e-12);
        let nested = SolidUnion::new("n", vec![sq(0.0, 0.0, 3.0), sq(1.0, 1.0, 1.0)]).unwrap();
        assert_relative_eq!(nested.boundary_measure().unwrap(), 12.0, epsilon = 1e-12);
    }

    #[test]
    fn corner_touching_counts_both_boundaries() {
        let u = SolidUnion::new("t", vec![sq(0.0, 0.0, 1.0), sq(1.0, 1.0, 1.0)]).unwrap();
        assert_relative_eq!(u.boundary_measure().unwrap(), 8.0, epsilon = 1e-12);
        assert_eq!(u.connected_component_count(), 1);
    }

    #[test]
    fn glued_cubes() {
        let a = ConvexPolytope::cuboid(&[0.0; 3], &[1.0; 3]).unwrap();
        let b = ConvexPolytope::cuboid(&[1.0, 0.0, 0.0], &[2.0, 1.0, 1.0]).unwrap();
        let u = SolidUnion::new("cubes", vec![a, b]).unwrap();
        assert_relative_eq!(u.boundary_measure().unwrap(), 10.0, epsilon = 1e-12);
        assert_relative_eq!(u.enclosed_volume().unwrap(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = sq(0.0, 0.0, 1.0);
        let b = ConvexPolytope::cuboid(&[0.0; 3], &[1.0; 3]).unwrap();
        assert!(SolidUnion::new("bad", vec![a, b]).is_err());
        assert!(SolidUnion::new("empty", vec![]).is_err());
    }

    #[test]
    fn separating_axis_cases() {
        let a = ConvexPolytope::cuboid(&[0.0; 3], &[1.0; 3]).unwrap();
        let far = ConvexPolytope::cuboid(&[2.0, 0.0, 0.0], &[3.0, 1.0, 1.0]).unwrap();
        let touching = ConvexPolytope::cuboid(&[1.0, 1.0, 0.0], &[2.0, 2.0, 1.0]).unwrap();
        assert!(!polytopes_intersect(&a, &far));
        assert!(polytopes_intersect(&a, &touching));
        // Two tetrahedra separated only by an edge-edge axis.
        let t1 = ConvexPolytope::hull(
            &[Point::xyz(0.0, 0.0, 0.0), Point::xyz(1.0, 0.0, 0.0), Point::xyz(0.0, 1.0, 0.0), Point::xyz(0.0, 0.0, 1.0)],
            3,
        )
        .unwrap();
        let t2 = ConvexPolytope::hull(
            &[Point::xyz(1.0, 1.0, 1.0), Point::xyz(0.6, 0.6, 2.0), Point::xyz(2.0, 0.6, 0.6), Point::xyz(0.6, 2.0, 0.6)],
            3,
        )
        .unwrap();
        assert!(!polytopes_intersect(&t1, &t2));
    }
}
