//! Boundary of a union by facet fragmentation.
//!
//! Every facet of every component is cut by the facet planes of the other
//! components, so each fragment lies either inside or outside each other
//! component. A fragment is on `∂E` iff a point pushed slightly along its
//! outward normal leaves the union; coincident fragments shared by several
//! components are kept only for the lowest index.

use super::SolidUnion;
use crate::error::{Error, Result};
use crate::geometry::{ConvexPolytope, Direction, Point, V3};

/// Relative push distance used to probe the outer side of a fragment.
const PROBE: f64 = 1e-6;

/// A piece of one component facet lying on the boundary of the union.
#[derive(Clone, Debug)]
pub struct BoundaryFragment {
    pub component: usize,
    pub facet: usize,
    pub normal: Direction,
    pub measure: f64,
    pub(crate) points: Vec<V3>,
    dim: usize,
}

impl BoundaryFragment {
    /// Fragment vertices: two endpoints in 2D, a convex polygon in 3D,
    /// ordered consistently with the parent facet.
    pub fn points(&self) -> Vec<Point> {
        self.points.iter().map(|p| Point::from_v3(p, self.dim)).collect()
    }

    pub fn centroid(&self) -> Point {
        Point::from_v3(&centroid(&self.points), self.dim)
    }
}

fn centroid(pts: &[V3]) -> V3 {
    pts.iter().sum::<V3>() / pts.len() as f64
}

fn piece_measure(pts: &[V3], normal: &V3) -> f64 {
    if pts.len() == 2 {
        return (pts[1] - pts[0]).norm();
    }
    let mut acc = V3::zeros();
    for i in 1..pts.len() - 1 {
        acc += (pts[i] - pts[0]).cross(&(pts[i + 1] - pts[0]));
    }
    0.5 * acc.dot(normal).abs()
}

/// Splits a segment or convex polygon by the plane `<x, n> = c` into the
/// parts with `<x, n> <= c` and `>= c`. Pieces thinner than `tol` vanish.
fn split(piece: &[V3], n: &V3, c: f64, tol: f64) -> (Option<Vec<V3>>, Option<Vec<V3>>) {
    let d: Vec<f64> = piece.iter().map(|p| n.dot(p) - c).collect();
    let (lo, hi) = d.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
    if hi <= tol {
        return (Some(piece.to_vec()), None);
    }
    if lo >= -tol {
        return (None, Some(piece.to_vec()));
    }
    let cut = |i: usize, j: usize| {
        let t = d[i] / (d[i] - d[j]);
        piece[i] + (piece[j] - piece[i]) * t
    };
    if piece.len() == 2 {
        let q = cut(0, 1);
        return if d[0] < 0.0 {
            (Some(vec![piece[0], q]), Some(vec![q, piece[1]]))
        } else {
            (Some(vec![q, piece[1]]), Some(vec![piece[0], q]))
        };
    }
    let k = piece.len();
    let (mut below, mut above) = (Vec::new(), Vec::new());
    for i in 0..k {
        let j = (i + 1) % k;
        if d[i] <= tol {
            below.push(piece[i]);
        }
        if d[i] >= -tol {
            above.push(piece[i]);
        }
        if (d[i] < -tol && d[j] > tol) || (d[i] > tol && d[j] < -tol) {
            let q = cut(i, j);
            below.push(q);
            above.push(q);
        }
    }
    let keep = |v: Vec<V3>| if v.len() >= 3 { Some(v) } else { None };
    (keep(below), keep(above))
}

fn bbox(pts: &[V3]) -> (V3, V3) {
    let mut lo = V3::repeat(f64::INFINITY);
    let mut hi = V3::repeat(f64::NEG_INFINITY);
    for p in pts {
        lo = lo.inf(p);
        hi = hi.sup(p);
    }
    (lo, hi)
}

fn boxes_overlap(a: &(V3, V3), b: &(V3, V3), tol: f64) -> bool {
    (0..3).all(|i| a.0[i] <= b.1[i] + tol && b.0[i] <= a.1[i] + tol)
}

/// Cuts `pieces` by the facet planes of `other`; the returned pieces each lie
/// entirely inside or entirely outside the closed body.
fn fragment_against(pieces: Vec<Vec<V3>>, other: &ConvexPolytope, tol: f64) -> Vec<Vec<V3>> {
    let mut settled = Vec::new();
    let mut candidates = pieces;
    for f in other.facets() {
        let n = f.normal.v3();
        let mut next = Vec::with_capacity(candidates.len());
        for piece in candidates {
            let (inside, outside) = split(&piece, &n, f.offset, tol);
            settled.extend(outside);
            next.extend(inside);
        }
        candidates = next;
        if candidates.is_empty() {
            break;
        }
    }
    settled.extend(candidates);
    settled
}

impl SolidUnion {
    /// Facet fragments that make up `∂E`.
    pub fn boundary_fragments(&self) -> Result<Vec<BoundaryFragment>> {
        if self.dim() > 3 {
            return Err(Error::UnsupportedDimension(self.dim()));
        }
        let comps = self.components();
        let scale = self.extent();
        let tol = crate::geometry::SNAP * scale;
        let delta = PROBE * scale;
        let boxes: Vec<(V3, V3)> = comps.iter().map(|c| bbox(c.verts_v3())).collect();
        let mut out = Vec::new();
        for (i, comp) in comps.iter().enumerate() {
            for (fi, facet) in comp.facets().iter().enumerate() {
                let ring = comp.facet_ring(facet);
                let fbox = bbox(&ring);
                let mut pieces = vec![ring];
                for (j, other) in comps.iter().enumerate() {
                    if j != i && boxes_overlap(&fbox, &boxes[j], tol) {
                        pieces = fragment_against(pieces, other, tol);
                    }
                }
                let n = facet.normal.v3();
                for piece in pieces {
                    let measure = piece_measure(&piece, &n);
                    if measure <= 0.0 {
                        continue;
                    }
                    let c = centroid(&piece);
                    if self.contains_v3(&(c + n * delta)) {
                        continue;
                    }
                    let duplicate = comps[..i].iter().any(|o| o.depth_v3(&c) >= -tol);
                    if duplicate {
                        continue;
                    }
                    out.push(BoundaryFragment {
                        component: i,
                        facet: fi,
                        normal: facet.normal.clone(),
                        measure,
                        points: piece,
                        dim: self.dim(),
                    });
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn split_segment_and_polygon() {
        let seg = [V3::new(0.0, 0.0, 0.0), V3::new(2.0, 0.0, 0.0)];
        let (a, b) = split(&seg, &V3::x(), 0.5, 1e-12);
        assert_relative_eq!((a.unwrap()[1] - seg[0]).norm(), 0.5);
        assert_relative_eq!(b.unwrap()[0].x, 0.5);
        let sq = [V3::new(0.0, 0.0, 0.0), V3::new(1.0, 0.0, 0.0), V3::new(1.0, 1.0, 0.0), V3::new(0.0, 1.0, 0.0)];
        let (a, b) = split(&sq, &V3::new(1.0, 1.0, 0.0).normalize(), 1.0 / 2f64.sqrt(), 1e-12);
        assert_relative_eq!(piece_measure(&a.unwrap(), &V3::z()), 0.5, epsilon = 1e-12);
        assert_relative_eq!(piece_measure(&b.unwrap(), &V3::z()), 0.5, epsilon = 1e-12);
        let (a, b) = split(&sq, &V3::x(), 1.0, 1e-12);
        assert!(a.is_some() && b.is_none());
    }

    #[test]
    fn fragments_of_an_l_shape_cover_the_outline() {
        let a = ConvexPolytope::cuboid(&[0.0, 0.0], &[1.0, 3.0]).unwrap();
        let b = ConvexPolytope::cuboid(&[0.0, 0.0], &[4.0, 1.0]).unwrap();
        let u = SolidUnion::new("l", vec![a, b]).unwrap();
        let frags = u.boundary_fragments().unwrap();
        let total: f64 = frags.iter().map(|f| f.measure).sum();
        assert_relative_eq!(total, 14.0, epsilon = 1e-12);
        assert!(frags.iter().all(|f| f.points.len() == 2));
    }
}
