//! Convex hull construction.
//!
//! 2D: Andrew's monotone chain. 3D: quickhull with conflict lists, followed
//! by merging coplanar triangles into polygonal facets. Both drop points that
//! lie within `tol` of the hull boundary without being extreme.

use std::cmp::Ordering;

use nalgebra::Vector2;

use super::point::V3;
use crate::error::{Error, Result};

type V2 = Vector2<f64>;

fn cross2(o: &V2, a: &V2, b: &V2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Strict convex hull of planar points, counterclockwise, as indices into
/// `pts`. Collinear and duplicate points are dropped. A point counts as
/// collinear when its distance to the supporting line is at most `tol`.
pub(crate) fn hull2_indices(pts: &[V2], tol: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| {
        pts[i]
            .x
            .total_cmp(&pts[j].x)
            .then(pts[i].y.total_cmp(&pts[j].y))
    });
    if order.len() < 3 {
        return order;
    }
    let keeps_left_turn = |hull: &[usize], k: usize| -> bool {
        let o = &pts[hull[hull.len() - 2]];
        let a = &pts[hull[hull.len() - 1]];
        let b = &pts[k];
        let base = (b - o).norm();
        if base <= tol {
            return false;
        }
        cross2(o, a, b) / base > tol
    };
    let mut lower: Vec<usize> = Vec::new();
    for &k in &order {
        while lower.len() >= 2 && !keeps_left_turn(&lower, k) {
            lower.pop();
        }
        if lower.last().is_some_and(|&l| (pts[l] - pts[k]).norm() <= tol) {
            continue;
        }
        lower.push(k);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &k in order.iter().rev() {
        while upper.len() >= 2 && !keeps_left_turn(&upper, k) {
            upper.pop();
        }
        if upper.last().is_some_and(|&l| (pts[l] - pts[k]).norm() <= tol) {
            continue;
        }
        upper.push(k);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // A collinear input collapses to two points; report it as-is.
    lower
}

/// An orthonormal basis `(u, v)` of the plane orthogonal to `n` with
/// `u x v = n`, so counterclockwise in `(u, v)` is counterclockwise seen from
/// the tip of `n`.
pub(crate) fn plane_basis(n: &V3) -> (V3, V3) {
    let helper = if n.x.abs() < 0.6 {
        V3::x()
    } else if n.y.abs() < 0.6 {
        V3::y()
    } else {
        V3::z()
    };
    let u = (helper - n * n.dot(&helper)).normalize();
    let v = n.cross(&u);
    (u, v)
}

/// A polygonal facet of a 3D hull: outward unit normal, plane offset and
/// vertex indices ordered counterclockwise around the normal.
pub(crate) struct HullFacet3 {
    pub normal: V3,
    pub offset: f64,
    pub vertices: Vec<usize>,
}

struct Face {
    v: [usize; 3],
    n: V3,
    d: f64,
    outside: Vec<usize>,
    alive: bool,
}

impl Face {
    fn new(pts: &[V3], v: [usize; 3]) -> Self {
        let n = (pts[v[1]] - pts[v[0]]).cross(&(pts[v[2]] - pts[v[0]]));
        let len = n.norm();
        let n = if len > 0.0 { n / len } else { n };
        let d = n.dot(&pts[v[0]]);
        Face { v, n, d, outside: Vec::new(), alive: true }
    }

    fn dist(&self, p: &V3) -> f64 {
        self.n.dot(p) - self.d
    }
}

fn farthest_from<F: Fn(&V3) -> f64>(pts: &[V3], score: F) -> (usize, f64) {
    pts.iter()
        .enumerate()
        .map(|(i, p)| (i, score(p)))
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal))
        .expect("non-empty point set")
}

/// 3D convex hull as polygonal facets over indices into `pts`.
pub(crate) fn hull3_facets(pts: &[V3], tol: f64) -> Result<Vec<HullFacet3>> {
    if pts.len() < 4 {
        return Err(Error::DegenerateInput(format!(
            "need at least 4 points in R^3, got {}",
            pts.len()
        )));
    }
    // Initial tetrahedron from extreme points.
    let (i0, _) = farthest_from(pts, |p| -p.x);
    let (i1, d1) = farthest_from(pts, |p| (p - pts[i0]).norm());
    if d1 <= tol {
        return Err(Error::DegenerateInput("all points coincide".into()));
    }
    let axis = (pts[i1] - pts[i0]) / d1;
    let (i2, d2) = farthest_from(pts, |p| {
        let w = p - pts[i0];
        (w - axis * w.dot(&axis)).norm()
    });
    if d2 <= tol {
        return Err(Error::DegenerateInput("points are collinear".into()));
    }
    let plane_n = (pts[i1] - pts[i0]).cross(&(pts[i2] - pts[i0])).normalize();
    let (i3, d3) = farthest_from(pts, |p| plane_n.dot(&(p - pts[i0])).abs());
    if d3 <= tol {
        return Err(Error::DegenerateInput("points are coplanar".into()));
    }

    let centroid = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
    let mut faces: Vec<Face> = Vec::new();
    for tri in [[i0, i1, i2], [i0, i1, i3], [i0, i2, i3], [i1, i2, i3]] {
        let mut f = Face::new(pts, tri);
        if f.dist(&centroid) > 0.0 {
            f = Face::new(pts, [tri[0], tri[2], tri[1]]);
        }
        faces.push(f);
    }
    let seeds = [i0, i1, i2, i3];
    let assign = |faces: &mut Vec<Face>, candidates: &[usize], range: std::ops::Range<usize>| {
        for &p in candidates {
            let mut best: Option<(usize, f64)> = None;
            for fi in range.clone() {
                if !faces[fi].alive {
                    continue;
                }
                let d = faces[fi].dist(&pts[p]);
                if d > tol && best.is_none_or(|(_, bd)| d > bd) {
                    best = Some((fi, d));
                }
            }
            if let Some((fi, _)) = best {
                faces[fi].outside.push(p);
            }
        }
    };
    let rest: Vec<usize> = (0..pts.len()).filter(|i| !seeds.contains(i)).collect();
    assign(&mut faces, &rest, 0..4);

    while let Some(fi) = faces.iter().position(|f| f.alive && !f.outside.is_empty()) {
        let apex = *faces[fi]
            .outside
            .iter()
            .max_by(|&&a, &&b| {
                faces[fi]
                    .dist(&pts[a])
                    .partial_cmp(&faces[fi].dist(&pts[b]))
                    .unwrap_or(Ordering::Equal)
            })
            .expect("non-empty outside set");
        let ap = pts[apex];
        let visible: Vec<usize> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.alive && f.dist(&ap) > tol)
            .map(|(i, _)| i)
            .collect();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for &vi in &visible {
            let v = faces[vi].v;
            edges.extend([(v[0], v[1]), (v[1], v[2]), (v[2], v[0])]);
        }
        let horizon: Vec<(usize, usize)> = edges
            .iter()
            .filter(|(a, b)| !edges.contains(&(*b, *a)))
            .copied()
            .collect();
        let mut orphans: Vec<usize> = Vec::new();
        for &vi in &visible {
            faces[vi].alive = false;
            orphans.append(&mut faces[vi].outside);
        }
        orphans.retain(|&p| p != apex);
        let start = faces.len();
        for (a, b) in horizon {
            faces.push(Face::new(pts, [a, b, apex]));
        }
        let end = faces.len();
        assign(&mut faces, &orphans, start..end);
    }

    // Merge coplanar triangles into facets.
    let mut groups: Vec<(V3, f64, Vec<usize>)> = Vec::new();
    for f in faces.iter().filter(|f| f.alive) {
        if f.n.norm() < 0.5 {
            continue;
        }
        match groups
            .iter_mut()
            .find(|(n, d, _)| n.dot(&f.n) > 1.0 - 1e-9 && (d - f.d).abs() <= tol)
        {
            Some(g) => g.2.extend_from_slice(&f.v),
            None => groups.push((f.n, f.d, f.v.to_vec())),
        }
    }
    let mut facets = Vec::with_capacity(groups.len());
    for (n, d, mut idx) in groups {
        idx.sort_unstable();
        idx.dedup();
        let (u, v) = plane_basis(&n);
        let planar: Vec<V2> = idx.iter().map(|&i| V2::new(pts[i].dot(&u), pts[i].dot(&v))).collect();
        let ring = hull2_indices(&planar, tol);
        if ring.len() < 3 {
            continue;
        }
        facets.push(HullFacet3 {
            normal: n,
            offset: d,
            vertices: ring.into_iter().map(|k| idx[k]).collect(),
        });
    }
    Ok(facets)
}
