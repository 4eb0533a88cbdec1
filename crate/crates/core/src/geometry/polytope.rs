use std::cmp::Ordering;

use nalgebra::Vector2;
use serde::{Deserialize, Serialize};

use super::hull::{hull2_indices, hull3_facets, plane_basis};
use super::point::V3;
use super::{Direction, HalfSpace, Point, SNAP};
use crate::bounds::omega;
use crate::error::{Error, Result};

/// Golden-section iteration cap for the sectional radius search.
const GOLDEN_MAX_ITER: usize = 200;

/// A facet of a polytope: outward normal, plane offset (`<x, normal> <= offset`
/// on the body), its `(n-1)`-measure and the vertex indices of the facet,
/// counterclockwise around the normal in 3D and in edge order in 2D.
#[derive(Clone, Debug)]
pub struct Facet {
    pub normal: Direction,
    pub offset: f64,
    pub measure: f64,
    vertices: Vec<usize>,
}

impl Facet {
    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertices
    }
}

/// A convex body in R^2 or R^3 with non-empty interior.
///
/// The vertex list (extreme points only) is the source of truth; facets are
/// derived once at construction. In 2D vertices are counterclockwise.
#[derive(Clone, Debug)]
pub struct ConvexPolytope {
    dim: usize,
    verts: Vec<V3>,
    facets: Vec<Facet>,
    tol: f64,
}

/// JSON shape `{"dim": n, "vertices": [[x, ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Point>,
}

/// Snapping tolerance for a point set, scaled by its extent.
pub(crate) fn snap_for(pts: &[V3]) -> f64 {
    let extent = pts
        .iter()
        .flat_map(|p| p.iter().map(|c| c.abs()))
        .fold(1.0_f64, f64::max);
    SNAP * extent
}

fn polygon_area_3d(pts: &[V3]) -> f64 {
    if pts.len() < 3 {
        return 0.0;
    }
    let mut acc = V3::zeros();
    for i in 1..pts.len() - 1 {
        acc += (pts[i] - pts[0]).cross(&(pts[i + 1] - pts[0]));
    }
    0.5 * acc.norm()
}

fn segment_closest(p: &V3, a: &V3, b: &V3) -> V3 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return *a;
    }
    let t = ((p - a).dot(&ab) / len2).clamp(0.0, 1.0);
    a + ab * t
}

impl ConvexPolytope {
    /// Convex hull of `points`, which must all have dimension `dim`.
    pub fn hull(points: &[Point], dim: usize) -> Result<Self> {
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::InvalidInput(format!(
                "point {:?} does not have dimension {dim}",
                p.coords()
            )));
        }
        if points.len() < dim + 1 {
            return Err(Error::DegenerateInput(format!(
                "need at least {} points, got {}",
                dim + 1,
                points.len()
            )));
        }
        let pts: Vec<V3> = points.iter().map(Point::v3).collect();
        Self::hull_v3(&pts, dim)
    }

    pub(crate) fn hull_v3(pts: &[V3], dim: usize) -> Result<Self> {
        let tol = snap_for(pts);
        match dim {
            2 => Self::build2(pts, tol),
            3 => Self::build3(pts, tol),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    fn build2(pts: &[V3], tol: f64) -> Result<Self> {
        let planar: Vec<Vector2<f64>> = pts.iter().map(|p| Vector2::new(p.x, p.y)).collect();
        let ring = hull2_indices(&planar, tol);
        if ring.len() < 3 {
            return Err(Error::DegenerateInput("points do not span the plane".into()));
        }
        let verts: Vec<V3> = ring.iter().map(|&i| V3::new(pts[i].x, pts[i].y, 0.0)).collect();
        let n = verts.len();
        let facets = (0..n)
            .map(|i| {
                let a = verts[i];
                let b = verts[(i + 1) % n];
                let e = b - a;
                let normal = Direction::from_v3(V3::new(e.y, -e.x, 0.0), 2)
                    .expect("hull edges have positive length");
                let offset = normal.v3().dot(&a);
                Facet { normal, offset, measure: e.norm(), vertices: vec![i, (i + 1) % n] }
            })
            .collect();
        Ok(Self { dim: 2, verts, facets, tol })
    }

    fn build3(pts: &[V3], tol: f64) -> Result<Self> {
        let raw = hull3_facets(pts, tol)?;
        let mut used: Vec<usize> = raw.iter().flat_map(|f| f.vertices.iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        let remap = |i: usize| used.binary_search(&i).expect("facet vertex is a hull vertex");
        let verts: Vec<V3> = used.iter().map(|&i| pts[i]).collect();
        let facets = raw
            .into_iter()
            .map(|f| {
                let vertices: Vec<usize> = f.vertices.iter().map(|&i| remap(i)).collect();
                let ring: Vec<V3> = vertices.iter().map(|&i| verts[i]).collect();
                let measure = polygon_area_3d(&ring);
                Facet {
                    normal: Direction::from_v3(f.normal, 3).expect("unit facet normal"),
                    offset: f.offset,
                    measure,
                    vertices,
                }
            })
            .collect();
        Ok(Self { dim: 3, verts, facets, tol })
    }

    /// Axis-aligned box `[lo, hi]`.
    pub fn cuboid(lo: &[f64], hi: &[f64]) -> Result<Self> {
        let dim = lo.len();
        if hi.len() != dim {
            return Err(Error::InvalidInput("box corners differ in dimension".into()));
        }
        let corners: Vec<Point> = (0..1usize << dim)
            .map(|mask| {
                Point::new(
                    (0..dim)
                        .map(|k| if mask >> k & 1 == 1 { hi[k] } else { lo[k] })
                        .collect(),
                )
            })
            .collect::<Result<_>>()?;
        Self::hull(&corners, dim)
    }

    /// Right prism `base x [z0, z1]` over a planar polygon given in the xy-plane.
    pub fn prism(base: &[(f64, f64)], z0: f64, z1: f64) -> Result<Self> {
        let pts: Vec<Point> = base
            .iter()
            .flat_map(|&(x, y)| [Point::xyz(x, y, z0), Point::xyz(x, y, z1)])
            .collect();
        Self::hull(&pts, 3)
    }

    pub fn polygon(vertices: &[(f64, f64)]) -> Result<Self> {
        let pts: Vec<Point> = vertices.iter().map(|&(x, y)| Point::xy(x, y)).collect();
        Self::hull(&pts, 2)
    }

    pub fn from_json(json: &PolytopeJson) -> Result<Self> {
        Self::hull(&json.vertices, json.dim)
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson { dim: self.dim, vertices: self.vertices() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> Vec<Point> {
        self.verts.iter().map(|v| Point::from_v3(v, self.dim)).collect()
    }

    pub fn vertex(&self, i: usize) -> Point {
        Point::from_v3(&self.verts[i], self.dim)
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub(crate) fn verts_v3(&self) -> &[V3] {
        &self.verts
    }

    /// Snapping tolerance used by this polytope's predicates.
    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Vertex positions of a facet, in facet order.
    pub(crate) fn facet_ring(&self, f: &Facet) -> Vec<V3> {
        f.vertices.iter().map(|&i| self.verts[i]).collect()
    }

    /// Unique edges as vertex index pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for f in &self.facets {
            let k = f.vertices.len();
            let pairs = if self.dim == 2 { 1 } else { k };
            for i in 0..pairs {
                let (a, b) = (f.vertices[i], f.vertices[(i + 1) % k]);
                out.push((a.min(b), a.max(b)));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `H^{n-1}` of the boundary: perimeter in 2D, surface area in 3D.
    pub fn surface_measure(&self) -> f64 {
        self.facets.iter().map(|f| f.measure).sum()
    }

    /// `H^n` of the body: area in 2D, volume in 3D.
    pub fn volume(&self) -> f64 {
        let n = self.dim as f64;
        self.facets.iter().map(|f| f.measure * f.offset).sum::<f64>() / n
    }

    /// Largest vertex-to-vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0_f64;
        for (i, a) in self.verts.iter().enumerate() {
            for b in &self.verts[i + 1..] {
                best = best.max((a - b).norm());
            }
        }
        best
    }

    pub fn centroid_of_vertices(&self) -> Point {
        let sum: V3 = self.verts.iter().sum();
        Point::from_v3(&(sum / self.verts.len() as f64), self.dim)
    }

    pub(crate) fn depth_v3(&self, x: &V3) -> f64 {
        self.facets
            .iter()
            .map(|f| f.offset - f.normal.v3().dot(x))
            .fold(f64::INFINITY, f64::min)
    }

    /// Signed depth of `x`: the smallest slack over facet inequalities.
    /// Positive inside, zero on the boundary, negative outside.
    pub fn depth(&self, x: &Point) -> f64 {
        self.depth_v3(&x.v3())
    }

    /// Membership within the snapping tolerance.
    pub fn contains(&self, x: &Point) -> bool {
        self.depth(x) >= -self.tol
    }

    /// Support interval `[min <v, nu>, max <v, nu>]` over the vertices.
    pub fn support_interval(&self, nu: &Direction) -> (f64, f64) {
        let n = nu.v3();
        self.verts.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            let s = n.dot(v);
            (lo.min(s), hi.max(s))
        })
    }

    /// Exact intersection with a half-space.
    pub fn clip(&self, h: &HalfSpace) -> Result<Self> {
        if h.normal.dim() != self.dim {
            return Err(Error::InvalidInput("half-space dimension mismatch".into()));
        }
        let n = h.normal.v3();
        let depth: Vec<f64> = self.verts.iter().map(|v| n.dot(v) - h.offset).collect();
        let mut pts: Vec<V3> = self
            .verts
            .iter()
            .zip(&depth)
            .filter(|(_, d)| **d >= -self.tol)
            .map(|(v, _)| *v)
            .collect();
        for (a, b) in self.edges() {
            let (da, db) = (depth[a], depth[b]);
            if (da > self.tol && db < -self.tol) || (da < -self.tol && db > self.tol) {
                let t = da / (da - db);
                pts.push(self.verts[a] + (self.verts[b] - self.verts[a]) * t);
            }
        }
        if pts.len() < self.dim + 1 {
            return Err(Error::EmptyClip);
        }
        Self::hull_v3(&pts, self.dim).map_err(|e| match e {
            Error::DegenerateInput(_) => Error::EmptyClip,
            other => other,
        })
    }

    /// Points of `P ∩ {<x, nu> = t}`: vertices on the hyperplane plus edge
    /// crossings.
    fn section_points(&self, nu: &V3, t: f64) -> Vec<V3> {
        let s: Vec<f64> = self.verts.iter().map(|v| nu.dot(v) - t).collect();
        let mut pts: Vec<V3> = self
            .verts
            .iter()
            .zip(&s)
            .filter(|(_, d)| d.abs() <= self.tol)
            .map(|(v, _)| *v)
            .collect();
        for (a, b) in self.edges() {
            let (da, db) = (s[a], s[b]);
            if (da > self.tol && db < -self.tol) || (da < -self.tol && db > self.tol) {
                let w = da / (da - db);
                pts.push(self.verts[a] + (self.verts[b] - self.verts[a]) * w);
            }
        }
        pts
    }

    /// `H^{n-1}` of the section `P ∩ {<x, nu> = t}`: a chord length in 2D,
    /// a polygon area in 3D; zero when the hyperplane misses `P`.
    pub fn section_measure(&self, nu: &Direction, t: f64) -> f64 {
        let n = nu.v3();
        let pts = self.section_points(&n, t);
        match self.dim {
            2 => {
                let mut best = 0.0_f64;
                for (i, a) in pts.iter().enumerate() {
                    for b in &pts[i + 1..] {
                        best = best.max((a - b).norm());
                    }
                }
                best
            }
            _ => {
                if pts.len() < 3 {
                    return 0.0;
                }
                let (u, v) = plane_basis(&n);
                let planar: Vec<Vector2<f64>> =
                    pts.iter().map(|p| Vector2::new(p.dot(&u), p.dot(&v))).collect();
                let ring = hull2_indices(&planar, self.tol);
                if ring.len() < 3 {
                    return 0.0;
                }
                let mut area = 0.0;
                for i in 0..ring.len() {
                    let a = planar[ring[i]];
                    let b = planar[ring[(i + 1) % ring.len()]];
                    area += a.x * b.y - a.y * b.x;
                }
                0.5 * area.abs()
            }
        }
    }

    /// Position `t` and value of the largest section orthogonal to `nu`.
    ///
    /// `t -> section^(1/(n-1))` is concave on the support interval, so its
    /// maximizer lies between the two vertex heights adjacent to the best
    /// vertex height; golden-section search runs on that bracket.
    pub fn max_section(&self, nu: &Direction) -> (f64, f64) {
        let n = nu.v3();
        let root = 1.0 / (self.dim as f64 - 1.0);
        let g = |t: f64| self.section_measure(nu, t).powf(root);
        let mut heights: Vec<f64> = self.verts.iter().map(|v| n.dot(v)).collect();
        heights.sort_by(f64::total_cmp);
        heights.dedup_by(|a, b| (*a - *b).abs() <= self.tol);
        let values: Vec<f64> = heights.iter().map(|&t| g(t)).collect();
        let (k, _) = values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(Ordering::Equal))
            .expect("polytope has vertices");
        let mut best_t = heights[k];
        let mut best_g = values[k];
        let lo = heights[k.saturating_sub(1)];
        let hi = heights[(k + 1).min(heights.len() - 1)];
        let tol_t = 1e-10 * self.diameter().max(f64::MIN_POSITIVE);
        let (t, gt) = golden_max(&g, lo, hi, tol_t);
        if gt > best_g {
            best_t = t;
            best_g = gt;
        }
        (best_t, best_g.powi(self.dim as i32 - 1))
    }

    /// Maximal sectional radius in direction `nu`: the radius of the
    /// `(n-1)`-ball whose measure equals the largest section orthogonal to `nu`.
    pub fn max_sectional_radius(&self, nu: &Direction) -> f64 {
        let (_, m) = self.max_section(nu);
        (m / omega(self.dim - 1)).powf(1.0 / (self.dim as f64 - 1.0))
    }

    /// Closest point of the body to `x` and its distance (zero inside).
    pub fn closest_point(&self, x: &Point) -> (f64, Point) {
        let xv = x.v3();
        if self.depth_v3(&xv) >= 0.0 {
            return (0.0, x.clone());
        }
        let mut best = (f64::INFINITY, xv);
        let mut consider = |q: V3| {
            let d = (q - xv).norm();
            if d < best.0 {
                best = (d, q);
            }
        };
        for f in &self.facets {
            let ring = self.facet_ring(f);
            if self.dim == 2 {
                consider(segment_closest(&xv, &ring[0], &ring[1]));
                continue;
            }
            let nrm = f.normal.v3();
            let q = xv - nrm * (nrm.dot(&xv) - f.offset);
            let k = ring.len();
            let inside = (0..k).all(|i| {
                let a = ring[i];
                let b = ring[(i + 1) % k];
                (b - a).cross(&(q - a)).dot(&nrm) >= 0.0
            });
            if inside {
                consider(q);
            } else {
                for i in 0..k {
                    consider(segment_closest(&xv, &ring[i], &ring[(i + 1) % k]));
                }
            }
        }
        (best.0, Point::from_v3(&best.1, self.dim))
    }

    /// Euclidean distance from `x` to the body.
    pub fn distance_to(&self, x: &Point) -> f64 {
        self.closest_point(x).0
    }

    /// Sum of `measure * normal` over facets; zero for a closed surface.
    pub fn minkowski_residual(&self) -> f64 {
        self.facets
            .iter()
            .map(|f| f.normal.v3() * f.measure)
            .sum::<V3>()
            .norm()
    }
}

/// Golden-section maximization of a unimodal function on `[lo, hi]`.
fn golden_max<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..GOLDEN_MAX_ITER {
        if (b - a).abs() <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let m = 0.5 * (a + b);
    let fm = f(m);
    [(c, fc), (d, fd), (m, fm)]
        .into_iter()
        .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap_or(Ordering::Equal))
        .expect("three candidates")
}
