//! Upper bounds on `k_min` for planar scenes: trace the boundary of the union
//! into a simple polygon, triangulate it by ear clipping and merge triangles
//! back across diagonals that are not needed for convexity.

use serde::{Deserialize, Serialize};

use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::geometry::{ConvexPolytope, Point};
use crate::union::SolidUnion;

type P2 = (f64, f64);

fn cross(o: P2, a: P2, b: P2) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn signed_area(v: &[P2]) -> f64 {
    let n = v.len();
    (0..n).map(|i| v[i].0 * v[(i + 1) % n].1 - v[(i + 1) % n].0 * v[i].1).sum::<f64>() / 2.0
}

fn segments_cross(a: P2, b: P2, c: P2, d: P2, eps: f64) -> bool {
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))
}

/// A counterclockwise simple polygon without repeated or collinear vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimplePolygon {
    vertices: Vec<Point>,
}

impl SimplePolygon {
    /// Validates orientation, distinct consecutive vertices and the absence
    /// of proper edge crossings; collinear vertices are dropped.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.iter().any(|p| p.dim() != 2) {
            return Err(Error::InvalidInput("polygon vertices must be planar".into()));
        }
        let pts: Vec<P2> = vertices.iter().map(|p| (p.coords()[0], p.coords()[1])).collect();
        let scale = pts.iter().fold(1.0_f64, |m, p| m.max(p.0.abs()).max(p.1.abs()));
        let eps = crate::geometry::SNAP * scale;
        let pts = drop_collinear(&pts, eps);
        if pts.len() < 3 {
            return Err(Error::DegenerateInput("polygon needs three non-collinear vertices".into()));
        }
        if signed_area(&pts) <= eps * scale {
            return Err(Error::InvalidInput("polygon must be counterclockwise with positive area".into()));
        }
        let n = pts.len();
        for i in 0..n {
            for j in i + 1..n {
                if segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n], eps * scale) {
                    return Err(Error::InvalidInput(format!("edges {i} and {j} cross")));
                }
            }
        }
        Ok(Self { vertices: pts.iter().map(|&(x, y)| Point::xy(x, y)).collect() })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    fn pts(&self) -> Vec<P2> {
        self.vertices.iter().map(|p| (p.coords()[0], p.coords()[1])).collect()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.pts())
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.vertices.len();
        (0..n).map(|i| self.vertices[i].distance(&self.vertices[(i + 1) % n])).sum()
    }

    /// Vertices with an interior angle above `pi`.
    pub fn reflex_count(&self) -> usize {
        let p = self.pts();
        let n = p.len();
        (0..n).filter(|&i| cross(p[(i + n - 1) % n], p[i], p[(i + 1) % n]) < 0.0).count()
    }
}

fn drop_collinear(pts: &[P2], eps: f64) -> Vec<P2> {
    let mut v: Vec<P2> = Vec::with_capacity(pts.len());
    for &p in pts {
        if v.last().is_none_or(|&q: &P2| (q.0 - p.0).abs() > eps || (q.1 - p.1).abs() > eps) {
            v.push(p);
        }
    }
    while v.len() > 1 {
        let (f, l) = (v[0], v[v.len() - 1]);
        if (f.0 - l.0).abs() <= eps && (f.1 - l.1).abs() <= eps {
            v.pop();
        } else {
            break;
        }
    }
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let hit = (0..n).find(|&i| {
            let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            let len = ((c.0 - a.0).powi(2) + (c.1 - a.1).powi(2)).sqrt();
            cross(a, b, c).abs() <= eps * len.max(1.0)
        });
        match hit {
            Some(i) => {
                v.remove(i);
            }
            None => return v,
        }
    }
}

/// Traces `∂E` of a planar union into a single counterclockwise cycle.
pub fn to_simple_polygon(u: &SolidUnion) -> Result<SimplePolygon> {
    if u.dim() != 2 {
        return Err(Error::UnsupportedDimension(u.dim()));
    }
    if u.connected_component_count() != 1 {
        return Err(Error::NotSimplyConnected("the union is not connected".into()));
    }
    let segs: Vec<(P2, P2)> = u
        .boundary_fragments()?
        .iter()
        .map(|f| ((f.points[0].x, f.points[0].y), (f.points[1].x, f.points[1].y)))
        .collect();
    let eps = 1e-7 * u.extent();
    let same = |a: P2, b: P2| (a.0 - b.0).abs() <= eps && (a.1 - b.1).abs() <= eps;
    let start = (0..segs.len())
        .min_by(|&i, &j| segs[i].0.partial_cmp(&segs[j].0).expect("finite coordinates"))
        .ok_or_else(|| Error::DegenerateInput("empty boundary".into()))?;
    let mut used = vec![false; segs.len()];
    let mut cycle = vec![segs[start].0];
    let mut cur = start;
    used[start] = true;
    loop {
        let end = segs[cur].1;
        if same(end, segs[start].0) {
            break;
        }
        let next: Vec<usize> = (0..segs.len()).filter(|&k| !used[k] && same(segs[k].0, end)).collect();
        match next.as_slice() {
            [k] => {
                cycle.push(end);
                used[*k] = true;
                cur = *k;
            }
            [] => return Err(Error::DegenerateInput("boundary does not close".into())),
            _ => return Err(Error::NotSimplyConnected("boundary pinches at a vertex".into())),
        }
    }
    if used.iter().any(|u| !u) {
        return Err(Error::NotSimplyConnected("boundary has more than one cycle".into()));
    }
    SimplePolygon::new(cycle.iter().map(|&(x, y)| Point::xy(x, y)).collect())
}

/// Triangles and diagonals, as vertex indices.
type Triangulation = (Vec<[usize; 3]>, Vec<(usize, usize)>);

/// Ear-clipping triangulation; returns triangles and the diagonals in
/// creation order, all as vertex indices.
fn triangulate(p: &[P2], eps: f64) -> Result<Triangulation> {
    let mut idx: Vec<usize> = (0..p.len()).collect();
    let mut tris = Vec::new();
    let mut diags = Vec::new();
    while idx.len() > 3 {
        let m = idx.len();
        let ear = (0..m).find(|&i| {
            let (a, b, c) = (idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]);
            if cross(p[a], p[b], p[c]) <= eps {
                return false;
            }
            !idx.iter().any(|&q| {
                q != a && q != b && q != c && {
                    let x = p[q];
                    cross(p[a], p[b], x) >= -eps && cross(p[b], p[c], x) >= -eps && cross(p[c], p[a], x) >= -eps
                }
            })
        });
        let i = ear.ok_or_else(|| Error::DegenerateInput("no ear found; polygon is not simple".into()))?;
        let (a, b, c) = (idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]);
        tris.push([a, b, c]);
        diags.push((a, c));
        idx.remove(i);
    }
    tris.push([idx[0], idx[1], idx[2]]);
    Ok((tris, diags))
}

fn rotate_to(piece: &[usize], first: usize) -> Vec<usize> {
    let k = piece.iter().position(|&v| v == first).expect("vertex belongs to piece");
    piece[k..].iter().chain(&piece[..k]).copied().collect()
}

fn has_edge(piece: &[usize], a: usize, b: usize) -> bool {
    let n = piece.len();
    (0..n).any(|i| piece[i] == a && piece[(i + 1) % n] == b)
}

fn is_convex(piece: &[usize], p: &[P2], eps: f64) -> bool {
    let n = piece.len();
    (0..n).all(|i| cross(p[piece[(i + n - 1) % n]], p[piece[i]], p[piece[(i + 1) % n]]) >= -eps)
}

/// Convex pieces covering the polygon with disjoint interiors.
///
/// Diagonals are revisited in the order the ear clipper created them and
/// removed whenever both endpoints stay convex after the merge.
pub fn greedy_convex_decomposition(poly: &SimplePolygon) -> Result<Vec<ConvexPolytope>> {
    let p = poly.pts();
    let scale = p.iter().fold(1.0_f64, |m, q| m.max(q.0.abs()).max(q.1.abs()));
    let eps = crate::geometry::SNAP * scale * scale;
    let (tris, diags) = triangulate(&p, eps)?;
    let mut pieces: Vec<Option<Vec<usize>>> = tris.into_iter().map(|t| Some(t.to_vec())).collect();
    for (a, c) in diags {
        let find = |x: usize, y: usize, pieces: &[Option<Vec<usize>>]| {
            pieces.iter().position(|q| q.as_ref().is_some_and(|q| has_edge(q, x, y)))
        };
        let (Some(i), Some(j)) = (find(a, c, &pieces), find(c, a, &pieces)) else {
            continue;
        };
        let p1 = rotate_to(pieces[i].as_ref().expect("live piece"), c);
        let p2 = rotate_to(pieces[j].as_ref().expect("live piece"), a);
        let mut merged = p1.clone();
        merged.extend_from_slice(&p2[1..p2.len() - 1]);
        if is_convex(&merged, &p, eps) {
            pieces[i] = Some(merged);
            pieces[j] = None;
        }
    }
    pieces
        .into_iter()
        .flatten()
        .map(|q| ConvexPolytope::polygon(&q.iter().map(|&k| p[k]).collect::<Vec<_>>()))
        .collect()
}

/// Attaches the decomposition size as an upper bound and checks every lower
/// bound in the report against it.
pub fn sandwich(u: &SolidUnion, mut report: BoundReport) -> Result<BoundReport> {
    if u.dim() != 2 {
        return Err(Error::UnsupportedDimension(u.dim()));
    }
    let pieces = greedy_convex_decomposition(&to_simple_polygon(u)?)?;
    let upper = pieces.len() as u64;
    for (name, lower) in report.lower_bounds() {
        if lower > upper {
            return Err(Error::SandwichViolation { name: name.to_string(), lower, upper });
        }
    }
    report.upper = Some(upper);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn poly(v: &[P2]) -> SimplePolygon {
        SimplePolygon::new(v.iter().map(|&(x, y)| Point::xy(x, y)).collect()).unwrap()
    }

    #[test]
    fn convex_polygon_is_one_piece() {
        let sq = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert_eq!(greedy_convex_decomposition(&sq).unwrap().len(), 1);
        let hex: Vec<P2> = (0..6).map(|k| ((k as f64).cos(), (k as f64).sin())).collect();
        assert_eq!(greedy_convex_decomposition(&poly(&hex)).unwrap().len(), 1);
    }

    #[test]
    fn cross_shape() {
        let c = poly(&[
            (1.0, 0.0), (2.0, 0.0), (2.0, 1.0), (3.0, 1.0), (3.0, 2.0), (2.0, 2.0),
            (2.0, 3.0), (1.0, 3.0), (1.0, 2.0), (0.0, 2.0), (0.0, 1.0), (1.0, 1.0),
        ]);
        assert_eq!(c.reflex_count(), 4);
        let pieces = greedy_convex_decomposition(&c).unwrap();
        assert!(pieces.len() <= 5, "{} pieces", pieces.len());
        let area: f64 = pieces.iter().map(|p| p.volume()).sum();
        assert_relative_eq!(area, 5.0, epsilon = 1e-12);
    }

    #[test]
    fn clockwise_and_crossing_rejected() {
        let cw: Vec<Point> = [(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)].iter().map(|&(x, y)| Point::xy(x, y)).collect();
        assert!(SimplePolygon::new(cw).is_err());
        let bow: Vec<Point> = [(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)].iter().map(|&(x, y)| Point::xy(x, y)).collect();
        assert!(SimplePolygon::new(bow).is_err());
    }

    #[test]
    fn tracing_square_and_disjoint_squares() {
        let sq = SolidUnion::new("sq", vec![ConvexPolytope::cuboid(&[0.0, 0.0], &[1.0, 1.0]).unwrap()]).unwrap();
        assert_eq!(to_simple_polygon(&sq).unwrap().vertices().len(), 4);
        let two = SolidUnion::new(
            "two",
            vec![
                ConvexPolytope::cuboid(&[0.0, 0.0], &[1.0, 1.0]).unwrap(),
                ConvexPolytope::cuboid(&[3.0, 0.0], &[4.0, 1.0]).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(to_simple_polygon(&two), Err(Error::NotSimplyConnected(_))));
    }

    #[test]
    fn ring_is_not_simply_connected() {
        let r = |a: f64, b: f64, c: f64, d: f64| ConvexPolytope::cuboid(&[a, b], &[c, d]).unwrap();
        let ring = SolidUnion::new(
            "ring",
            vec![r(0.0, 0.0, 3.0, 1.0), r(0.0, 2.0, 3.0, 3.0), r(0.0, 0.0, 1.0, 3.0), r(2.0, 0.0, 3.0, 3.0)],
        )
        .unwrap();
        assert!(matches!(to_simple_polygon(&ring), Err(Error::NotSimplyConnected(_))));
    }
}
