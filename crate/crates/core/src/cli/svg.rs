//! Deterministic SVG figures. 3D scenes are drawn by dropping the last
//! coordinate, which shows the front face of every gallery scene.

use std::fmt::Write;

use super::{DecomposeOutput, LoadedScene};
use crate::bounds::BoundReport;
use crate::error::Result;
use crate::geometry::{ConvexPolytope, Point};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 20.0;

type P2 = (f64, f64);

/// Maps scene coordinates into the canvas, flipping `y`.
struct Frame {
    lo: P2,
    scale: f64,
    height: f64,
}

impl Frame {
    fn fit(points: &[P2]) -> Self {
        let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in points {
            lo = (lo.0.min(p.0), lo.1.min(p.1));
            hi = (hi.0.max(p.0), hi.1.max(p.1));
        }
        let span = (hi.0 - lo.0).max(1e-12);
        let scale = (WIDTH - 2.0 * MARGIN) / span;
        let height = (hi.1 - lo.1) * scale + 2.0 * MARGIN;
        Self { lo, scale, height }
    }

    fn map(&self, p: P2) -> P2 {
        (MARGIN + (p.0 - self.lo.0) * self.scale, self.height - MARGIN - (p.1 - self.lo.1) * self.scale)
    }

    fn points_attr(&self, ring: &[P2]) -> String {
        ring.iter()
            .map(|&p| {
                let (x, y) = self.map(p);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn xy(p: &Point) -> P2 {
    (p.coords()[0], p.coords()[1])
}

/// Outline of a polytope's projection onto the first two coordinates.
fn outline(c: &ConvexPolytope) -> Vec<P2> {
    let pts: Vec<Point> = c.vertices().iter().map(|v| Point::xy(v.coords()[0], v.coords()[1])).collect();
    match ConvexPolytope::hull(&pts, 2) {
        Ok(h) => h.vertices().iter().map(xy).collect(),
        Err(_) => Vec::new(),
    }
}

/// Clips the line through `p` with direction `d` to the box `[lo, hi]`.
fn clip_line(p: P2, d: P2, lo: P2, hi: P2) -> Option<(P2, P2)> {
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for (pc, dc, a, b) in [(p.0, d.0, lo.0, hi.0), (p.1, d.1, lo.1, hi.1)] {
        if dc.abs() < 1e-12 {
            if pc < a || pc > b {
                return None;
            }
        } else {
            let (s0, s1) = ((a - pc) / dc, (b - pc) / dc);
            t0 = t0.max(s0.min(s1));
            t1 = t1.min(s0.max(s1));
        }
    }
    (t0 <= t1).then_some(((p.0 + t0 * d.0, p.1 + t0 * d.1), (p.0 + t1 * d.0, p.1 + t1 * d.1)))
}

fn header(out: &mut String, frame: &Frame, title: &str) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH:.0}\" height=\"{:.0}\" viewBox=\"0 0 {WIDTH:.0} {:.3}\">",
        frame.height.ceil(),
        frame.height
    );
    let _ = writeln!(out, "<title>{title}</title>");
}

/// Components shaded, hull outline, pins, and the witness lines dashed.
/// A single convex component is drawn as its hull outline only.
pub fn emit_figure(scene: &LoadedScene, report: Option<&BoundReport>) -> Result<String> {
    let (union, pins) = match scene {
        LoadedScene::Kernel { union, pins, .. } => (union, pins.as_slice()),
        LoadedScene::Product(p) => (&p.base, p.pins.as_slice()),
    };
    let comps: Vec<Vec<P2>> = union.components().iter().map(outline).collect();
    let all: Vec<P2> = comps.iter().flatten().copied().collect();
    let hull_pts: Vec<Point> = all.iter().map(|&(x, y)| Point::xy(x, y)).collect();
    let hull = ConvexPolytope::hull(&hull_pts, 2)?;
    let hull_ring: Vec<P2> = hull.vertices().iter().map(xy).collect();
    let frame = Frame::fit(&hull_ring);
    let mut out = String::new();
    header(&mut out, &frame, scene.name());
    if let Some(r) = report {
        let _ = writeln!(
            out,
            "<desc>basic {} main {}{}</desc>",
            r.basic,
            r.main,
            r.planar_main.map(|p| format!(" planar {p}")).unwrap_or_default()
        );
    }
    let convex = union.components().len() == 1;
    if !convex {
        for ring in &comps {
            let _ = writeln!(
                out,
                "<polygon class=\"component\" points=\"{}\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" stroke-width=\"1\"/>",
                frame.points_attr(ring)
            );
        }
    }
    let _ = writeln!(
        out,
        "<polygon class=\"hull\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>",
        frame.points_attr(&hull_ring)
    );
    let (lo, hi) = hull_ring.iter().fold(
        ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), p| ((lo.0.min(p.0), lo.1.min(p.1)), (hi.0.max(p.0), hi.1.max(p.1))),
    );
    for pin in pins {
        let p = xy(&pin.point);
        let nu = pin.normal.components();
        if (nu[0] * nu[0] + nu[1] * nu[1]).sqrt() > 1e-9 {
            if let Some((a, b)) = clip_line(p, (-nu[1], nu[0]), lo, hi) {
                let ((x1, y1), (x2, y2)) = (frame.map(a), frame.map(b));
                let _ = writeln!(
                    out,
                    "<line class=\"witness\" x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"#de2d26\" stroke-dasharray=\"6,4\"/>"
                );
            }
        }
        let (cx, cy) = frame.map(p);
        let _ = writeln!(out, "<circle class=\"pin\" cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"4\" fill=\"#de2d26\"/>");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Polygon outline with the convex pieces overlaid.
pub fn emit_decomposition_svg(d: &DecomposeOutput) -> String {
    let ring: Vec<P2> = d.polygon.iter().map(xy).collect();
    let frame = Frame::fit(&ring);
    let mut out = String::new();
    header(&mut out, &frame, &d.scene);
    for piece in &d.pieces {
        let pr: Vec<P2> = piece.vertices.iter().map(xy).collect();
        let _ = writeln!(
            out,
            "<polygon class=\"piece\" points=\"{}\" fill=\"#a1d99b\" fill-opacity=\"0.6\" stroke=\"#31a354\" stroke-width=\"1\"/>",
            frame.points_attr(&pr)
        );
    }
    let _ = writeln!(
        out,
        "<polygon class=\"outline\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>",
        frame.points_attr(&ring)
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clipping_a_vertical_line() {
        let (a, b) = clip_line((1.0, 0.5), (0.0, 1.0), (0.0, 0.0), (2.0, 3.0)).unwrap();
        assert_eq!(a, (1.0, 0.0));
        assert_eq!(b, (1.0, 3.0));
        assert!(clip_line((5.0, 0.5), (0.0, 1.0), (0.0, 0.0), (2.0, 3.0)).is_none());
    }
}
