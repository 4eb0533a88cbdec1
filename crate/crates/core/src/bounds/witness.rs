use serde::{Deserialize, Serialize};

use super::{omega, TheoremParams, ASSUMPTION_TOL};
use crate::error::{Error, Result};
use crate::geometry::{hausdorff_distance_nested, witness_halfspace, ConvexPolytope, Direction, HalfSpace, Point};

/// One pinned boundary point with the half-space it forces and the derived
/// quantities: Hausdorff gap, section at the cut, maximal sectional radius.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifiedWitness {
    pub halfspace: HalfSpace,
    /// `h(co(E) ∩ H, co(E))`.
    pub gap: f64,
    /// `H^{n-1}(co(E) ∩ ∂H)`.
    pub section: f64,
    /// `(section / omega_{n-1})^(1/(n-1))`.
    pub section_radius: f64,
    /// Maximal sectional radius of the hull in the witness direction.
    pub rho: f64,
    pub pin: Point,
    pub a: Point,
    pub b: Point,
}

/// Geometry of a witness without checking any hypothesis.
///
/// The half-space through `pin` with inward normal `face_normal` cuts the
/// hull; the nested Hausdorff pair `(a, b)` of the cut must rebuild the same
/// half-space, otherwise the pin is not a valid witness.
pub fn measure_witness(hull: &ConvexPolytope, pin: &Point, face_normal: &Direction) -> Result<CertifiedWitness> {
    let n = hull.dim();
    let pinned = HalfSpace::through(pin, face_normal.clone());
    let clipped = hull.clip(&pinned)?;
    let pair = hausdorff_distance_nested(&clipped, hull)?;
    let halfspace = witness_halfspace(&pair.a, &pair.b).map_err(|_| Error::AssumptionViolated {
        witness: 0,
        inequality: "positive Hausdorff gap between the cut hull and the hull".into(),
    })?;
    let scale = hull.diameter().max(1.0);
    let same_normal = halfspace.normal.components().iter().zip(face_normal.components()).all(|(x, y)| (x - y).abs() <= 1e-9);
    if !same_normal || (halfspace.offset - pinned.offset).abs() > 1e-9 * scale {
        return Err(Error::AssumptionViolated {
            witness: 0,
            inequality: "half-space from the Hausdorff pair coincides with the pinned face half-space".into(),
        });
    }
    let section = hull.section_measure(&halfspace.normal, halfspace.offset);
    let root = 1.0 / (n as f64 - 1.0);
    let section_radius = (section / omega(n - 1)).powf(root);
    let rho = hull.max_sectional_radius(&halfspace.normal);
    Ok(CertifiedWitness {
        halfspace,
        gap: pair.distance,
        section,
        section_radius,
        rho,
        pin: pin.clone(),
        a: pair.a,
        b: pair.b,
    })
}

/// Checks `gap >= alpha diam` and `section >= beta omega_{n-1} rho^{n-1}`.
pub fn validate_witness(w: &CertifiedWitness, index: usize, n: usize, diam: f64, params: &TheoremParams) -> Result<()> {
    let need_gap = params.alpha * diam;
    if w.gap < need_gap * (1.0 - ASSUMPTION_TOL) {
        return Err(Error::AssumptionViolated {
            witness: index,
            inequality: format!("gap >= alpha * diam ({} < {})", w.gap, need_gap),
        });
    }
    let need_section = params.beta * omega(n - 1) * w.rho.powi(n as i32 - 1);
    if w.section < need_section * (1.0 - ASSUMPTION_TOL) {
        return Err(Error::AssumptionViolated {
            witness: index,
            inequality: format!("section >= beta * omega * rho^(n-1) ({} < {})", w.section, need_section),
        });
    }
    Ok(())
}

/// Builds and validates a witness for a pinned boundary face.
///
/// The caller asserts the geometric premise: every convex subset of `E`
/// containing `pin` lies in `{<x - pin, face_normal> >= 0}`.
pub fn certify_witness(
    hull: &ConvexPolytope,
    pin: &Point,
    face_normal: &Direction,
    params: &TheoremParams,
) -> Result<CertifiedWitness> {
    params.validate()?;
    let w = measure_witness(hull, pin, face_normal)?;
    validate_witness(&w, 0, hull.dim(), hull.diameter(), params)?;
    Ok(w)
}
