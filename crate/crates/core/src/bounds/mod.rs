//! Lower-bound estimators on `k_min` and the deficit algebra behind them.
//!
//! All estimators share the shape `ceil((H(∂E) + extra) / H(∂co(E)))` where
//! `extra >= 0` collects per-witness deficit terms. Each estimator has a
//! `*_ratio` companion returning the value before the ceiling.

mod report;
mod witness;

pub use report::{default_params, evaluate, BoundReport, ClosedFormRow, SceneMeasures, WitnessTerm};
pub use witness::{certify_witness, measure_witness, validate_witness, CertifiedWitness};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative snapping window for ratios that land on an integer.
pub const CEIL_SNAP: f64 = 1e-9;

/// Absolute slack for deficit comparisons.
pub const DEFICIT_TOL: f64 = 1e-9;

/// Relative slack when checking the witness hypotheses.
pub const ASSUMPTION_TOL: f64 = 1e-9;

/// Parameters `p`, `alpha`, `beta` (and optionally `q`) of the sectional
/// radius bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremParams {
    pub p: usize,
    pub alpha: f64,
    pub beta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
}

impl TheoremParams {
    pub fn new(p: usize, alpha: f64, beta: f64) -> Result<Self> {
        let params = Self { p, alpha, beta, q: None };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::BadParams(format!("alpha = {} is not in (0, 1)", self.alpha)));
        }
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(Error::BadParams(format!("beta = {} is not in [0, 1]", self.beta)));
        }
        Ok(())
    }
}

/// Volume of the unit ball in R^n: `pi^(n/2) / Gamma(n/2 + 1)`.
pub fn omega(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0,
        _ => 2.0 * std::f64::consts::PI / n as f64 * omega(n - 2),
    }
}

/// `ceil(numerator / denominator)`, snapping ratios within `CEIL_SNAP`
/// (relative) of an integer to that integer.
pub fn ceil_ratio(numerator: f64, denominator: f64) -> Result<u64> {
    if !(numerator > 0.0 && denominator > 0.0) || !numerator.is_finite() || !denominator.is_finite() {
        return Err(Error::NonPositive { numerator, denominator });
    }
    Ok(snap_ceil(numerator / denominator))
}

pub(crate) fn snap_ceil(ratio: f64) -> u64 {
    let nearest = ratio.round();
    if (ratio - nearest).abs() <= CEIL_SNAP * ratio.abs().max(1.0) {
        nearest as u64
    } else {
        ratio.ceil() as u64
    }
}

/// Perimeter deficit `δ(B, A) = H(∂B) - H(∂A)` for nested `A ⊆ B`.
pub fn deficit(outer: f64, inner: f64) -> Result<f64> {
    let d = outer - inner;
    if d < -DEFICIT_TOL {
        return Err(Error::NegativeDeficit { outer, inner });
    }
    Ok(if d.abs() <= DEFICIT_TOL { 0.0 } else { d })
}

/// `s^2 / (c + sqrt(c^2 + s^2))`, strictly increasing in `s > 0` for fixed `c > 0`.
pub fn auxiliary(s: f64, c: f64) -> f64 {
    s * s / (c + (c * c + s * s).sqrt())
}

/// Lower bound on the deficit of a body over its cut at Hausdorff gap `h`
/// with section radius `r`: `omega_{n-1} r^{n-2} h^2 / (r + sqrt(r^2 + h^2))`.
pub fn quantitative_deficit_lb(r: f64, h: f64, n: usize) -> f64 {
    if h == 0.0 {
        return 0.0;
    }
    omega(n - 1) * r.powi(n as i32 - 2) * auxiliary(h, r)
}

/// Ratio bound `ceil(H(∂E) / H(∂co(E)))`.
pub fn basic_lower_bound(boundary_e: f64, boundary_hull: f64) -> Result<u64> {
    ceil_ratio(boundary_e, boundary_hull)
}

fn check_measures(boundary_e: f64, boundary_hull: f64, diam: f64) -> Result<()> {
    if !(boundary_e > 0.0 && boundary_hull > 0.0 && diam > 0.0) {
        return Err(Error::NonPositive { numerator: boundary_e, denominator: boundary_hull });
    }
    Ok(())
}

/// Summand of the sectional-radius bound for one witness with radius `rho`.
pub fn main_summand(n: usize, diam: f64, alpha: f64, beta: f64, rho: f64) -> f64 {
    let ad = alpha * diam;
    omega(n - 1) * alpha * alpha * beta.powi(n as i32 - 2) * rho.powi(n as i32 - 2) * diam * diam
        / (rho + (rho * rho + ad * ad).sqrt())
}

/// Ratio inside the ceiling of [`main_bound`], after validating the witnesses.
pub fn main_ratio(
    n: usize,
    boundary_e: f64,
    boundary_hull: f64,
    diam_hull: f64,
    params: &TheoremParams,
    witnesses: &[CertifiedWitness],
) -> Result<f64> {
    check_measures(boundary_e, boundary_hull, diam_hull)?;
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    if params.p != witnesses.len() {
        return Err(Error::ParamMismatch(format!(
            "p = {} but {} witnesses were supplied",
            params.p,
            witnesses.len()
        )));
    }
    if witnesses.is_empty() {
        return Ok(boundary_e / boundary_hull);
    }
    params.validate()?;
    for (j, w) in witnesses.iter().enumerate() {
        validate_witness(w, j, n, diam_hull, params)?;
    }
    let extra: f64 = witnesses
        .iter()
        .map(|w| main_summand(n, diam_hull, params.alpha, params.beta, w.rho))
        .sum();
    Ok((boundary_e + extra) / boundary_hull)
}

/// Sectional-radius lower bound on `k_min`. With no witnesses it is the
/// ratio bound; `0^0 = 1` for `n = 2, beta = 0`.
pub fn main_bound(
    n: usize,
    boundary_e: f64,
    boundary_hull: f64,
    diam_hull: f64,
    params: &TheoremParams,
    witnesses: &[CertifiedWitness],
) -> Result<u64> {
    Ok(snap_ceil(main_ratio(n, boundary_e, boundary_hull, diam_hull, params, witnesses)?))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::BadParams(format!("alpha = {alpha} is not in (0, 1)")))
    }
}

pub fn planar_ratio(boundary_e: f64, boundary_hull: f64, diam_hull: f64, alpha: f64, rhos: &[f64]) -> Result<f64> {
    check_measures(boundary_e, boundary_hull, diam_hull)?;
    if rhos.is_empty() {
        return Ok(boundary_e / boundary_hull);
    }
    check_alpha(alpha)?;
    if let Some(r) = rhos.iter().find(|r| r.is_nan() || **r <= 0.0) {
        return Err(Error::BadParams(format!("sectional radius {r} is not positive")));
    }
    let extra: f64 = rhos.iter().map(|&rho| main_summand(2, diam_hull, alpha, 0.0, rho)).sum();
    Ok((boundary_e + extra) / boundary_hull)
}

/// Planar sectional-radius bound, one term per radius in `rhos`.
pub fn planar_bound(boundary_e: f64, boundary_hull: f64, diam_hull: f64, alpha: f64, rhos: &[f64]) -> Result<u64> {
    Ok(snap_ceil(planar_ratio(boundary_e, boundary_hull, diam_hull, alpha, rhos)?))
}

pub fn cglp_planar_ratio(boundary_e: f64, boundary_hull: f64, diam_hull: f64, alpha: f64, p: usize) -> Result<f64> {
    check_measures(boundary_e, boundary_hull, diam_hull)?;
    if p == 0 {
        return Ok(boundary_e / boundary_hull);
    }
    check_alpha(alpha)?;
    let a2 = alpha * alpha;
    let extra = 4.0 * a2 * p as f64 / (1.0 + (1.0 + 4.0 * a2).sqrt()) * diam_hull;
    Ok((boundary_e + extra) / boundary_hull)
}

/// Planar bound with every sectional radius replaced by `diam / 2`.
pub fn cglp_planar_bound(boundary_e: f64, boundary_hull: f64, diam_hull: f64, alpha: f64, p: usize) -> Result<u64> {
    Ok(snap_ceil(cglp_planar_ratio(boundary_e, boundary_hull, diam_hull, alpha, p)?))
}

/// Both sides of `δ(co, E_j) >= δ(co, co ∩ H_j)` for `E_j ⊆ co ∩ H_j ⊆ co`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

pub fn deficit_decomposition_check(hull_measure: f64, clipped_measure: f64, component_measure: f64) -> DecompositionCheck {
    let lhs = hull_measure - component_measure;
    let rhs = hull_measure - clipped_measure;
    DecompositionCheck { lhs, rhs, ok: lhs >= rhs - DEFICIT_TOL }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn unit_ball_volumes() {
        assert_eq!(omega(0), 1.0);
        assert_eq!(omega(1), 2.0);
        assert_relative_eq!(omega(2), PI);
        assert_relative_eq!(omega(3), 4.0 * PI / 3.0);
        assert_relative_eq!(omega(4), PI * PI / 2.0);
    }

    #[test]
    fn ceil_ratio_snaps() {
        assert_eq!(ceil_ratio(44.0, 26.0).unwrap(), 2);
        assert_eq!(ceil_ratio(26.0, 26.0).unwrap(), 1);
        assert_eq!(ceil_ratio(26.0 + 1e-12, 26.0).unwrap(), 1);
        assert_eq!(ceil_ratio(26.0 + 1e-6, 26.0).unwrap(), 2);
        assert!(matches!(ceil_ratio(0.0, 1.0), Err(Error::NonPositive { .. })));
        assert!(matches!(ceil_ratio(1.0, -1.0), Err(Error::NonPositive { .. })));
    }

    #[test]
    fn deficits() {
        assert_eq!(deficit(6.0, 6.0).unwrap(), 0.0);
        assert_eq!(deficit(6.0, 4.0).unwrap(), 2.0);
        assert_eq!(deficit(6.0, 6.0 + 1e-12).unwrap(), 0.0);
        assert!(matches!(deficit(4.0, 6.0), Err(Error::NegativeDeficit { .. })));
    }

    #[test]
    fn quantitative_deficit_values() {
        assert_eq!(quantitative_deficit_lb(2.0, 0.0, 3), 0.0);
        // Cone of radius 1 and height 1 minus its base disk.
        let cone_minus_disk = PI * (2.0_f64.sqrt() - 1.0);
        assert_relative_eq!(quantitative_deficit_lb(1.0, 1.0, 3), cone_minus_disk, epsilon = 1e-14);
        assert_relative_eq!(quantitative_deficit_lb(1.0, 1.0, 3), 1.30129, epsilon = 1e-5);
        let h = 1.0_f64;
        let r = 1.5 * h;
        let expected = 2.0 * h * h / (r + (2.25 * h * h + h * h).sqrt());
        assert_relative_eq!(quantitative_deficit_lb(r, h, 2), expected, epsilon = 1e-15);
    }

    #[test]
    fn basic_bound_examples() {
        assert_eq!(basic_lower_bound(44.0, 26.0).unwrap(), 2);
        assert_eq!(basic_lower_bound(46.0, 45.0 + 82.0_f64.sqrt()).unwrap(), 1);
        assert_eq!(basic_lower_bound(4.0, 4.0).unwrap(), 1);
    }

    #[test]
    fn main_bound_without_witnesses_is_basic() {
        let params = TheoremParams { p: 0, alpha: 0.5, beta: 1.0, q: None };
        assert_eq!(main_bound(3, 46.0, 54.0, 10.0, &params, &[]).unwrap(), basic_lower_bound(46.0, 54.0).unwrap());
        let mismatch = TheoremParams { p: 1, ..params };
        assert!(matches!(main_bound(3, 46.0, 54.0, 10.0, &mismatch, &[]), Err(Error::ParamMismatch(_))));
    }

    #[test]
    fn planar_and_cglp_agree_at_half_diameter() {
        let (be, bh, d, a) = (4.6, 2.9, 1.2, 0.7);
        for p in 0..4 {
            let rhos = vec![d / 2.0; p];
            let pr = planar_ratio(be, bh, d, a, &rhos).unwrap();
            let cr = cglp_planar_ratio(be, bh, d, a, p).unwrap();
            assert_relative_eq!(pr, cr, epsilon = 1e-14);
        }
        assert_eq!(planar_bound(be, bh, d, a, &[]).unwrap(), basic_lower_bound(be, bh).unwrap());
        assert_eq!(cglp_planar_bound(be, bh, d, a, 0).unwrap(), basic_lower_bound(be, bh).unwrap());
        assert!(matches!(cglp_planar_bound(be, bh, d, 1.0, 1), Err(Error::BadParams(_))));
    }

    #[test]
    fn auxiliary_is_increasing_on_grid() {
        let grid: Vec<f64> = (1..=100).map(|i| i as f64 * 0.1).collect();
        for &c in &grid {
            for w in grid.windows(2) {
                assert!(auxiliary(w[1], c) > auxiliary(w[0], c));
            }
        }
    }

    #[test]
    fn decomposition_check() {
        let same = deficit_decomposition_check(10.0, 7.0, 7.0);
        assert_eq!(same.lhs, same.rhs);
        assert!(same.ok);
        assert!(deficit_decomposition_check(10.0, 7.0, 6.0).ok);
        assert!(!deficit_decomposition_check(10.0, 7.0, 7.5).ok);
    }

    #[test]
    fn params_validation() {
        assert!(TheoremParams::new(1, 0.5, 1.0).is_ok());
        assert!(TheoremParams::new(1, 0.0, 1.0).is_err());
        assert!(TheoremParams::new(1, 1.0, 1.0).is_err());
        assert!(TheoremParams::new(1, 0.5, 1.5).is_err());
    }
}
