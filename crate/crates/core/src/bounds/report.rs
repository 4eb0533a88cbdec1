use serde::{Deserialize, Serialize};

use super::{
    cglp_planar_ratio, main_ratio, main_summand, omega, planar_ratio, quantitative_deficit_lb, snap_ceil,
    CertifiedWitness, TheoremParams,
};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::union::MonteCarloSummary;

/// Report schema version.
pub const SCHEMA: u32 = 1;

/// Scalar inputs shared by every estimator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SceneMeasures {
    pub dim: usize,
    pub boundary_e: f64,
    pub boundary_hull: f64,
    pub diam: f64,
    pub connected_components: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessTerm {
    pub pin: Point,
    pub gap: f64,
    pub section: f64,
    pub section_radius: f64,
    pub rho: f64,
    /// Contribution of this witness to the numerator of the main bound.
    pub main_term: f64,
    /// Deficit lower bound at the witness's own gap and section radius.
    pub quantitative_deficit: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormRow {
    pub quantity: String,
    pub closed_form: f64,
    pub kernel: f64,
    pub rel_err: f64,
    pub pass: bool,
}

impl ClosedFormRow {
    pub fn new(quantity: impl Into<String>, closed_form: f64, kernel: f64, tol: f64) -> Self {
        let rel_err = (kernel - closed_form).abs() / closed_form.abs().max(f64::MIN_POSITIVE);
        Self { quantity: quantity.into(), closed_form, kernel, rel_err, pass: rel_err <= tol }
    }
}

/// Every lower bound computed for one scene, with the terms behind them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub schema: u32,
    pub scene: String,
    pub seed: u64,
    pub measures: SceneMeasures,
    pub params: Option<TheoremParams>,
    pub basic: u64,
    pub basic_ratio: f64,
    pub cglp_planar: Option<u64>,
    pub cglp_ratio: Option<f64>,
    pub main: u64,
    pub main_ratio: f64,
    pub planar_main: Option<u64>,
    pub planar_ratio: Option<f64>,
    pub upper: Option<u64>,
    pub witnesses: Vec<WitnessTerm>,
    pub monte_carlo: Option<MonteCarloSummary>,
    pub closed_forms: Vec<ClosedFormRow>,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// Named lower bounds present in the report.
    pub fn lower_bounds(&self) -> Vec<(&'static str, u64)> {
        let mut out = vec![("basic", self.basic), ("main", self.main)];
        if let Some(v) = self.cglp_planar {
            out.push(("cglp_planar", v));
        }
        if let Some(v) = self.planar_main {
            out.push(("planar_main", v));
        }
        out
    }

    pub fn best_lower(&self) -> u64 {
        self.lower_bounds().into_iter().map(|(_, v)| v).max().unwrap_or(1)
    }
}

/// Largest admissible parameters for a witness set: `alpha = min gap / diam`
/// and `beta = min (section / (omega rho^{n-1}))`, capped at 1.
pub fn default_params(dim: usize, diam: f64, witnesses: &[CertifiedWitness]) -> Option<TheoremParams> {
    if witnesses.is_empty() {
        return None;
    }
    let alpha = witnesses.iter().map(|w| w.gap / diam).fold(f64::INFINITY, f64::min);
    let beta = witnesses
        .iter()
        .map(|w| w.section / (omega(dim - 1) * w.rho.powi(dim as i32 - 1)))
        .fold(1.0_f64, f64::min);
    Some(TheoremParams { p: witnesses.len(), alpha, beta, q: None })
}

/// Runs every estimator applicable to the scene dimension.
pub fn evaluate(
    scene: &str,
    measures: &SceneMeasures,
    params: Option<&TheoremParams>,
    witnesses: &[CertifiedWitness],
) -> Result<BoundReport> {
    let SceneMeasures { dim, boundary_e, boundary_hull, diam, .. } = *measures;
    let basic_ratio = boundary_e / boundary_hull;
    let basic = super::basic_lower_bound(boundary_e, boundary_hull)?;
    let params = match params {
        Some(p) => Some(p.clone()),
        None => default_params(dim, diam, witnesses),
    };
    if let Some(p) = &params {
        if p.p != witnesses.len() {
            return Err(Error::ParamMismatch(format!("p = {} but {} pins were supplied", p.p, witnesses.len())));
        }
    }
    let main_ratio_v = match &params {
        Some(p) => main_ratio(dim, boundary_e, boundary_hull, diam, p, witnesses)?,
        None => basic_ratio,
    };
    let (mut cglp, mut cglp_r, mut planar, mut planar_r) = (None, None, None, None);
    if dim == 2 {
        if let Some(p) = &params {
            let c = cglp_planar_ratio(boundary_e, boundary_hull, diam, p.alpha, p.p)?;
            let rhos: Vec<f64> = witnesses.iter().map(|w| w.rho).collect();
            let pr = planar_ratio(boundary_e, boundary_hull, diam, p.alpha, &rhos)?;
            cglp = Some(snap_ceil(c));
            cglp_r = Some(c);
            planar = Some(snap_ceil(pr));
            planar_r = Some(pr);
        }
    }
    let witness_terms = witnesses
        .iter()
        .map(|w| WitnessTerm {
            pin: w.pin.clone(),
            gap: w.gap,
            section: w.section,
            section_radius: w.section_radius,
            rho: w.rho,
            main_term: params
                .as_ref()
                .map(|p| main_summand(dim, diam, p.alpha, p.beta, w.rho))
                .unwrap_or(0.0),
            quantitative_deficit: quantitative_deficit_lb(w.section_radius, w.gap, dim),
        })
        .collect();
    let main = snap_ceil(main_ratio_v);
    let mut notes = Vec::new();
    if main < basic {
        notes.push(format!("main bound {main} below ratio bound {basic}"));
    }
    Ok(BoundReport {
        schema: SCHEMA,
        scene: scene.to_string(),
        seed: 0,
        measures: measures.clone(),
        params,
        basic,
        basic_ratio,
        cglp_planar: cglp,
        cglp_ratio: cglp_r,
        main,
        main_ratio: main_ratio_v,
        planar_main: planar,
        planar_ratio: planar_r,
        upper: None,
        witnesses: witness_terms,
        monte_carlo: None,
        closed_forms: Vec::new(),
        notes,
    })
}
