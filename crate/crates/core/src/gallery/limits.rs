//! Parameter regimes of the planar example and `h -> 0` limits of the
//! sectional-radius ratio.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{make_d, make_l, make_ln, make_u, GalleryId};
use crate::bounds::omega;
use crate::error::{Error, Result};

const BISECT_TOL: f64 = 1e-9;
const RICHARDSON_LEVELS: usize = 6;

/// Left-hand sides of the two inequalities that characterise the regime
/// where the planar bound reaches 3 on `C` while the earlier one stays at 2:
/// the first must be positive, the second non-negative.
pub fn c_regime_inequalities(t: f64) -> (f64, f64) {
    let f1 = 1.0 - 5.0 * t * t - 2.0 * t - 2.0 * t * (9.0 * t * t + 4.0 * (1.0 - t).powi(2)).sqrt();
    let f2 = 2.0 * t * (1.0 + 9.0 * t * t).sqrt() + 2.0 * t * (1.0 + 9.0 * t * t + 4.0 * (1.0 - t).powi(2)).sqrt()
        - 1.0
        - t * t
        + 2.0 * t;
    (f1, f2)
}

fn in_regime(t: f64) -> bool {
    let (f1, f2) = c_regime_inequalities(t);
    f1 > 0.0 && f2 >= 0.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeInterval {
    pub lo: f64,
    pub hi: f64,
}

impl RegimeInterval {
    pub fn contains(&self, t: f64) -> bool {
        self.lo <= t && t <= self.hi
    }
}

/// Bisects between a point outside and a point inside the regime.
fn bisect(mut outside: f64, mut inside: f64) -> f64 {
    while (inside - outside).abs() > BISECT_TOL {
        let mid = 0.5 * (inside + outside);
        if in_regime(mid) {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    inside
}

/// Largest interval of `t = h / l` in `(0, 1)` satisfying both inequalities,
/// located on a uniform grid of `samples` points and refined by bisection.
pub fn regime_search_c(samples: usize) -> Result<RegimeInterval> {
    if samples < 1000 {
        return Err(Error::InvalidInput(format!("regime search needs at least 1000 samples, got {samples}")));
    }
    let grid: Vec<f64> = (1..samples).map(|i| i as f64 / samples as f64).collect();
    let ok: Vec<bool> = grid.par_iter().map(|&t| in_regime(t)).collect();
    let mut best: Option<(usize, usize)> = None;
    let mut i = 0;
    while i < ok.len() {
        if ok[i] {
            let start = i;
            while i + 1 < ok.len() && ok[i + 1] {
                i += 1;
            }
            if best.is_none_or(|(a, b)| i - start > b - a) {
                best = Some((start, i));
            }
        }
        i += 1;
    }
    let (a, b) = best.ok_or_else(|| Error::NoSolution("no t in (0, 1) satisfies both inequalities".into()))?;
    let below = if a == 0 { 0.0 } else { grid[a - 1] };
    let above = if b + 1 == grid.len() { 1.0 } else { grid[b + 1] };
    Ok(RegimeInterval { lo: bisect(below, grid[a]), hi: bisect(above, grid[b]) })
}

/// An extrapolated `h -> 0` limit next to its closed form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitConstant {
    pub id: GalleryId,
    pub extrapolated: f64,
    pub closed_form: f64,
    pub abs_err: f64,
    /// Ratios at `h = l / 2^(k+3)`, `k = 0..6`.
    pub samples: Vec<f64>,
}

/// Closed form of the limit of the sectional-radius ratio.
fn closed_limit(id: GalleryId, lambda: f64, n: usize) -> f64 {
    let pi = std::f64::consts::PI;
    match id {
        GalleryId::L => (4.0 + (2.0 * pi).sqrt()) / 5.0,
        GalleryId::D => (20.0 + (12.0 * pi).sqrt()) / 13.0,
        GalleryId::U => (4.0 + 2.0 * (2.0 * pi).sqrt()) / 6.0,
        GalleryId::Ln | GalleryId::C => {
            let nf = n as f64;
            let c_n = omega(n - 1).powf(1.0 / (nf - 1.0));
            (2.0 * nf - 2.0 + c_n * lambda.powf((nf - 2.0) / (nf - 1.0))) / ((nf - 2.0) * lambda + nf)
        }
    }
}

/// Richardson extrapolation of the ratio at `l = 1`, `h = 2^-(k+3)`,
/// eliminating successive powers of `h`.
pub fn limit_constant(id: GalleryId, lambda: f64, n: usize) -> Result<LimitConstant> {
    let ratio = |h: f64| -> Result<f64> {
        let scene = match id {
            GalleryId::L => make_l(1.0, h)?,
            GalleryId::D => make_d(1.0, h)?,
            GalleryId::U => make_u(1.0, h)?,
            GalleryId::Ln => make_ln(1.0, h, lambda, n)?,
            GalleryId::C => return Err(Error::InvalidInput("the planar example has no limit constant".into())),
        };
        scene.main_ratio()
    };
    let samples = (0..RICHARDSON_LEVELS)
        .into_par_iter()
        .map(|k| ratio(0.5f64.powi(k as i32 + 3)))
        .collect::<Result<Vec<f64>>>()?;
    let mut table = samples.clone();
    for j in 1..RICHARDSON_LEVELS {
        let f = 2f64.powi(j as i32);
        for k in (j..RICHARDSON_LEVELS).rev() {
            table[k] = (f * table[k] - table[k - 1]) / (f - 1.0);
        }
    }
    let extrapolated = table[RICHARDSON_LEVELS - 1];
    let closed_form = closed_limit(id, lambda, n);
    Ok(LimitConstant { id, extrapolated, closed_form, abs_err: (extrapolated - closed_form).abs(), samples })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inequality_values() {
        let (f1, f2) = c_regime_inequalities(0.15);
        assert!((f1 - 0.0599).abs() < 1e-3 && (f2 - 0.2134).abs() < 1e-3);
        assert!((c_regime_inequalities(0.1).1 + 0.185).abs() < 1e-3);
    }

    #[test]
    fn regime_contains_point_fifteen() {
        let r = regime_search_c(1000).unwrap();
        assert!(r.contains(0.15) && !r.contains(0.1));
        assert!(!in_regime(r.lo - 1e-8) && in_regime(r.lo));
        assert!(in_regime(r.hi) && !in_regime(r.hi + 1e-8));
    }

    #[test]
    fn too_few_samples() {
        assert!(regime_search_c(10).is_err());
    }
}
