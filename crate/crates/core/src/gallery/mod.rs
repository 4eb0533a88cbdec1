//! Parametric example scenes with known closed forms.
//!
//! Coordinates: `x` runs along the long side `l`, `y` is the height and, in
//! 3D, `z` is the depth. Every closed form below is re-derived by the kernel
//! in [`ExampleScene::closed_form_rows`].

mod limits;

pub use limits::{c_regime_inequalities, limit_constant, regime_search_c, LimitConstant, RegimeInterval};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    default_params, evaluate, measure_witness, omega, BoundReport, CertifiedWitness, ClosedFormRow, SceneMeasures,
    TheoremParams,
};
use crate::error::{Error, Result};
use crate::geometry::{ConvexPolytope, Direction, Point};
use crate::union::{extrude, MonteCarloSummary, Pin, ProductScene, SceneJson, SolidUnion};

/// Relative tolerance for closed form against kernel comparisons.
pub const CLOSED_FORM_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GalleryId {
    C,
    L,
    D,
    U,
    Ln,
}

impl GalleryId {
    pub const ALL: [GalleryId; 5] = [GalleryId::C, GalleryId::L, GalleryId::D, GalleryId::U, GalleryId::Ln];

    pub fn describe(self) -> &'static str {
        match self {
            GalleryId::C => "planar C: three boxes around a slot, one pin",
            GalleryId::L => "3D L-shaped bar, one pin",
            GalleryId::D => "3D prism with a triangular tunnel, one pin",
            GalleryId::U => "3D U-shaped bar, two pins",
            GalleryId::Ln => "L-shaped section times a cube in R^n, one pin",
        }
    }

    /// Minimal number of convex components, known by construction.
    pub fn k_min(self) -> u64 {
        match self {
            GalleryId::C | GalleryId::D | GalleryId::U => 3,
            GalleryId::L | GalleryId::Ln => 2,
        }
    }
}

impl fmt::Display for GalleryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GalleryId::C => "C",
            GalleryId::L => "L",
            GalleryId::D => "D",
            GalleryId::U => "U",
            GalleryId::Ln => "Ln",
        };
        f.write_str(s)
    }
}

impl FromStr for GalleryId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "c" => Ok(GalleryId::C),
            "L" | "l" => Ok(GalleryId::L),
            "D" | "d" => Ok(GalleryId::D),
            "U" | "u" => Ok(GalleryId::U),
            "Ln" | "LN" | "ln" | "L_n" => Ok(GalleryId::Ln),
            other => Err(Error::InvalidInput(format!("unknown gallery id {other:?}"))),
        }
    }
}

/// Parameters a gallery scene was built with; stored in scene JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GalleryTag {
    pub id: GalleryId,
    pub l: f64,
    pub h: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl GalleryTag {
    pub fn build(&self) -> Result<ExampleScene> {
        match self.id {
            GalleryId::C => make_c(self.l, self.h),
            GalleryId::L => make_l(self.l, self.h),
            GalleryId::D => make_d(self.l, self.h),
            GalleryId::U => make_u(self.l, self.h),
            GalleryId::Ln => make_ln(self.l, self.h, self.lambda.unwrap_or(2.0), self.n.unwrap_or(3)),
        }
    }
}

/// A gallery scene: explicit union for `n <= 3`, product form for `L_n`.
#[derive(Clone, Debug)]
pub struct ExampleScene {
    pub tag: GalleryTag,
    pub kernel: Option<SolidUnion>,
    pub product: Option<ProductScene>,
    pub pins: Vec<Pin>,
    pub closed_forms: BTreeMap<String, f64>,
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadParams(msg()))
    }
}

fn check_lh(l: f64, h: f64, factor: f64, name: &str) -> Result<()> {
    check(l.is_finite() && h.is_finite() && h > 0.0 && l > factor * h, || {
        if factor == 1.0 {
            format!("{name} needs l > h > 0, got l = {l}, h = {h}")
        } else {
            format!("{name} needs l > {factor}h > 0, got l = {l}, h = {h}")
        }
    })
}

fn pin(point: Point, normal: Direction) -> Pin {
    Pin { point, normal }
}

fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<ConvexPolytope> {
    ConvexPolytope::cuboid(&[x0, y0], &[x1, y1])
}

fn bx(lo: [f64; 3], hi: [f64; 3]) -> Result<ConvexPolytope> {
    ConvexPolytope::cuboid(&lo, &hi)
}

fn forms(entries: &[(&str, f64)]) -> BTreeMap<String, f64> {
    entries.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn pin_forms(map: &mut BTreeMap<String, f64>, j: usize, gap: f64, section: f64, rho: f64) {
    map.insert(format!("gap[{j}]"), gap);
    map.insert(format!("section[{j}]"), section);
    map.insert(format!("rho[{j}]"), rho);
}

/// `[0,h]x[0,3h] ∪ [0,l]x[2h,3h] ∪ [0,l]x[0,h]`, pinned on the inner face `x = h`.
pub fn make_c(l: f64, h: f64) -> Result<ExampleScene> {
    check_lh(l, h, 1.0, "C")?;
    let union = SolidUnion::new(
        "C",
        vec![rect(0.0, 0.0, h, 3.0 * h)?, rect(0.0, 2.0 * h, l, 3.0 * h)?, rect(0.0, 0.0, l, h)?],
    )?;
    let mut cf = forms(&[
        ("boundary_E", 4.0 * l + 4.0 * h),
        ("boundary_hull", 2.0 * l + 6.0 * h),
        ("diam", (l * l + 9.0 * h * h).sqrt()),
    ]);
    pin_forms(&mut cf, 0, l - h, 3.0 * h, 1.5 * h);
    Ok(ExampleScene {
        tag: GalleryTag { id: GalleryId::C, l, h, lambda: None, n: None },
        kernel: Some(union),
        product: None,
        pins: vec![pin(Point::xy(h, 1.5 * h), Direction::axis(2, 0, -1.0))],
        closed_forms: cf,
    })
}

/// `[0,h]x[0,2h]x[0,h] ∪ [0,l]x[h,2h]x[0,h]`, pinned on the face `x = h` below the bar.
pub fn make_l(l: f64, h: f64) -> Result<ExampleScene> {
    check_lh(l, h, 1.0, "L")?;
    let union = SolidUnion::new(
        "L",
        vec![bx([0.0, 0.0, 0.0], [h, 2.0 * h, h])?, bx([0.0, h, 0.0], [l, 2.0 * h, h])?],
    )?;
    let slant = ((l - h).powi(2) + h * h).sqrt();
    let mut cf = forms(&[
        ("boundary_E", 4.0 * h * l + 6.0 * h * h),
        ("boundary_hull", 4.0 * h * l + 5.0 * h * h + h * slant),
        ("diam", (l * l + 5.0 * h * h).sqrt()),
    ]);
    pin_forms(&mut cf, 0, l - h, 2.0 * h * h, (2.0 * h * h / std::f64::consts::PI).sqrt());
    Ok(ExampleScene {
        tag: GalleryTag { id: GalleryId::L, l, h, lambda: None, n: None },
        kernel: Some(union),
        product: None,
        pins: vec![pin(Point::xyz(h, 0.5 * h, 0.5 * h), Direction::axis(3, 0, -1.0))],
        closed_forms: cf,
    })
}

/// The prism of depth `4h` over the pentagon `(0,0), (h,0), (l,h), (l,3h), (0,3h)`
/// with the triangular tunnel `(h,h), (h,2h), (l-h,2h)` running through it.
pub fn make_d(l: f64, h: f64) -> Result<ExampleScene> {
    check_lh(l, h, 2.0, "D")?;
    let depth = 4.0 * h;
    let union = SolidUnion::new(
        "D",
        vec![
            bx([0.0, 0.0, 0.0], [h, 3.0 * h, depth])?,
            bx([0.0, 2.0 * h, 0.0], [l, 3.0 * h, depth])?,
            ConvexPolytope::prism(&[(h, 0.0), (l, h), (l, 2.0 * h), (l - h, 2.0 * h), (h, h)], 0.0, depth)?,
        ],
    )?;
    let s1 = ((l - h).powi(2) + h * h).sqrt();
    let s2 = ((l - 2.0 * h).powi(2) + h * h).sqrt();
    let mut cf = forms(&[
        ("boundary_E", 12.0 * l * h + 4.0 * h * s1 + 4.0 * h * s2 + 23.0 * h * h),
        ("boundary_hull", 9.0 * l * h + 4.0 * h * s1 + 25.0 * h * h),
        ("diam", (l * l + 25.0 * h * h).sqrt()),
    ]);
    pin_forms(&mut cf, 0, l - h, 12.0 * h * h, (12.0 * h * h / std::f64::consts::PI).sqrt());
    Ok(ExampleScene {
        tag: GalleryTag { id: GalleryId::D, l, h, lambda: None, n: None },
        kernel: Some(union),
        product: None,
        pins: vec![pin(Point::xyz(h, 1.5 * h, 2.0 * h), Direction::axis(3, 0, -1.0))],
        closed_forms: cf,
    })
}

/// A bar `[0,l]x[0,h]x[0,h]` with two posts of side `h` at its ends, pinned
/// on both inner post faces.
pub fn make_u(l: f64, h: f64) -> Result<ExampleScene> {
    check_lh(l, h, 3.0, "U")?;
    let union = SolidUnion::new(
        "U",
        vec![
            bx([0.0, 0.0, 0.0], [l, h, h])?,
            bx([0.0, h, 0.0], [h, 2.0 * h, h])?,
            bx([l - h, h, 0.0], [l, 2.0 * h, h])?,
        ],
    )?;
    let mut cf = forms(&[
        ("boundary_E", 4.0 * h * l + 10.0 * h * h),
        ("boundary_hull", 6.0 * h * l + 4.0 * h * h),
        ("diam", (l * l + 5.0 * h * h).sqrt()),
    ]);
    let rho = (2.0 * h * h / std::f64::consts::PI).sqrt();
    pin_forms(&mut cf, 0, l - h, 2.0 * h * h, rho);
    pin_forms(&mut cf, 1, l - h, 2.0 * h * h, rho);
    Ok(ExampleScene {
        tag: GalleryTag { id: GalleryId::U, l, h, lambda: None, n: None },
        kernel: Some(union),
        product: None,
        pins: vec![
            pin(Point::xyz(h, 1.5 * h, 0.5 * h), Direction::axis(3, 0, -1.0)),
            pin(Point::xyz(l - h, 1.5 * h, 0.5 * h), Direction::axis(3, 0, 1.0)),
        ],
        closed_forms: cf,
    })
}

/// Planar base of `L_n`: leg `[0,h]x[0,λh]` under the bar `[0,l]x[(λ-1)h,λh]`.
pub fn l2_base(l: f64, h: f64, lambda: f64) -> Result<(SolidUnion, Pin)> {
    let base = SolidUnion::new(
        "L2",
        vec![rect(0.0, 0.0, h, lambda * h)?, rect(0.0, (lambda - 1.0) * h, l, lambda * h)?],
    )?;
    Ok((base, pin(Point::xy(h, 0.5 * (lambda - 1.0) * h), Direction::axis(2, 0, -1.0))))
}

/// `L_n = L_2 x [0,h]^{n-2}`; for `n = 3` the explicit extruded union is kept too.
pub fn make_ln(l: f64, h: f64, lambda: f64, n: usize) -> Result<ExampleScene> {
    check_lh(l, h, 1.0, "L_n")?;
    check(lambda.is_finite() && lambda > 1.0, || format!("L_n needs lambda > 1, got {lambda}"))?;
    check(n >= 3, || format!("L_n needs n >= 3, got {n}"))?;
    let (base, base_pin) = l2_base(l, h, lambda)?;
    let mut product = ProductScene::new(format!("L{n}"), n, h, base.clone(), vec![base_pin.clone()])?;
    let tag = GalleryTag { id: GalleryId::Ln, l, h, lambda: Some(lambda), n: Some(n) };
    product.gallery = Some(tag.clone());
    let (kernel, pins) = if n == 3 {
        let mut u = extrude(&base, h)?;
        u = SolidUnion::new("L3", u.components().to_vec())?;
        let p = base_pin.point.coords();
        (Some(u), vec![pin(Point::xyz(p[0], p[1], 0.5 * h), Direction::axis(3, 0, -1.0))])
    } else {
        (None, vec![base_pin])
    };
    let k = n as i32 - 2;
    let nf = n as f64;
    let hk = h.powi(k);
    let slant = ((l - h).powi(2) + (lambda - 1.0).powi(2) * h * h).sqrt();
    let mut cf = forms(&[
        ("boundary_E", 2.0 * hk * ((nf - 1.0) * l + ((nf - 1.0) * lambda - nf + 2.0) * h)),
        (
            "boundary_hull",
            hk * (((nf - 2.0) * lambda + nf - 1.0) * l + slant + ((nf - 1.0) * lambda - nf + 4.0) * h),
        ),
        ("diam", (l * l + (lambda * lambda + nf - 2.0) * h * h).sqrt()),
    ]);
    let section = lambda * h.powi(n as i32 - 1);
    pin_forms(&mut cf, 0, l - h, section, (section / omega(n - 1)).powf(1.0 / (nf - 1.0)));
    Ok(ExampleScene { tag, kernel, product: Some(product), pins, closed_forms: cf })
}

/// Result of the invariant suite for one scene.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Everything `gallery verify` reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GallerySummary {
    pub tag: GalleryTag,
    pub report: BoundReport,
    pub invariants: Vec<InvariantCheck>,
    pub pass: bool,
}

/// Monte-Carlo settings for [`ExampleScene::verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mc_samples: Option<usize>,
    pub seed: u64,
}

impl ExampleScene {
    pub fn id(&self) -> GalleryId {
        self.tag.id
    }

    pub fn name(&self) -> String {
        match (self.tag.id, self.tag.n) {
            (GalleryId::Ln, Some(n)) => format!("L{n}"),
            (id, _) => id.to_string(),
        }
    }

    pub fn dim(&self) -> usize {
        match (&self.kernel, &self.product) {
            (Some(k), _) => k.dim(),
            (None, Some(p)) => p.dim,
            (None, None) => unreachable!("a gallery scene has a kernel or a product form"),
        }
    }

    /// Convex hull of the explicit union, when there is one.
    pub fn hull(&self) -> Result<Option<ConvexPolytope>> {
        self.kernel.as_ref().map(SolidUnion::hull).transpose()
    }

    pub fn measures(&self) -> Result<SceneMeasures> {
        match (&self.kernel, &self.product) {
            (Some(k), _) => {
                let hull = k.hull()?;
                Ok(SceneMeasures {
                    dim: k.dim(),
                    boundary_e: k.boundary_measure()?,
                    boundary_hull: hull.surface_measure(),
                    diam: hull.diameter(),
                    connected_components: k.connected_component_count(),
                })
            }
            (None, Some(p)) => p.measures(),
            (None, None) => unreachable!(),
        }
    }

    pub fn witnesses(&self) -> Result<Vec<CertifiedWitness>> {
        match (&self.kernel, &self.product) {
            (Some(k), _) => {
                let hull = k.hull()?;
                self.pins
                    .iter()
                    .map(|p| {
                        k.check_pin(p)?;
                        measure_witness(&hull, &p.point, &p.normal)
                    })
                    .collect()
            }
            (None, Some(p)) => p.witnesses(),
            (None, None) => unreachable!(),
        }
    }

    /// Parameters used for this scene: `p` = number of pins, `alpha` from the
    /// smallest gap, `beta = 1` in 3D and above, `beta = 0` in the plane.
    pub fn params(&self) -> Result<TheoremParams> {
        let m = self.measures()?;
        let w = self.witnesses()?;
        let mut p = default_params(m.dim, m.diam, &w).expect("every gallery scene has a pin");
        p.beta = if m.dim == 2 { 0.0 } else { p.beta.min(1.0) };
        p.validate()?;
        Ok(p)
    }

    /// Ratio inside the ceiling of the sectional-radius bound.
    pub fn main_ratio(&self) -> Result<f64> {
        let m = self.measures()?;
        crate::bounds::main_ratio(m.dim, m.boundary_e, m.boundary_hull, m.diam, &self.params()?, &self.witnesses()?)
    }

    /// Closed forms compared with the kernel (or the product path for `n >= 4`).
    pub fn closed_form_rows(&self) -> Result<Vec<ClosedFormRow>> {
        let m = self.measures()?;
        let w = self.witnesses()?;
        let mut computed: BTreeMap<String, f64> = BTreeMap::new();
        computed.insert("boundary_E".into(), m.boundary_e);
        computed.insert("boundary_hull".into(), m.boundary_hull);
        computed.insert("diam".into(), m.diam);
        for (j, wj) in w.iter().enumerate() {
            computed.insert(format!("gap[{j}]"), wj.gap);
            computed.insert(format!("section[{j}]"), wj.section);
            computed.insert(format!("rho[{j}]"), wj.rho);
        }
        let mut rows: Vec<ClosedFormRow> = self
            .closed_forms
            .iter()
            .map(|(k, cf)| ClosedFormRow::new(k.clone(), *cf, computed[k], CLOSED_FORM_TOL))
            .collect();
        if let (Some(k), Some(p)) = (&self.kernel, &self.product) {
            // Both paths exist for L_3: the product formula against the explicit union.
            let prod = p.product()?;
            rows.push(ClosedFormRow::new("boundary_E[product]", self.closed_forms["boundary_E"], prod.boundary_measure(), CLOSED_FORM_TOL));
            rows.push(ClosedFormRow::new("volume[product]", prod.volume(), k.enclosed_volume()?, CLOSED_FORM_TOL));
        }
        Ok(rows)
    }

    /// Bound report with closed-form rows and notes attached.
    pub fn report(&self) -> Result<BoundReport> {
        let m = self.measures()?;
        let params = self.params()?;
        let mut r = evaluate(&self.name(), &m, Some(&params), &self.witnesses()?)?;
        r.closed_forms = self.closed_form_rows()?;
        let k = self.id().k_min();
        if r.best_lower() < k {
            r.notes.push(format!("bound {} is not sharp: k_min = {k}", r.best_lower()));
        }
        if let Some(k) = &self.kernel {
            if k.dim() == 2 {
                r = crate::decomposer::sandwich(k, r)?;
            }
        }
        Ok(r)
    }

    /// Scene JSON, or product scene JSON for `n >= 4`.
    pub fn to_json_value(&self) -> serde_json::Value {
        match (&self.kernel, &self.product) {
            (Some(k), _) => {
                let mut j: SceneJson = k.to_json(&self.pins);
                j.gallery = Some(self.tag.clone());
                serde_json::to_value(j).expect("scene JSON serializes")
            }
            (None, Some(p)) => serde_json::to_value(p.to_json()).expect("product JSON serializes"),
            (None, None) => unreachable!(),
        }
    }

    /// Runs the invariant suite: closed forms, bound ordering, connectedness,
    /// pin separation, optional Monte-Carlo agreement.
    pub fn verify(&self, opts: VerifyOptions) -> Result<GallerySummary> {
        let mut report = self.report()?;
        report.seed = opts.seed;
        let mut inv = Vec::new();
        let mut push = |name: &str, pass: bool, detail: String| inv.push(InvariantCheck { name: name.into(), pass, detail });
        let bad: Vec<&str> = report.closed_forms.iter().filter(|r| !r.pass).map(|r| r.quantity.as_str()).collect();
        push("closed_forms", bad.is_empty(), if bad.is_empty() { "all rows within 1e-8".into() } else { format!("failing: {}", bad.join(", ")) });
        push(
            "basic_le_main",
            report.basic <= report.main,
            format!("basic {} main {}", report.basic, report.main),
        );
        let min_bound = report.lower_bounds().iter().map(|(_, v)| *v).min().unwrap_or(0);
        push("bounds_at_least_one", min_bound >= 1, format!("smallest bound {min_bound}"));
        let k = self.id().k_min();
        push("lower_le_k_min", report.best_lower() <= k, format!("best lower {} k_min {k}", report.best_lower()));
        push(
            "connected",
            report.measures.connected_components == 1,
            format!("{} components", report.measures.connected_components),
        );
        if let Some(upper) = report.upper {
            push("sandwich", report.best_lower() <= upper, format!("{} <= {upper}", report.best_lower()));
        }
        if let Some(kernel) = &self.kernel {
            if self.pins.len() == 2 {
                let (p, q) = (&self.pins[0].point, &self.pins[1].point);
                let exits = (1..100).any(|i| {
                    let t = i as f64 / 100.0;
                    let mid: Vec<f64> = p.coords().iter().zip(q.coords()).map(|(a, b)| a + t * (b - a)).collect();
                    Point::new(mid).map(|m| !kernel.contains(&m)).unwrap_or(false)
                });
                push("pin_segment_leaves_set", exits, "segment between the pins exits the union".into());
            }
            let sub: f64 = kernel.components().iter().map(|c| c.surface_measure()).sum();
            push(
                "subadditivity",
                report.measures.boundary_e <= sub + 1e-8,
                format!("{} <= {sub}", report.measures.boundary_e),
            );
            if let Some(samples) = opts.mc_samples {
                let mc = kernel.monte_carlo_boundary_measure(samples, opts.seed)?;
                let s = MonteCarloSummary::new(samples, opts.seed, mc, report.measures.boundary_e);
                push("monte_carlo_4_sigma", s.z <= 4.0, format!("z = {:.3}", s.z));
                report.monte_carlo = Some(s);
            }
        }
        let pass = inv.iter().all(|c| c.pass);
        Ok(GallerySummary { tag: self.tag.clone(), report, invariants: inv, pass })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn rows_pass(s: &ExampleScene) {
        for r in s.closed_form_rows().unwrap() {
            assert!(r.pass, "{} closed {} kernel {} rel {}", r.quantity, r.closed_form, r.kernel, r.rel_err);
        }
    }

    #[test]
    fn c_closed_forms() {
        let c = make_c(10.0, 1.0).unwrap();
        assert_relative_eq!(c.closed_forms["boundary_E"], 44.0);
        assert_relative_eq!(c.closed_forms["boundary_hull"], 26.0);
        assert_relative_eq!(c.closed_forms["diam"], 109f64.sqrt());
        rows_pass(&c);
        let small = make_c(2.0, 1.0).unwrap();
        assert_relative_eq!(small.closed_forms["boundary_E"], 12.0);
        assert_relative_eq!(small.closed_forms["boundary_hull"], 10.0);
        rows_pass(&small);
    }

    #[test]
    fn three_d_closed_forms() {
        let l = make_l(10.0, 1.0).unwrap();
        assert_relative_eq!(l.closed_forms["boundary_E"], 46.0);
        assert_relative_eq!(l.closed_forms["boundary_hull"], 45.0 + 82f64.sqrt());
        rows_pass(&l);
        let d = make_d(10.0, 1.0).unwrap();
        assert_relative_eq!(d.closed_forms["boundary_E"], 143.0 + 4.0 * 82f64.sqrt() + 4.0 * 65f64.sqrt());
        rows_pass(&d);
        rows_pass(&make_u(10.0, 1.0).unwrap());
        rows_pass(&make_ln(10.0, 1.0, 2.0, 3).unwrap());
        rows_pass(&make_ln(10.0, 1.0, 2.0, 4).unwrap());
    }

    #[test]
    fn bad_params() {
        assert!(matches!(make_c(1.0, 1.0), Err(Error::BadParams(_))));
        assert!(matches!(make_c(1.0, 0.0), Err(Error::BadParams(_))));
        assert!(matches!(make_d(2.0, 1.0), Err(Error::BadParams(_))));
        assert!(matches!(make_u(3.0, 1.0), Err(Error::BadParams(_))));
        assert!(matches!(make_ln(10.0, 1.0, 1.0, 3), Err(Error::BadParams(_))));
        assert!(matches!(make_ln(10.0, 1.0, 2.0, 2), Err(Error::BadParams(_))));
    }

    #[test]
    fn ids_round_trip() {
        for id in GalleryId::ALL {
            assert_eq!(id.to_string().parse::<GalleryId>().unwrap(), id);
        }
        assert!("Q".parse::<GalleryId>().is_err());
    }

    #[test]
    fn l4_uses_product_path() {
        let s = make_ln(10.0, 1.0, 2.0, 4).unwrap();
        assert!(s.kernel.is_none());
        assert_eq!(s.dim(), 4);
        assert!(s.main_ratio().unwrap() > 0.0);
    }
}
