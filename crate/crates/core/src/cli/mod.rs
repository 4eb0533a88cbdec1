//! Command runners behind the `ccbound` binary.
//!
//! Every runner is a plain function of a [`RunConfig`] so the binary stays a
//! thin argument parser and the commands are testable in-process.

mod args;
mod render;
mod svg;

pub use args::{main_from_args, Cli, CliCommand, GalleryCommand};
pub use render::{report_csv, to_json};
pub use svg::{emit_decomposition_svg, emit_figure};

use std::path::{Path, PathBuf};

use log::{debug, info};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    default_params, evaluate, measure_witness, BoundReport, CertifiedWitness, ClosedFormRow, SceneMeasures,
    TheoremParams,
};
use crate::decomposer::{greedy_convex_decomposition, sandwich, to_simple_polygon};
use crate::error::{Error, Result};
use crate::gallery::{
    make_c, regime_search_c, GalleryId, GalleryTag, InvariantCheck, RegimeInterval, VerifyOptions, CLOSED_FORM_TOL,
};
use crate::geometry::PolytopeJson;
use crate::union::{MonteCarloSummary, Pin, ProductScene, ProductSceneJson, SceneJson, SolidUnion};

/// Default Monte-Carlo budget for `verify` when none is given.
pub const DEFAULT_VERIFY_SAMPLES: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Bounds,
    Gallery(GalleryAction),
    RegimeSearch,
    Decompose,
    Verify,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GalleryAction {
    List,
    Build(GalleryId),
    Verify(GalleryId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Svg,
}

/// Optional overrides for the theorem parameters.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ParamArgs {
    pub p: Option<usize>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
}

/// Gallery scene parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct GalleryArgs {
    pub l: f64,
    pub h: f64,
    pub lambda: Option<f64>,
    pub n: Option<usize>,
}

impl Default for GalleryArgs {
    fn default() -> Self {
        Self { l: 10.0, h: 1.0, lambda: None, n: None }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub scene_path: Option<PathBuf>,
    /// Pins as a JSON file path or an inline JSON array.
    pub pins: Option<String>,
    pub params: ParamArgs,
    pub gallery: GalleryArgs,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub seed: u64,
    pub mc_samples: Option<usize>,
    /// Grid size for the regime search.
    pub samples: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            scene_path: None,
            pins: None,
            params: ParamArgs::default(),
            gallery: GalleryArgs::default(),
            output: None,
            format: Format::Json,
            seed: 0,
            mc_samples: None,
            samples: 10_000,
        }
    }

    fn tag(&self, id: GalleryId) -> GalleryTag {
        let g = &self.gallery;
        let (lambda, n) = match id {
            GalleryId::Ln => (Some(g.lambda.unwrap_or(2.0)), Some(g.n.unwrap_or(3))),
            _ => (None, None),
        };
        GalleryTag { id, l: g.l, h: g.h, lambda, n }
    }

    fn scene_path(&self) -> Result<&Path> {
        self.scene_path.as_deref().ok_or_else(|| Error::InvalidInput("--scene is required".into()))
    }
}

/// Rendered command output; `ok = false` maps to exit code 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

/// A scene read from JSON.
#[derive(Clone, Debug)]
pub enum LoadedScene {
    Kernel { union: SolidUnion, pins: Vec<Pin>, tag: Option<GalleryTag> },
    Product(ProductScene),
}

impl LoadedScene {
    pub fn name(&self) -> &str {
        match self {
            LoadedScene::Kernel { union, .. } => union.name(),
            LoadedScene::Product(p) => &p.name,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            LoadedScene::Kernel { union, .. } => union.dim(),
            LoadedScene::Product(p) => p.dim,
        }
    }

    pub fn pins(&self) -> &[Pin] {
        match self {
            LoadedScene::Kernel { pins, .. } => pins,
            LoadedScene::Product(p) => &p.pins,
        }
    }

    fn set_pins(&mut self, new: Vec<Pin>) {
        match self {
            LoadedScene::Kernel { pins, .. } => *pins = new,
            LoadedScene::Product(p) => p.pins = new,
        }
    }

    pub fn tag(&self) -> Option<&GalleryTag> {
        match self {
            LoadedScene::Kernel { tag, .. } => tag.as_ref(),
            LoadedScene::Product(p) => p.gallery.as_ref(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            LoadedScene::Kernel { union, pins, tag } => {
                let mut j = union.to_json(pins);
                j.gallery = tag.clone();
                serde_json::to_value(j).expect("scene JSON serializes")
            }
            LoadedScene::Product(p) => serde_json::to_value(p.to_json()).expect("product JSON serializes"),
        }
    }

    pub fn measures(&self) -> Result<SceneMeasures> {
        match self {
            LoadedScene::Kernel { union, .. } => {
                let hull = union.hull()?;
                Ok(SceneMeasures {
                    dim: union.dim(),
                    boundary_e: union.boundary_measure()?,
                    boundary_hull: hull.surface_measure(),
                    diam: hull.diameter(),
                    connected_components: union.connected_component_count(),
                })
            }
            LoadedScene::Product(p) => p.measures(),
        }
    }

    pub fn witnesses(&self) -> Result<Vec<CertifiedWitness>> {
        match self {
            LoadedScene::Kernel { union, pins, .. } => {
                let hull = union.hull()?;
                pins.iter()
                    .enumerate()
                    .map(|(j, p)| {
                        union.check_pin(p).and_then(|_| measure_witness(&hull, &p.point, &p.normal)).map_err(|e| match e {
                            Error::AssumptionViolated { inequality, .. } => Error::AssumptionViolated { witness: j, inequality },
                            other => other,
                        })
                    })
                    .collect()
            }
            LoadedScene::Product(p) => p.witnesses(),
        }
    }
}

/// Parses scene JSON: a product scene when it has `base` and `edge`,
/// otherwise a union of polytopes.
pub fn parse_scene(text: &str) -> Result<LoadedScene> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("scene is not valid JSON: {e}")))?;
    if value.get("base").is_some() && value.get("edge").is_some() {
        let json: ProductSceneJson =
            serde_json::from_value(value).map_err(|e| Error::InvalidInput(format!("bad product scene: {e}")))?;
        return Ok(LoadedScene::Product(ProductScene::from_json(&json)?));
    }
    let json: SceneJson = serde_json::from_value(value).map_err(|e| Error::InvalidInput(format!("bad scene: {e}")))?;
    let union = SolidUnion::from_json(&json)?;
    for p in &json.pins {
        if p.point.dim() != json.dim || p.normal.dim() != json.dim {
            return Err(Error::InvalidInput("pin dimension differs from the scene".into()));
        }
    }
    Ok(LoadedScene::Kernel { union, pins: json.pins, tag: json.gallery })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

pub fn load_scene(path: &Path) -> Result<LoadedScene> {
    parse_scene(&read(path)?)
}

/// Pins from a JSON file path or an inline JSON array.
pub fn parse_pins(arg: &str) -> Result<Vec<Pin>> {
    let text = if arg.trim_start().starts_with('[') { arg.to_string() } else { read(Path::new(arg))? };
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("bad pins: {e}")))
}

fn scene_with_pins(path: &Path, cfg: &RunConfig) -> Result<LoadedScene> {
    let mut scene = load_scene(path)?;
    if let Some(p) = &cfg.pins {
        scene.set_pins(parse_pins(p)?);
    }
    Ok(scene)
}

fn resolve_params(args: &ParamArgs, m: &SceneMeasures, w: &[CertifiedWitness]) -> Result<Option<TheoremParams>> {
    let defaults = default_params(m.dim, m.diam, w);
    if args.alpha.is_none() && args.beta.is_none() && args.p.is_none() {
        return Ok(defaults);
    }
    let alpha = args
        .alpha
        .or(defaults.as_ref().map(|d| d.alpha))
        .ok_or_else(|| Error::BadParams("--alpha is required when the scene has no pins".into()))?;
    let beta = args.beta.or(defaults.as_ref().map(|d| d.beta)).unwrap_or(0.0);
    let p = args.p.unwrap_or(w.len());
    let params = TheoremParams { p, alpha, beta, q: None };
    params.validate()?;
    Ok(Some(params))
}

/// Closed forms of a tagged gallery scene against the loaded scene's values.
fn gallery_rows(tag: &GalleryTag, m: &SceneMeasures, w: &[CertifiedWitness]) -> Result<Vec<ClosedFormRow>> {
    let example = tag.build()?;
    let mut rows = Vec::new();
    for (k, cf) in &example.closed_forms {
        let value = match k.as_str() {
            "boundary_E" => Some(m.boundary_e),
            "boundary_hull" => Some(m.boundary_hull),
            "diam" => Some(m.diam),
            other => {
                let (name, idx) = other.split_once('[').unwrap_or((other, ""));
                let j: usize = idx.trim_end_matches(']').parse().unwrap_or(usize::MAX);
                w.get(j).map(|wj| match name {
                    "gap" => wj.gap,
                    "section" => wj.section,
                    _ => wj.rho,
                })
            }
        };
        if let Some(v) = value {
            rows.push(ClosedFormRow::new(k.clone(), *cf, v, CLOSED_FORM_TOL));
        }
    }
    Ok(rows)
}

/// Full report for one scene.
pub fn bounds_for_scene(scene: &LoadedScene, cfg: &RunConfig) -> Result<BoundReport> {
    let m = scene.measures()?;
    let w = scene.witnesses()?;
    let params = resolve_params(&cfg.params, &m, &w)?;
    debug!("scene {} measures {:?}", scene.name(), m);
    let mut report = evaluate(scene.name(), &m, params.as_ref(), &w)?;
    report.seed = cfg.seed;
    if let Some(tag) = scene.tag() {
        report.closed_forms = gallery_rows(tag, &m, &w)?;
        let k = tag.id.k_min();
        if report.best_lower() < k {
            report.notes.push(format!("bound {} is not sharp: k_min = {k}", report.best_lower()));
        }
    }
    if let LoadedScene::Kernel { union, .. } = scene {
        if union.dim() == 2 {
            report = match sandwich(union, report.clone()) {
                Ok(r) => r,
                Err(Error::NotSimplyConnected(msg)) => {
                    report.notes.push(format!("no upper bound: {msg}"));
                    report
                }
                Err(e) => return Err(e),
            };
        }
        if let Some(samples) = cfg.mc_samples {
            let mc = union.monte_carlo_boundary_measure(samples, cfg.seed)?;
            report.monte_carlo = Some(MonteCarloSummary::new(samples, cfg.seed, mc, m.boundary_e));
        }
    }
    Ok(report)
}

/// `bounds`: one report, or one per `*.json` file when the scene path is a
/// directory (processed in parallel, reported in file-name order).
pub fn run_bounds(cfg: &RunConfig) -> Result<Vec<BoundReport>> {
    let path = cfg.scene_path()?;
    if path.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| Error::InvalidInput(format!("cannot list {}: {e}", path.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        info!("bounds over {} scenes in {}", files.len(), path.display());
        return files
            .par_iter()
            .map(|f| bounds_for_scene(&scene_with_pins(f, cfg)?, cfg))
            .collect();
    }
    Ok(vec![bounds_for_scene(&scene_with_pins(path, cfg)?, cfg)?])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GalleryEntry {
    pub id: GalleryId,
    pub description: String,
    pub requires: String,
}

/// Output of the `gallery` subcommands.
#[derive(Clone, Debug)]
pub enum GalleryOutput {
    List(Vec<GalleryEntry>),
    Build(serde_json::Value),
    Verify(Box<crate::gallery::GallerySummary>),
}

pub fn run_gallery(cfg: &RunConfig, action: &GalleryAction) -> Result<GalleryOutput> {
    match action {
        GalleryAction::List => Ok(GalleryOutput::List(
            GalleryId::ALL
                .iter()
                .map(|&id| GalleryEntry {
                    id,
                    description: id.describe().to_string(),
                    requires: match id {
                        GalleryId::C | GalleryId::L => "l > h > 0",
                        GalleryId::D => "l > 2h > 0",
                        GalleryId::U => "l > 3h > 0",
                        GalleryId::Ln => "l > h > 0, lambda > 1, n >= 3",
                    }
                    .to_string(),
                })
                .collect(),
        )),
        GalleryAction::Build(id) => Ok(GalleryOutput::Build(cfg.tag(*id).build()?.to_json_value())),
        GalleryAction::Verify(id) => {
            let scene = cfg.tag(*id).build()?;
            let summary = scene.verify(VerifyOptions { mc_samples: cfg.mc_samples, seed: cfg.seed })?;
            info!("gallery verify {id}: pass = {}", summary.pass);
            Ok(GalleryOutput::Verify(Box::new(summary)))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeCheck {
    pub t: f64,
    pub cglp_planar: u64,
    pub planar_main: u64,
    pub upper: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub samples: usize,
    pub interval: RegimeInterval,
    pub checks: Vec<RegimeCheck>,
    pub pass: bool,
}

/// Bounds of `C(1, t)` at a point of the regime.
pub fn regime_check(t: f64) -> Result<RegimeCheck> {
    let scene = make_c(1.0, t)?;
    let r = scene.report()?;
    Ok(RegimeCheck {
        t,
        cglp_planar: r.cglp_planar.unwrap_or(0),
        planar_main: r.planar_main.unwrap_or(0),
        upper: r.upper.unwrap_or(0),
    })
}

/// `regime-search`: the interval plus bound checks at nine interior points.
pub fn run_regime_search(cfg: &RunConfig) -> Result<RegimeReport> {
    let interval = regime_search_c(cfg.samples)?;
    let checks = (1..10)
        .map(|i| regime_check(interval.lo + (interval.hi - interval.lo) * i as f64 / 10.0))
        .collect::<Result<Vec<_>>>()?;
    let pass = checks.iter().all(|c| c.cglp_planar == 2 && c.planar_main == 3 && c.upper == 3);
    Ok(RegimeReport { samples: cfg.samples, interval, checks, pass })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposeOutput {
    pub scene: String,
    pub polygon: Vec<crate::geometry::Point>,
    pub reflex_vertices: usize,
    pub pieces: Vec<PolytopeJson>,
    pub count: usize,
}

pub fn run_decompose(cfg: &RunConfig) -> Result<DecomposeOutput> {
    let scene = load_scene(cfg.scene_path()?)?;
    let LoadedScene::Kernel { union, .. } = &scene else {
        return Err(Error::UnsupportedDimension(scene.dim()));
    };
    let poly = to_simple_polygon(union)?;
    let pieces = greedy_convex_decomposition(&poly)?;
    Ok(DecomposeOutput {
        scene: union.name().to_string(),
        polygon: poly.vertices().to_vec(),
        reflex_vertices: poly.reflex_count(),
        count: pieces.len(),
        pieces: pieces.iter().map(|p| p.to_json()).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub scene: String,
    pub checks: Vec<InvariantCheck>,
    pub pass: bool,
}

/// `verify`: structural invariants of an arbitrary scene, plus closed forms
/// when the scene carries a gallery tag.
pub fn run_verify(cfg: &RunConfig) -> Result<VerifyOutput> {
    let scene = scene_with_pins(cfg.scene_path()?, cfg)?;
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| checks.push(InvariantCheck { name: name.into(), pass, detail });
    let report = bounds_for_scene(&scene, &RunConfig { mc_samples: None, ..cfg.clone() })?;
    let m = &report.measures;
    push("basic_le_main", report.basic <= report.main, format!("basic {} main {}", report.basic, report.main));
    push("hull_not_smaller", m.boundary_hull > 0.0, format!("hull measure {}", m.boundary_hull));
    if let Some(u) = report.upper {
        push("sandwich", report.best_lower() <= u, format!("{} <= {u}", report.best_lower()));
    }
    for row in &report.closed_forms {
        push(&format!("closed_form {}", row.quantity), row.pass, format!("rel err {:.3e}", row.rel_err));
    }
    if scene.tag().is_some() {
        push("connected", m.connected_components == 1, format!("{} components", m.connected_components));
    }
    if let LoadedScene::Kernel { union, .. } = &scene {
        let sub: f64 = union.components().iter().map(|c| c.surface_measure()).sum();
        push("subadditivity", m.boundary_e <= sub + 1e-8, format!("{} <= {sub}", m.boundary_e));
        let samples = cfg.mc_samples.unwrap_or(DEFAULT_VERIFY_SAMPLES);
        let mc = union.monte_carlo_boundary_measure(samples, cfg.seed)?;
        let s = MonteCarloSummary::new(samples, cfg.seed, mc, m.boundary_e);
        push("monte_carlo_4_sigma", s.z <= 4.0, format!("z = {:.3}", s.z));
    }
    let round = parse_scene(&scene.to_json_value().to_string())?.to_json_value();
    push("scene_json_round_trip", round == scene.to_json_value(), String::new());
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyOutput { scene: scene.name().to_string(), checks, pass })
}

/// Runs a command and renders it in the requested format.
pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let out = match &cfg.command {
        Command::Bounds => {
            let reports = run_bounds(cfg)?;
            let text = match cfg.format {
                Format::Json if reports.len() == 1 => to_json(&reports[0]),
                Format::Json => to_json(&reports),
                Format::Csv => reports.iter().map(report_csv).collect::<Vec<_>>().join("\n"),
                Format::Svg => {
                    let scene = scene_with_pins(cfg.scene_path()?, cfg)?;
                    emit_figure(&scene, reports.first())?
                }
            };
            Outcome { text, ok: true }
        }
        Command::Gallery(action) => match run_gallery(cfg, action)? {
            GalleryOutput::List(list) => Outcome { text: to_json(&list), ok: true },
            GalleryOutput::Build(value) => {
                let text = match cfg.format {
                    Format::Svg => {
                        let scene = parse_scene(&value.to_string())?;
                        emit_figure(&scene, None)?
                    }
                    _ => to_json(&value),
                };
                Outcome { text, ok: true }
            }
            GalleryOutput::Verify(summary) => {
                let text = match cfg.format {
                    Format::Csv => render::rows_csv(&summary.report.closed_forms),
                    Format::Svg => {
                        let id = summary.tag.id;
                        let scene = parse_scene(&cfg.tag(id).build()?.to_json_value().to_string())?;
                        emit_figure(&scene, Some(&summary.report))?
                    }
                    Format::Json => to_json(&*summary),
                };
                Outcome { text, ok: summary.pass }
            }
        },
        Command::RegimeSearch => {
            let r = run_regime_search(cfg)?;
            Outcome { text: to_json(&r), ok: r.pass }
        }
        Command::Decompose => {
            let d = run_decompose(cfg)?;
            let text = match cfg.format {
                Format::Svg => emit_decomposition_svg(&d),
                _ => to_json(&d),
            };
            Outcome { text, ok: true }
        }
        Command::Verify => {
            let v = run_verify(cfg)?;
            Outcome { text: to_json(&v), ok: v.pass }
        }
    };
    if let Some(path) = &cfg.output {
        std::fs::write(path, &out.text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(out)
}

/// Machine-readable error body written to standard error.
pub fn error_json(e: &Error) -> String {
    serde_json::json!({ "error": e.kind(), "message": e.to_string() }).to_string()
}

/// Exit code for a finished run: 0 success, 1 invariant failure, 2 bad input.
pub fn exit_code(result: &Result<Outcome>) -> i32 {
    match result {
        Ok(o) if o.ok => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}
