//! Sets of the form `Q x [0, l]^{n-2}` with `Q` planar.

use serde::{Deserialize, Serialize};

use super::{Pin, SceneJson, SolidUnion};
use crate::bounds::{measure_witness, omega, CertifiedWitness, SceneMeasures};
use crate::error::{Error, Result};
use crate::gallery::GalleryTag;
use crate::geometry::{ConvexPolytope, Point};

/// Scalar description of `Q x [0, l]^{n-2}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductSolid {
    pub base_perimeter: f64,
    pub base_area: f64,
    pub edge: f64,
    pub dim: usize,
}

impl ProductSolid {
    pub fn new(base_perimeter: f64, base_area: f64, edge: f64, dim: usize) -> Result<Self> {
        let s = Self { base_perimeter, base_area, edge, dim };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        let finite_pos = |x: f64| x.is_finite() && x > 0.0;
        if !(finite_pos(self.base_perimeter) && finite_pos(self.base_area) && finite_pos(self.edge)) {
            return Err(Error::InvalidInput(format!(
                "product solid needs positive finite perimeter, area and edge, got {:?}",
                self
            )));
        }
        if self.dim < 2 {
            return Err(Error::UnsupportedDimension(self.dim));
        }
        Ok(())
    }

    /// `l^{n-2} H^1(∂Q) + 2 (n-2) l^{n-3} H^2(Q)`.
    pub fn boundary_measure(&self) -> f64 {
        if self.dim == 2 {
            return self.base_perimeter;
        }
        let k = self.dim as i32 - 2;
        self.edge.powi(k) * self.base_perimeter + 2.0 * k as f64 * self.edge.powi(k - 1) * self.base_area
    }

    /// `l^{n-2} H^2(Q)`.
    pub fn volume(&self) -> f64 {
        self.edge.powi(self.dim as i32 - 2) * self.base_area
    }
}

/// The prism `Q x [0, l]` as an explicit 3D union, one prism per component.
pub fn extrude(base: &SolidUnion, edge: f64) -> Result<SolidUnion> {
    if base.dim() != 2 {
        return Err(Error::UnsupportedDimension(base.dim()));
    }
    let comps = base
        .components()
        .iter()
        .map(|c| {
            let ring: Vec<(f64, f64)> = c.verts_v3().iter().map(|v| (v.x, v.y)).collect();
            ConvexPolytope::prism(&ring, 0.0, edge)
        })
        .collect::<Result<Vec<_>>>()?;
    SolidUnion::new(format!("{}x[0,{edge}]", base.name()), comps)
}

/// A product scene: planar base with pins, cube edge and ambient dimension.
#[derive(Clone, Debug)]
pub struct ProductScene {
    pub name: String,
    pub dim: usize,
    pub edge: f64,
    pub base: SolidUnion,
    pub pins: Vec<Pin>,
    pub gallery: Option<GalleryTag>,
}

/// `{"name", "dim", "edge", "base": <planar scene JSON with pins>}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductSceneJson {
    pub name: String,
    pub dim: usize,
    pub edge: f64,
    pub base: SceneJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gallery: Option<GalleryTag>,
}

impl ProductScene {
    pub fn new(name: impl Into<String>, dim: usize, edge: f64, base: SolidUnion, pins: Vec<Pin>) -> Result<Self> {
        if base.dim() != 2 {
            return Err(Error::InvalidInput("product base must be planar".into()));
        }
        if dim < 2 {
            return Err(Error::UnsupportedDimension(dim));
        }
        if !(edge.is_finite() && edge > 0.0) {
            return Err(Error::InvalidInput(format!("edge must be positive, got {edge}")));
        }
        Ok(Self { name: name.into(), dim, edge, base, pins, gallery: None })
    }

    pub fn from_json(json: &ProductSceneJson) -> Result<Self> {
        let base = SolidUnion::from_json(&json.base)?;
        let mut s = Self::new(json.name.clone(), json.dim, json.edge, base, json.base.pins.clone())?;
        s.gallery = json.gallery.clone();
        Ok(s)
    }

    pub fn to_json(&self) -> ProductSceneJson {
        ProductSceneJson {
            name: self.name.clone(),
            dim: self.dim,
            edge: self.edge,
            base: self.base.to_json(&self.pins),
            gallery: self.gallery.clone(),
        }
    }

    fn solid(&self, perimeter: f64, area: f64) -> Result<ProductSolid> {
        ProductSolid::new(perimeter, area, self.edge, self.dim)
    }

    /// The set itself as a [`ProductSolid`].
    pub fn product(&self) -> Result<ProductSolid> {
        self.solid(self.base.boundary_measure()?, self.base.enclosed_volume()?)
    }

    /// `co(Q) x [0, l]^{n-2}`, the convex hull of the product.
    pub fn hull_product(&self) -> Result<ProductSolid> {
        let hull = self.base.hull()?;
        self.solid(hull.surface_measure(), hull.volume())
    }

    pub fn diameter(&self) -> Result<f64> {
        let d = self.base.hull()?.diameter();
        Ok((d * d + (self.dim - 2) as f64 * self.edge * self.edge).sqrt())
    }

    pub fn measures(&self) -> Result<SceneMeasures> {
        Ok(SceneMeasures {
            dim: self.dim,
            boundary_e: self.product()?.boundary_measure(),
            boundary_hull: self.hull_product()?.boundary_measure(),
            diam: self.diameter()?,
            connected_components: self.base.connected_component_count(),
        })
    }

    /// Witnesses lifted from the base: the half-space is `H' x R^{n-2}`, so
    /// the gap is unchanged while sections and their maximum pick up the
    /// factor `l^{n-2}`. The stored half-space stays in base coordinates.
    pub fn witnesses(&self) -> Result<Vec<CertifiedWitness>> {
        let hull = self.base.hull()?;
        let n = self.dim;
        let k = n as i32 - 2;
        let factor = self.edge.powi(k);
        let root = 1.0 / (n as f64 - 1.0);
        let lift = |p: &Point| {
            let mut c = p.coords().to_vec();
            c.resize(n, 0.0);
            Point::new(c)
        };
        self.pins
            .iter()
            .map(|pin| {
                self.base.check_pin(pin)?;
                let w = measure_witness(&hull, &pin.point, &pin.normal)?;
                let (_, chord) = hull.max_section(&w.halfspace.normal);
                let section = w.section * factor;
                Ok(CertifiedWitness {
                    gap: w.gap,
                    section,
                    section_radius: (section / omega(n - 1)).powf(root),
                    rho: (chord * factor / omega(n - 1)).powf(root),
                    pin: lift(&w.pin)?,
                    a: lift(&w.a)?,
                    b: lift(&w.b)?,
                    halfspace: w.halfspace,
                })
            })
            .collect()
    }
}
