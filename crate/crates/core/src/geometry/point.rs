use nalgebra::Vector3;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) type V3 = Vector3<f64>;

/// A point in R^2 or R^3. Coordinates are finite.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidInput("point has no coordinates".into()));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite coordinate in {coords:?}")));
        }
        Ok(Self { coords })
    }

    pub fn xy(x: f64, y: f64) -> Self {
        Self { coords: vec![x, y] }
    }

    pub fn xyz(x: f64, y: f64, z: f64) -> Self {
        Self { coords: vec![x, y, z] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn distance(&self, other: &Point) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// Embeds into R^3 (zero padding). Only meaningful for `dim <= 3`.
    pub(crate) fn v3(&self) -> V3 {
        let mut v = V3::zeros();
        for (i, c) in self.coords.iter().take(3).enumerate() {
            v[i] = *c;
        }
        v
    }

    pub(crate) fn from_v3(v: &V3, dim: usize) -> Self {
        Self { coords: v.iter().take(dim).copied().collect() }
    }

    /// Lexicographic comparison of coordinates.
    pub fn lex_cmp(&self, other: &Point) -> std::cmp::Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.total_cmp(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.coords.len().cmp(&other.coords.len())
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<f64>::deserialize(d)?;
        Point::new(coords).map_err(serde::de::Error::custom)
    }
}

/// A unit vector in R^2 or R^3.
#[derive(Clone, Debug, PartialEq)]
pub struct Direction {
    v: V3,
    dim: usize,
}

impl Direction {
    /// Normalizes `components`; fails on a zero or non-finite vector.
    pub fn new(components: &[f64]) -> Result<Self> {
        let dim = components.len();
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        let p = Point::new(components.to_vec())?;
        Self::from_v3(p.v3(), dim)
    }

    pub(crate) fn from_v3(v: V3, dim: usize) -> Result<Self> {
        let norm = v.norm();
        if !norm.is_finite() || norm < 1e-15 {
            return Err(Error::InvalidInput("direction has zero length".into()));
        }
        Ok(Self { v: v / norm, dim })
    }

    pub fn axis(dim: usize, index: usize, sign: f64) -> Self {
        let mut v = V3::zeros();
        v[index] = sign.signum();
        Self { v, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> Vec<f64> {
        self.v.iter().take(self.dim).copied().collect()
    }

    pub fn negate(&self) -> Self {
        Self { v: -self.v, dim: self.dim }
    }

    pub fn dot(&self, p: &Point) -> f64 {
        self.v.dot(&p.v3())
    }

    pub(crate) fn v3(&self) -> V3 {
        self.v
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.components().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let c = Vec::<f64>::deserialize(d)?;
        Direction::new(&c).map_err(serde::de::Error::custom)
    }
}

/// Closed half-space `{x : <x, normal> >= offset}`. The normal points into
/// the half-space; its boundary is the hyperplane `<x, normal> = offset`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfSpace {
    pub normal: Direction,
    pub offset: f64,
}

impl HalfSpace {
    pub fn new(normal: Direction, offset: f64) -> Self {
        Self { normal, offset }
    }

    /// Half-space with inward `normal` whose boundary passes through `point`.
    pub fn through(point: &Point, normal: Direction) -> Self {
        let offset = normal.dot(point);
        Self { normal, offset }
    }

    /// Signed distance into the half-space (negative outside).
    pub fn depth(&self, p: &Point) -> f64 {
        self.normal.dot(p) - self.offset
    }

    pub fn contains(&self, p: &Point, tol: f64) -> bool {
        self.depth(p) >= -tol
    }
}
