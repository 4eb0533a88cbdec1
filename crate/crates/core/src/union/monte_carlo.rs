//! Monte-Carlo estimate of `H^{n-1}(∂E)`, used as an independent oracle for
//! the fragment computation.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::SolidUnion;
use crate::error::{Error, Result};
use crate::geometry::V3;

/// Smallest accepted sample budget.
pub const MIN_MC_SAMPLES: usize = 10_000;

const SHARDS: u64 = 8;
const PROBE: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

/// Oracle comparison as written into reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloSummary {
    pub samples: usize,
    pub seed: u64,
    pub estimate: f64,
    pub stderr: f64,
    pub exact: f64,
    /// `|exact - estimate| / stderr`.
    pub z: f64,
}

impl MonteCarloSummary {
    pub fn new(samples: usize, seed: u64, mc: MonteCarloEstimate, exact: f64) -> Self {
        let z = if mc.stderr > 0.0 { (exact - mc.estimate).abs() / mc.stderr } else if exact == mc.estimate { 0.0 } else { f64::INFINITY };
        Self { samples, seed, estimate: mc.estimate, stderr: mc.stderr, exact, z }
    }
}

/// One facet flattened into a fan of simplices (segments in 2D).
struct Surface {
    pieces: Vec<[V3; 3]>,
    normals: Vec<V3>,
    pick: WeightedIndex<f64>,
    total: f64,
}

fn shard_seed(seed: u64, shard: u64) -> u64 {
    seed ^ (shard + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

impl SolidUnion {
    fn surface(&self) -> Result<Surface> {
        let mut pieces = Vec::new();
        let mut normals = Vec::new();
        let mut weights = Vec::new();
        for c in self.components() {
            for f in c.facets() {
                let ring = c.facet_ring(f);
                let n = f.normal.v3();
                if self.dim() == 2 {
                    pieces.push([ring[0], ring[1], ring[1]]);
                    weights.push((ring[1] - ring[0]).norm());
                    normals.push(n);
                } else {
                    for i in 1..ring.len() - 1 {
                        let area = 0.5 * (ring[i] - ring[0]).cross(&(ring[i + 1] - ring[0])).norm();
                        pieces.push([ring[0], ring[i], ring[i + 1]]);
                        weights.push(area);
                        normals.push(n);
                    }
                }
            }
        }
        let total = weights.iter().sum();
        let pick = WeightedIndex::new(&weights).map_err(|e| Error::DegenerateInput(e.to_string()))?;
        Ok(Surface { pieces, normals, pick, total })
    }

    /// Unbiased estimate with its standard error.
    ///
    /// Points are drawn uniformly on the union of all component facets. A
    /// point scores when the outer side of its facet leaves the union, and
    /// its score is split among the components whose boundary carries it, so
    /// a face shared by several components is counted once in expectation.
    pub fn monte_carlo_boundary_measure(&self, samples: usize, seed: u64) -> Result<MonteCarloEstimate> {
        if self.dim() > 3 {
            return Err(Error::UnsupportedDimension(self.dim()));
        }
        if samples < MIN_MC_SAMPLES {
            return Err(Error::InvalidInput(format!("need at least {MIN_MC_SAMPLES} samples, got {samples}")));
        }
        let surface = self.surface()?;
        let delta = PROBE * self.extent();
        let per = samples as u64 / SHARDS;
        let extra = samples as u64 % SHARDS;
        let sums: Vec<(f64, f64)> = (0..SHARDS)
            .into_par_iter()
            .map(|s| {
                let count = per + u64::from(s < extra);
                let mut rng = ChaCha8Rng::seed_from_u64(shard_seed(seed, s));
                let (mut sum, mut sum2) = (0.0, 0.0);
                for _ in 0..count {
                    let w = self.sample_weight(&surface, &mut rng, delta);
                    sum += w;
                    sum2 += w * w;
                }
                (sum, sum2)
            })
            .collect();
        let (sum, sum2) = sums.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
        let m = samples as f64;
        let mean = sum / m;
        let var = (sum2 / m - mean * mean).max(0.0) * m / (m - 1.0);
        Ok(MonteCarloEstimate { estimate: surface.total * mean, stderr: surface.total * (var / m).sqrt() })
    }

    fn sample_weight(&self, s: &Surface, rng: &mut ChaCha8Rng, delta: f64) -> f64 {
        let k = s.pick.sample(rng);
        let [a, b, c] = s.pieces[k];
        let p = if self.dim() == 2 {
            a + (b - a) * rng.gen::<f64>()
        } else {
            let (mut u, mut v) = (rng.gen::<f64>(), rng.gen::<f64>());
            if u + v > 1.0 {
                u = 1.0 - u;
                v = 1.0 - v;
            }
            a + (b - a) * u + (c - a) * v
        };
        if self.contains_v3(&(p + s.normals[k] * delta)) {
            return 0.0;
        }
        let carriers = self
            .components()
            .iter()
            .filter(|c| c.depth_v3(&p).abs() <= c.tolerance())
            .count();
        1.0 / carriers.max(1) as f64
    }
}
