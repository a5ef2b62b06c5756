//! The knot inside the unit 3-sphere: the curve
//! `θ ↦ (r^N e^{iNθ}, 2b r^p cos pθ + 2ia r^q sin qθ)` with `r = r(θ)` chosen
//! so the point has norm 1.

mod export;
mod symmetry;

pub use export::{embed_r3, r3_csv, s3_csv};
pub use symmetry::{linking_with_axis, psi_invariance, psi_map, winding_number};

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::params::KnotParams;

pub const MIN_GRID: usize = 256;
/// Absolute tolerance of the radius solve.
pub const RADIUS_TOL: f64 = 1e-12;
/// Largest accepted `|r(θ + 2π/d) − r(θ)|`.
pub const PERIOD_TOL: f64 = 1e-9;
/// Largest accepted distance from `Ψ(K)` to `K`.
pub const PSI_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("grid size {grid} is below the minimum {min}")]
    GridTooSmall { grid: usize, min: usize },
    #[error("amplitudes must be finite and positive (got a={a}, b={b})")]
    BadAmplitude { a: f64, b: f64 },
    #[error("no radius in (0, 1] at theta={theta}")]
    NoRoot { theta: f64 },
    #[error("d = gcd(p, q) = 1, so there is no rotation symmetry to test")]
    NotPeriodicParams,
    #[error("consecutive samples {index} and {next} turn by more than pi/2 around the axis")]
    DegenerateProjection { index: usize, next: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingParams {
    pub knot: KnotParams,
    pub a: f64,
    pub b: f64,
}

impl EmbeddingParams {
    pub fn new(knot: KnotParams, a: f64, b: f64) -> Result<Self, GeometryError> {
        if !(a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0) {
            return Err(GeometryError::BadAmplitude { a, b });
        }
        Ok(EmbeddingParams { knot, a, b })
    }

    /// `a = b = 1/2`.
    pub fn standard(knot: KnotParams) -> Self {
        EmbeddingParams { knot, a: 0.5, b: 0.5 }
    }

    /// `‖φ(r e^{iθ})‖² − 1`.
    pub fn norm_defect(&self, r: f64, theta: f64) -> f64 {
        let (n, p, q) = (self.knot.n() as i32, self.knot.p() as i32, self.knot.q() as i32);
        let s = (q as f64 * theta).sin();
        let c = (p as f64 * theta).cos();
        r.powi(2 * n) + 4.0 * self.a * self.a * r.powi(2 * q) * s * s + 4.0 * self.b * self.b * r.powi(2 * p) * c * c
            - 1.0
    }

    /// `(z₁, z₂)` as `[re z₁, im z₁, re z₂, im z₂]`.
    pub fn point(&self, r: f64, theta: f64) -> [f64; 4] {
        let (n, p, q) = (self.knot.n() as f64, self.knot.p() as f64, self.knot.q() as f64);
        let rn = r.powf(n);
        [
            rn * (n * theta).cos(),
            rn * (n * theta).sin(),
            2.0 * self.b * r.powf(p) * (p * theta).cos(),
            2.0 * self.a * r.powf(q) * (q * theta).sin(),
        ]
    }

    /// The radius at `θ`, by bisection on `(0, 1]`.
    pub fn radius(&self, theta: f64) -> Result<f64, GeometryError> {
        if self.norm_defect(1.0, theta) < 0.0 {
            return Err(GeometryError::NoRoot { theta });
        }
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        while hi - lo > RADIUS_TOL {
            let mid = 0.5 * (lo + hi);
            if self.norm_defect(mid, theta) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// The knot point at `θ`.
    pub fn knot_point(&self, theta: f64) -> Result<[f64; 4], GeometryError> {
        Ok(self.point(self.radius(theta)?, theta))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusProfile {
    pub thetas: Vec<f64>,
    pub radii: Vec<f64>,
}

impl RadiusProfile {
    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    pub fn points(&self, emb: &EmbeddingParams) -> Vec<[f64; 4]> {
        self.thetas.iter().zip(&self.radii).map(|(&t, &r)| emb.point(r, t)).collect()
    }
}

/// Solves the radius on `grid_size` equally spaced angles in `[0, 2π)`.
pub fn radius_profile(emb: &EmbeddingParams, grid_size: usize) -> Result<RadiusProfile, GeometryError> {
    if grid_size < MIN_GRID {
        return Err(GeometryError::GridTooSmall { grid: grid_size, min: MIN_GRID });
    }
    let thetas: Vec<f64> = (0..grid_size).map(|i| 2.0 * PI * i as f64 / grid_size as f64).collect();
    let radii = thetas.iter().map(|&t| emb.radius(t)).collect::<Result<Vec<_>, _>>()?;
    Ok(RadiusProfile { thetas, radii })
}

/// `max_θ |r(θ + 2π/d) − r(θ)|`, re-solving at the shifted angles.
pub fn radius_periodicity_deviation(emb: &EmbeddingParams, profile: &RadiusProfile) -> Result<f64, GeometryError> {
    let shift = 2.0 * PI / emb.knot.d() as f64;
    let mut worst = 0.0_f64;
    for (&t, &r) in profile.thetas.iter().zip(&profile.radii) {
        worst = worst.max((emb.radius(t + shift)? - r).abs());
    }
    Ok(worst)
}

/// Largest `|‖x‖ − 1|` over the sampled points.
pub fn norm_deviation(emb: &EmbeddingParams, profile: &RadiusProfile) -> f64 {
    profile.points(emb).iter().map(|x| (x.iter().map(|c| c * c).sum::<f64>().sqrt() - 1.0).abs()).fold(0.0, f64::max)
}
