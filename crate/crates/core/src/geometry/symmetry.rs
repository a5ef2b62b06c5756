//! The rotation `Ψ(z₁, z₂) = (e^{2πiN/d} z₁, z₂)` and the linking number of
//! the knot with its fixed circle `{z₁ = 0}`.

use std::f64::consts::PI;

use super::{EmbeddingParams, GeometryError, RadiusProfile};

pub fn psi_map(emb: &EmbeddingParams, x: [f64; 4]) -> [f64; 4] {
    let angle = 2.0 * PI * emb.knot.n() as f64 / emb.knot.d() as f64;
    let (c, s) = (angle.cos(), angle.sin());
    [c * x[0] - s * x[1], s * x[0] + c * x[1], x[2], x[3]]
}

/// Samples refined per point.
const CANDIDATES: usize = 4;

fn dist(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Minimizes `θ ↦ ‖target − K(θ)‖` on `[lo, hi]` by golden-section search.
fn refine(emb: &EmbeddingParams, target: &[f64; 4], mut lo: f64, mut hi: f64) -> Result<f64, GeometryError> {
    let ratio = (5.0_f64.sqrt() - 1.0) / 2.0;
    let f = |t: f64| emb.knot_point(t).map(|x| dist(target, &x));
    let mut a = hi - ratio * (hi - lo);
    let mut b = lo + ratio * (hi - lo);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    while hi - lo > 1e-11 {
        if fa < fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - ratio * (hi - lo);
            fa = f(a)?;
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + ratio * (hi - lo);
            fb = f(b)?;
        }
    }
    f(0.5 * (lo + hi))
}

/// Largest distance from `Ψ(x)` to the knot over the sampled points `x`.
///
/// The nearest samples are found by brute force, then the distance is
/// refined on the exact curve between the grid neighbours of each. Several
/// candidates are kept because distinct arcs of the knot can pass closer
/// than one grid step.
pub fn psi_invariance(emb: &EmbeddingParams, profile: &RadiusProfile) -> Result<f64, GeometryError> {
    if emb.knot.d() == 1 {
        return Err(GeometryError::NotPeriodicParams);
    }
    let points = profile.points(emb);
    let step = 2.0 * PI / points.len() as f64;
    let mut worst = 0.0_f64;
    for x in &points {
        let y = psi_map(emb, *x);
        let mut near: Vec<(usize, f64)> = points.iter().enumerate().map(|(j, p)| (j, dist(&y, p))).collect();
        near.select_nth_unstable_by(CANDIDATES - 1, |a, b| a.1.total_cmp(&b.1));
        let mut best = f64::INFINITY;
        for &(j, _) in &near[..CANDIDATES] {
            let t = profile.thetas[j];
            best = best.min(refine(emb, &y, t - step, t + step)?);
        }
        worst = worst.max(best);
    }
    Ok(worst)
}

/// Winding number around the origin of a closed planar polyline.
pub fn winding_number(points: &[(f64, f64)]) -> Result<i64, GeometryError> {
    let mut total = 0.0;
    for i in 0..points.len() {
        let next = (i + 1) % points.len();
        let (a, b) = (points[i], points[next]);
        let turn = (a.0 * b.1 - a.1 * b.0).atan2(a.0 * b.0 + a.1 * b.1);
        if turn.abs() > PI / 2.0 {
            return Err(GeometryError::DegenerateProjection { index: i, next });
        }
        total += turn;
    }
    Ok((total / (2.0 * PI)).round() as i64)
}

/// Linking number of the knot with `{z₁ = 0}`: the winding of `z₁`.
pub fn linking_with_axis(emb: &EmbeddingParams, profile: &RadiusProfile) -> Result<i64, GeometryError> {
    let z1: Vec<(f64, f64)> = profile.points(emb).iter().map(|x| (x[0], x[1])).collect();
    winding_number(&z1)
}
