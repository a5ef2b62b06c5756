use std::f64::consts::PI;
use std::fmt::Write;

use super::{EmbeddingParams, RadiusProfile};
use crate::params::KnotParams;

/// `(2cos Nt − cos Nt sin qt, 2sin Nt − sin Nt sin qt, cos pt)`.
pub fn embed_r3(knot: &KnotParams, t: f64) -> [f64; 3] {
    let (n, p, q) = (knot.n() as f64, knot.p() as f64, knot.q() as f64);
    let (c, s, w) = ((n * t).cos(), (n * t).sin(), (q * t).sin());
    [2.0 * c - c * w, 2.0 * s - s * w, (p * t).cos()]
}

/// `samples` points of [`embed_r3`] over `[0, 2π)`, as `t,x,y,z` lines.
pub fn r3_csv(knot: &KnotParams, samples: usize) -> String {
    let mut out = String::from("t,x,y,z\n");
    for i in 0..samples {
        let t = 2.0 * PI * i as f64 / samples as f64;
        let [x, y, z] = embed_r3(knot, t);
        writeln!(out, "{t},{x},{y},{z}").unwrap();
    }
    out
}

pub fn s3_csv(emb: &EmbeddingParams, profile: &RadiusProfile) -> String {
    let mut out = String::from("theta,r,re(z1),im(z1),re(z2),im(z2)\n");
    for (&t, &r) in profile.thetas.iter().zip(&profile.radii) {
        let [a, b, c, d] = emb.point(r, t);
        writeln!(out, "{t},{r},{a},{b},{c},{d}").unwrap();
    }
    out
}
