//! Static braid diagram: each strand `x_k(t) = sin(2πq(t+k)/N)` drawn over
//! the window `t ∈ (η, 1+η]`, broken where it passes under another strand.

use std::f64::consts::PI;
use std::fmt::Write;

use minknot::arith::Sign;
use minknot::braid::enumerate_crossings;
use minknot::params::KnotParams;

pub const WIDTH: f64 = 1200.0;
pub const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;
/// Polyline vertices per strand over the whole window.
const SAMPLES: usize = 600;
/// Half-width of the gap in the under-strand, in units of `t`.
const GAP: f64 = 0.006;

fn px(t: f64) -> f64 {
    MARGIN + t * (WIDTH - 2.0 * MARGIN)
}

fn py(x: f64) -> f64 {
    HEIGHT / 2.0 - x * (HEIGHT / 2.0 - MARGIN)
}

fn strand_x(k: &KnotParams, j: usize, t: f64) -> f64 {
    (2.0 * PI * k.q() as f64 * (t + j as f64) / k.n() as f64).sin()
}

/// Intervals of `[0, 1]` left after removing `(c − GAP, c + GAP)` around
/// each `c` in `cuts`.
fn visible(cuts: &mut [f64]) -> Vec<(f64, f64)> {
    cuts.sort_by(f64::total_cmp);
    let mut out = Vec::new();
    let mut start = 0.0;
    for &c in cuts.iter() {
        if c - GAP > start {
            out.push((start, c - GAP));
        }
        start = f64::max(start, c + GAP);
    }
    if start < 1.0 {
        out.push((start, 1.0));
    }
    out
}

pub fn render_svg(k: &KnotParams) -> String {
    let crossings = enumerate_crossings(k);
    let n = k.strands();
    let mut under: Vec<Vec<f64>> = vec![Vec::new(); n];
    for c in &crossings {
        let u = if c.over_strand == c.k { c.l } else { c.k };
        under[u].push(c.t.to_f64());
    }

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">"#
    )
    .unwrap();
    writeln!(s, "<title>{k}</title>").unwrap();
    s.push_str("<style>\n");
    s.push_str("polyline { fill: none; stroke-width: 2; }\n");
    for j in 0..n {
        writeln!(s, ".strand-{j} {{ stroke: hsl({}, 70%, 40%); }}", 360 * j / n).unwrap();
    }
    s.push_str(".crossing-pos circle { fill: #1a7f37; } .crossing-neg circle { fill: #cf222e; }\n");
    s.push_str("text { font: 10px sans-serif; text-anchor: middle; }\n");
    s.push_str("</style>\n");
    writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#).unwrap();

    for (j, cuts) in under.iter_mut().enumerate() {
        for (a, b) in visible(cuts) {
            let first = (a * SAMPLES as f64).floor() as usize + 1;
            let last = (b * SAMPLES as f64).ceil() as usize;
            let mut ts = vec![a];
            ts.extend((first..last).map(|i| i as f64 / SAMPLES as f64));
            ts.push(b);
            let pts: Vec<String> = ts.iter().map(|&t| format!("{:.2},{:.2}", px(t), py(strand_x(k, j, t)))).collect();
            writeln!(s, r#"<polyline class="strand-{j}" points="{}"/>"#, pts.join(" ")).unwrap();
        }
    }

    for c in &crossings {
        let t = c.t.to_f64();
        let (x, y) = (px(t), py(strand_x(k, c.k, t)));
        let (class, label) = match c.sign {
            Sign::Plus => ("crossing-pos", "+"),
            Sign::Minus => ("crossing-neg", "-"),
        };
        writeln!(
            s,
            r#"<g class="{class}" data-t="{}" data-strands="{},{}"><circle cx="{x:.2}" cy="{y:.2}" r="2.5"/><text x="{x:.2}" y="{:.2}">{label}</text></g>"#,
            c.t,
            c.k,
            c.l,
            y - 6.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
