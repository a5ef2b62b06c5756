//! The per-knot report.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use minknot::arith::LaurentPoly2;
use minknot::braid::{braid_word, BraidWord};
use minknot::geometry::{
    linking_with_axis, psi_invariance, radius_periodicity_deviation, radius_profile, EmbeddingParams, GeometryError,
    PERIOD_TOL, PSI_TOL,
};
use minknot::homfly::{fwm_check, HomflyError};
use minknot::params::KnotParams;
use minknot::writhe::{closed_form_writhe, writhe_bounds};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsEcho {
    #[serde(rename = "N")]
    pub n: i64,
    pub p: i64,
    pub q: i64,
    pub d: i64,
    pub p_t: i64,
    pub q_t: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomflySummary {
    pub polynomial: LaurentPoly2,
    pub p_min: i64,
    pub p_max: i64,
    pub fwm_pass: bool,
    pub morton_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Periodicity {
    pub grid: usize,
    /// `None` when `d = 1`.
    pub radius_deviation: Option<f64>,
    /// `None` when `d = 1`.
    pub psi_deviation: Option<f64>,
    pub linking_number: i64,
}

impl Periodicity {
    pub fn compute(params: &KnotParams, grid: usize) -> Result<Self, CliError> {
        let emb = EmbeddingParams::standard(params.clone());
        let profile = radius_profile(&emb, grid).map_err(geometry_error)?;
        let (radius_deviation, psi_deviation) = if params.d() > 1 {
            (
                Some(radius_periodicity_deviation(&emb, &profile).map_err(geometry_error)?),
                Some(psi_invariance(&emb, &profile).map_err(geometry_error)?),
            )
        } else {
            (None, None)
        };
        let linking_number = linking_with_axis(&emb, &profile).map_err(geometry_error)?;
        Ok(Periodicity { grid, radius_deviation, psi_deviation, linking_number })
    }

    pub fn problems(&self, params: &KnotParams) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(r) = self.radius_deviation.filter(|&r| r >= PERIOD_TOL || r.is_nan()) {
            out.push(format!("radius periodicity deviation {r:e} >= {PERIOD_TOL:e}"));
        }
        if let Some(s) = self.psi_deviation.filter(|&s| s >= PSI_TOL || s.is_nan()) {
            out.push(format!("psi-invariance deviation {s:e} >= {PSI_TOL:e}"));
        }
        if self.linking_number != params.n() {
            out.push(format!("linking number {} != N = {}", self.linking_number, params.n()));
        }
        out
    }
}

fn geometry_error(e: GeometryError) -> CliError {
    match e {
        GeometryError::GridTooSmall { .. } | GeometryError::BadAmplitude { .. } => CliError::Validation(e.to_string()),
        _ => CliError::Consistency(e.to_string()),
    }
}

pub fn homfly_error(e: HomflyError) -> CliError {
    match e {
        HomflyError::StrandCapExceeded { .. } | HomflyError::UnknownFixture(_) | HomflyError::FixtureParse { .. } => {
            CliError::Validation(e.to_string())
        }
        _ => CliError::Consistency(e.to_string()),
    }
}

#[derive(Debug, Clone, Default)]
pub struct ReportOptions {
    pub homfly: bool,
    /// Radius grid for the periodicity probe; no probe when `None`.
    pub grid: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnotReport {
    pub params: ParamsEcho,
    pub crossing_count: usize,
    pub writhe_direct: i64,
    pub writhe_closed_form: i64,
    pub bound: i64,
    pub sharp: bool,
    pub braid_word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homfly: Option<HomflySummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub periodicity: Option<Periodicity>,
}

impl KnotReport {
    pub fn build(params: &KnotParams, opts: &ReportOptions) -> Result<Self, CliError> {
        let swept = braid_word(params).map_err(|e| CliError::Consistency(e.to_string()))?;
        let bounds = writhe_bounds(params);
        let homfly = if opts.homfly {
            let (r, c) = fwm_check(params).map_err(homfly_error)?;
            Some(HomflySummary {
                polynomial: r.polynomial,
                p_min: r.p_min,
                p_max: r.p_max,
                fwm_pass: c.pass,
                morton_pass: c.morton_pass,
            })
        } else {
            None
        };
        let periodicity = opts.grid.map(|g| Periodicity::compute(params, g)).transpose()?;
        Ok(KnotReport {
            params: ParamsEcho {
                n: params.n(),
                p: params.p(),
                q: params.q(),
                d: params.d(),
                p_t: params.p_t(),
                q_t: params.q_t(),
            },
            crossing_count: swept.crossings.len(),
            writhe_direct: swept.crossings.iter().map(|c| c.sign.to_i64()).sum(),
            writhe_closed_form: closed_form_writhe(params),
            bound: bounds.bound,
            sharp: bounds.sharp,
            braid_word: swept.word.to_string(),
            homfly,
            periodicity,
        })
    }

    /// Violated internal invariants, empty when the report is consistent.
    pub fn problems(&self) -> Vec<String> {
        let p = &self.params;
        let mut out = Vec::new();
        let expected = ((p.n - 1) * p.q) as usize;
        if self.crossing_count != expected {
            out.push(format!("crossing count {} != (N-1)q = {expected}", self.crossing_count));
        }
        if self.writhe_direct.abs() != self.writhe_closed_form.abs() {
            out.push(format!("|direct writhe {}| != |closed form {}|", self.writhe_direct, self.writhe_closed_form));
        }
        if self.writhe_direct.abs() > self.bound {
            out.push(format!("|writhe {}| exceeds bound {}", self.writhe_direct, self.bound));
        }
        match BraidWord::parse(&self.braid_word, Some(p.n as usize)) {
            Ok(w) if w.exponent_sum() != self.writhe_direct => {
                out.push(format!("word exponent sum {} != direct writhe {}", w.exponent_sum(), self.writhe_direct))
            }
            Ok(w) if w.len() != self.crossing_count => {
                out.push(format!("word length {} != crossing count {}", w.len(), self.crossing_count))
            }
            Ok(_) => {}
            Err(e) => out.push(format!("braid word does not parse: {e}")),
        }
        if let Some(h) = &self.homfly {
            if !h.fwm_pass {
                out.push(format!("HOMFLY degrees [{}, {}] outside the (d+1)(N-1) bounds", h.p_min, h.p_max));
            }
            if !h.morton_pass {
                out.push(format!("HOMFLY degrees [{}, {}] outside w-N+1..w+N-1", h.p_min, h.p_max));
            }
        }
        if let Some(per) = &self.periodicity {
            if let Ok(k) = KnotParams::new(p.n, p.p, p.q) {
                out.extend(per.problems(&k));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        writeln!(s, "K({},{},{})", p.n, p.p, p.q).unwrap();
        writeln!(s, "d = {}, p~ = {}, q~ = {}", p.d, p.p_t, p.q_t).unwrap();
        writeln!(s, "crossing_count = {}", self.crossing_count).unwrap();
        writeln!(s, "writhe = {}", self.writhe_direct).unwrap();
        writeln!(s, "writhe_closed_form = {}", self.writhe_closed_form).unwrap();
        writeln!(s, "bound = {}", self.bound).unwrap();
        writeln!(s, "sharp = {}", self.sharp).unwrap();
        writeln!(s, "braid = {}", self.braid_word).unwrap();
        if let Some(h) = &self.homfly {
            writeln!(s, "homfly = {}", h.polynomial).unwrap();
            writeln!(s, "p_min = {}, p_max = {}", h.p_min, h.p_max).unwrap();
            writeln!(s, "fwm = {}, morton = {}", pass(h.fwm_pass), pass(h.morton_pass)).unwrap();
        }
        if let Some(per) = &self.periodicity {
            writeln!(s, "grid = {}", per.grid).unwrap();
            match (per.radius_deviation, per.psi_deviation) {
                (Some(r), Some(psi)) => {
                    writeln!(s, "radius periodicity deviation = {r:e}").unwrap();
                    writeln!(s, "psi-invariance deviation = {psi:e}").unwrap();
                }
                _ => writeln!(s, "d = 1: no rotation symmetry to test").unwrap(),
            }
            writeln!(s, "linking number with axis = {}", per.linking_number).unwrap();
        }
        s
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(n: i64, p: i64, q: i64, opts: &ReportOptions) -> KnotReport {
        KnotReport::build(&KnotParams::new(n, p, q).unwrap(), opts).unwrap()
    }

    #[test]
    fn torus_report() {
        let r = report(3, 5, 5, &ReportOptions::default());
        assert_eq!((r.crossing_count, r.writhe_direct, r.sharp), (10, 10, true));
        assert!(r.problems().is_empty());
        assert_eq!(r.braid_word, ["s2 s1"; 5].join(" "));
    }

    #[test]
    fn opposite_parity_has_zero_writhe() {
        let r = report(3, 4, 7, &ReportOptions::default());
        assert_eq!((r.writhe_direct, r.writhe_closed_form), (0, 0));
    }

    #[test]
    fn json_round_trip_with_all_sections() {
        let r = report(3, 10, 5, &ReportOptions { homfly: true, grid: Some(512) });
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<KnotReport>(&json).unwrap(), r);
        let keys = [
            "params",
            "crossing_count",
            "writhe_direct",
            "writhe_closed_form",
            "bound",
            "sharp",
            "braid_word",
            "homfly",
            "periodicity",
        ];
        let at: Vec<usize> = keys.iter().map(|k| json.find(&format!("\"{k}\":")).unwrap()).collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]), "{json}");
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v.as_object().unwrap().len(), keys.len());
        assert_eq!(v["params"]["N"], 3);
    }

    #[test]
    fn tampered_report_is_flagged() {
        let mut r = report(2, 3, 5, &ReportOptions::default());
        r.writhe_direct = 100;
        let p = r.problems();
        assert_eq!(p.len(), 3, "{p:?}");
        assert!(r.problems().iter().any(|m| m.contains("exponent sum")));
    }
}
