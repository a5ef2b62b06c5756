//! Building blocks of the `minknot` command line: per-knot reports, grid
//! scans, lemma transcripts and SVG braid diagrams.

pub mod report;
pub mod scan;
pub mod svg;

pub use report::{HomflySummary, KnotReport, ParamsEcho, Periodicity, ReportOptions};
pub use scan::{parse_range, scan, Scan, ScanRow, SCAN_HEADER};
pub use svg::render_svg;

use std::path::PathBuf;

use minknot::params::{KnotParams, ParamError};
use minknot::writhe::{verify_lemmas, LemmaOutcome};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Consistency(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> Self {
        CliError::Validation(e.to_string())
    }
}

pub fn params(n: i64, p: i64, q: i64) -> Result<KnotParams, CliError> {
    Ok(KnotParams::new(n, p, q)?)
}

/// The lemma checks for one triple as printable lines, and whether any of
/// them failed.
pub fn lemma_transcript(params: &KnotParams) -> (Vec<LemmaOutcome>, String, bool) {
    let outcomes = verify_lemmas(params);
    let mut text = format!("lemma checks for {params}\n");
    for o in &outcomes {
        text.push_str(&o.to_string());
        text.push('\n');
    }
    let failed = outcomes.iter().filter(|o| o.is_failure()).count();
    text.push_str(&format!("{} checks, {} failed\n", outcomes.len(), failed));
    (outcomes, text, failed > 0)
}

/// Writes `contents` to `path`, or to standard output when `path` is `-`.
pub fn write_output(path: &std::path::Path, contents: &str) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        print!("{contents}");
        return Ok(());
    }
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}
