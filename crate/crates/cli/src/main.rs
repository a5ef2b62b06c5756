use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use minknot::geometry::{radius_profile, s3_csv, EmbeddingParams};
use minknot::homfly::{fwm_check, Fixtures};
use minknot_cli::report::homfly_error;
use minknot_cli::{
    lemma_transcript, params, parse_range, render_svg, scan, write_output, CliError, KnotReport, Periodicity,
    ReportOptions,
};

/// Invariants of the simple minimal knots K(N,p,q): `p` is the cosine
/// frequency and `q` the sine frequency.
#[derive(Parser)]
#[command(name = "minknot", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Triple {
    #[arg(value_name = "N", allow_negative_numbers = true)]
    n: i64,
    #[arg(allow_negative_numbers = true)]
    p: i64,
    #[arg(allow_negative_numbers = true)]
    q: i64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Crossings, writhe (direct and closed form), bound and braid word.
    Report {
        #[command(flatten)]
        k: Triple,
        #[arg(long)]
        json: bool,
        /// Also compute the HOMFLY polynomial.
        #[arg(long)]
        homfly: bool,
        /// Also run the periodicity probe on this radius grid.
        #[arg(long)]
        grid: Option<usize>,
    },
    /// One CSV row per valid triple; ranges are `a..b` (inclusive) or `a`.
    Scan {
        #[arg(value_name = "N_RANGE")]
        n: String,
        #[arg(value_name = "P_RANGE")]
        p: String,
        #[arg(value_name = "Q_RANGE")]
        q: String,
        /// Write the table here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Number of worker threads.
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Runs the lemma checks and prints a transcript.
    Lemmas {
        #[command(flatten)]
        k: Triple,
        #[arg(long)]
        json: bool,
    },
    /// Writes the braid diagram as SVG (`-` for standard output).
    Svg {
        #[command(flatten)]
        k: Triple,
        output: PathBuf,
    },
    /// HOMFLY polynomial, degree bounds and fixture matches.
    Homfly {
        #[command(flatten)]
        k: Triple,
        /// Fixture file replacing the bundled knot table.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Radius periodicity, rotation invariance and linking with the axis.
    Period {
        #[command(flatten)]
        k: Triple,
        #[arg(long, default_value_t = 4096)]
        grid: usize,
        #[arg(long)]
        json: bool,
        /// Also write the sampled curve in S^3 as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn consistency(problems: Vec<String>) -> Result<(), CliError> {
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Consistency(problems.join("; ")))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Report { k, json: as_json, homfly, grid } => {
            let kp = params(k.n, k.p, k.q)?;
            let report = KnotReport::build(&kp, &ReportOptions { homfly, grid })?;
            print!("{}", if as_json { json(&report) } else { report.to_text() });
            consistency(report.problems())
        }
        Cmd::Scan { n, p, q, csv, parallel } => {
            let [n, p, q] = [n, p, q].map(|r| parse_range(&r));
            let s = scan(
                n.map_err(CliError::Validation)?,
                p.map_err(CliError::Validation)?,
                q.map_err(CliError::Validation)?,
                parallel,
            )?;
            write_output(csv.as_deref().unwrap_or("-".as_ref()), &s.to_csv())?;
            if s.all_consistent() {
                Ok(())
            } else {
                Err(CliError::Consistency("inconsistent rows in scan".into()))
            }
        }
        Cmd::Lemmas { k, json: as_json } => {
            let kp = params(k.n, k.p, k.q)?;
            let (outcomes, text, failed) = lemma_transcript(&kp);
            print!("{}", if as_json { json(&outcomes) } else { text });
            if failed {
                Err(CliError::Consistency(format!("lemma check failed for {kp}")))
            } else {
                Ok(())
            }
        }
        Cmd::Svg { k, output } => {
            let kp = params(k.n, k.p, k.q)?;
            write_output(&output, &render_svg(&kp))
        }
        Cmd::Homfly { k, fixtures, json: as_json } => {
            let kp = params(k.n, k.p, k.q)?;
            let table = match fixtures {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|source| CliError::Io { path: path.clone(), source })?
                    .parse::<Fixtures>()
                    .map_err(homfly_error)?,
                None => Fixtures::bundled(),
            };
            let (result, check) = fwm_check(&kp).map_err(homfly_error)?;
            let matches: Vec<(String, String)> = table
                .names()
                .filter_map(|name| {
                    let m = table.compare(&result.polynomial, name).ok()?;
                    m.matches().then(|| (name.to_string(), format!("{m:?}").to_lowercase()))
                })
                .collect();
            if as_json {
                let v = serde_json::json!({ "result": result, "check": check, "fixture_matches": matches });
                print!("{}", json(&v));
            } else {
                println!("{kp} on {} strands, writhe {}", result.strands, result.writhe);
                println!("P = {}", result.polynomial);
                println!("p_min = {}, p_max = {}", result.p_min, result.p_max);
                println!("(d+1)(N-1) bounds [{}, {}]: {}", check.lower, check.upper, pass(check.pass));
                println!("w-N+1 <= p_min <= p_max <= w+N-1: {}", pass(check.morton_pass));
                let [this, mirror] = check.equalities();
                println!("bounds attained (lower, upper): {this:?}, mirror image: {mirror:?}");
                if matches.is_empty() {
                    println!("no fixture matches");
                }
                for (name, how) in &matches {
                    println!("matches {name} ({how})");
                }
            }
            if check.pass && check.morton_pass {
                Ok(())
            } else {
                Err(CliError::Consistency(format!("HOMFLY degree bounds violated for {kp}")))
            }
        }
        Cmd::Period { k, grid, json: as_json, csv } => {
            let kp = params(k.n, k.p, k.q)?;
            let per = Periodicity::compute(&kp, grid)?;
            if let Some(path) = csv {
                let emb = EmbeddingParams::standard(kp.clone());
                let profile = radius_profile(&emb, grid).map_err(|e| CliError::Validation(e.to_string()))?;
                write_output(&path, &s3_csv(&emb, &profile))?;
            }
            if as_json {
                print!("{}", json(&per));
            } else {
                println!("{kp}, d = {}, grid = {grid}", kp.d());
                match (per.radius_deviation, per.psi_deviation) {
                    (Some(r), Some(psi)) => {
                        println!("radius periodicity deviation = {r:e}");
                        println!("psi-invariance deviation = {psi:e}");
                    }
                    _ => println!("d = 1: no rotation symmetry to test"),
                }
                println!("linking number with axis = {}", per.linking_number);
            }
            consistency(per.problems(&kp))
        }
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
