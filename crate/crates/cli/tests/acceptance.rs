//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every line is printed; the process fails if any gated criterion fails.

use std::panic;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use minknot::arith::{EpsRational, LaurentPoly2, Rational, Sign};
use minknot::braid::{enumerate_crossings, geometric_oracle, match_crossings, BraidWord, Letter};
use minknot::geometry::{
    psi_invariance, radius_periodicity_deviation, radius_profile, EmbeddingParams, PERIOD_TOL, PSI_TOL,
};
use minknot::homfly::{fwm_check, homfly_polynomial, skein_oracle, Fixtures};
use minknot::params::{valid_triples, KnotParams};
use minknot::writhe::{
    closed_form_writhe, direct_writhe, reduced_phase_sum, verify_lemmas_with, writhe_bounds, LemmaStatus,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORACLE_T_TOL: f64 = 1e-9;
const ORACLE_SAMPLES_PER_CROSSING: usize = 256;
const THEOREM_GRID: usize = 4096;

type Check = fn() -> Verdict;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let mut v = f();
    let took = start.elapsed();
    v.pass &= took < limit;
    v.detail = format!("{} [{:.2}s, limit {}s]", v.detail, took.as_secs_f64(), limit.as_secs());
    v
}

/// `2 ≤ N ≤ 6`, `N < p, q ≤ 30`.
fn grid_one() -> Vec<KnotParams> {
    valid_triples(2..=6, 1..=30, 1..=30)
}

/// `N ≤ 5`, `p, q ≤ 20`.
fn grid_small() -> Vec<KnotParams> {
    valid_triples(2..=5, 1..=20, 1..=20)
}

fn c1_crossing_count() -> Verdict {
    timed(Duration::from_secs(5), || {
        let grid = grid_one();
        let bad: Vec<_> = grid.iter().filter(|k| enumerate_crossings(k).len() as i64 != (k.n() - 1) * k.q()).collect();
        verdict(
            bad.is_empty(),
            format!("{} triples, {} with a count other than (N-1)q {:?}", grid.len(), bad.len(), bad.first()),
        )
    })
}

fn c2_torus() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=6 {
        for q in n + 1..=25 {
            if let Ok(k) = KnotParams::new(n, q, q) {
                checked += 1;
                let w = direct_writhe(&k);
                if w != (n - 1) * q {
                    bad.push((k.to_string(), w));
                }
            }
        }
    }
    verdict(bad.is_empty(), format!("{checked} torus triples, mismatches {bad:?}"))
}

fn c3_closed_form() -> Verdict {
    timed(Duration::from_secs(10), || {
        let grid = grid_one();
        let mut abs_bad = 0;
        let mut odd_bad = 0;
        let mut odd = 0;
        for k in &grid {
            let w = direct_writhe(k);
            if w.abs() != closed_form_writhe(k).abs() {
                abs_bad += 1;
            }
            if (k.p_t() + k.q_t()) % 2 == 1 {
                odd += 1;
                if w != 0 {
                    odd_bad += 1;
                }
            }
        }
        verdict(
            abs_bad == 0 && odd_bad == 0,
            format!(
                "{} triples, |closed| != |direct| on {abs_bad}; {odd} with p~+q~ odd, nonzero writhe on {odd_bad}",
                grid.len()
            ),
        )
    })
}

/// Whether `σ(ps/N)σ(qs/N)` is constant in `s = 1..N−1`, evaluated by plain
/// integer floors.
fn products_constant(n: i64, p: i64, q: i64) -> bool {
    let sig = |a: i64| if a.div_euclid(n) % 2 == 0 { 1 } else { -1 };
    let first = sig(p) * sig(q);
    (1..n).all(|s| sig(p * s) * sig(q * s) == first)
}

fn c4_literal() -> Verdict {
    let grid = grid_one();
    let mut over = 0;
    let mut iff_bad = Vec::new();
    let mut otherwise_bad = 0;
    let mut cert_bad = 0;
    for k in &grid {
        let (n, p, q, d) = (k.n(), k.p(), k.q(), k.d());
        let w = direct_writhe(k).abs();
        let divides = (p + q) % (2 * n) == 0 || (p - q) % (2 * n) == 0;
        let b = writhe_bounds(k);
        if b.certificate.is_some() != divides || b.certificate.is_some_and(|c| !c.holds(k)) {
            cert_bad += 1;
        }
        if w > d * (n - 1) {
            over += 1;
        }
        if (w == d * (n - 1)) != divides {
            iff_bad.push(k.to_string());
        }
        if !divides && w > d * (n - 3) {
            otherwise_bad += 1;
        }
    }
    verdict(
        over == 0 && iff_bad.is_empty() && otherwise_bad == 0 && cert_bad == 0,
        format!(
            "{} triples: |w| > d(N-1) on {over}; equality iff 2N | p+-q fails on {} (first {:?}); |w| > d(N-3) otherwise on {otherwise_bad}; certificate errors {cert_bad}",
            grid.len(),
            iff_bad.len(),
            iff_bad.first()
        ),
    )
}

fn c4_corrected() -> Verdict {
    let grid = grid_one();
    let mut bad = Vec::new();
    for k in &grid {
        let (n, p, q, d) = (k.n(), k.p(), k.q(), k.d());
        let w = direct_writhe(k).abs();
        let both_odd = (k.p_t() + k.q_t()) % 2 == 0;
        let divides = (p + q) % (2 * n) == 0 || (p - q) % (2 * n) == 0;
        let attained = w == d * (n - 1);
        let ok = w <= d * (n - 1)
            && attained == (both_odd && divides)
            && divides == products_constant(n, p, q)
            && (attained || w <= d * (n - 3));
        if !ok {
            bad.push(k.to_string());
        }
    }
    verdict(
        bad.is_empty(),
        format!("{} triples: equality iff p~,q~ odd and 2N | p+-q, else |w| <= d(N-3); violations {bad:?}", grid.len()),
    )
}

fn c5_oracle() -> Verdict {
    timed(Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut triples = Vec::new();
        while triples.len() < 30 {
            let (n, p, q) = (rng.gen_range(2..=5), rng.gen_range(3..=20), rng.gen_range(3..=20));
            if let Ok(k) = KnotParams::new(n, p, q) {
                triples.push(k);
            }
        }
        let mut bad = Vec::new();
        let mut worst = 0.0_f64;
        for k in &triples {
            let exact = enumerate_crossings(k);
            let numeric = match geometric_oracle(k, ORACLE_SAMPLES_PER_CROSSING * k.expected_crossings()) {
                Ok(v) => v,
                Err(e) => {
                    bad.push(format!("{k}: {e}"));
                    continue;
                }
            };
            match match_crossings(&exact, &numeric, ORACLE_T_TOL) {
                Ok(a) => {
                    worst = worst.max(a.max_t_error);
                    if numeric.len() != exact.len() || a.matched != exact.len() || !a.is_perfect(ORACLE_T_TOL) {
                        bad.push(format!("{k}: {a:?}"));
                    }
                }
                Err(e) => bad.push(format!("{k}: {e}")),
            }
        }
        verdict(
            bad.is_empty(),
            format!("30 random triples, max |t error| {worst:.1e} (tol {ORACLE_T_TOL:e}), failures {bad:?}"),
        )
    })
}

/// `Σ_{u=1}^{q̃} (−1)^{[p̃u/q̃ + ψ]} (−1)^u` in floating point, with `ψ = j/97`
/// nudged up by far less than the gap to the nearest integer.
fn phase_sum_float(p: i64, q: i64, j: i64) -> i64 {
    (1..=q)
        .map(|u| {
            let f = (p * u) as f64 / q as f64 + j as f64 / 97.0 + 1e-9;
            let s = if (f.floor() as i64).rem_euclid(2) == 0 { 1 } else { -1 };
            if u % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .sum()
}

fn c6_lemmas() -> Verdict {
    timed(Duration::from_secs(20), || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let grid = grid_small();
        let mut failures = Vec::new();
        let mut parity_checked = 0;
        let mut phase_bad = 0;
        for k in &grid {
            let js: Vec<i64> = (0..20).map(|_| rng.gen_range(-500..500)).collect();
            let psis: Vec<EpsRational> = js.iter().map(|&j| EpsRational::just_above(Rational::new(j, 97))).collect();
            let outcomes = verify_lemmas_with(k, &psis);
            failures.extend(outcomes.iter().filter(|o| o.is_failure()).map(|o| format!("{k} {o}")));
            if outcomes.iter().any(|o| o.name == "6" && o.status == LemmaStatus::Pass) {
                parity_checked += 1;
                let (pt, qt) = (k.p_t(), k.q_t());
                for (j, psi) in js.iter().zip(&psis) {
                    let exact = reduced_phase_sum(k.p(), k.q(), psi);
                    if exact != phase_sum_float(pt, qt, *j) || exact.abs() != 1 {
                        phase_bad += 1;
                    }
                }
            }
        }
        verdict(
            failures.is_empty() && phase_bad == 0,
            format!(
                "{} triples ({parity_checked} with p~,q~ odd), lemma failures {failures:?}, phase sums off the float oracle or not +-1: {phase_bad}",
                grid.len()
            ),
        )
    })
}

fn random_word(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(1..=max_strands);
    let len = if n == 1 { 0 } else { rng.gen_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| Letter::new(rng.gen_range(1..n), if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }))
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn c7_homfly_engine() -> Verdict {
    timed(Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let mut engine_bad = 0;
        for _ in 0..200 {
            let w = random_word(&mut rng, 4, 12);
            if skein_oracle(&w).ok() != Some(homfly_polynomial(&w)) {
                engine_bad += 1;
            }
        }
        let trefoil = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
        let expected = LaurentPoly2::from_terms([(2, 0, 2), (4, 0, -1), (2, 2, 1)]);
        let trefoil_ok =
            skein_oracle(&trefoil).ok() == Some(expected.clone()) && homfly_polynomial(&trefoil) == expected;
        let unknot_ok = homfly_polynomial(&BraidWord::from_signed(1, &[]).unwrap()) == LaurentPoly2::one()
            && homfly_polynomial(&BraidWord::from_signed(3, &[1, -2]).unwrap()) == LaurentPoly2::one();
        let mut markov_bad = 0;
        let mut markov = 0;
        while markov < 150 {
            let w = random_word(&mut rng, 5, 12);
            let e = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            let other = if markov % 3 == 2 || w.strands() < 2 {
                w.stabilize(e)
            } else {
                w.conjugate(Letter::new(rng.gen_range(1..w.strands()), e))
            };
            markov += 1;
            if homfly_polynomial(&w) != homfly_polynomial(&other) {
                markov_bad += 1;
            }
        }
        verdict(
            engine_bad == 0 && trefoil_ok && unknot_ok && markov_bad == 0,
            format!(
                "Hecke vs skein mismatches {engine_bad}/200; trefoil = {expected}: {trefoil_ok}; unknot = 1: {unknot_ok}; Markov failures {markov_bad}/150"
            ),
        )
    })
}

fn c8_fwm() -> Verdict {
    timed(Duration::from_secs(120), || {
        let mut parts = Vec::new();
        let mut ok = true;
        for (n, p, q) in [(2, 3, 5), (3, 5, 7), (3, 5, 5), (5, 22, 6)] {
            let k = KnotParams::new(n, p, q).unwrap();
            match fwm_check(&k) {
                Ok((_, c)) => {
                    ok &= c.pass && c.morton_pass;
                    parts.push(format!(
                        "{k}: [{}, {}] in [{}, {}] and [{}, {}]",
                        c.p_min,
                        c.p_max,
                        c.lower,
                        c.upper,
                        c.writhe - n + 1,
                        c.writhe + n - 1
                    ));
                }
                Err(e) => {
                    ok = false;
                    parts.push(format!("{k}: {e}"));
                }
            }
        }
        verdict(ok, parts.join("; "))
    })
}

fn c9_seven_seven() -> Verdict {
    let k = KnotParams::new(5, 22, 6).unwrap();
    match fwm_check(&k) {
        Ok((r, _)) => match Fixtures::bundled().compare(&r.polynomial, "7_7") {
            Ok(m) => verdict(m.matches(), format!("K(5,22,6) vs 7_7: {m:?}")),
            Err(e) => verdict(false, e.to_string()),
        },
        Err(e) => verdict(false, e.to_string()),
    }
}

fn c10_theorem() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, p, q) in [(3, 10, 5), (3, 14, 7), (5, 12, 8), (4, 15, 9)] {
        let start = Instant::now();
        let k = KnotParams::new(n, p, q).unwrap();
        let emb = EmbeddingParams::standard(k.clone());
        let res = radius_profile(&emb, THEOREM_GRID)
            .and_then(|prof| Ok((radius_periodicity_deviation(&emb, &prof)?, psi_invariance(&emb, &prof)?)));
        let took = start.elapsed();
        match res {
            Ok((r, s)) => {
                ok &= r < PERIOD_TOL && s < PSI_TOL && took < Duration::from_secs(10);
                parts.push(format!("{k} d={}: radius {r:.1e}, psi {s:.1e}, {:.2}s", k.d(), took.as_secs_f64()));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{k}: {e}"));
            }
        }
    }
    verdict(ok, format!("grid {THEOREM_GRID}, tol {PERIOD_TOL:e}/{PSI_TOL:e}/10s: {}", parts.join("; ")))
}

/// Both degree bounds attained for the torus knot `T(3,5)`, on either
/// chirality. Reported only.
fn c10_torus_equalities() -> String {
    let k = KnotParams::new(3, 5, 5).unwrap();
    match fwm_check(&k) {
        Ok((_, c)) => {
            let [this, mirror] = c.equalities();
            format!(
                "T(3,5): p_min={}, p_max={}, bounds [{}, {}]; (lower, upper) attained {this:?}, on the mirror {mirror:?}; both equalities on some mirror: {}",
                c.p_min,
                c.p_max,
                c.lower,
                c.upper,
                this == (true, true) || mirror == (true, true)
            )
        }
        Err(e) => e.to_string(),
    }
}

fn c11_determinism() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_minknot");
    let runs: [&[&str]; 4] = [
        &["report", "5", "22", "6", "--json", "--homfly"],
        &["report", "3", "10", "5", "--grid", "512"],
        &["scan", "2..4", "3..15", "3..15", "--parallel", "4"],
        &["svg", "3", "7", "5", "-"],
    ];
    let mut bad = Vec::new();
    for args in runs {
        let out = |_: usize| Command::new(bin).args(args).output().map(|o| (o.status.code(), o.stdout));
        match (out(0), out(1)) {
            (Ok(a), Ok(b)) if a == b && a.0 == Some(0) && !a.1.is_empty() => {}
            (a, b) => bad.push(format!("{args:?}: {:?} vs {:?}", a.map(|x| x.0), b.map(|x| x.0))),
        }
    }
    verdict(bad.is_empty(), format!("{} commands run twice, differing or failing: {bad:?}", runs.len()))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Check)> = vec![
        ("1 crossing count", c1_crossing_count),
        ("2 torus calibration", c2_torus),
        ("3 closed form equivalence", c3_closed_form),
        ("4 writhe bound (literal)", c4_literal),
        ("4 writhe bound (corrected)", c4_corrected),
        ("5 geometric oracle", c5_oracle),
        ("6 lemma suite", c6_lemmas),
        ("7 HOMFLY engine", c7_homfly_engine),
        ("8 HOMFLY degree bounds", c8_fwm),
        ("9 7_7 identification", c9_seven_seven),
        ("10 periodicity", c10_theorem),
        ("11 determinism", c11_determinism),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let v = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            verdict(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        println!("criterion {name}: {} {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        if !v.pass {
            failed.push(name);
        }
        if name.starts_with("10") {
            println!("criterion 10 torus equalities: INFO {}", c10_torus_equalities());
        }
    }
    println!("acceptance: {} failed {failed:?}", failed.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
