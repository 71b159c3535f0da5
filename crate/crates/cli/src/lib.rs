//! Subcommands of the `sphere-laman` binary. Every command writes JSON Lines
//! to the given writer; counts are decimal strings.

use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sphere_laman_core::count::{to_count_problem, CountOptions, Counter, MemoStats};
use sphere_laman_core::generator::{enumerate_laman_bounded, MAX_ENUMERATION_N};
use sphere_laman_core::graph6;
use sphere_laman_core::oracle::sphere::{distance_via_lifts, spherical_distance, SpherePoint};
use sphere_laman_core::oracle::{oracle_count_random, OracleError};
use sphere_laman_core::Graph;

/// Largest `n` a sweep runs without an explicit opt-in.
pub const DEFAULT_SWEEP_MAX: u32 = 9;

/// Settings shared by every subcommand.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub memo: bool,
    /// Fan the recursion out over threads as well as the graphs.
    pub parallel: bool,
    /// Attach elapsed time and memo statistics to each report.
    pub stats: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Self { memo: true, parallel: true, stats: false }
    }
}

impl Settings {
    fn count_options(&self) -> CountOptions {
        CountOptions { memo: self.memo, parallel: self.parallel, ..CountOptions::default() }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Stats {
    pub elapsed_ms: f64,
    pub memo_hits: u64,
    pub memo_misses: u64,
    pub memo_peak_entries: usize,
}

impl Stats {
    fn new(start: Instant, memo: MemoStats) -> Self {
        Self {
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            memo_hits: memo.hits,
            memo_misses: memo.misses,
            memo_peak_entries: memo.peak_entries,
        }
    }
}

/// Result for one graph.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct RunReport {
    pub id: String,
    pub graph6: String,
    pub n: u32,
    pub m: usize,
    pub is_laman: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", flatten)]
    pub stats: Option<Stats>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SweepSummary {
    pub n: u32,
    pub graphs: usize,
    pub max: String,
    pub argmax_count: usize,
    /// graph6 strings of the maximizers, in corpus order.
    pub argmax: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerifySummary {
    pub seed: u64,
    pub pass: bool,
    pub checks: usize,
    pub failed: usize,
}

/// One line of output.
#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Record {
    Graph(RunReport),
    Summary(SweepSummary),
    Check(CheckRecord),
    Verify(VerifySummary),
}

fn emit(out: &mut impl Write, r: &Record) -> Result<()> {
    serde_json::to_writer(&mut *out, r)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Counts one graph. Non-Laman graphs are only counted with `force`; graphs
/// with the wrong number of edges cannot be counted at all.
pub fn report(id: String, g: &Graph, force: bool, settings: &Settings) -> RunReport {
    let start = Instant::now();
    let is_laman = g.is_laman();
    let counter = Counter::new(settings.count_options());
    let (count, error) = if is_laman || force {
        match to_count_problem(g).map_err(|e| e.to_string()).and_then(|p| counter.count(&p).map_err(|e| e.to_string()))
        {
            Ok(c) => (Some(c.to_string()), None),
            Err(e) => (None, Some(e)),
        }
    } else {
        (None, None)
    };
    RunReport {
        id,
        graph6: graph6::encode(g),
        n: g.n(),
        m: g.m(),
        is_laman,
        count,
        error,
        stats: settings.stats.then(|| Stats::new(start, counter.stats())),
    }
}

/// Counts every graph, in parallel across graphs, reporting in input order.
pub fn cmd_count(graphs: &[(String, Graph)], force: bool, settings: &Settings, out: &mut impl Write) -> Result<()> {
    let reports: Vec<RunReport> = graphs.par_iter().map(|(id, g)| report(id.clone(), g, force, settings)).collect();
    for r in reports {
        emit(out, &Record::Graph(r))?;
    }
    Ok(())
}

pub struct SweepOptions<'a> {
    pub n: u32,
    pub max_only: bool,
    /// Largest `n` accepted; raising it above [`DEFAULT_SWEEP_MAX`] is the
    /// opt-in for the full-size sweep.
    pub bound: u32,
    pub corpus_out: Option<&'a std::path::Path>,
}

/// Enumerates the Laman graphs on `n` vertices, counts each and reports the
/// maximum with its maximizers.
pub fn cmd_sweep(opts: &SweepOptions, settings: &Settings, out: &mut impl Write) -> Result<SweepSummary> {
    let bound = opts.bound.min(MAX_ENUMERATION_N);
    let corpus = enumerate_laman_bounded(opts.n, bound).map_err(|e| InputError(e.to_string()))?;
    if let Some(path) = opts.corpus_out {
        std::fs::write(path, corpus.to_corpus_file()).with_context(|| format!("writing {}", path.display()))?;
    }
    let reports: Vec<RunReport> = corpus
        .graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| report(format!("n{}#{}", opts.n, i + 1), g, false, settings))
        .collect();
    let counts: Vec<num_bigint::BigUint> = reports
        .iter()
        .map(|r| r.count.as_deref().expect("corpus graphs are Laman").parse().expect("decimal"))
        .collect();
    let max = counts.iter().max().cloned().unwrap_or_default();
    let argmax: Vec<String> =
        reports.iter().zip(&counts).filter(|(_, c)| **c == max).map(|(r, _)| r.graph6.clone()).collect();
    if !opts.max_only {
        for r in reports {
            emit(out, &Record::Graph(r))?;
        }
    }
    let summary =
        SweepSummary { n: opts.n, graphs: counts.len(), max: max.to_string(), argmax_count: argmax.len(), argmax };
    emit(out, &Record::Summary(summary.clone()))?;
    Ok(summary)
}

/// A deliberate corruption of recursion results, for checking that
/// verification catches a broken count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    OffByOne,
}

const LIFT_POINTS: usize = 1000;
const LIFT_TOL: f64 = 1e-9;
const ORACLE_DRAWS: u64 = 5;

/// Runs the oracle suite. Returns whether every check passed.
pub fn cmd_verify(seed: u64, fault: Fault, settings: &Settings, out: &mut impl Write) -> Result<bool> {
    let mut checks = vec![lift_identity_check(seed)];
    let k4e = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).expect("valid graph");
    for (name, g) in [("triangle", Graph::triangle()), ("k4_minus_edge", k4e)] {
        checks.push(oracle_check(name, &g, seed, fault, settings)?);
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    for c in &checks {
        emit(out, &Record::Check(c.clone()))?;
    }
    emit(out, &Record::Verify(VerifySummary { seed, pass: failed == 0, checks: checks.len(), failed }))?;
    Ok(failed == 0)
}

fn lift_identity_check(seed: u64) -> CheckRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut worst, mut skipped) = (0.0f64, 0usize);
    let mut first_failure = None;
    let mut checked = 0;
    while checked < LIFT_POINTS {
        let (p, q) = (SpherePoint::random(&mut rng), SpherePoint::random(&mut rng));
        let Ok((a, b)) = distance_via_lifts(&p, &q) else {
            skipped += 1;
            continue;
        };
        let d = spherical_distance(&p, &q);
        let err = ((a - d).norm()).max((b - d).norm()) / (1.0 + d.norm());
        if err > LIFT_TOL && first_failure.is_none() {
            first_failure = Some(serde_json::json!({ "p": format!("{p:?}"), "q": format!("{q:?}"), "error": err }));
        }
        worst = worst.max(err);
        checked += 1;
    }
    CheckRecord {
        name: "lift_cross_ratio_identity".into(),
        pass: first_failure.is_none(),
        detail: serde_json::json!({
            "points": checked,
            "redrawn": skipped,
            "tolerance": LIFT_TOL,
            "max_relative_error": worst,
            "failure": first_failure,
        }),
    }
}

fn oracle_check(name: &str, g: &Graph, seed: u64, fault: Fault, settings: &Settings) -> Result<CheckRecord> {
    let p = to_count_problem(g)?;
    let mut count = Counter::new(settings.count_options()).count(&p)?;
    if fault == Fault::OffByOne {
        count += 1u32;
    }
    let mut draws = Vec::new();
    let mut mismatch = None;
    for k in 0..ORACLE_DRAWS {
        let draw_seed = seed.wrapping_mul(31).wrapping_add(k);
        let (oracle, used) = match oracle_count_random(g, draw_seed, 20) {
            Ok(v) => v,
            Err(e @ (OracleError::NonGeneric(_) | OracleError::Degenerate)) => {
                bail!("no generic draw near seed {draw_seed}: {e}")
            }
            Err(e) => return Err(e.into()),
        };
        if oracle != count && mismatch.is_none() {
            mismatch = Some(serde_json::json!({
                "graph": graph6::encode(g),
                "distance_seed": used,
                "oracle": oracle.to_string(),
                "recursion": count.to_string(),
            }));
        }
        draws.push(serde_json::json!({ "distance_seed": used, "oracle": oracle.to_string() }));
    }
    Ok(CheckRecord {
        name: format!("oracle_{name}"),
        pass: mismatch.is_none(),
        detail: serde_json::json!({ "recursion": count.to_string(), "draws": draws, "mismatch": mismatch }),
    })
}

/// A problem with the user's input rather than with the computation.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}
