use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cubic::CubicSurface;
use super::line::{LineChart, LineJson, ProjectiveLine};
use super::residual::{conditioning, line_residual, max_abs, newton_step, restrict_to_line};
use super::GeometryError;

/// Knobs for the multistart Newton search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct FinderOptions {
    pub starts_per_chart: usize,
    pub max_iter: usize,
    /// Start parameters are drawn uniformly from the disc of this radius.
    pub start_radius: f64,
    /// Newton stops once the step is below `step_tol · max(1, |x|)`.
    pub step_tol: f64,
    pub dedupe_tol: f64,
    pub polish_tol: f64,
    pub accept_tol: f64,
    /// Minimum `σ_min / σ_max` of the restriction Jacobian.
    pub simplicity_tol: f64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for FinderOptions {
    fn default() -> Self {
        FinderOptions {
            starts_per_chart: 200,
            max_iter: 50,
            start_radius: 2.0,
            step_tol: 1e-13,
            dedupe_tol: 1e-6,
            polish_tol: 1e-12,
            accept_tol: 1e-10,
            simplicity_tol: 1e-6,
            threads: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonStats {
    pub starts_used: usize,
    pub converged: usize,
    pub duplicates: usize,
}

#[derive(Clone, Debug)]
pub struct LineFinderReport {
    pub lines: Vec<ProjectiveLine>,
    pub residuals: Vec<f64>,
    pub stats: NewtonStats,
    pub seed: u64,
}

impl LineFinderReport {
    pub fn to_json(&self) -> Vec<LineJson> {
        self.lines.iter().zip(&self.residuals).map(|(l, &r)| l.to_json(r)).collect()
    }
}

const EXPECTED: usize = 27;
const BATCH: usize = 50;
const DIVERGED: f64 = 1e8;

/// Deterministic RNG for one start: the stream is keyed by `(chart, start)`.
fn start_rng(seed: u64, chart: usize, start: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((chart as u64) << 32) | start as u64);
    rng
}

fn disc_sample(rng: &mut impl Rng, radius: f64) -> Complex64 {
    let r = radius * rng.random::<f64>().sqrt();
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, theta)
}

fn run_start(f: &CubicSurface, seed: u64, chart: usize, start: usize, opts: &FinderOptions) -> Option<ProjectiveLine> {
    let mut rng = start_rng(seed, chart, start);
    let params = std::array::from_fn(|_| disc_sample(&mut rng, opts.start_radius));
    let mut x = LineChart::new(chart, params);
    for _ in 0..opts.max_iter {
        let step = newton_step(f, &mut x)?;
        let size = x.params.iter().map(|p| p.norm_sqr()).sum::<f64>().sqrt();
        if !size.is_finite() || size > DIVERGED {
            return None;
        }
        if step < opts.step_tol * size.max(1.0) {
            let line = x.to_line();
            return (line_residual(f, &line) <= opts.accept_tol * 1e2).then_some(line);
        }
    }
    None
}

/// Newton in the line's best chart until the residual reaches `tol`.
fn polish(f: &CubicSurface, line: &ProjectiveLine, tol: f64) -> (ProjectiveLine, f64) {
    let mut best = (line.clone(), line_residual(f, line));
    for _ in 0..8 {
        if best.1 <= tol {
            break;
        }
        let mut chart = best.0.best_chart();
        if newton_step(f, &mut chart).is_none() {
            break;
        }
        let r = max_abs(&restrict_to_line(f, &chart));
        if !(r < best.1) {
            break;
        }
        let next = chart.to_line();
        let r = line_residual(f, &next);
        best = (next, r);
    }
    best
}

fn canonical_key(line: &ProjectiveLine) -> Vec<i64> {
    line.plucker()
        .iter()
        .flat_map(|c| [c.re, c.im])
        .map(|v| (v * 1e6).round() as i64)
        .collect()
}

/// All lines on `V(F)` by multistart Newton over the six Grassmannian charts.
///
/// Starts are processed in `(chart, start)` order in fixed-size batches; a
/// batch may run in parallel but is merged in order, so the result depends
/// only on `(F, seed, opts)`.
pub fn find_lines(f: &CubicSurface, seed: u64, opts: &FinderOptions) -> Result<LineFinderReport, GeometryError> {
    match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| GeometryError::Malformed(format!("thread pool: {e}")))?
            .install(|| search(f, seed, opts)),
        None => search(f, seed, opts),
    }
}

fn search(f: &CubicSurface, seed: u64, opts: &FinderOptions) -> Result<LineFinderReport, GeometryError> {
    let jobs: Vec<(usize, usize)> = (0..6)
        .flat_map(|c| (0..opts.starts_per_chart).map(move |s| (c, s)))
        .collect();
    let mut stats = NewtonStats::default();
    let mut found: Vec<ProjectiveLine> = Vec::new();
    'outer: for batch in jobs.chunks(BATCH) {
        let results: Vec<Option<ProjectiveLine>> = batch
            .par_iter()
            .map(|&(c, s)| run_start(f, seed, c, s, opts))
            .collect();
        for line in results {
            stats.starts_used += 1;
            let Some(line) = line else { continue };
            stats.converged += 1;
            if found.iter().any(|l| l.distance(&line) < opts.dedupe_tol) {
                stats.duplicates += 1;
                continue;
            }
            found.push(line);
            if found.len() == EXPECTED {
                break 'outer;
            }
        }
    }

    let mut polished: Vec<(ProjectiveLine, f64)> = found.iter().map(|l| polish(f, l, opts.polish_tol)).collect();
    // Polishing can merge two near-duplicates.
    let mut kept: Vec<(ProjectiveLine, f64)> = Vec::with_capacity(polished.len());
    for (l, r) in polished.drain(..) {
        if kept.iter().any(|(k, _)| k.distance(&l) < opts.dedupe_tol) {
            stats.duplicates += 1;
        } else {
            kept.push((l, r));
        }
    }

    if kept.len() != EXPECTED {
        return Err(GeometryError::DegenerateSurface(format!(
            "found {} distinct lines after {} starts",
            kept.len(),
            stats.starts_used
        )));
    }
    if let Some((_, r)) = kept.iter().find(|(_, r)| *r > opts.accept_tol) {
        return Err(GeometryError::DegenerateSurface(format!("line residual {r:e} above tolerance")));
    }
    if let Some(c) = kept
        .iter()
        .map(|(l, _)| conditioning(f, l))
        .find(|&c| c <= opts.simplicity_tol)
    {
        return Err(GeometryError::DegenerateSurface(format!("non-simple zero (conditioning {c:e})")));
    }

    kept.sort_by_key(|(l, _)| canonical_key(l));
    let (lines, residuals) = kept.into_iter().unzip();
    Ok(LineFinderReport {
        lines,
        residuals,
        stats,
        seed,
    })
}
