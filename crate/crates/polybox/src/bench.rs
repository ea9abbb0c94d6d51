//! Benchmark harness: generates a grid of random problems, runs the
//! reference solver at several restart budgets alongside pluggable
//! alternative solvers, and computes the value-difference metrics.
//!
//! All randomness derives from `(config seed, problem index, solver name)`,
//! so two runs with the same seed produce identical records apart from the
//! cpu columns, regardless of thread scheduling.

use crate::generate::{generate_random_pol, GenSpec};
use crate::poly::{PolyError, Polynomial};
use crate::seed;
use crate::solver::{sample_start, solve, Bounds, SolveError, SolveOptions};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::Instant;
use thiserror::Error;

/// Harness errors.
#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid benchmark config: {0}")]
    ConfigInvalid(String),
    #[error("unknown solver: {0}")]
    UnknownSolver(String),
    #[error("missing ntrials variant {0}")]
    MissingVariant(u32),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn default_set_nx() -> Vec<usize> {
    vec![3, 5, 10, 20, 50]
}
fn default_set_deg() -> Vec<u32> {
    (2..10).collect()
}
fn default_set_card() -> Vec<usize> {
    (5..30).collect()
}
fn default_box_lo() -> f64 {
    -1.0
}
fn default_box_hi() -> f64 {
    2.0
}
fn default_ngrid() -> usize {
    1000
}
fn default_eps() -> f64 {
    1e-2
}
fn default_iter_max() -> u32 {
    100
}
fn default_ntrials_variants() -> Vec<u32> {
    vec![1, 3, 5]
}

/// Benchmark configuration. The default problem grid is the full cartesian
/// product of 5 x 8 x 25 = 1000 `(nx, deg, card)` triplets on the box
/// `[-1, 2]^nx`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    #[serde(default = "default_set_nx")]
    pub set_nx: Vec<usize>,
    #[serde(default = "default_set_deg")]
    pub set_deg: Vec<u32>,
    #[serde(default = "default_set_card")]
    pub set_card: Vec<usize>,
    #[serde(default = "default_box_lo")]
    pub box_lo: f64,
    #[serde(default = "default_box_hi")]
    pub box_hi: f64,
    #[serde(default = "default_ngrid")]
    pub ngrid: usize,
    #[serde(default = "default_eps")]
    pub eps: f64,
    #[serde(default = "default_iter_max")]
    pub iter_max: u32,
    #[serde(default = "default_ntrials_variants")]
    pub ntrials_variants: Vec<u32>,
    #[serde(default)]
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            set_nx: default_set_nx(),
            set_deg: default_set_deg(),
            set_card: default_set_card(),
            box_lo: default_box_lo(),
            box_hi: default_box_hi(),
            ngrid: default_ngrid(),
            eps: default_eps(),
            iter_max: default_iter_max(),
            ntrials_variants: default_ntrials_variants(),
            seed: 0,
        }
    }
}

impl BenchConfig {
    fn validate(&self) -> Result<(), BenchError> {
        if self.set_nx.is_empty() || self.set_deg.is_empty() || self.set_card.is_empty() {
            return Err(BenchError::ConfigInvalid(
                "problem sets must be non-empty".into(),
            ));
        }
        if self.set_nx.contains(&0) || self.set_deg.contains(&0) || self.set_card.contains(&0) {
            return Err(BenchError::ConfigInvalid(
                "nx, deg and card must be positive".into(),
            ));
        }
        if !self.box_lo.is_finite() || !self.box_hi.is_finite() || self.box_lo > self.box_hi {
            return Err(BenchError::ConfigInvalid(
                "box bounds must be finite with lo <= hi".into(),
            ));
        }
        if self.ngrid < 2 {
            return Err(BenchError::ConfigInvalid("ngrid must be at least 2".into()));
        }
        if self.iter_max < 1 {
            return Err(BenchError::ConfigInvalid(
                "iter_max must be at least 1".into(),
            ));
        }
        if self.eps < 0.0 || self.eps.is_nan() {
            return Err(BenchError::ConfigInvalid("eps must be non-negative".into()));
        }
        if self.ntrials_variants.is_empty() || self.ntrials_variants.contains(&0) {
            return Err(BenchError::ConfigInvalid(
                "ntrials variants must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Name of the reference solver in records and CSV output.
pub const REFERENCE_SOLVER: &str = "reference";

/// Outcome status for one `(problem, solver)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// A feasible point and a consistent value were produced.
    Solved,
    /// The solver declined the problem or crashed.
    Failed,
    /// The reported value disagrees with the polynomial at the reported
    /// point, or the point is infeasible.
    Inconsistent,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveStatus::Solved => write!(f, "solved"),
            SolveStatus::Failed => write!(f, "failed"),
            SolveStatus::Inconsistent => write!(f, "inconsistent"),
        }
    }
}

/// One benchmark outcome: a `(problem, solver, ntrials)` row.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub problem_id: usize,
    pub nx: usize,
    pub deg: u32,
    pub card: usize,
    pub solver: String,
    /// Restart budget for the reference solver; 0 for adapters.
    pub ntrials: u32,
    pub f: Option<f64>,
    pub cpu_s: f64,
    /// Largest round count over the trials (0 for adapters).
    pub rounds: u32,
    pub status: SolveStatus,
    /// Per-trial round counts (empty for adapters).
    pub rounds_per_trial: Vec<u32>,
}

/// What an alternative solver hands back to the harness. A missing point or
/// value marks the problem as failed for this solver.
#[derive(Debug, Clone)]
pub struct AdapterOutcome {
    pub x: Option<Vec<f64>>,
    pub f: Option<f64>,
    pub cpu_s: f64,
    /// Free-form failure or refusal note.
    pub note: Option<String>,
}

/// An alternative solver the harness can run next to the reference.
/// Implementations must not panic past the harness; panics are caught and
/// recorded as failures.
pub trait SolverAdapter: Sync {
    fn name(&self) -> &str;
    fn run(&self, p: &Polynomial<f64>, bounds: &Bounds<f64>, seed: u64) -> AdapterOutcome;
}

/// Uniform random sampling in the box; budget is the sample count.
pub struct RandomSearchAdapter {
    pub samples: usize,
}

impl SolverAdapter for RandomSearchAdapter {
    fn name(&self) -> &str {
        "random_search"
    }

    fn run(&self, p: &Polynomial<f64>, bounds: &Bounds<f64>, seed: u64) -> AdapterOutcome {
        let t0 = Instant::now();
        let mut rng = seed::derive_rng(seed, seed::DOMAIN_ADAPTER, 0, seed::name_tag(self.name()));
        let mut best_x: Option<Vec<f64>> = None;
        let mut best_f = f64::INFINITY;
        for _ in 0..self.samples {
            let x = sample_start(bounds, &mut rng);
            if let Ok(f) = p.eval_point(&x) {
                if f < best_f {
                    best_f = f;
                    best_x = Some(x);
                }
            }
        }
        match best_x {
            Some(x) => AdapterOutcome {
                x: Some(x),
                f: Some(best_f),
                cpu_s: t0.elapsed().as_secs_f64(),
                note: None,
            },
            None => AdapterOutcome {
                x: None,
                f: None,
                cpu_s: t0.elapsed().as_secs_f64(),
                note: Some("no finite sample".into()),
            },
        }
    }
}

/// Hard cap on tensor-grid enumeration size.
pub const MAX_ORACLE_EVALS: u64 = 10_000_000;

/// Exhaustive enumeration over the tensor product of per-axis grids; exact
/// on the grid, so it lower-bounds any grid-restricted solver. Problems with
/// `per_axis^nx` above [`MAX_ORACLE_EVALS`] are refused.
pub struct TensorGridOracleAdapter {
    pub per_axis: usize,
}

impl SolverAdapter for TensorGridOracleAdapter {
    fn name(&self) -> &str {
        "tensor_grid_oracle"
    }

    fn run(&self, p: &Polynomial<f64>, bounds: &Bounds<f64>, _seed: u64) -> AdapterOutcome {
        let t0 = Instant::now();
        let n = bounds.dim();
        let total = (self.per_axis as u64).checked_pow(n as u32);
        if total.is_none() || total.unwrap() > MAX_ORACLE_EVALS {
            return AdapterOutcome {
                x: None,
                f: None,
                cpu_s: t0.elapsed().as_secs_f64(),
                note: Some(format!(
                    "refused: {}^{} grid points exceed the {} evaluation cap",
                    self.per_axis, n, MAX_ORACLE_EVALS
                )),
            };
        }
        let grids: Vec<Vec<f64>> = match bounds
            .xmin()
            .iter()
            .zip(bounds.xmax().iter())
            .map(|(&lo, &hi)| crate::solver::make_grid(lo, hi, self.per_axis))
            .collect::<Result<_, _>>()
        {
            Ok(g) => g,
            Err(e) => {
                return AdapterOutcome {
                    x: None,
                    f: None,
                    cpu_s: t0.elapsed().as_secs_f64(),
                    note: Some(e.to_string()),
                }
            }
        };
        let mut odometer = vec![0usize; n];
        let mut point: Vec<f64> = grids.iter().map(|g| g[0]).collect();
        let mut best_x = point.clone();
        let mut best_f = f64::INFINITY;
        loop {
            if let Ok(f) = p.eval_point(&point) {
                if f < best_f {
                    best_f = f;
                    best_x = point.clone();
                }
            }
            // advance the odometer, least-significant axis first
            let mut axis = n;
            for j in (0..n).rev() {
                odometer[j] += 1;
                if odometer[j] < self.per_axis {
                    point[j] = grids[j][odometer[j]];
                    axis = j;
                    break;
                }
                odometer[j] = 0;
                point[j] = grids[j][0];
            }
            if axis == n {
                break;
            }
        }
        if best_f.is_finite() {
            AdapterOutcome {
                x: Some(best_x),
                f: Some(best_f),
                cpu_s: t0.elapsed().as_secs_f64(),
                note: None,
            }
        } else {
            AdapterOutcome {
                x: None,
                f: None,
                cpu_s: t0.elapsed().as_secs_f64(),
                note: Some("no finite grid value".into()),
            }
        }
    }
}

/// Cartesian product of the problem sets in lexicographic order
/// (`nx` outermost, `card` innermost).
pub fn build_configurations(cfg: &BenchConfig) -> Vec<(usize, u32, usize)> {
    let mut out = Vec::with_capacity(cfg.set_nx.len() * cfg.set_deg.len() * cfg.set_card.len());
    for &nx in &cfg.set_nx {
        for &deg in &cfg.set_deg {
            for &card in &cfg.set_card {
                out.push((nx, deg, card));
            }
        }
    }
    out
}

/// Runs the whole benchmark: one random problem per configuration, the
/// reference solver at every restart budget in `ntrials_variants`, then
/// every adapter. Adapter failures (including panics) are recorded, never
/// propagated. Problems run in parallel; records come back ordered by
/// problem id.
pub fn run_benchmark(
    cfg: &BenchConfig,
    adapters: &[&dyn SolverAdapter],
) -> Result<Vec<BenchRecord>, BenchError> {
    cfg.validate()?;
    let configs = build_configurations(cfg);
    let per_problem: Vec<Vec<BenchRecord>> = configs
        .par_iter()
        .enumerate()
        .map(|(id, &(nx, deg, card))| run_problem(cfg, adapters, id, nx, deg, card))
        .collect::<Result<_, _>>()?;
    Ok(per_problem.into_iter().flatten().collect())
}

fn run_problem(
    cfg: &BenchConfig,
    adapters: &[&dyn SolverAdapter],
    id: usize,
    nx: usize,
    deg: u32,
    card: usize,
) -> Result<Vec<BenchRecord>, BenchError> {
    let problem_seed = seed::derive_seed(cfg.seed, seed::DOMAIN_PROBLEM, id as u64, 0);
    let p: Polynomial<f64> = generate_random_pol(&GenSpec {
        nx,
        deg_max: deg,
        card,
        seed: problem_seed,
    })?;
    let bounds = Bounds::cube(cfg.box_lo, cfg.box_hi, nx)?;
    let x0 = vec![(cfg.box_lo + cfg.box_hi) / 2.0; nx];
    let solver_seed = seed::derive_seed(cfg.seed, seed::DOMAIN_SOLVER, id as u64, 0);

    let mut records = Vec::with_capacity(cfg.ntrials_variants.len() + adapters.len());
    for &nt in &cfg.ntrials_variants {
        let opts = SolveOptions::new(x0.clone())
            .with_ntrials(nt)
            .with_ngrid(cfg.ngrid)
            .with_iter_max(cfg.iter_max)
            .with_eps(cfg.eps)
            .with_seed(solver_seed);
        let sol = solve(&p, &bounds, &opts)?;
        records.push(BenchRecord {
            problem_id: id,
            nx,
            deg,
            card,
            solver: REFERENCE_SOLVER.to_string(),
            ntrials: nt,
            f: Some(sol.f),
            cpu_s: sol.cpu,
            rounds: sol.rounds_per_trial.iter().copied().max().unwrap_or(0),
            status: SolveStatus::Solved,
            rounds_per_trial: sol.rounds_per_trial,
        });
    }

    for adapter in adapters {
        let aseed = seed::derive_seed(
            cfg.seed,
            seed::DOMAIN_ADAPTER,
            id as u64,
            seed::name_tag(adapter.name()),
        );
        let outcome = catch_unwind(AssertUnwindSafe(|| adapter.run(&p, &bounds, aseed)))
            .unwrap_or_else(|_| AdapterOutcome {
                x: None,
                f: None,
                cpu_s: 0.0,
                note: Some("panicked".into()),
            });
        let (status, f) = match (&outcome.x, outcome.f) {
            (Some(x), Some(f)) => {
                let consistent = bounds.contains(x)
                    && p.eval_point(x)
                        .map(|v| (v - f).abs() <= 1e-12 * v.abs().max(1.0))
                        .unwrap_or(false);
                if consistent {
                    (SolveStatus::Solved, Some(f))
                } else {
                    (SolveStatus::Inconsistent, Some(f))
                }
            }
            _ => (SolveStatus::Failed, None),
        };
        records.push(BenchRecord {
            problem_id: id,
            nx,
            deg,
            card,
            solver: adapter.name().to_string(),
            ntrials: 0,
            f,
            cpu_s: outcome.cpu_s,
            rounds: 0,
            status,
            rounds_per_trial: Vec::new(),
        });
    }
    Ok(records)
}

/// Value differences of one solver against the reference at a single trial.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaReport {
    /// `f_solver - f_reference(ntrials=1)` per problem where both solved.
    pub deltas: Vec<f64>,
    /// Problems dropped because either side did not solve.
    pub excluded: usize,
}

fn reference_values(records: &[BenchRecord]) -> Vec<Option<f64>> {
    let n = records.iter().map(|r| r.problem_id + 1).max().unwrap_or(0);
    let mut out = vec![None; n];
    for r in records {
        if r.solver == REFERENCE_SOLVER && r.ntrials == 1 && r.status == SolveStatus::Solved {
            out[r.problem_id] = r.f;
        }
    }
    out
}

/// Per-problem differences `f_h - f_reference(ntrials=1)` for the solver
/// identified by `(solver, ntrials)`. A positive difference means the
/// reference found the better (smaller) value.
pub fn delta_metric(
    records: &[BenchRecord],
    solver: &str,
    ntrials: u32,
) -> Result<DeltaReport, BenchError> {
    let refs = reference_values(records);
    let rows: Vec<&BenchRecord> = records
        .iter()
        .filter(|r| r.solver == solver && r.ntrials == ntrials)
        .collect();
    if rows.is_empty() {
        return Err(BenchError::UnknownSolver(format!(
            "{solver} (ntrials={ntrials})"
        )));
    }
    let mut deltas = Vec::new();
    let mut excluded = 0;
    for r in rows {
        match (r.status, r.f, refs.get(r.problem_id).copied().flatten()) {
            (SolveStatus::Solved, Some(f), Some(fr)) => deltas.push(f - fr),
            _ => excluded += 1,
        }
    }
    Ok(DeltaReport { deltas, excluded })
}

/// Count of problems improved by the multi-start budget `j`, per threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct ImprovementReport {
    /// `counts[k]` = problems with relative improvement at least `th_grid[k]`.
    pub counts: Vec<usize>,
    /// Problems excluded because the reference value is too close to zero
    /// for the relative ratio to mean anything.
    pub near_zero_excluded: usize,
}

/// Reference values below this magnitude are excluded from relative
/// improvement ratios.
pub const NEAR_ZERO_REFERENCE: f64 = 1e-12;

/// For each threshold `th`, counts the problems where
/// `(f_j - f_1) / |f_1| <= -th`; at `th = 0` the inequality is strict so
/// exact ties never count as improvements.
pub fn improvement_count(
    records: &[BenchRecord],
    j: u32,
    th_grid: &[f64],
) -> Result<ImprovementReport, BenchError> {
    let refs = reference_values(records);
    let rows: Vec<&BenchRecord> = records
        .iter()
        .filter(|r| r.solver == REFERENCE_SOLVER && r.ntrials == j)
        .collect();
    if rows.is_empty() {
        return Err(BenchError::MissingVariant(j));
    }
    let mut ratios = Vec::new();
    let mut near_zero = 0;
    for r in rows {
        if let (SolveStatus::Solved, Some(f), Some(fr)) =
            (r.status, r.f, refs.get(r.problem_id).copied().flatten())
        {
            if fr.abs() < NEAR_ZERO_REFERENCE {
                near_zero += 1;
            } else {
                ratios.push((f - fr) / fr.abs());
            }
        }
    }
    let counts = th_grid
        .iter()
        .map(|&th| {
            ratios
                .iter()
                .filter(|&&r| if th == 0.0 { r < 0.0 } else { r <= -th })
                .count()
        })
        .collect();
    Ok(ImprovementReport {
        counts,
        near_zero_excluded: near_zero,
    })
}

/// Uniform-bin histogram over the finite entries of `values`. Returns
/// `bins + 1` edges spanning `[min, max]` and the per-bin counts; with
/// `cumulative` the counts are running totals.
pub fn histogram_export(
    values: &[f64],
    bins: usize,
    cumulative: bool,
) -> Result<(Vec<f64>, Vec<usize>), BenchError> {
    if bins < 1 {
        return Err(BenchError::ConfigInvalid("bins must be at least 1".into()));
    }
    let finite: Vec<f64> = values.iter().copied().filter(|v| v.is_finite()).collect();
    if finite.is_empty() {
        return Err(BenchError::EmptyInput("no finite values to bin"));
    }
    let lo = finite.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = finite.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let width = (hi - lo) / bins as f64;
    let mut edges: Vec<f64> = (0..=bins).map(|k| lo + k as f64 * width).collect();
    edges[bins] = hi;
    let mut counts = vec![0usize; bins];
    for v in &finite {
        let idx = if width == 0.0 {
            0
        } else {
            (((v - lo) / width) as usize).min(bins - 1)
        };
        counts[idx] += 1;
    }
    if cumulative {
        for i in 1..bins {
            counts[i] += counts[i - 1];
        }
    }
    Ok((edges, counts))
}

/// Default thresholds for the improvement-count export.
pub const DEFAULT_TH_GRID: [f64; 8] = [0.0, 0.001, 0.01, 0.05, 0.1, 0.2, 0.5, 1.0];

fn open_csv(path: &Path) -> Result<std::io::BufWriter<std::fs::File>, BenchError> {
    Ok(std::io::BufWriter::new(std::fs::File::create(path)?))
}

fn fmt_opt(f: Option<f64>) -> String {
    f.map(|v| v.to_string()).unwrap_or_default()
}

/// Long-form results: one row per `(problem, solver, ntrials)`.
pub fn write_results_csv(records: &[BenchRecord], path: &Path) -> Result<(), BenchError> {
    let mut w = open_csv(path)?;
    writeln!(
        w,
        "problem_id,nx,deg,card,solver,ntrials,f,cpu_s,rounds,status"
    )?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{:.6},{},{}",
            r.problem_id,
            r.nx,
            r.deg,
            r.card,
            r.solver,
            r.ntrials,
            fmt_opt(r.f),
            r.cpu_s,
            r.rounds,
            r.status
        )?;
    }
    Ok(())
}

fn solver_groups(records: &[BenchRecord]) -> Vec<(String, u32)> {
    let mut groups = Vec::new();
    for r in records {
        let key = (r.solver.clone(), r.ntrials);
        if !groups.contains(&key) {
            groups.push(key);
        }
    }
    groups
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Wide per-solver summary with the delta statistics against the reference
/// at a single trial. Reference variants are labelled `reference@N`.
pub fn write_summary_csv(records: &[BenchRecord], path: &Path) -> Result<(), BenchError> {
    let mut w = open_csv(path)?;
    writeln!(
        w,
        "solver,solved,failed,mean_delta,median_delta,frac_delta_positive"
    )?;
    for (solver, ntrials) in solver_groups(records) {
        let rows: Vec<&BenchRecord> = records
            .iter()
            .filter(|r| r.solver == solver && r.ntrials == ntrials)
            .collect();
        let solved = rows
            .iter()
            .filter(|r| r.status == SolveStatus::Solved)
            .count();
        let failed = rows.len() - solved;
        let report = delta_metric(records, &solver, ntrials)?;
        let label = if solver == REFERENCE_SOLVER {
            format!("{solver}@{ntrials}")
        } else {
            solver.clone()
        };
        if report.deltas.is_empty() {
            writeln!(w, "{label},{solved},{failed},,,")?;
        } else {
            let mut sorted = report.deltas.clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mean = sorted.iter().sum::<f64>() / sorted.len() as f64;
            let positive = sorted.iter().filter(|&&d| d > 0.0).count() as f64 / sorted.len() as f64;
            writeln!(
                w,
                "{label},{solved},{failed},{mean},{},{positive}",
                median(&sorted)
            )?;
        }
    }
    Ok(())
}

/// Improvement counts per `(ntrials variant, threshold)`.
pub fn write_improvement_csv(
    records: &[BenchRecord],
    variants: &[u32],
    th_grid: &[f64],
    path: &Path,
) -> Result<(), BenchError> {
    let mut w = open_csv(path)?;
    writeln!(w, "j,th,count")?;
    for &j in variants.iter().filter(|&&j| j != 1) {
        let report = improvement_count(records, j, th_grid)?;
        for (&th, &count) in th_grid.iter().zip(report.counts.iter()) {
            writeln!(w, "{j},{th},{count}")?;
        }
    }
    Ok(())
}

/// Histogram of each solver's deltas against the reference at one trial
/// (the data behind the comparison plots).
pub fn write_delta_hist_csv(
    records: &[BenchRecord],
    bins: usize,
    path: &Path,
) -> Result<(), BenchError> {
    let mut w = open_csv(path)?;
    writeln!(w, "solver,ntrials,bin_lo,bin_hi,count,cum_count")?;
    for (solver, ntrials) in solver_groups(records) {
        if solver == REFERENCE_SOLVER && ntrials == 1 {
            continue;
        }
        let report = delta_metric(records, &solver, ntrials)?;
        if report.deltas.is_empty() {
            continue;
        }
        let (edges, counts) = histogram_export(&report.deltas, bins, false)?;
        let mut cum = 0usize;
        for (k, &count) in counts.iter().enumerate() {
            cum += count;
            writeln!(
                w,
                "{solver},{ntrials},{},{},{count},{cum}",
                edges[k],
                edges[k + 1]
            )?;
        }
    }
    Ok(())
}
