//! Multi-start cyclic coordinate minimization by dense-grid enumeration.
//!
//! Each trial sweeps the coordinates in ascending order. For one coordinate
//! the polynomial is collapsed to a univariate slice, evaluated in bulk on a
//! uniform grid spanning that coordinate's bounds, and the grid point with
//! the best transformed value is kept. Sweeps repeat until a round improves
//! the transformed objective by no more than `eps * |J_previous|`, or the
//! round budget runs out.
//!
//! Trial 1 starts from the caller's initial guess (clamped into the box);
//! the remaining trials restart from points sampled uniformly in the box.
//! Across trials the reported solution is the endpoint with the smallest
//! raw polynomial value, ties to the earliest trial; the transform steers
//! each trial's internal search only. Trials draw from independent seeded
//! streams and may run in parallel without changing any output.

use crate::poly::{PolyError, Polynomial, ScalarPoly};
use crate::seed;
use crate::Real;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;
use thiserror::Error;

/// Errors from grid construction and solving.
#[derive(Debug, Error)]
pub enum SolveError {
    /// Grid request cannot be satisfied.
    #[error("bad grid: {0}")]
    BadGrid(String),
    /// Every value on the enumeration grid was NaN or infinite.
    #[error("all grid values are non-finite")]
    AllNonFinite,
    /// Bounds are inconsistent or non-finite.
    #[error("invalid box: {0}")]
    InvalidBox(String),
    /// Solver options out of range.
    #[error("bad options: {0}")]
    BadOptions(String),
    /// Problem, bounds and initial guess dimensions disagree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// Underlying polynomial failure.
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Component-wise interval bounds defining the feasible hyper-rectangle.
/// Equal lower and upper bounds pin a coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds<T> {
    xmin: Vec<T>,
    xmax: Vec<T>,
}

impl<T: Real> Bounds<T> {
    /// Validates `xmin[j] <= xmax[j]` with finite entries.
    pub fn new(xmin: Vec<T>, xmax: Vec<T>) -> Result<Self, SolveError> {
        if xmin.len() != xmax.len() {
            return Err(SolveError::InvalidBox(format!(
                "xmin has {} components, xmax has {}",
                xmin.len(),
                xmax.len()
            )));
        }
        if xmin.is_empty() {
            return Err(SolveError::InvalidBox("bounds are empty".into()));
        }
        for (j, (&lo, &hi)) in xmin.iter().zip(xmax.iter()).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(SolveError::InvalidBox(format!(
                    "non-finite bound at component {j}"
                )));
            }
            if lo > hi {
                return Err(SolveError::InvalidBox(format!(
                    "xmin > xmax at component {j}"
                )));
            }
        }
        Ok(Self { xmin, xmax })
    }

    /// A cube `[lo, hi]^n`.
    pub fn cube(lo: T, hi: T, n: usize) -> Result<Self, SolveError> {
        Self::new(vec![lo; n], vec![hi; n])
    }

    /// Number of components.
    pub fn dim(&self) -> usize {
        self.xmin.len()
    }

    /// Lower bounds.
    pub fn xmin(&self) -> &[T] {
        &self.xmin
    }

    /// Upper bounds.
    pub fn xmax(&self) -> &[T] {
        &self.xmax
    }

    /// Projects a point onto the box component-wise.
    pub fn clamp(&self, x: &[T]) -> Vec<T> {
        x.iter()
            .zip(self.xmin.iter().zip(self.xmax.iter()))
            .map(|(&v, (&lo, &hi))| {
                if v < lo {
                    lo
                } else if v > hi {
                    hi
                } else {
                    v
                }
            })
            .collect()
    }

    /// True when every component lies inside its interval.
    pub fn contains(&self, x: &[T]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.xmin.iter().zip(self.xmax.iter()))
                .all(|(&v, (&lo, &hi))| v >= lo && v <= hi)
    }
}

/// Transform applied to the polynomial value; the solver minimizes the
/// transformed quantity.
#[derive(Clone)]
pub enum ObjectiveMode<T> {
    /// psi(v) = v: minimize the polynomial.
    Minimize,
    /// psi(v) = -v: maximize the polynomial.
    Maximize,
    /// psi(v) = |v|: drive the polynomial to zero.
    RootFind,
    /// Arbitrary pure transform.
    Custom(Arc<dyn Fn(T) -> T + Send + Sync>),
}

impl<T: Real> ObjectiveMode<T> {
    /// Applies the transform to a value.
    pub fn apply(&self, v: T) -> T {
        match self {
            ObjectiveMode::Minimize => v,
            ObjectiveMode::Maximize => -v,
            ObjectiveMode::RootFind => v.abs(),
            ObjectiveMode::Custom(f) => f(v),
        }
    }
}

impl<T> fmt::Debug for ObjectiveMode<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectiveMode::Minimize => write!(f, "Minimize"),
            ObjectiveMode::Maximize => write!(f, "Maximize"),
            ObjectiveMode::RootFind => write!(f, "RootFind"),
            ObjectiveMode::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

/// Solver configuration. Defaults: one trial, 1000 grid points, at most 100
/// rounds, relative stopping threshold 1e-2, minimization, seed 0.
#[derive(Debug, Clone)]
pub struct SolveOptions<T> {
    /// Initial guess for the first trial; clamped into the box.
    pub x0: Vec<T>,
    /// Number of starting points.
    pub ntrials: u32,
    /// Grid points per coordinate.
    pub ngrid: usize,
    /// Maximum rounds per trial.
    pub iter_max: u32,
    /// Relative improvement threshold for stopping.
    pub eps: T,
    /// Objective transform.
    pub mode: ObjectiveMode<T>,
    /// Base seed for the restart sampler.
    pub seed: u64,
}

impl<T: Real> SolveOptions<T> {
    /// Options with the documented defaults and the given initial guess.
    pub fn new(x0: Vec<T>) -> Self {
        Self {
            x0,
            ntrials: 1,
            ngrid: 1000,
            iter_max: 100,
            eps: T::from_f64(1e-2).unwrap(),
            mode: ObjectiveMode::Minimize,
            seed: 0,
        }
    }

    pub fn with_ntrials(mut self, n: u32) -> Self {
        self.ntrials = n;
        self
    }

    pub fn with_ngrid(mut self, n: usize) -> Self {
        self.ngrid = n;
        self
    }

    pub fn with_iter_max(mut self, n: u32) -> Self {
        self.iter_max = n;
        self
    }

    pub fn with_eps(mut self, eps: T) -> Self {
        self.eps = eps;
        self
    }

    pub fn with_mode(mut self, mode: ObjectiveMode<T>) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Result of a solve call.
#[derive(Debug, Clone, Serialize)]
pub struct Solution<T> {
    /// Best point found, inside the box.
    pub x: Vec<T>,
    /// Raw polynomial value at `x` (not transformed).
    pub f: T,
    /// Wall-clock seconds for the whole call.
    pub cpu: f64,
    /// Rounds used by each trial.
    pub rounds_per_trial: Vec<u32>,
    /// Raw polynomial value at each trial's endpoint; `f` is their minimum.
    pub trial_values: Vec<T>,
}

/// Endpoint of a single trial.
#[derive(Debug, Clone)]
pub struct TrialOutcome<T> {
    /// Final point.
    pub x: Vec<T>,
    /// Transformed objective at the final point.
    pub psi_value: T,
    /// Completed rounds.
    pub rounds: u32,
    /// Transformed objective after each round, in order.
    pub round_values: Vec<T>,
}

/// `ngrid` equally spaced points with both endpoints included:
/// `grid[k] = lo + k * (hi - lo) / (ngrid - 1)`, last point forced to `hi`.
/// A degenerate interval yields `ngrid` copies of `lo`.
pub fn make_grid<T: Real>(lo: T, hi: T, ngrid: usize) -> Result<Vec<T>, SolveError> {
    if ngrid < 2 {
        return Err(SolveError::BadGrid(format!(
            "ngrid must be at least 2, got {ngrid}"
        )));
    }
    if lo > hi || !lo.is_finite() || !hi.is_finite() {
        return Err(SolveError::BadGrid(
            "bounds must be finite with lo <= hi".into(),
        ));
    }
    let step = (hi - lo) / T::from_usize(ngrid - 1).unwrap();
    let mut grid: Vec<T> = (0..ngrid)
        .map(|k| lo + T::from_usize(k).unwrap() * step)
        .collect();
    grid[0] = lo;
    grid[ngrid - 1] = hi;
    Ok(grid)
}

/// Orders transformed values: NaN and infinities sort last.
#[inline]
fn psi_key<T: Real>(v: T) -> T {
    if v.is_finite() {
        v
    } else {
        T::infinity()
    }
}

/// Enumerates the grid and returns `(t_best, v_best)` minimizing the
/// transformed value of `q`. Non-finite values are never selected; ties go
/// to the lowest grid index. Fails if no grid value is finite.
pub fn scalar_grid_argmin<T: Real>(
    q: &ScalarPoly<T>,
    grid: &[T],
    mode: &ObjectiveMode<T>,
) -> Result<(T, T), SolveError> {
    if grid.is_empty() {
        return Err(SolveError::BadGrid("empty grid".into()));
    }
    let values = q.eval_batch(grid);
    let mut best_i = usize::MAX;
    let mut best_key = T::infinity();
    for (i, &v) in values.iter().enumerate() {
        let k = psi_key(mode.apply(v));
        if k < best_key {
            best_key = k;
            best_i = i;
        }
    }
    if best_i == usize::MAX {
        return Err(SolveError::AllNonFinite);
    }
    Ok((grid[best_i], best_key))
}

/// Rounds each component to the nearest point of its coordinate grid.
fn snap_to_grids<T: Real>(grids: &[Vec<T>], x: &[T]) -> Vec<T> {
    grids
        .iter()
        .zip(x.iter())
        .map(|(grid, &v)| {
            let lo = grid[0];
            let hi = grid[grid.len() - 1];
            if hi == lo {
                return lo;
            }
            let step = (hi - lo) / T::from_usize(grid.len() - 1).unwrap();
            let k = ((v - lo) / step)
                .round()
                .to_usize()
                .unwrap_or(0)
                .min(grid.len() - 1);
            grid[k]
        })
        .collect()
}

/// Draws a point with each component uniform on its interval.
pub fn sample_start<T: Real, R: Rng + ?Sized>(bounds: &Bounds<T>, rng: &mut R) -> Vec<T> {
    bounds
        .xmin()
        .iter()
        .zip(bounds.xmax().iter())
        .map(|(&lo, &hi)| {
            if lo == hi {
                lo
            } else {
                let u = T::from_f64(rng.random::<f64>()).unwrap();
                lo + u * (hi - lo)
            }
        })
        .collect()
}

/// One pass through the round loop from `start` (which must lie in the box;
/// [`solve`] clamps the initial guess before calling this).
///
/// Within a round each coordinate's slice is enumerated on its grid and the
/// grid optimum replaces the component whenever it does not worsen the
/// transformed objective; equal values still move the component to the grid
/// (lowest-index) optimum. Rounds stop once the improvement drops to
/// `eps * |J_previous|` or `iter_max` is reached.
pub fn solve_single_trial<T: Real>(
    p: &Polynomial<T>,
    bounds: &Bounds<T>,
    start: &[T],
    opts: &SolveOptions<T>,
) -> Result<TrialOutcome<T>, SolveError> {
    let grids: Vec<Vec<T>> = bounds
        .xmin()
        .iter()
        .zip(bounds.xmax().iter())
        .map(|(&lo, &hi)| make_grid(lo, hi, opts.ngrid))
        .collect::<Result<_, _>>()?;
    run_trial(
        p,
        &grids,
        start.to_vec(),
        &opts.mode,
        opts.eps,
        opts.iter_max,
    )
}

fn run_trial<T: Real>(
    p: &Polynomial<T>,
    grids: &[Vec<T>],
    mut current: Vec<T>,
    mode: &ObjectiveMode<T>,
    eps: T,
    iter_max: u32,
) -> Result<TrialOutcome<T>, SolveError> {
    let n = p.nx();
    let mut j_cur = psi_key(mode.apply(p.eval_point(&current)?));
    let mut rounds = 0;
    let mut round_values = Vec::new();
    for round in 1..=iter_max {
        let j_prev = j_cur;
        for (j, grid) in grids.iter().enumerate().take(n) {
            let q = p.extract_scalar(&current, j)?;
            let (t_best, v_best) = scalar_grid_argmin(&q, grid, mode)?;
            if v_best <= j_cur {
                current[j] = t_best;
                j_cur = v_best;
            }
        }
        rounds = round;
        round_values.push(j_cur);
        if j_prev.is_finite() && j_cur.is_finite() {
            if j_prev - j_cur <= eps * j_prev.abs() {
                break;
            }
        } else if j_prev == j_cur {
            // no finite value reachable; further rounds replay identically
            break;
        }
    }
    Ok(TrialOutcome {
        x: current,
        psi_value: j_cur,
        rounds,
        round_values,
    })
}

/// Runs `ntrials` trials and reports the endpoint with the smallest raw
/// polynomial value (ties to the earliest trial).
///
/// Trial 1 starts from `opts.x0` clamped into the box, preserving the
/// caller's exact point. Each later trial `t` restarts from a uniform
/// sample drawn from a stream keyed by `(opts.seed, t)` and aligned to the
/// coordinate grids, so every restart endpoint stays on the enumeration
/// lattice. The output is a pure function of the inputs and the seed,
/// independent of how trials are scheduled.
pub fn solve<T: Real>(
    p: &Polynomial<T>,
    bounds: &Bounds<T>,
    opts: &SolveOptions<T>,
) -> Result<Solution<T>, SolveError> {
    let t0 = Instant::now();
    if bounds.dim() != p.nx() {
        return Err(SolveError::DimensionMismatch(format!(
            "bounds have {} components but the polynomial has {} variables",
            bounds.dim(),
            p.nx()
        )));
    }
    if opts.x0.len() != p.nx() {
        return Err(SolveError::DimensionMismatch(format!(
            "x0 has {} components but the polynomial has {} variables",
            opts.x0.len(),
            p.nx()
        )));
    }
    if opts.ntrials < 1 {
        return Err(SolveError::BadOptions("ntrials must be at least 1".into()));
    }
    if opts.ngrid < 2 {
        return Err(SolveError::BadOptions("ngrid must be at least 2".into()));
    }
    if opts.iter_max < 1 {
        return Err(SolveError::BadOptions("iter_max must be at least 1".into()));
    }
    if opts.eps < T::zero() || !opts.eps.is_finite() {
        return Err(SolveError::BadOptions(
            "eps must be finite and non-negative".into(),
        ));
    }
    if opts.x0.iter().any(|v| !v.is_finite()) {
        return Err(SolveError::BadOptions("x0 must be finite".into()));
    }

    let grids: Vec<Vec<T>> = bounds
        .xmin()
        .iter()
        .zip(bounds.xmax().iter())
        .map(|(&lo, &hi)| make_grid(lo, hi, opts.ngrid))
        .collect::<Result<_, _>>()?;
    let x0 = bounds.clamp(&opts.x0);

    let outcomes: Vec<TrialOutcome<T>> = (0..opts.ntrials)
        .into_par_iter()
        .map(|t| {
            let start = if t == 0 {
                x0.clone()
            } else {
                let mut rng = seed::derive_rng(opts.seed, seed::DOMAIN_TRIAL, u64::from(t), 0);
                snap_to_grids(&grids, &sample_start(bounds, &mut rng))
            };
            run_trial(p, &grids, start, &opts.mode, opts.eps, opts.iter_max)
        })
        .collect::<Result<_, _>>()?;

    let trial_values: Vec<T> = outcomes
        .iter()
        .map(|o| p.eval_point(&o.x))
        .collect::<Result<_, _>>()?;
    let mut best = 0;
    for (i, &v) in trial_values.iter().enumerate() {
        if psi_key(v) < psi_key(trial_values[best]) {
            best = i;
        }
    }

    Ok(Solution {
        x: outcomes[best].x.clone(),
        f: trial_values[best],
        cpu: t0.elapsed().as_secs_f64(),
        rounds_per_trial: outcomes.iter().map(|o| o.rounds).collect(),
        trial_values,
    })
}
