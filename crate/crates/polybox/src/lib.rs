//! Box-constrained optimization of sparse multivariate polynomials.
//!
//! A polynomial is a matrix of integer exponents plus a coefficient vector.
//! The solver minimizes, maximizes or root-finds it over a hyper-rectangle
//! by cyclic rounds of univariate grid enumeration: freeze all variables but
//! one, evaluate the resulting scalar polynomial on a dense grid spanning
//! that coordinate's bounds, keep the best grid point, move to the next
//! coordinate. Random restarts reduce the odds of stalling at a point no
//! single-coordinate move can improve.
//!
//! ```
//! use polybox::{solve, Bounds, ObjectiveMode, Polynomial, SolveOptions};
//!
//! // P(x) = x1 * x3^2 + 2 * x2^3
//! let p = Polynomial::new(vec![vec![1, 0, 2], vec![0, 3, 0]], vec![1.0, 2.0]).unwrap();
//! assert_eq!(
//!     p.eval_batch(&[vec![1.0, 1.0, 1.0], vec![-1.0, 2.0, 3.0], vec![0.0, 1.0, 0.0]]).unwrap(),
//!     vec![3.0, 7.0, 2.0],
//! );
//!
//! let bounds = Bounds::cube(-1.0, 2.0, 3).unwrap();
//! let opts = SolveOptions::new(vec![0.0; 3]).with_ntrials(6);
//! let sol = solve(&p, &bounds, &opts).unwrap();
//! assert_eq!(sol.f, -6.0);
//! assert_eq!(sol.x, vec![-1.0, -1.0, 2.0]);
//!
//! let max = SolveOptions::new(vec![0.0; 3]).with_mode(ObjectiveMode::Maximize);
//! assert_eq!(solve(&p, &bounds, &max).unwrap().f, 16.0);
//! ```
//!
//! The numeric core is generic over the scalar type ([`Real`], satisfied by
//! `f32` and `f64`); the CLI, serialization and benchmark harness work in
//! `f64`.

use num_traits::{Float, FromPrimitive, ToPrimitive};
use std::fmt::{Debug, Display};

pub mod bench;
pub mod generate;
pub mod poly;
pub mod record;
pub mod seed;
pub mod solver;

pub use generate::{generate_random_pol, GenSpec};
pub use poly::{PolyError, Polynomial, ScalarPoly};
pub use record::{from_record, to_record, ProblemDoc};
pub use solver::{
    make_grid, sample_start, scalar_grid_argmin, solve, solve_single_trial, Bounds, ObjectiveMode,
    Solution, SolveError, SolveOptions, TrialOutcome,
};

/// Floating-point scalar usable throughout the numeric core: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Double-precision polynomial.
pub type Polynomial64 = Polynomial<f64>;
/// Single-precision polynomial.
pub type Polynomial32 = Polynomial<f32>;
/// Double-precision univariate slice.
pub type ScalarPoly64 = ScalarPoly<f64>;
/// Single-precision univariate slice.
pub type ScalarPoly32 = ScalarPoly<f32>;
/// Double-precision box bounds.
pub type Bounds64 = Bounds<f64>;
/// Double-precision solver result.
pub type Solution64 = Solution<f64>;
