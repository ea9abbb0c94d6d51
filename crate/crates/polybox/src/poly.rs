//! Sparse multivariate polynomials and their univariate slices.
//!
//! A polynomial is stored as a matrix of non-negative integer exponents
//! (one row per monomial) plus a coefficient vector. Evaluation, coordinate
//! extraction and serialization all work on this representation directly;
//! there is no canonicalization, so duplicate monomial rows are allowed and
//! their contributions sum.

use crate::Real;
use thiserror::Error;

/// Largest supported exponent. Exponents are raised with `Float::powi`,
/// which takes an `i32`.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

/// Errors from polynomial construction, evaluation and serialization.
#[derive(Debug, Error)]
pub enum PolyError {
    /// Input shapes do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// An exponent is negative.
    #[error("negative exponent {value} at powers[{row}][{col}]")]
    NegativePower { row: usize, col: usize, value: i64 },
    /// An exponent exceeds [`MAX_EXPONENT`].
    #[error("exponent {value} at powers[{row}][{col}] exceeds maximum {MAX_EXPONENT}")]
    ExponentTooLarge { row: usize, col: usize, value: i64 },
    /// A coefficient is NaN or infinite.
    #[error("non-finite coefficient at coefs[{0}]")]
    NonFiniteCoef(usize),
    /// No monomials or no variables.
    #[error("empty polynomial: {0}")]
    Empty(&'static str),
    /// Component index out of range.
    #[error("component index {ix} out of range for {nx} variables")]
    IndexOutOfRange { ix: usize, nx: usize },
    /// A document does not match the canonical problem schema.
    #[error("schema violation at {path}: {reason}")]
    SchemaViolation { path: String, reason: String },
}

/// Sparse multivariate polynomial: sum of `coefs[i] * prod_j x_j^powers[i][j]`.
///
/// Immutable after construction; the derived attributes `nx`, `ncoefs` and
/// `deg` are computed eagerly. Values are safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    powers: Vec<Vec<u32>>,
    coefs: Vec<T>,
    nx: usize,
    deg: u32,
}

impl<T: Real> Polynomial<T> {
    /// Builds a polynomial from a signed exponent matrix, rejecting negative
    /// or oversized exponents.
    pub fn new(powers: Vec<Vec<i64>>, coefs: Vec<T>) -> Result<Self, PolyError> {
        let mut rows = Vec::with_capacity(powers.len());
        for (r, row) in powers.into_iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (c, value) in row.into_iter().enumerate() {
                if value < 0 {
                    return Err(PolyError::NegativePower {
                        row: r,
                        col: c,
                        value,
                    });
                }
                if value > i64::from(MAX_EXPONENT) {
                    return Err(PolyError::ExponentTooLarge {
                        row: r,
                        col: c,
                        value,
                    });
                }
                out.push(value as u32);
            }
            rows.push(out);
        }
        Self::from_exponents(rows, coefs)
    }

    /// Builds a polynomial from an unsigned exponent matrix.
    pub fn from_exponents(powers: Vec<Vec<u32>>, coefs: Vec<T>) -> Result<Self, PolyError> {
        if powers.is_empty() {
            return Err(PolyError::Empty("no monomials"));
        }
        let nx = powers[0].len();
        if nx == 0 {
            return Err(PolyError::Empty("no variables"));
        }
        if powers.len() != coefs.len() {
            return Err(PolyError::DimensionMismatch(format!(
                "{} monomial rows but {} coefficients",
                powers.len(),
                coefs.len()
            )));
        }
        for (r, row) in powers.iter().enumerate() {
            if row.len() != nx {
                return Err(PolyError::DimensionMismatch(format!(
                    "powers[{r}] has {} entries, expected {nx}",
                    row.len()
                )));
            }
        }
        for (i, c) in coefs.iter().enumerate() {
            if !c.is_finite() {
                return Err(PolyError::NonFiniteCoef(i));
            }
        }
        let deg = powers
            .iter()
            .map(|row| row.iter().sum::<u32>())
            .max()
            .unwrap_or(0);
        Ok(Self {
            powers,
            coefs,
            nx,
            deg,
        })
    }

    /// Number of variables.
    pub fn nx(&self) -> usize {
        self.nx
    }

    /// Number of monomials.
    pub fn ncoefs(&self) -> usize {
        self.coefs.len()
    }

    /// Total degree: the maximum exponent row sum.
    pub fn deg(&self) -> u32 {
        self.deg
    }

    /// The exponent matrix, one row per monomial.
    pub fn powers(&self) -> &[Vec<u32>] {
        &self.powers
    }

    /// The coefficient vector.
    pub fn coefs(&self) -> &[T] {
        &self.coefs
    }

    /// Evaluates the polynomial at one point. `0^0` counts as 1, so a
    /// monomial with exponent 0 in a variable is constant in it.
    pub fn eval_point(&self, x: &[T]) -> Result<T, PolyError> {
        if x.len() != self.nx {
            return Err(PolyError::DimensionMismatch(format!(
                "point has {} components, expected {}",
                x.len(),
                self.nx
            )));
        }
        let mut total = T::zero();
        for (row, &c) in self.powers.iter().zip(self.coefs.iter()) {
            let mut term = c;
            for (&xj, &e) in x.iter().zip(row.iter()) {
                if e > 0 {
                    term = term * xj.powi(e as i32);
                }
            }
            total = total + term;
        }
        Ok(total)
    }

    /// Evaluates the polynomial at every row of `points`.
    pub fn eval_batch(&self, points: &[Vec<T>]) -> Result<Vec<T>, PolyError> {
        points.iter().map(|x| self.eval_point(x)).collect()
    }

    /// Freezes every variable except `ix` at the values in `x0` and returns
    /// the resulting univariate polynomial in variable `ix`.
    ///
    /// Each monomial contributes `coef * prod_{j != ix} x0[j]^e_j` to the
    /// coefficient of degree `e_ix`; the output length is one plus the
    /// largest exponent of variable `ix` over all monomials.
    pub fn extract_scalar(&self, x0: &[T], ix: usize) -> Result<ScalarPoly<T>, PolyError> {
        if ix >= self.nx {
            return Err(PolyError::IndexOutOfRange { ix, nx: self.nx });
        }
        if x0.len() != self.nx {
            return Err(PolyError::DimensionMismatch(format!(
                "x0 has {} components, expected {}",
                x0.len(),
                self.nx
            )));
        }
        let max_deg = self.powers.iter().map(|row| row[ix]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![T::zero(); max_deg + 1];
        for (row, &c) in self.powers.iter().zip(self.coefs.iter()) {
            let mut partial = c;
            for (j, (&xj, &e)) in x0.iter().zip(row.iter()).enumerate() {
                if j != ix && e > 0 {
                    partial = partial * xj.powi(e as i32);
                }
            }
            // descending layout: degree d lives at index max_deg - d
            coeffs[max_deg - row[ix] as usize] = coeffs[max_deg - row[ix] as usize] + partial;
        }
        Ok(ScalarPoly { coeffs })
    }

    /// One `(exponent row, coefficient)` pair per monomial, in storage order.
    pub fn to_table(&self) -> Vec<(Vec<u32>, T)> {
        self.powers
            .iter()
            .zip(self.coefs.iter())
            .map(|(row, &c)| (row.clone(), c))
            .collect()
    }
}

/// Univariate polynomial with coefficients in descending degree order:
/// `coeffs = [a_d, ..., a_1, a_0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Real> ScalarPoly<T> {
    /// Builds a scalar polynomial from descending-degree coefficients.
    /// A constant polynomial is the single-element vector `[a_0]`.
    pub fn new(coeffs: Vec<T>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::Empty(
                "scalar polynomial needs at least one coefficient",
            ));
        }
        Ok(Self { coeffs })
    }

    /// Coefficients in descending degree order.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Degree (length minus one; trailing zero coefficients are not trimmed).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation at a single argument.
    pub fn eval(&self, t: T) -> T {
        let mut acc = self.coeffs[0];
        for &c in &self.coeffs[1..] {
            acc = acc * t + c;
        }
        acc
    }

    /// Horner evaluation at every argument, one pass per point.
    pub fn eval_batch(&self, ts: &[T]) -> Vec<T> {
        ts.iter().map(|&t| self.eval(t)).collect()
    }
}
