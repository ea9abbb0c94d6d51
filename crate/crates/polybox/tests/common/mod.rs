//! Shared test helpers: an evaluation oracle independent of the library's
//! evaluation path, and tolerance utilities.
#![allow(dead_code)] // each test binary uses a subset

/// Per-monomial, per-point double loop using repeated multiplication
/// (no `powi`), for checking the library's evaluator against.
pub fn naive_eval(powers: &[Vec<u32>], coefs: &[f64], x: &[f64]) -> f64 {
    let mut total = 0.0;
    for (row, c) in powers.iter().zip(coefs.iter()) {
        let mut term = *c;
        for (xj, e) in x.iter().zip(row.iter()) {
            for _ in 0..*e {
                term *= xj;
            }
        }
        total += term;
    }
    total
}

/// Relative closeness with an absolute floor of one: `|a - b|` at most
/// `tol * max(1, |a|, |b|)`.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
