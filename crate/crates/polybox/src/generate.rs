//! Random problem generation for tests and benchmarks.

use crate::poly::{PolyError, Polynomial};
use crate::seed;
use crate::Real;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Shape of a random polynomial: `nx` variables, total degree exactly
/// `deg_max`, `card` monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub nx: usize,
    pub deg_max: u32,
    pub card: usize,
    pub seed: u64,
}

/// Draws a uniform composition of `d` into `nx` non-negative parts
/// (stars and bars: a uniform choice of bar positions).
fn random_composition<R: Rng + ?Sized>(d: u32, nx: usize, rng: &mut R) -> Vec<u32> {
    if nx == 1 {
        return vec![d];
    }
    let slots = d as usize + nx - 1;
    let mut bars = rand::seq::index::sample(rng, slots, nx - 1).into_vec();
    bars.sort_unstable();
    let mut parts = Vec::with_capacity(nx);
    let mut prev = -1i64;
    for &b in &bars {
        parts.push((b as i64 - prev - 1) as u32);
        prev = b as i64;
    }
    parts.push((slots as i64 - 1 - prev) as u32);
    parts
}

/// Samples a polynomial with exactly `spec.card` monomials in `spec.nx`
/// variables whose degree attribute equals `spec.deg_max`.
///
/// Each row draws a total degree uniformly from `0..=deg_max` and spreads it
/// over the variables as a uniform composition; if no row reaches `deg_max`
/// the last row is redrawn at full degree. Coefficients are i.i.d. standard
/// normal. Duplicate rows are kept (their contributions sum on evaluation).
/// The output is a pure function of `spec`.
pub fn generate_random_pol<T>(spec: &GenSpec) -> Result<Polynomial<T>, PolyError>
where
    T: Real,
    StandardNormal: Distribution<T>,
{
    if spec.nx == 0 {
        return Err(PolyError::Empty("nx must be at least 1"));
    }
    if spec.card == 0 {
        return Err(PolyError::Empty("card must be at least 1"));
    }
    if spec.deg_max == 0 {
        return Err(PolyError::Empty("deg_max must be at least 1"));
    }
    let mut rng = seed::derive_rng(spec.seed, seed::DOMAIN_GENERATOR, 0, 0);
    let mut rows: Vec<Vec<u32>> = (0..spec.card)
        .map(|_| {
            let d = rng.random_range(0..=spec.deg_max);
            random_composition(d, spec.nx, &mut rng)
        })
        .collect();
    if !rows.iter().any(|r| r.iter().sum::<u32>() == spec.deg_max) {
        let last = rows.len() - 1;
        rows[last] = random_composition(spec.deg_max, spec.nx, &mut rng);
    }
    let coefs: Vec<T> = (0..spec.card)
        .map(|_| StandardNormal.sample(&mut rng))
        .collect();
    Polynomial::from_exponents(rows, coefs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row_attains_full_degree() {
        for s in 0..20 {
            let p: Polynomial<f64> = generate_random_pol(&GenSpec {
                nx: 3,
                deg_max: 2,
                card: 1,
                seed: s,
            })
            .unwrap();
            assert_eq!(p.powers()[0].iter().sum::<u32>(), 2);
        }
    }

    #[test]
    fn one_variable_degree_one_is_forced() {
        for s in 0..20 {
            let p: Polynomial<f64> = generate_random_pol(&GenSpec {
                nx: 1,
                deg_max: 1,
                card: 1,
                seed: s,
            })
            .unwrap();
            assert_eq!(p.powers(), &[vec![1]]);
            assert_eq!(p.ncoefs(), 1);
        }
    }

    #[test]
    fn degree_bounded_and_attained() {
        for s in 0..200u64 {
            let p: Polynomial<f64> = generate_random_pol(&GenSpec {
                nx: 5,
                deg_max: 4,
                card: 10,
                seed: s,
            })
            .unwrap();
            assert_eq!(p.nx(), 5);
            assert_eq!(p.ncoefs(), 10);
            assert_eq!(p.deg(), 4);
            for row in p.powers() {
                assert!(row.iter().sum::<u32>() <= 4);
            }
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let spec = GenSpec {
            nx: 4,
            deg_max: 3,
            card: 7,
            seed: 99,
        };
        let a: Polynomial<f64> = generate_random_pol(&spec).unwrap();
        let b: Polynomial<f64> = generate_random_pol(&spec).unwrap();
        assert_eq!(a, b);
        let c: Polynomial<f64> = generate_random_pol(&GenSpec { seed: 100, ..spec }).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn every_variable_eventually_appears() {
        let nx = 6;
        let mut seen = vec![false; nx];
        for s in 0..100u64 {
            let p: Polynomial<f64> = generate_random_pol(&GenSpec {
                nx,
                deg_max: 3,
                card: 8,
                seed: s,
            })
            .unwrap();
            for row in p.powers() {
                for (j, &e) in row.iter().enumerate() {
                    if e > 0 {
                        seen[j] = true;
                    }
                }
            }
        }
        assert!(seen.iter().all(|&s| s), "unused variables: {seen:?}");
    }

    #[test]
    fn compositions_cover_the_simplex() {
        let mut rng = seed::derive_rng(3, 0, 0, 0);
        let mut counts = std::collections::HashMap::new();
        for _ in 0..3000 {
            let c = random_composition(2, 2, &mut rng);
            assert_eq!(c.iter().sum::<u32>(), 2);
            *counts.entry(c).or_insert(0usize) += 1;
        }
        // three compositions of 2 into 2 parts, each about a third
        assert_eq!(counts.len(), 3);
        for (_, n) in counts {
            assert!(n > 800, "composition sampling looks biased: {n}");
        }
    }

    #[test]
    fn rejects_degenerate_specs() {
        assert!(generate_random_pol::<f64>(&GenSpec {
            nx: 0,
            deg_max: 1,
            card: 1,
            seed: 0
        })
        .is_err());
        assert!(generate_random_pol::<f64>(&GenSpec {
            nx: 1,
            deg_max: 0,
            card: 1,
            seed: 0
        })
        .is_err());
        assert!(generate_random_pol::<f64>(&GenSpec {
            nx: 1,
            deg_max: 1,
            card: 0,
            seed: 0
        })
        .is_err());
    }
}
