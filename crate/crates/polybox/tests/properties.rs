//! Property tests for the core invariants.

mod common;

use common::{naive_eval, rel_close};
use polybox::bench::{improvement_count, BenchRecord, SolveStatus};
use polybox::solver::{make_grid, solve, Bounds, SolveOptions};
use polybox::{from_record, to_record, Polynomial};
use proptest::prelude::*;

/// Exponent rows with entries in `0..=3` and row sums capped at `max_sum`,
/// paired with finite coefficients.
fn poly_parts(
    max_nx: usize,
    max_sum: u32,
    max_card: usize,
) -> impl Strategy<Value = (Vec<Vec<u32>>, Vec<f64>)> {
    (1..=max_nx, 1..=max_card).prop_flat_map(move |(nx, card)| {
        let row = prop::collection::vec(0u32..=3, nx).prop_map(move |mut r| {
            let len = r.len();
            let mut sum: u32 = r.iter().sum();
            let mut i = 0;
            while sum > max_sum {
                if r[i % len] > 0 {
                    r[i % len] -= 1;
                    sum -= 1;
                }
                i += 1;
            }
            r
        });
        (
            prop::collection::vec(row, card..=card),
            prop::collection::vec(-10.0f64..10.0, card..=card),
        )
    })
}

proptest! {
    #[test]
    fn evaluation_matches_naive_oracle(
        (powers, coefs) in poly_parts(6, 6, 8),
        seed in 0u64..1000,
    ) {
        use rand::Rng;
        let p = Polynomial::from_exponents(powers.clone(), coefs.clone()).unwrap();
        let mut rng = polybox::seed::derive_rng(seed, 90, 0, 0);
        let pts: Vec<Vec<f64>> = (0..4)
            .map(|_| (0..p.nx()).map(|_| rng.random_range(-2.0..2.0)).collect())
            .collect();
        let got = p.eval_batch(&pts).unwrap();
        for (g, x) in got.iter().zip(pts.iter()) {
            prop_assert!(rel_close(*g, naive_eval(&powers, &coefs, x), 1e-12));
        }
    }

    #[test]
    fn extraction_substitution_consistency(
        (powers, coefs) in poly_parts(8, 6, 10),
        ix_pick in 0usize..8,
        t in -2.0f64..2.0,
        seed in 0u64..1000,
    ) {
        use rand::Rng;
        let p = Polynomial::from_exponents(powers, coefs).unwrap();
        let ix = ix_pick % p.nx();
        let mut rng = polybox::seed::derive_rng(seed, 91, 0, 0);
        let x0: Vec<f64> = (0..p.nx()).map(|_| rng.random_range(-2.0..2.0)).collect();
        let q = p.extract_scalar(&x0, ix).unwrap();
        let mut pt = x0.clone();
        pt[ix] = t;
        let want = p.eval_batch(&[pt]).unwrap()[0];
        prop_assert!(rel_close(q.eval_batch(&[t])[0], want, 1e-12));
    }

    #[test]
    fn evaluation_is_linear_in_coefficients(
        (powers, coefs) in poly_parts(5, 6, 8),
        alpha in -4.0f64..4.0,
        seed in 0u64..1000,
    ) {
        use rand::Rng;
        let p = Polynomial::from_exponents(powers.clone(), coefs.clone()).unwrap();
        let scaled = Polynomial::from_exponents(
            powers,
            coefs.iter().map(|c| alpha * c).collect(),
        ).unwrap();
        let mut rng = polybox::seed::derive_rng(seed, 92, 0, 0);
        let x: Vec<f64> = (0..p.nx()).map(|_| rng.random_range(-2.0..2.0)).collect();
        let base = p.eval_batch(std::slice::from_ref(&x)).unwrap()[0];
        let got = scaled.eval_batch(&[x]).unwrap()[0];
        prop_assert!(rel_close(got, alpha * base, 1e-12));
    }

    #[test]
    fn record_round_trip_is_identity((powers, coefs) in poly_parts(6, 6, 8)) {
        let p = Polynomial::from_exponents(powers, coefs).unwrap();
        let back: Polynomial<f64> = from_record(&to_record(&p)).unwrap();
        prop_assert_eq!(back.powers(), p.powers());
        prop_assert_eq!(back.coefs(), p.coefs());
    }

    #[test]
    fn degree_is_max_row_sum((powers, coefs) in poly_parts(6, 6, 8)) {
        let p = Polynomial::from_exponents(powers.clone(), coefs).unwrap();
        let want = powers.iter().map(|r| r.iter().sum::<u32>()).max().unwrap();
        prop_assert_eq!(p.deg(), want);
    }

    #[test]
    fn grid_is_sorted_with_exact_endpoints(
        lo in -5.0f64..5.0,
        span in 0.0f64..10.0,
        ngrid in 2usize..200,
    ) {
        let hi = lo + span;
        let g: Vec<f64> = make_grid(lo, hi, ngrid).unwrap();
        prop_assert_eq!(g.len(), ngrid);
        prop_assert_eq!(g[0], lo);
        prop_assert_eq!(g[ngrid - 1], hi);
        for w in g.windows(2) {
            prop_assert!(w[1] >= w[0]);
        }
    }

    #[test]
    fn histogram_counts_sum_to_input_size(
        vals in prop::collection::vec(-100.0f64..100.0, 1..200),
        bins in 1usize..20,
    ) {
        let (edges, counts) = polybox::bench::histogram_export(&vals, bins, false).unwrap();
        prop_assert_eq!(edges.len(), bins + 1);
        prop_assert_eq!(counts.iter().sum::<usize>(), vals.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solve_is_feasible_and_deterministic(
        (powers, coefs) in poly_parts(3, 5, 6),
        seed in 0u64..100,
    ) {
        let p = Polynomial::from_exponents(powers, coefs).unwrap();
        let bounds = Bounds::cube(-1.0, 2.0, p.nx()).unwrap();
        let opts = SolveOptions::new(vec![0.5; p.nx()])
            .with_ntrials(3)
            .with_ngrid(31)
            .with_seed(seed);
        let a = solve(&p, &bounds, &opts).unwrap();
        let b = solve(&p, &bounds, &opts).unwrap();
        prop_assert!(bounds.contains(&a.x));
        prop_assert_eq!(&a.x, &b.x);
        prop_assert_eq!(a.f, b.f);
        prop_assert_eq!(&a.trial_values, &b.trial_values);
        // stored value is the exact re-evaluation and the smallest endpoint value
        prop_assert_eq!(a.f, p.eval_batch(std::slice::from_ref(&a.x)).unwrap()[0]);
        let min = a.trial_values.iter().cloned().fold(f64::INFINITY, f64::min);
        prop_assert_eq!(a.f, min);
    }

    #[test]
    fn termination_is_coordinate_wise_grid_optimal(
        (powers, coefs) in poly_parts(3, 5, 6),
        seed in 0u64..100,
    ) {
        // With eps = 0 the solver only stops once no single-coordinate move
        // to any grid point improves the transformed value.
        let p = Polynomial::from_exponents(powers, coefs).unwrap();
        let n = p.nx();
        let bounds = Bounds::cube(-1.0, 2.0, n).unwrap();
        let opts = SolveOptions::new(vec![0.5; n])
            .with_ntrials(2)
            .with_ngrid(13)
            .with_eps(0.0)
            .with_iter_max(60)
            .with_seed(seed);
        let sol = solve(&p, &bounds, &opts).unwrap();
        let f_here = sol.f;
        for j in 0..n {
            let grid: Vec<f64> = make_grid(-1.0, 2.0, 13).unwrap();
            for g in grid {
                let mut moved = sol.x.clone();
                moved[j] = g;
                let f_moved = p.eval_batch(&[moved]).unwrap()[0];
                prop_assert!(f_moved >= f_here - 1e-9,
                    "single-coordinate move improved the result: {f_moved} < {f_here}");
            }
        }
    }

    #[test]
    fn improvement_counts_monotone_on_synthetic_records(
        fs in prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..60),
    ) {
        let mut records = Vec::new();
        for (id, (f1, f3)) in fs.iter().enumerate() {
            for (nt, f) in [(1u32, f1), (3u32, f3)] {
                records.push(BenchRecord {
                    problem_id: id,
                    nx: 2,
                    deg: 2,
                    card: 2,
                    solver: "reference".into(),
                    ntrials: nt,
                    f: Some(*f),
                    cpu_s: 0.0,
                    rounds: 1,
                    status: SolveStatus::Solved,
                    rounds_per_trial: vec![1],
                });
            }
        }
        let th: Vec<f64> = vec![0.0, 0.01, 0.1, 0.5, 1.0, 2.0];
        let report = improvement_count(&records, 3, &th).unwrap();
        for w in report.counts.windows(2) {
            prop_assert!(w[1] <= w[0]);
        }
    }
}
