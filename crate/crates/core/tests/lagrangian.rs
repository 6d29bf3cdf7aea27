mod common;

use hyperlag::combinatorics::{colex_initial_segment, rational_to_f64};
use hyperlag::lagrangian::{
    grid_lower_bound, lagrangian, link_weights, motzkin_straus_lambda, replicator_ascent, weight_poly,
    MultistartOptions,
};
use hyperlag::{Estimate, Estimate32, Hypergraph, Rational, Weighting};
use proptest::prelude::*;

fn lam(g: &Hypergraph) -> f64 {
    if g.m() == 0 {
        return 0.0;
    }
    let est: Estimate = lagrangian(g, &MultistartOptions::default()).unwrap();
    est.value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_homogeneity(g in common::hypergraph(2..=4, 8), seed in any::<u64>()) {
        let x = interior(g.n(), seed);
        let w = weight_poly(&g, &x).unwrap();
        let links = link_weights(&g, &x).unwrap();
        let sum: f64 = x.iter().zip(&links).map(|(a, b)| a * b).sum();
        prop_assert!((sum - g.r() as f64 * w).abs() <= 1e-12);
    }

    #[test]
    fn links_are_partial_derivatives(g in common::hypergraph(2..=4, 8), seed in any::<u64>()) {
        let x = interior(g.n(), seed);
        let links = link_weights(&g, &x).unwrap();
        let h = 1e-6;
        for i in 0..g.n() {
            let (mut up, mut down) = (x.clone(), x.clone());
            up[i] += h;
            down[i] -= h;
            let fd = (common::raw_poly(&g, &up) - common::raw_poly(&g, &down)) / (2.0 * h);
            prop_assert!((fd - links[i]).abs() <= 1e-6);
        }
    }

    #[test]
    fn exact_evaluation_matches_float(g in common::hypergraph(2..=4, 7), parts in prop::collection::vec(1i64..20, 7)) {
        let total: i64 = parts[..g.n()].iter().sum();
        let q: Vec<Rational> = parts[..g.n()].iter().map(|&p| Rational::new(p, total)).collect();
        let f: Vec<f64> = q.iter().map(|&v| rational_to_f64(v)).collect();
        let exact = rational_to_f64(weight_poly(&g, &q).unwrap());
        prop_assert!((exact - weight_poly(&g, &f).unwrap()).abs() <= 1e-14);
    }

    #[test]
    fn ascent_never_decreases(g in common::hypergraph(2..=4, 7), seed in any::<u64>()) {
        let x0 = Weighting::new(interior(g.n(), seed)).unwrap();
        let mut prev = weight_poly(&g, x0.as_slice()).unwrap();
        for iters in [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 300] {
            let est = replicator_ascent(&g, &x0, iters, 1e-13).unwrap();
            prop_assert!(est.value >= prev - 1e-14);
            prev = est.value;
        }
    }

    #[test]
    fn estimate_is_consistent(g in common::hypergraph(2..=4, 7)) {
        let est: Estimate = lagrangian(&g, &MultistartOptions::default()).unwrap();
        let x = est.weighting.as_slice();
        prop_assert!(x.iter().all(|&v| v >= 0.0));
        prop_assert!((x.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        prop_assert!((est.value - weight_poly(&g, x).unwrap()).abs() <= 1e-12);
        prop_assert_eq!(est.support_size, est.weighting.support().len());
    }

    #[test]
    fn grid_is_below_the_optimizer(g in common::hypergraph(2..=3, 6), k in 1usize..24) {
        let cert = grid_lower_bound(&g, k).unwrap();
        prop_assert!(cert.best_value <= lam(&g) + 1e-12);
        let p = cert.best_point.as_slice();
        prop_assert!((p.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn link_bounded_by_its_lagrangian(g in common::hypergraph(3..=3, 8), seed in any::<u64>()) {
        let x = interior(g.n(), seed);
        for i in 1..=g.n() {
            let link = g.link(&[i]).unwrap();
            if link.m() == 0 {
                continue;
            }
            let w = weight_poly(&link, &x).unwrap();
            let bound = (1.0 - x[i - 1]).powi(2) * rational_to_f64(motzkin_straus_lambda(&link).unwrap());
            prop_assert!(w <= bound + 1e-8, "i={} w={} bound={}", i, w, bound);
        }
    }

    #[test]
    fn uncovered_pair_allows_deletion(g in common::hypergraph(3..=3, 7)) {
        if let Some((i, j)) = g.covers_pairs().witness {
            let without = lam(&g.delete_vertex(i).unwrap()).max(lam(&g.delete_vertex(j).unwrap()));
            prop_assert!(lam(&g) <= without + 1e-8);
        }
    }

    #[test]
    fn compression_does_not_lower_lambda(g in common::hypergraph(3..=3, 8), i in 1usize..8, gap in 1usize..8) {
        let j = i + gap;
        prop_assume!(j <= g.n());
        prop_assert!(lam(&g.compress_ij(i, j).unwrap()) >= lam(&g) - 1e-8);
    }

    #[test]
    fn stationary_pairs_balance(g in common::hypergraph(3..=3, 7)) {
        let g = g.compress_full();
        let est: Estimate = lagrangian(&g, &MultistartOptions::default()).unwrap();
        let x = est.weighting.as_slice();
        let support = est.weighting.support();
        for (a, &i) in support.iter().enumerate() {
            for &j in &support[a + 1..] {
                let pair = weight_poly(&g.link(&[i, j]).unwrap(), x).unwrap();
                let diff = weight_poly(&g.link_difference(i, j).unwrap(), x).unwrap();
                let residual = ((x[i - 1] - x[j - 1]) * pair - diff).abs();
                prop_assert!(residual <= 1e-6, "pair ({}, {}) residual {}", i, j, residual);
            }
        }
    }
}

fn interior(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = hyperlag::rng::SplitMix64::new(seed);
    let raw: Vec<f64> = (0..n).map(|_| 0.05 + rng.next_open01()).collect();
    let s: f64 = raw.iter().sum();
    raw.into_iter().map(|v| v / s).collect()
}

#[test]
fn motzkin_straus_agreement() {
    let mut rng = hyperlag::rng::SplitMix64::new(5);
    for _ in 0..50 {
        let n = 2 + rng.below(11) as usize;
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if rng.next_open01() < 0.5 {
                    edges.push(vec![a, b]);
                }
            }
        }
        if edges.is_empty() {
            edges.push(vec![1, 2]);
        }
        let g = Hypergraph::new(2, n, edges).unwrap();
        let exact = rational_to_f64(motzkin_straus_lambda(&g).unwrap());
        assert!((lam(&g) - exact).abs() <= 1e-7);
    }
}

#[test]
fn single_precision_agrees() {
    for m in [4u64, 9, 10, 17, 20] {
        let g = colex_initial_segment(3, m).unwrap();
        let lo: Estimate32 = lagrangian(&g, &MultistartOptions { tol: 1e-5, ..Default::default() }).unwrap();
        assert!((lo.value as f64 - lam(&g)).abs() < 1e-5, "m={m}");
    }
}
