#![allow(dead_code)]

use hyperlag::hypergraph::r_subsets;
use hyperlag::Hypergraph;
use proptest::prelude::*;

/// Nonempty `r`-graph on `[n]` for `r` in `r_range`, `n ≤ n_max`.
pub fn hypergraph(r_range: std::ops::RangeInclusive<usize>, n_max: usize) -> impl Strategy<Value = Hypergraph> {
    r_range
        .prop_flat_map(move |r| (Just(r), r..=n_max))
        .prop_flat_map(|(r, n)| {
            let all = r_subsets(n, r);
            let len = all.len();
            (Just((r, n, all)), prop::collection::vec(any::<bool>(), len), 0..len)
        })
        .prop_map(|((r, n, all), keep, forced)| {
            let mut edges: Vec<Vec<usize>> =
                all.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e.clone()).collect();
            if edges.is_empty() {
                edges.push(all[forced].clone());
            }
            Hypergraph::new(r, n, edges).unwrap()
        })
}

pub fn raw_poly(g: &Hypergraph, x: &[f64]) -> f64 {
    g.edges().iter().map(|e| e.iter().map(|&v| x[v - 1]).product::<f64>()).sum()
}
