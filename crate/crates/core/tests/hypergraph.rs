mod common;

use std::collections::BTreeSet;

use hyperlag::combinatorics::binomial;
use hyperlag::hypergraph::{edgelist, enumerate_left_compressed, r_subsets};
use hyperlag::Hypergraph;
use proptest::prelude::*;

fn edge_set(g: &Hypergraph) -> BTreeSet<Vec<usize>> {
    g.edges().iter().cloned().collect()
}

/// Fixed under every shift, checked edge by edge.
fn compressed_oracle(edges: &BTreeSet<Vec<usize>>) -> bool {
    edges.iter().all(|e| {
        e.iter().all(|&j| {
            (1..j).filter(|i| !e.contains(i)).all(|i| {
                let mut f: Vec<usize> = e.iter().map(|&v| if v == j { i } else { v }).collect();
                f.sort_unstable();
                edges.contains(&f)
            })
        })
    })
}

proptest! {
    #[test]
    fn compression_keeps_edge_count(g in common::hypergraph(2..=4, 8), i in 1usize..8, gap in 1usize..8) {
        let j = i + gap;
        prop_assume!(j <= g.n());
        let once = g.compress_ij(i, j).unwrap();
        prop_assert_eq!(once.m(), g.m());
        prop_assert_eq!(once.compress_ij(i, j).unwrap(), once);
    }

    #[test]
    fn full_compression_is_left_compressed(g in common::hypergraph(2..=4, 8)) {
        let c = g.compress_full();
        prop_assert_eq!(c.m(), g.m());
        prop_assert!(c.is_left_compressed());
        prop_assert!(compressed_oracle(&edge_set(&c)));
    }

    #[test]
    fn link_degrees_sum(g in common::hypergraph(2..=4, 8)) {
        let total: usize = (1..=g.n()).map(|v| g.link(&[v]).unwrap().m()).sum();
        prop_assert_eq!(total, g.r() * g.m());
    }

    #[test]
    fn link_and_complement_partition(g in common::hypergraph(3..=4, 8), v in 1usize..=8) {
        prop_assume!(v <= g.n());
        let inside = edge_set(&g.link(&[v]).unwrap());
        let outside = edge_set(&g.complement_link(&[v]).unwrap());
        prop_assert!(inside.is_disjoint(&outside));
        let expected: BTreeSet<Vec<usize>> = r_subsets(g.n(), g.r() - 1)
            .into_iter()
            .filter(|s| !s.contains(&v))
            .collect();
        let union: BTreeSet<Vec<usize>> = inside.union(&outside).cloned().collect();
        prop_assert_eq!(union, expected);
    }

    #[test]
    fn uncovered_witness_is_uncovered(g in common::hypergraph(2..=4, 8)) {
        let cov = g.covers_pairs();
        prop_assert_eq!(cov.covers_all, cov.witness.is_none());
        if let Some((a, b)) = cov.witness {
            prop_assert!(g.edges().iter().all(|e| !(e.contains(&a) && e.contains(&b))));
        }
    }

    #[test]
    fn edgelist_round_trip(g in common::hypergraph(2..=4, 8)) {
        prop_assert_eq!(edgelist::parse(&edgelist::write(&g)).unwrap(), g);
    }
}

/// All `m`-subsets of the `r`-sets of `[t]` that are left-compressed.
fn brute_force(r: usize, m: usize, t: usize) -> BTreeSet<BTreeSet<Vec<usize>>> {
    let all = r_subsets(t, r);
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << all.len() {
        if mask.count_ones() as usize != m {
            continue;
        }
        let edges: BTreeSet<Vec<usize>> =
            (0..all.len()).filter(|b| mask >> b & 1 == 1).map(|b| all[b].clone()).collect();
        if compressed_oracle(&edges) {
            out.insert(edges);
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for (r, t) in [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)] {
        let universe = binomial(t as u64, r as u64).unwrap() as usize;
        assert!(universe <= 20);
        for m in 1..=universe {
            let stream: Vec<Hypergraph> = enumerate_left_compressed(r, m, t).unwrap().collect();
            let got: BTreeSet<_> = stream.iter().map(edge_set).collect();
            assert_eq!(got.len(), stream.len(), "duplicates at r={r} t={t} m={m}");
            assert_eq!(got, brute_force(r, m, t), "r={r} t={t} m={m}");
            let first: Vec<usize> = (1..=r).collect();
            assert!(stream.iter().all(|g| g.contains(&first)));
        }
    }
}

#[test]
fn split_streams_concatenate() {
    let whole: Vec<Hypergraph> = enumerate_left_compressed(3, 12, 7).unwrap().collect();
    let parts: Vec<Hypergraph> = enumerate_left_compressed(3, 12, 7)
        .unwrap()
        .split(5)
        .into_iter()
        .flatten()
        .collect();
    assert_eq!(whole, parts);
}
