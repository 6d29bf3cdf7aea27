//! Left-compression (shifting).

use super::Hypergraph;
use crate::error::{invalid, Result};

/// `L_ij(e)`: replaces `j` by `i` when `j ∈ e` and `i ∉ e`.
fn shift(e: &[usize], i: usize, j: usize) -> Option<Vec<usize>> {
    if e.contains(&j) && !e.contains(&i) {
        let mut f: Vec<usize> = e.iter().map(|&v| if v == j { i } else { v }).collect();
        f.sort_unstable();
        Some(f)
    } else {
        None
    }
}

impl Hypergraph {
    /// `C_ij(E) = {L_ij(e) : e ∈ E} ∪ {e : e, L_ij(e) ∈ E}`.
    pub fn compress_ij(&self, i: usize, j: usize) -> Result<Hypergraph> {
        if i >= j {
            return invalid(format!("compress_ij needs i < j, got i={i}, j={j}"));
        }
        let present = self.edge_set();
        let mut out = Vec::with_capacity(self.m());
        for e in self.edges() {
            match shift(e, i, j) {
                Some(f) if present.contains(f.as_slice()) => out.push(e.clone()),
                Some(f) => out.push(f),
                None => out.push(e.clone()),
            }
        }
        Ok(Hypergraph::from_unsorted_unchecked(self.r(), self.n(), out))
    }

    /// Applies every `C_ij` until the edge set is left-compressed.
    pub fn compress_full(&self) -> Hypergraph {
        let mut g = self.clone();
        loop {
            let mut changed = false;
            for j in 2..=g.n() {
                for i in 1..j {
                    let h = g.compress_ij(i, j).expect("i < j");
                    if h != g {
                        g = h;
                        changed = true;
                    }
                }
            }
            if !changed {
                return g;
            }
        }
    }

    /// Closed under every shift `j → i` with `i < j`.
    pub fn is_left_compressed(&self) -> bool {
        let present = self.edge_set();
        self.edges().iter().all(|e| {
            e.iter().all(|&j| {
                (1..j).all(|i| match shift(e, i, j) {
                    Some(f) => present.contains(f.as_slice()),
                    None => true,
                })
            })
        })
    }
}
