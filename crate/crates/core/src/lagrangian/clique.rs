//! Exact clique number for graphs, and the Motzkin–Straus closed form
//! `λ(G) = ½(1 − 1/ω(G))`.

use crate::combinatorics::Rational;
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;

/// Greedy colouring of `p`; vertices come out grouped by increasing colour.
fn colour_order(adj: &[u64], p: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = p;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !(1u64 << v);
            uncoloured &= !(1u64 << v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

fn expand(adj: &[u64], size: usize, mut p: u64, best: &mut usize) {
    let (order, colours) = colour_order(adj, p);
    for idx in (0..order.len()).rev() {
        if size + colours[idx] <= *best {
            return;
        }
        let v = order[idx];
        let next = p & adj[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand(adj, size + 1, next, best);
        }
        p &= !(1u64 << v);
    }
}

/// Order of a largest clique, by branch and bound with a colouring bound.
pub fn clique_number(g: &Hypergraph) -> Result<usize> {
    if g.r() != 2 {
        return invalid(format!("clique_number needs a 2-graph, got uniformity {}", g.r()));
    }
    if g.n() > 64 {
        return invalid(format!("clique_number supports at most 64 vertices, got {}", g.n()));
    }
    let mut adj = vec![0u64; g.n()];
    for e in g.edges() {
        let (a, b) = (e[0] - 1, e[1] - 1);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    expand(&adj, 0, all, &mut best);
    Ok(best)
}

/// `½(1 − 1/ω)` for a graph with at least one edge.
pub fn motzkin_straus_lambda(g: &Hypergraph) -> Result<Rational> {
    if g.r() == 2 && g.m() == 0 {
        return invalid("edgeless graph: no clique of order 2");
    }
    let omega = clique_number(g)? as i64;
    Ok(Rational::new(omega - 1, 2 * omega))
}
