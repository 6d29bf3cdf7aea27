//! Weight polynomials over the simplex and their maximization.
//!
//! Evaluation ([`weight_poly`], [`link_weights`]) is generic over any
//! commutative ring scalar, so the same code evaluates exactly over
//! [`Rational`](crate::Rational) and approximately over `f32`/`f64`. The
//! optimizer is generic over [`Scalar`].

mod clique;
mod grid;
mod multistart;
mod replicator;

use std::fmt;

use num_traits::Num;

pub use clique::{clique_number, motzkin_straus_lambda};
pub use grid::{grid_lower_bound, GridCertificate, MAX_GRID_POINTS};
pub use multistart::{lagrangian, MultistartOptions};
pub use replicator::replicator_ascent;

use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::Scalar;

/// A legal weighting: nonnegative coordinates summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct Weighting<S> {
    values: Vec<S>,
}

impl<S: Scalar> Weighting<S> {
    pub fn new(values: Vec<S>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite() || *v < S::zero()) {
            return invalid("weighting has a negative or non-finite coordinate");
        }
        let sum = values.iter().fold(S::zero(), |a, &b| a + b);
        if (sum - S::one()).abs() > S::lit(S::SIMPLEX_TOL) {
            return invalid(format!("weighting sums to {sum}, not 1"));
        }
        Ok(Self { values })
    }

    /// Rescales nonnegative values onto the simplex.
    pub fn normalized(mut values: Vec<S>) -> Result<Self> {
        let sum = values.iter().fold(S::zero(), |a, &b| a + b);
        if !(sum > S::zero()) || values.iter().any(|v| *v < S::zero()) {
            return invalid("cannot normalize: entries must be nonnegative with positive sum");
        }
        values.iter_mut().for_each(|v| *v /= sum);
        Ok(Self { values })
    }

    pub fn uniform(n: usize) -> Self {
        Self::uniform_on(n, &(1..=n).collect::<Vec<_>>())
    }

    /// Uniform on the given 1-based vertices, zero elsewhere.
    pub fn uniform_on(n: usize, support: &[usize]) -> Self {
        let share = S::one() / S::from_count(support.len());
        let mut values = vec![S::zero(); n];
        for &v in support {
            values[v - 1] = share;
        }
        Self { values }
    }

    pub fn as_slice(&self) -> &[S] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based vertices with weight above the trim threshold.
    pub fn support(&self) -> Vec<usize> {
        let eps = S::lit(S::TRIM);
        (1..=self.len()).filter(|&i| self.values[i - 1] > eps).collect()
    }

    pub fn into_values(self) -> Vec<S> {
        self.values
    }
}

impl<S: Scalar> std::ops::Index<usize> for Weighting<S> {
    type Output = S;

    /// 1-based, matching vertex labels.
    fn index(&self, v: usize) -> &S {
        &self.values[v - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Replicator,
    Multistart,
    Grid,
    ClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Replicator => "replicator",
            Method::Multistart => "multistart",
            Method::Grid => "grid",
            Method::ClosedForm => "closed-form",
        })
    }
}

/// A computed Lagrangian together with its maximizing weighting.
#[derive(Debug, Clone, PartialEq)]
pub struct LagrangianEstimate<S> {
    pub value: S,
    pub weighting: Weighting<S>,
    pub kkt_residual: S,
    pub method: Method,
    pub iterations: usize,
    pub support_size: usize,
    pub converged: bool,
    /// The start had `w(G, x0) = 0`, so no ascent was possible.
    pub degenerate_start: bool,
}

fn check_len(g: &Hypergraph, len: usize) -> Result<()> {
    if len != g.n() {
        return invalid(format!(
            "weighting has {len} coordinates but the hypergraph has {} vertices",
            g.n()
        ));
    }
    Ok(())
}

/// `w(G, x) = Σ_{e ∈ E} Π_{i ∈ e} x_i`, accumulated in colex edge order.
pub fn weight_poly<T: Num + Copy>(g: &Hypergraph, x: &[T]) -> Result<T> {
    check_len(g, x.len())?;
    Ok(g.edges().iter().fold(T::zero(), |acc, e| {
        acc + e.iter().fold(T::one(), |p, &v| p * x[v - 1])
    }))
}

/// Entry `i` is `w(G_i, x)`, the partial derivative of `w(G, ·)` in `x_i`.
pub fn link_weights<T: Num + Copy>(g: &Hypergraph, x: &[T]) -> Result<Vec<T>> {
    check_len(g, x.len())?;
    let mut out = vec![T::zero(); g.n()];
    for e in g.edges() {
        for (p, &v) in e.iter().enumerate() {
            let others = e
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != p)
                .fold(T::one(), |acc, (_, &u)| acc * x[u - 1]);
            out[v - 1] = out[v - 1] + others;
        }
    }
    Ok(out)
}

/// `max_{i ∈ supp(x)} |w(G_i, x) − r·w(G, x)|`.
pub fn kkt_residual<S: Scalar>(g: &Hypergraph, x: &Weighting<S>) -> Result<S> {
    let w = weight_poly(g, x.as_slice())?;
    let links = link_weights(g, x.as_slice())?;
    Ok(residual_from(&links, w, g.r(), x.as_slice()))
}

fn residual_from<S: Scalar>(links: &[S], w: S, r: usize, x: &[S]) -> S {
    let target = S::from_count(r) * w;
    let eps = S::lit(S::TRIM);
    links
        .iter()
        .zip(x)
        .filter(|(_, &xi)| xi > eps)
        .fold(S::zero(), |acc, (&li, _)| acc.max((li - target).abs()))
}

/// Flat 0-based edge table for the inner loops.
#[derive(Debug, Clone)]
pub(crate) struct EdgeTable {
    r: usize,
    n: usize,
    flat: Vec<usize>,
}

impl EdgeTable {
    pub(crate) fn new(g: &Hypergraph) -> Self {
        let flat = g.edges().iter().flat_map(|e| e.iter().map(|v| v - 1)).collect();
        Self { r: g.r(), n: g.n(), flat }
    }

    /// Fills `links` with `w(G_i, x)` and returns `w(G, x)`.
    pub(crate) fn eval<S: Scalar>(&self, x: &[S], links: &mut [S]) -> S {
        links.iter_mut().for_each(|l| *l = S::zero());
        let mut w = S::zero();
        match self.r {
            2 => {
                for e in self.flat.chunks_exact(2) {
                    let (a, b) = (e[0], e[1]);
                    w += x[a] * x[b];
                    links[a] += x[b];
                    links[b] += x[a];
                }
            }
            3 => {
                for e in self.flat.chunks_exact(3) {
                    let (a, b, c) = (e[0], e[1], e[2]);
                    let (xa, xb, xc) = (x[a], x[b], x[c]);
                    let bc = xb * xc;
                    w += xa * bc;
                    links[a] += bc;
                    links[b] += xa * xc;
                    links[c] += xa * xb;
                }
            }
            r => {
                for e in self.flat.chunks_exact(r) {
                    let mut prod = S::one();
                    for &v in e {
                        prod *= x[v];
                    }
                    w += prod;
                    for (p, &v) in e.iter().enumerate() {
                        let mut others = S::one();
                        for (q, &u) in e.iter().enumerate() {
                            if q != p {
                                others *= x[u];
                            }
                        }
                        links[v] += others;
                    }
                }
            }
        }
        w
    }
}
