use super::{residual_from, EdgeTable, LagrangianEstimate, Method, Weighting};
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::Scalar;

/// Baum–Eagon growth transform `x_i ← x_i · w(G_i, x) / (r · w(G, x))`.
///
/// `w(G, ·)` has nonnegative coefficients and is homogeneous of degree `r`,
/// so each step stays on the simplex and never decreases the objective.
/// Stops once the KKT residual is at most `tol` or after `max_iters` steps.
pub fn replicator_ascent<S: Scalar>(
    g: &Hypergraph,
    x0: &Weighting<S>,
    max_iters: usize,
    tol: S,
) -> Result<LagrangianEstimate<S>> {
    if x0.len() != g.n() {
        return invalid(format!(
            "start has {} coordinates, hypergraph has {} vertices",
            x0.len(),
            g.n()
        ));
    }
    if max_iters == 0 {
        return invalid("max_iters must be at least 1");
    }
    let table = EdgeTable::new(g);
    Ok(ascend(&table, x0.as_slice().to_vec(), max_iters, tol))
}

pub(crate) fn ascend<S: Scalar>(
    table: &EdgeTable,
    mut x: Vec<S>,
    max_iters: usize,
    tol: S,
) -> LagrangianEstimate<S> {
    let r = S::from_count(table.r);
    let mut links = vec![S::zero(); table.n];
    let mut w = table.eval(&x, &mut links);
    if w <= S::zero() {
        return finish(table, x, 0, false, true, Method::Replicator);
    }
    let mut iterations = 0;
    let mut converged = false;
    let mut tried: Vec<usize> = Vec::new();
    let mut attempts = 0;
    while iterations < max_iters {
        if residual_from(&links, w, table.r, &x) <= tol {
            converged = true;
            break;
        }
        if iterations > 0 && iterations % FACE_PROBE_EVERY == 0 {
            let fading = fading_coordinates(&x, &links, r * w);
            if attempts < MAX_FACE_ATTEMPTS && !fading.is_empty() && fading != tried {
                attempts += 1;
                if let Some(mut sub) = ascend_on_face(table, &x, &fading, max_iters - iterations, tol) {
                    if sub.value >= w {
                        sub.iterations += iterations;
                        return sub;
                    }
                }
                tried = fading;
            }
        }
        let scale = r * w;
        let mut sum = S::zero();
        for (xi, &li) in x.iter_mut().zip(&links) {
            *xi = *xi * li / scale;
            sum += *xi;
        }
        x.iter_mut().for_each(|xi| *xi /= sum);
        w = table.eval(&x, &mut links);
        iterations += 1;
    }
    if !converged {
        converged = residual_from(&links, w, table.r, &x) <= tol;
    }
    finish(table, x, iterations, converged, false, Method::Replicator)
}

/// Iterations between attempts to jump onto a smaller face.
const FACE_PROBE_EVERY: usize = 256;
const MAX_FACE_ATTEMPTS: usize = 16;
/// Only coordinates below this fraction of the largest one are dropped.
const FADING: f64 = 0.1;

/// Near a maximizer on a proper face the vanishing coordinates can decay
/// sublinearly. These are the small coordinates with `w_i < r·w`, which the
/// growth transform is shrinking.
fn fading_coordinates<S: Scalar>(x: &[S], links: &[S], target: S) -> Vec<usize> {
    let small = S::lit(FADING) * x.iter().fold(S::zero(), |a, &b| a.max(b));
    let below = target * (S::one() - S::lit(1e-9));
    (0..x.len())
        .filter(|&i| x[i] > S::zero() && x[i] < small && links[i] < below)
        .collect()
}

/// Ascends from `x` with `drop` zeroed. The caller keeps the result only
/// if it is at least as good as the current iterate, so monotonicity holds.
fn ascend_on_face<S: Scalar>(
    table: &EdgeTable,
    x: &[S],
    drop: &[usize],
    max_iters: usize,
    tol: S,
) -> Option<LagrangianEstimate<S>> {
    let mut y = x.to_vec();
    drop.iter().for_each(|&i| y[i] = S::zero());
    let sum = y.iter().fold(S::zero(), |a, &b| a + b);
    if sum <= S::zero() || max_iters == 0 {
        return None;
    }
    y.iter_mut().for_each(|v| *v /= sum);
    let sub = ascend(table, y, max_iters, tol);
    (!sub.degenerate_start).then_some(sub)
}

pub(crate) fn finish<S: Scalar>(
    table: &EdgeTable,
    x: Vec<S>,
    iterations: usize,
    converged: bool,
    degenerate_start: bool,
    method: Method,
) -> LagrangianEstimate<S> {
    let mut links = vec![S::zero(); table.n];
    let value = table.eval(&x, &mut links);
    let kkt_residual = residual_from(&links, value, table.r, &x);
    let weighting = Weighting { values: x };
    LagrangianEstimate {
        value,
        support_size: weighting.support().len(),
        weighting,
        kkt_residual,
        method,
        iterations,
        converged,
        degenerate_start,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lagrangian::{grid_lower_bound, weight_poly};

    #[test]
    fn symmetric_fixed_point() {
        let k4 = Hypergraph::complete(3, 4);
        let est = replicator_ascent(&k4, &Weighting::uniform(4), 100, 1e-10).unwrap();
        assert_eq!(est.value, 1.0 / 16.0);
        assert_eq!(est.kkt_residual, 0.0);
        assert_eq!(est.weighting, Weighting::uniform(4));
        assert!(est.converged);
    }

    #[test]
    fn graph_triangle() {
        let k3 = Hypergraph::complete(2, 3);
        let x0 = Weighting::<f64>::new(vec![0.5, 0.3, 0.2]).unwrap();
        let est = replicator_ascent(&k3, &x0, 10_000, 1e-10).unwrap();
        assert!((est.value - 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn isolated_vertex_is_dropped() {
        let g = Hypergraph::new(3, 4, vec![vec![1, 2, 3]]).unwrap();
        let est = replicator_ascent(&g, &Weighting::<f64>::uniform(4), 10_000, 1e-10).unwrap();
        assert_eq!(est.weighting[4], 0.0);
        assert!((est.value - 1.0 / 27.0).abs() < 1e-12);
        let grid = grid_lower_bound(&g, 60).unwrap();
        assert!((grid.best_value - 1.0 / 27.0).abs() < 1e-15);
        assert_eq!(est.support_size, 3);
    }

    #[test]
    fn degenerate_start() {
        let g = Hypergraph::new(3, 4, vec![vec![1, 2, 3]]).unwrap();
        let x0 = Weighting::uniform_on(4, &[1, 4]);
        let est = replicator_ascent(&g, &x0, 100, 1e-10).unwrap();
        assert!(est.degenerate_start);
        assert_eq!(est.value, 0.0);
        assert_eq!(est.weighting, x0);
    }

    #[test]
    fn ascent_is_monotone() {
        let g = Hypergraph::new(
            3,
            6,
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 5], vec![2, 4, 6], vec![3, 5, 6], vec![1, 5, 6]],
        )
        .unwrap();
        let mut x = Weighting::new(vec![0.3, 0.05, 0.15, 0.2, 0.1, 0.2]).unwrap();
        let mut prev = weight_poly(&g, x.as_slice()).unwrap();
        for _ in 0..500 {
            let est = replicator_ascent(&g, &x, 1, 0.0).unwrap();
            assert!(est.value >= prev - 1e-14);
            prev = est.value;
            x = est.weighting;
        }
    }

    #[test]
    fn maximizer_on_a_face() {
        // K_4 plus {125,135,145}: at the maximizer w(G_5, x) = 3·w(G, x)
        // with x_5 = 0, so x_5 decays only like 1/k without the face jump
        let mut edges = Hypergraph::complete(3, 4).edges().to_vec();
        edges.extend([vec![1, 2, 5], vec![1, 3, 5], vec![1, 4, 5]]);
        let g = Hypergraph::new(3, 5, edges).unwrap();
        let est = replicator_ascent(&g, &Weighting::<f64>::uniform(5), 100_000, 1e-10).unwrap();
        assert!(est.converged);
        assert!(est.iterations < 5_000, "{}", est.iterations);
        assert_eq!(est.weighting[5], 0.0);
        assert!((est.value - 1.0 / 16.0).abs() < 1e-12);
    }

    #[test]
    fn single_precision() {
        let k5 = Hypergraph::complete(3, 5);
        let x0 = Weighting::<f32>::new(vec![0.3, 0.2, 0.2, 0.2, 0.1]).unwrap();
        let est = replicator_ascent(&k5, &x0, 10_000, 1e-6).unwrap();
        assert!((est.value - 0.08).abs() < 1e-6);
    }
}
