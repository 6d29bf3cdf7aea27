use super::Weighting;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Most lattice points [`grid_lower_bound`] will visit.
pub const MAX_GRID_POINTS: u64 = 100_000_000;

/// Best lattice weighting with coordinates in `{0, 1/k, …, 1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCertificate {
    pub k: usize,
    pub best_point: Weighting<f64>,
    pub best_value: f64,
    /// `Π`-sums at the best point scaled by `k^r`, i.e. an exact numerator.
    pub best_numerator: u128,
}

/// Exhaustive maximum of `w(G, p/k)` over all compositions `p` of `k` into
/// `n` parts. Evaluated in integers, so the maximum is exact and its value
/// is a true lower bound on `λ(G)`.
pub fn grid_lower_bound(g: &Hypergraph, k: usize) -> Result<GridCertificate> {
    let n = g.n();
    if k == 0 || n == 0 {
        return Err(Error::Invalid("grid resolution and vertex count must be positive".into()));
    }
    let points = binomial((k + n - 1) as u64, (n - 1) as u64).unwrap_or(u64::MAX);
    if points > MAX_GRID_POINTS {
        return Err(Error::OutOfScale(format!(
            "grid k={k} on {n} vertices has {points} points, limit {MAX_GRID_POINTS}"
        )));
    }
    let r = g.r();
    let flat: Vec<usize> = g.edges().iter().flat_map(|e| e.iter().map(|v| v - 1)).collect();
    let eval = |p: &[u32]| -> u128 {
        flat.chunks_exact(r)
            .map(|e| e.iter().map(|&v| p[v] as u128).product::<u128>())
            .sum()
    };

    // odometer over the first n-1 parts with sum <= k; the last part takes the rest
    let mut p = vec![0u32; n];
    let k32 = k as u32;
    let mut used = 0u32;
    p[n - 1] = k32;
    let mut best = (eval(&p), p.clone());
    'walk: loop {
        let mut i = n - 1;
        loop {
            if i == 0 {
                break 'walk;
            }
            i -= 1;
            if used < k32 {
                p[i] += 1;
                used += 1;
                break;
            }
            used -= p[i];
            p[i] = 0;
        }
        p[n - 1] = k32 - used;
        let v = eval(&p);
        if v > best.0 {
            best = (v, p.clone());
        }
    }
    let scale = (k as f64).powi(r as i32);
    let best_point = Weighting::new(best.1.iter().map(|&c| c as f64 / k as f64).collect())?;
    Ok(GridCertificate {
        k,
        best_point,
        best_value: best.0 as f64 / scale,
        best_numerator: best.0,
    })
}
