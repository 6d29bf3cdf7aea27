//! Reference values: `λ(C_{r,m})`, the smooth bound `m·s^{−r}`, and the
//! right-hand sides of the `m + O(m^{2/9})` colex bound and its refinement
//! near `C(t, 3)`.

use crate::combinatorics::{
    binomial, binomial_inverse_real, colex_initial_segment, complete_value, exact_binomial_root,
    plateau_range, plateau_value, rational_to_f64, support_index, Rational,
};
use crate::error::{invalid, Result};
use crate::lagrangian::{grid_lower_bound, lagrangian, MultistartOptions, MAX_GRID_POINTS};
use crate::Estimate;

/// Grid resolution used to bracket numeric colex values.
pub const BRACKET_K: usize = 60;
/// Largest accepted gap between the optimizer and the grid lower bound.
pub const BRACKET_WIDTH: f64 = 1e-4;

/// `m · s^{−r}` with `C(s, r) = m`; an upper bound on `λ` of any `m`-edge
/// `r`-graph, tight exactly at complete graphs.
pub fn smooth_upper_bound(m: u64, r: usize) -> Result<f64> {
    let s = binomial_inverse_real(m, r)?.s;
    Ok(m as f64 / s.powi(r as i32))
}

/// Grid lower bound next to a numeric value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridBracket {
    pub k: usize,
    pub lower: f64,
    /// `value − lower`; negative only if the grid beat the optimizer.
    pub width: f64,
}

impl GridBracket {
    pub fn accepted(&self) -> bool {
        self.width > -1e-9 && self.width < BRACKET_WIDTH
    }
}

/// `λ(C_{r,m})`, exact on plateaus and numeric in jump regions.
#[derive(Debug, Clone, PartialEq)]
pub struct ColexLambda {
    pub r: usize,
    pub m: u64,
    pub t: usize,
    pub value: f64,
    pub exact: Option<Rational>,
    pub estimate: Option<Estimate>,
    /// Present for numeric values whose grid fits in [`MAX_GRID_POINTS`].
    pub bracket: Option<GridBracket>,
}

impl ColexLambda {
    /// Exact, or numeric with an accepted bracket (or none computable).
    pub fn accepted(&self) -> bool {
        self.exact.is_some() || self.bracket.is_none_or(|b| b.accepted())
    }
}

pub fn colex_lambda(r: usize, m: u64) -> Result<ColexLambda> {
    colex_lambda_with(r, m, &MultistartOptions::default())
}

pub fn colex_lambda_with(r: usize, m: u64, opts: &MultistartOptions) -> Result<ColexLambda> {
    let t = support_index(r, m)?;
    let (lo, hi) = plateau_range(r, t)?;
    if (lo..=hi).contains(&m) {
        let exact = plateau_value(r, t)?;
        return Ok(ColexLambda {
            r,
            m,
            t,
            value: rational_to_f64(exact),
            exact: Some(exact),
            estimate: None,
            bracket: None,
        });
    }
    let g = colex_initial_segment(r, m)?;
    let est: Estimate = lagrangian(&g, opts)?;
    let points = binomial((BRACKET_K + g.n() - 1) as u64, g.n() as u64 - 1).unwrap_or(u64::MAX);
    let bracket = if points <= MAX_GRID_POINTS / 10 {
        let grid = grid_lower_bound(&g, BRACKET_K)?;
        Some(GridBracket { k: BRACKET_K, lower: grid.best_value, width: est.value - grid.best_value })
    } else {
        None
    };
    Ok(ColexLambda { r, m, t, value: est.value, exact: None, estimate: Some(est), bracket })
}

/// `⌈4·x^{2/3}⌉`, computed exactly as the least `e` with `e³ ≥ 64·x²`.
pub fn ceil_four_two_thirds(x: u64) -> u64 {
    let target = 64u128 * x as u128 * x as u128;
    let mut e = (4.0 * (x as f64).powf(2.0 / 3.0)).floor() as u128;
    e = e.saturating_sub(2);
    while e * e * e < target {
        e += 1;
    }
    e as u64
}

/// `λ₃(m) ≤ rhs`, as instantiated at `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub m: u64,
    /// `C(t−1, 3) ≤ m < C(t, 3)`.
    pub t: usize,
    /// `C(t, 3) − m`.
    pub l: u64,
    pub lambda_colex: f64,
    pub lambda_colex_exact: Option<Rational>,
    pub smooth_bound: f64,
    /// `⌈4·t^{2/3}⌉`.
    pub eta: u64,
    /// `m + η` when `t ≥ 8`.
    pub m_prime: Option<u64>,
    pub rhs: f64,
    pub rhs_exact: Option<Rational>,
    /// `t < 8`: the bound used is `λ₃(C(t,3)) = C(t,3)/t³`.
    pub small_t_fallback: bool,
}

pub fn colex_bound_rhs(m: u64) -> Result<BoundReport> {
    let t = support_index(3, m)?;
    let colex = colex_lambda(3, m)?;
    let eta = ceil_four_two_thirds(t as u64);
    let (m_prime, rhs, rhs_exact, fallback) = if t >= 8 {
        let mp = m + eta;
        let c = colex_lambda(3, mp)?;
        (Some(mp), c.value, c.exact, false)
    } else {
        let q = complete_value(3, t)?;
        (None, rational_to_f64(q), Some(q), true)
    };
    Ok(BoundReport {
        m,
        t,
        l: binomial(t as u64, 3)? - m,
        lambda_colex: colex.value,
        lambda_colex_exact: colex.exact,
        smooth_bound: smooth_upper_bound(m, 3)?,
        eta,
        m_prime,
        rhs,
        rhs_exact,
        small_t_fallback: fallback,
    })
}

/// The refined bound `λ₃(m) ≤ λ(C_{m + ⌈c·l^{2/3}⌉})` for `m = C(t,3) − l`
/// close to `C(t, 3)`, with `c = 4`.
#[derive(Debug, Clone, PartialEq)]
pub enum RefinedBound {
    Applicable { t: usize, l: u64, offset: u64, m_prime: u64, rhs: f64, rhs_exact: Option<Rational> },
    NotApplicable { reason: String },
}

/// Window: `0 < l < (t − 2) + 4·t^{2/3}`.
fn in_refined_window(l: u64, t: u64) -> bool {
    if l <= t - 2 {
        return true;
    }
    let excess = (l - (t - 2)) as u128;
    // excess < 4 t^{2/3}  <=>  excess³ < 64 t²
    excess * excess * excess < 64 * t as u128 * t as u128
}

pub fn refined_rhs(m: u64) -> Result<RefinedBound> {
    if m == 0 {
        return invalid("m must be positive");
    }
    if let Some(s) = exact_binomial_root(3, m)? {
        return Ok(RefinedBound::NotApplicable {
            reason: format!("m = C({s},3), so l = 0"),
        });
    }
    let t = support_index(3, m)?;
    let l = binomial(t as u64, 3)? - m;
    if !in_refined_window(l, t as u64) {
        return Ok(RefinedBound::NotApplicable {
            reason: format!("l = {l} is outside (0, (t-2) + 4 t^(2/3)) for t = {t}"),
        });
    }
    let offset = ceil_four_two_thirds(l);
    let m_prime = m + offset;
    let c = colex_lambda(3, m_prime)?;
    Ok(RefinedBound::Applicable { t, l, offset, m_prime, rhs: c.value, rhs_exact: c.exact })
}
