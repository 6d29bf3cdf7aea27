use crate::bounds::{colex_lambda, refined_rhs, smooth_upper_bound, colex_bound_rhs, BoundReport, RefinedBound};
use crate::combinatorics::{binomial, plateau_range, plateau_value, rational_to_f64, Rational};
use crate::error::{invalid, Result};

use super::{lambda3_exhaustive, ConjectureVerdict, HarnessOptions};

/// Every bound checked against an exhaustively computed `λ₃(m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub verdict: ConjectureVerdict,
    pub smooth_bound: f64,
    /// `λ₃(m) ≤ m·s^{−3} + tol`.
    pub smooth_holds: bool,
    pub bound: BoundReport,
    /// `λ₃(m) ≤ rhs + tol`.
    pub colex_bound_holds: bool,
    /// `Some` when `m` is on a plateau: `λ₃(m)` equals the plateau value.
    pub plateau_holds: Option<bool>,
    pub refined: RefinedBound,
    /// `Some` when the refined bound applies.
    pub refined_holds: Option<bool>,
}

impl BoundCheck {
    pub fn all_hold(&self) -> bool {
        self.verdict.pass
            && self.smooth_holds
            && self.colex_bound_holds
            && self.plateau_holds.unwrap_or(true)
            && self.refined_holds.unwrap_or(true)
    }
}

/// Checks the smooth bound, the colex bound with explicit `η`, plateau
/// exactness and the refined bound for every `m ≤ m_max`.
pub fn check_bounds(m_max: u64, tol: f64, opts: &HarnessOptions) -> Result<Vec<BoundCheck>> {
    let ceiling = binomial(super::MAX_EXHAUSTIVE_T as u64, 3)?;
    if m_max > ceiling {
        return invalid(format!("m_max = {m_max} exceeds the exhaustive range m <= {ceiling}"));
    }
    (1..=m_max).map(|m| bound_check(lambda3_exhaustive(m, opts)?, tol)).collect()
}

/// The bound checks for one computed `λ₃(m)`.
pub fn bound_check(verdict: ConjectureVerdict, tol: f64) -> Result<BoundCheck> {
    let m = verdict.m;
    let lam = verdict.lambda3;
    let smooth = smooth_upper_bound(m, 3)?;
    let bound = colex_bound_rhs(m)?;
    let colex_bound_holds = match (verdict.lambda3_exact, bound.rhs_exact) {
        (Some(a), Some(b)) => a <= b,
        _ => lam <= bound.rhs + tol,
    };
    let (lo, hi) = plateau_range(3, verdict.t)?;
    let plateau_holds = if (lo..=hi).contains(&m) {
        let p: Rational = plateau_value(3, verdict.t)?;
        Some(match verdict.lambda3_exact {
            Some(q) => q == p,
            None => (lam - rational_to_f64(p)).abs() <= tol,
        })
    } else {
        None
    };
    let refined = refined_rhs(m)?;
    let refined_holds = match &refined {
        RefinedBound::Applicable { rhs, .. } => Some(lam <= rhs + tol),
        RefinedBound::NotApplicable { .. } => None,
    };
    Ok(BoundCheck {
        smooth_holds: lam <= smooth + tol,
        smooth_bound: smooth,
        verdict,
        bound,
        colex_bound_holds,
        plateau_holds,
        refined,
        refined_holds,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureRow {
    pub m: u64,
    pub t: usize,
    /// `λ(C_{3,m})`.
    pub conjectured: f64,
    pub exact: Option<Rational>,
    pub smooth: f64,
}

/// Rows `m = 1, …, C(t_max, 3)` of `λ(C_{3,m})` against `m·s^{−3}`.
pub fn figure_data(t_max: usize) -> Result<Vec<FigureRow>> {
    if !(3..=16).contains(&t_max) {
        return invalid(format!("t_max = {t_max} must lie in [3, 16]"));
    }
    let top = binomial(t_max as u64, 3)?;
    (1..=top)
        .map(|m| {
            let c = colex_lambda(3, m)?;
            Ok(FigureRow { m, t: c.t, conjectured: c.value, exact: c.exact, smooth: smooth_upper_bound(m, 3)? })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range() {
        let checks = check_bounds(11, 1e-9, &HarnessOptions::default()).unwrap();
        assert!(checks.iter().all(|c| c.all_hold()));
        assert_eq!(checks[6].verdict.lambda3_exact, Some(Rational::new(1, 16)));
        assert_eq!(checks[6].plateau_holds, Some(true));
        assert_eq!(checks[10].plateau_holds, Some(true));
        assert!((checks[10].verdict.lambda3 - 0.08).abs() < 1e-12);
    }

    #[test]
    fn figure_rows() {
        let rows = figure_data(6).unwrap();
        assert_eq!(rows.len(), 20);
        assert_eq!(rows[0].exact, Some(Rational::new(1, 27)));
        assert!((rows[0].smooth - 1.0 / 27.0).abs() < 1e-15);
        assert_eq!(rows[3].exact, Some(Rational::new(1, 16)));
        assert_eq!(rows[9].smooth, 0.08);
        assert!(rows.windows(2).all(|w| w[1].conjectured >= w[0].conjectured));
        assert!(figure_data(17).is_err());
    }
}
