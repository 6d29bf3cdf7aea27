//! Numerical checks of the structural facts known about an extremal pair
//! `(G, x)` with `λ(G) > λ([t−1]^(3))`.

use std::fmt;

use crate::bounds::ceil_four_two_thirds;
use crate::combinatorics::{binomial, plateau_value, rational_to_f64};
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::lagrangian::{kkt_residual, link_weights, motzkin_straus_lambda, weight_poly};
use crate::Weighting;

/// Slack for every strict or weak inequality.
const SLACK: f64 = 1e-9;
/// Largest residual for which `x` counts as stationary.
const KKT_LIMIT: f64 = 1e-6;
/// Tolerated ascending step between consecutive coordinates; tied
/// coordinates of a numerical maximizer differ at about this scale.
const SORT_SLACK: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Gt,
    Ge,
    /// Equal within `SLACK` plus a residual-dependent allowance.
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub holds: bool,
    pub applicable: bool,
    /// Failed precondition for non-applicable entries, otherwise context.
    pub note: String,
}

impl InequalityCheck {
    fn new(name: impl Into<String>, lhs: f64, relation: Relation, rhs: f64, slack: f64) -> Self {
        let holds = match relation {
            Relation::Lt | Relation::Le => lhs <= rhs + slack,
            Relation::Gt | Relation::Ge => lhs + slack >= rhs,
            Relation::Eq => (lhs - rhs).abs() <= slack,
        };
        Self { name: name.into(), lhs, rhs, relation, holds, applicable: true, note: String::new() }
    }

    fn gated(mut self, precondition: Option<&str>) -> Self {
        if let Some(reason) = precondition {
            self.applicable = false;
            self.note = reason.to_string();
        }
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn failed(&self) -> bool {
        self.applicable && !self.holds
    }
}

impl fmt::Display for InequalityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.applicable, self.holds) {
            (false, _) => "n/a",
            (true, true) => "ok",
            (true, false) => "FAIL",
        };
        write!(
            f,
            "{status:4} {}: {} {} {}",
            self.name,
            crate::format::sig12(self.lhs),
            self.relation,
            crate::format::sig12(self.rhs)
        )?;
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

/// Quantities from the colex bound's proof, computed from `G` on `[t]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Structure {
    /// `max{i : {i, t−1, t} ∈ E}`.
    pub b: Option<usize>,
    /// `max{i : {t−i−1, t−i, t} ∉ E}`.
    pub s: Option<usize>,
    /// `{t−s, …, t}`.
    pub big_s: Vec<usize>,
    /// `C(t, 3) − m`.
    pub l: i64,
    /// `⌈4·t^{2/3}⌉`.
    pub eta: u64,
    /// `l − η`.
    pub l1: i64,
    /// `b + min(l' − (t−2), 0)`, when `b` exists.
    pub l2: Option<i64>,
}

impl Structure {
    pub fn of(g: &Hypergraph, t: usize) -> Self {
        let has = |e: [usize; 3]| g.contains(&e);
        let b = (1..t.saturating_sub(1)).rev().find(|&i| has([i, t - 1, t]));
        // {t-i-1, t-i} needs t-i-1 >= 1 and t-i <= t-1
        let s = (1..t.saturating_sub(1)).rev().find(|&i| !has([t - i - 1, t - i, t]));
        let big_s = s.map(|s| (t - s..=t).collect()).unwrap_or_default();
        let l = binomial(t as u64, 3).unwrap_or(0) as i64 - g.m() as i64;
        let eta = ceil_four_two_thirds(t as u64);
        let l1 = l - eta as i64;
        let l2 = b.map(|b| b as i64 + (l1 - (t as i64 - 2)).min(0));
        Self { b, s, big_s, l, eta, l1, l2 }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        write!(
            f,
            "b={} s={} S={:?} l={} eta={} l'={} l''={}",
            opt(self.b),
            opt(self.s),
            self.big_s,
            self.l,
            self.eta,
            self.l1,
            self.l2.map_or("-".to_string(), |v| v.to_string())
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub t: usize,
    pub value: f64,
    pub baseline: f64,
    /// `w(G, x) > λ([t−1]^(3))`: the extremal facts are only claimed then.
    pub beats_baseline: bool,
    pub support: usize,
    pub kkt_residual: f64,
    pub left_compressed: bool,
    pub structure: Structure,
    pub entries: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn failures(&self) -> Vec<&InequalityCheck> {
        self.entries.iter().filter(|e| e.failed()).collect()
    }

    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| !e.failed())
    }

    pub fn applicable(&self) -> usize {
        self.entries.iter().filter(|e| e.applicable).count()
    }
}

impl fmt::Display for InequalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "t={} w={} baseline={} beats_baseline={} support={} kkt={:.3e} compressed={}",
            self.t,
            crate::format::sig12(self.value),
            crate::format::sig12(self.baseline),
            self.beats_baseline,
            self.support,
            self.kkt_residual,
            self.left_compressed
        )?;
        writeln!(f, "{}", self.structure)?;
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Evaluates every checkable extremal inequality for a 3-graph `G` and a
/// stationary weighting `x` sorted in non-increasing order.
///
/// Facts that only hold for a maximizer beating `[t−1]^(3)` are reported
/// as not applicable when `w(G, x)` does not exceed that baseline.
pub fn check_extremal_inequalities(g: &Hypergraph, x: &Weighting, t: usize) -> Result<InequalityReport> {
    if g.r() != 3 {
        return invalid(format!("extremal inequalities are stated for 3-graphs, got r = {}", g.r()));
    }
    if x.len() != g.n() {
        return invalid(format!("weighting has {} coordinates, hypergraph has {} vertices", x.len(), g.n()));
    }
    if t < 4 || t > g.n() {
        return invalid(format!("t = {t} must lie in [4, n] with n = {}", g.n()));
    }
    let xs = x.as_slice();
    if let Some(i) = (1..xs.len()).find(|&i| xs[i] > xs[i - 1] + SORT_SLACK) {
        return invalid(format!(
            "weighting is not sorted: x_{} = {} < x_{} = {}",
            i,
            xs[i - 1],
            i + 1,
            xs[i]
        ));
    }
    let xv = |i: usize| xs[i - 1];
    let m = g.m() as i64;
    let value = weight_poly(g, xs)?;
    let baseline = rational_to_f64(plateau_value(3, t)?);
    let beats = value > baseline + 1e-12;
    let residual = kkt_residual(g, x)?;
    let support = x.support().len();
    let compressed = g.is_left_compressed();
    let structure = Structure::of(g, t);
    let links = link_weights(g, xs)?;
    let mut out = Vec::new();

    let extremal = (!beats).then_some("w(G,x) does not exceed the [t-1] baseline");
    let t_f = t as f64;
    let x1 = xv(1);

    out.push(InequalityCheck::new("kkt residual", residual, Relation::Le, KKT_LIMIT, 0.0));
    out.push(
        InequalityCheck::new("monotone labels", 0.0, Relation::Le, SORT_SLACK, 0.0)
            .note("x_i >= x_j for i < j, checked on input"),
    );
    out.push(
        InequalityCheck::new("support T = t", support as f64, Relation::Eq, t_f, 0.0).gated(extremal),
    );
    let edge_floor = binomial(support.saturating_sub(1) as u64, 3)? as i64
        + binomial(support.saturating_sub(2) as u64, 2)? as i64
        - (support as i64 - 2);
    out.push(
        InequalityCheck::new("edge floor m >= C(T-1,3)+C(T-2,2)-(T-2)", m as f64, Relation::Ge, edge_floor as f64, 0.0)
            .gated(extremal),
    );
    for k in 1.. {
        if (k + 1) * 3 >= t {
            break;
        }
        let idx = t - (k + 1) * 3;
        let rhs = (k as f64 + 1.0) / k as f64 * xv(idx);
        out.push(
            InequalityCheck::new(format!("x_1 < ({}/{}) x_{idx}, k = {k}", k + 1, k), x1, Relation::Lt, rhs, SLACK)
                .gated(extremal),
        );
    }
    out.push(InequalityCheck::new("x_1 < 1/(t-2)", x1, Relation::Lt, 1.0 / (t_f - 2.0), SLACK).gated(extremal));
    for k in 1..t {
        let rhs = (k as f64 - 1.0) / (k as f64 + 1.0) * x1;
        out.push(
            InequalityCheck::new(format!("x_{{t-k}} > ({}/{}) x_1, k = {k}", k - 1, k + 1), xv(t - k), Relation::Gt, rhs, SLACK)
                .gated(extremal),
        );
    }
    // every summand is nonnegative, so S = [t] is the binding case
    let spread: f64 = (1..=t).map(|i| x1 - xv(i)).sum();
    out.push(
        InequalityCheck::new("sum_{i in [t]} (x_1 - x_i) < 2 x_1", spread, Relation::Lt, 2.0 * x1, SLACK)
            .gated(extremal),
    );

    // every non-edge meets S in two vertices; this only needs
    // left-compression and s
    let claim_gate = if !compressed {
        Some("G is not left-compressed")
    } else if structure.s.is_none() {
        Some("s is undefined: every {t-i-1, t-i, t} is an edge")
    } else {
        None
    };
    let big_s = &structure.big_s;
    let worst = g
        .restrict_to_prefix(t)
        .non_edges()
        .iter()
        .map(|e| e.iter().filter(|v| big_s.contains(v)).count())
        .min();
    out.push(
        InequalityCheck::new(
            "non-edges meet S twice: min |e ∩ S| >= 2",
            worst.unwrap_or(3) as f64,
            Relation::Ge,
            2.0,
            0.0,
        )
        .gated(claim_gate)
        .note(if worst.is_none() { "no non-edges in [t]^(3)" } else { "" }),
    );

    // exchange of {1, t-1, t} against {t-s-1, t-s, t}, and its consequence
    let exchange_gate = extremal.or(match (structure.b, structure.s) {
        (None, _) => Some("{1, t-1, t} is not an edge"),
        (_, None) => Some("s is undefined"),
        (_, Some(s)) if s + 2 > t => Some("t-s-1 < 1"),
        _ => None,
    });
    if let Some(s) = structure.s.filter(|&s| s + 2 <= t) {
        let lhs = x1 * xv(t - 1) * xv(t) - xv(t - s - 1) * xv(t - s) * xv(t);
        out.push(
            InequalityCheck::new("exchange: x_1 x_{t-1} x_t - x_{t-s-1} x_{t-s} x_t >= 0", lhs, Relation::Ge, 0.0, SLACK)
                .gated(exchange_gate),
        );
        let sf = s as f64;
        let rhs = sf * (sf - 1.0) / ((sf + 2.0) * (sf + 1.0)) * x1;
        out.push(
            InequalityCheck::new("x_{t-1} > s(s-1)/((s+2)(s+1)) x_1", xv(t - 1), Relation::Gt, rhs, SLACK)
                .gated(exchange_gate),
        );
    } else {
        let reason = exchange_gate.unwrap_or("s is undefined");
        out.push(InequalityCheck::new("exchange: x_1 x_{t-1} x_t - x_{t-s-1} x_{t-s} x_t >= 0", 0.0, Relation::Ge, 0.0, 0.0).gated(Some(reason)));
        out.push(InequalityCheck::new("x_{t-1} > s(s-1)/((s+2)(s+1)) x_1", 0.0, Relation::Gt, 0.0, 0.0).gated(Some(reason)));
    }

    // (x_i - x_j) w(G_ij, x) = w(G_{i\j}, x) on the support of a stationary
    // point of a left-compressed G; allowance scales with the residual
    let diff_gate = if !compressed {
        Some("G is not left-compressed")
    } else if residual > KKT_LIMIT {
        Some("x is not stationary")
    } else {
        None
    };
    let mut worst_gap = (0.0f64, 1, 2);
    let sup = x.support();
    for (a, &i) in sup.iter().enumerate() {
        for &j in &sup[a + 1..] {
            let pair = weight_poly(&g.link(&[i, j])?, xs)?;
            let diff = weight_poly(&g.link_difference(i, j)?, xs)?;
            let gap = ((xv(i) - xv(j)) * pair - diff).abs();
            if gap > worst_gap.0 {
                worst_gap = (gap, i, j);
            }
        }
    }
    out.push(
        InequalityCheck::new(
            "(x_i - x_j) w(G_ij, x) = w(G_i\\j, x), worst pair",
            worst_gap.0,
            Relation::Le,
            0.0,
            2.0 * residual + SLACK,
        )
        .gated(diff_gate)
        .note(format!("pair ({}, {})", worst_gap.1, worst_gap.2)),
    );

    // w(G_i, x) <= (1 - x_i)^2 λ(G_i), with λ(G_i) exact by Motzkin-Straus
    if g.n() <= 64 {
        let mut worst = (f64::NEG_INFINITY, 1, 0.0, 0.0);
        for i in 1..=g.n() {
            let li = g.link(&[i])?;
            let lam = if li.m() == 0 { 0.0 } else { rational_to_f64(motzkin_straus_lambda(&li)?) };
            let rhs = (1.0 - xv(i)).powi(2) * lam;
            if links[i - 1] - rhs > worst.0 {
                worst = (links[i - 1] - rhs, i, links[i - 1], rhs);
            }
        }
        out.push(
            InequalityCheck::new("w(G_i, x) <= (1-x_i)^2 λ(G_i)", worst.2, Relation::Le, worst.3, SLACK)
                .note(format!("tightest at i = {}", worst.1)),
        );
    }

    Ok(InequalityReport {
        t,
        value,
        baseline,
        beats_baseline: beats,
        support,
        kkt_residual: residual,
        left_compressed: compressed,
        structure,
        entries: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::colex_initial_segment;
    use crate::lagrangian::{lagrangian, MultistartOptions};
    use crate::Estimate;

    #[test]
    fn complete_five_uniform() {
        let rep = check_extremal_inequalities(&Hypergraph::complete(3, 5), &Weighting::uniform(5), 5).unwrap();
        assert!(rep.beats_baseline);
        let two = rep.entries.iter().find(|e| e.name.starts_with("x_1 < 1/(t-2)")).unwrap();
        assert!(two.applicable && two.holds);
        assert!((two.lhs - 0.2).abs() < 1e-15 && (two.rhs - 1.0 / 3.0).abs() < 1e-15);
        assert!(rep.entries.iter().filter(|e| e.name.starts_with("x_{t-k}")).all(|e| e.holds));
        let four = rep.entries.iter().find(|e| e.name.starts_with("sum_")).unwrap();
        assert_eq!((four.lhs, four.rhs), (0.0, 0.4));
        assert!(rep.all_hold(), "{rep}");
    }

    #[test]
    fn claim_one_small() {
        let g = Hypergraph::new(3, 4, vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]]).unwrap();
        let st = Structure::of(&g, 4);
        // {2,3,4} is the only non-edge: s = 1, S = {3, 4}; b = 1
        assert_eq!((st.s, st.b), (Some(1), Some(1)));
        assert_eq!(st.big_s, vec![3, 4]);
        let est: Estimate = lagrangian(&g, &MultistartOptions::default()).unwrap();
        let rep = check_extremal_inequalities(&g, &est.weighting, 4).unwrap();
        let claim = rep.entries.iter().find(|e| e.name.starts_with("non-edges")).unwrap();
        assert!(claim.applicable);
        assert_eq!(claim.lhs, 2.0);
        assert!(claim.holds);
    }

    #[test]
    fn gate_closes_below_baseline() {
        let g = colex_initial_segment(3, 5).unwrap();
        let x = Weighting::uniform_on(5, &[1, 2, 3, 4]);
        let rep = check_extremal_inequalities(&g, &x, 5).unwrap();
        assert!(!rep.beats_baseline);
        assert!(rep.entries.iter().filter(|e| e.name.starts_with("x_1 < 1/(t-2)")).all(|e| !e.applicable));
        assert!(rep.all_hold(), "{rep}");
    }

    #[test]
    fn colex_jump_maximizer() {
        for m in [8u64, 9, 17, 18, 19] {
            let g = colex_initial_segment(3, m).unwrap();
            let t = g.n();
            let est: Estimate = lagrangian(&g, &MultistartOptions::default()).unwrap();
            let rep = check_extremal_inequalities(&g, &est.weighting, t).unwrap();
            assert!(rep.beats_baseline, "m={m}");
            assert!(rep.all_hold(), "m={m}\n{rep}");
        }
    }

    #[test]
    fn rejects_unsorted() {
        let x = Weighting::new(vec![0.1, 0.3, 0.3, 0.3]).unwrap();
        assert!(check_extremal_inequalities(&Hypergraph::complete(3, 4), &x, 4).is_err());
    }

    #[test]
    fn failures_are_surfaced() {
        // above the baseline but with x_1 > 1/3, so (2) fails
        let x = Weighting::new(vec![0.34, 0.165, 0.165, 0.165, 0.165]).unwrap();
        let rep = check_extremal_inequalities(&Hypergraph::complete(3, 5), &x, 5).unwrap();
        assert!(!rep.all_hold());
        assert!(rep.failures().iter().any(|e| e.name.starts_with("kkt")));
        assert!(rep.failures().iter().any(|e| e.name.starts_with("x_1 < 1/(t-2)")));
    }
}
