//! Exhaustive computation of `λ₃(m)`, the maximum Lagrangian over all
//! 3-graphs with `m` edges, and comparison against `λ(C_{3,m})`.
//!
//! If some `m`-edge graph beats `[t−1]^(3)`, a maximizer can be taken
//! left-compressed, covering pairs, and supported on exactly `[t]`, where
//! `C(t−1, 3) ≤ m < C(t, 3)`. So `λ₃(m)` is the larger of the
//! `[t−1]^(3)` baseline and the best Lagrangian over that candidate class,
//! which is small enough to enumerate for `t ≤ 9`. `m = C(s, 3)` is settled
//! by the complete graph directly.

mod inequalities;
pub mod report;
mod checks;

use std::time::Instant;

use rayon::prelude::*;

pub use inequalities::{
    check_extremal_inequalities, InequalityCheck, InequalityReport, Relation, Structure,
};
pub use checks::{check_bounds, figure_data, bound_check, FigureRow, BoundCheck};

use crate::bounds::colex_lambda_with;
use crate::combinatorics::{
    binomial, colex_initial_segment, colex_rank, complete_value, exact_binomial_root,
    plateau_value, rational_to_f64, support_index, Rational,
};
use crate::error::{Error, Result};
use crate::hypergraph::{enumerate_left_compressed, CandidateFilter, Hypergraph};
use crate::lagrangian::{lagrangian, MultistartOptions};
use crate::rng::SplitMix64;
use crate::{Estimate, Weighting};

/// Largest support size searched exhaustively.
pub const MAX_EXHAUSTIVE_T: usize = 9;

/// A candidate must beat the baseline by more than this to replace it.
const BASELINE_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarnessOptions {
    /// Comparison tolerance for `λ₃(m) ≤ λ(C_{3,m})`.
    pub tol: f64,
    pub seed: u64,
    pub jobs: usize,
    /// Random starts per candidate.
    pub seeds: usize,
    pub max_iters: usize,
    /// Candidates drawn per `m` beyond the exhaustive range.
    pub samples: usize,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        Self { tol: 1e-6, seed: 0, jobs: 1, seeds: 32, max_iters: 100_000, samples: 500 }
    }
}

impl HarnessOptions {
    fn multistart(&self, seed: u64) -> MultistartOptions {
        MultistartOptions { seeds: self.seeds, seed, tol: 1e-10, max_iters: self.max_iters }
    }

    /// Seed for one candidate, independent of how the search was split.
    fn seed_for(&self, g: &Hypergraph) -> u64 {
        let mut h = SplitMix64::new(self.seed);
        let mut acc = h.next_u64();
        for e in g.edges() {
            let rank = colex_rank(e).map(|c| c.0).unwrap_or(0);
            acc = SplitMix64::new(acc ^ rank).next_u64();
        }
        acc
    }
}

/// Outcome of one `λ₃(m)` computation.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureVerdict {
    pub m: u64,
    pub t: usize,
    pub lambda3: f64,
    /// Set when the maximum is the baseline or a complete graph.
    pub lambda3_exact: Option<Rational>,
    pub lambda_colex: f64,
    pub lambda_colex_exact: Option<Rational>,
    pub maximizer: Hypergraph,
    pub weighting: Weighting,
    /// The maximizer's optimizer output, when it came from a candidate.
    pub estimate: Option<Estimate>,
    pub candidates_examined: usize,
    /// Candidates beating the baseline that violate the edge lower bound
    /// `m ≥ C(T−1,3) + C(T−2,2) − (T−2)`.
    pub edge_bound_violations: usize,
    pub exhaustive: bool,
    pub pass: bool,
    pub tolerance: f64,
    pub seconds: f64,
}

impl ConjectureVerdict {
    /// True when the maximum was attained only by the `[t−1]^(3)` baseline
    /// (or a complete graph).
    pub fn baseline_attained(&self) -> bool {
        self.lambda3_exact.is_some()
    }

    /// Everything except wall-clock time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        Self { seconds: 0.0, ..self.clone() } == Self { seconds: 0.0, ..other.clone() }
    }
}

struct Best {
    value: f64,
    graph: Option<(Hypergraph, Estimate)>,
    count: usize,
    edge_bound_violations: usize,
}

impl Best {
    fn empty() -> Self {
        Self { value: f64::NEG_INFINITY, graph: None, count: 0, edge_bound_violations: 0 }
    }

    /// Left-biased merge: ties keep `self`.
    fn merge(mut self, other: Best) -> Best {
        self.count += other.count;
        self.edge_bound_violations += other.edge_bound_violations;
        if other.value > self.value {
            self.value = other.value;
            self.graph = other.graph;
        }
        self
    }
}

/// `C(T−1, 3) + C(T−2, 2) − (T−2)`.
pub fn support_edge_bound(support: usize) -> i64 {
    if support < 2 {
        return 0;
    }
    let s = support as u64;
    binomial(s - 1, 3).unwrap() as i64 + binomial(s - 2, 2).unwrap() as i64 - (support as i64 - 2)
}

fn evaluate<I: Iterator<Item = Hypergraph>>(
    candidates: I,
    opts: &HarnessOptions,
    m: u64,
    baseline: f64,
) -> Result<Best> {
    let mut best = Best::empty();
    for g in candidates {
        let est: Estimate = lagrangian(&g, &opts.multistart(opts.seed_for(&g)))?;
        best.count += 1;
        if est.value > baseline + BASELINE_MARGIN
            && (m as i64) < support_edge_bound(est.support_size)
        {
            best.edge_bound_violations += 1;
        }
        if est.value > best.value {
            best.value = est.value;
            best.graph = Some((g, est));
        }
    }
    Ok(best)
}

fn verdict_for_complete(m: u64, s: usize, opts: &HarnessOptions, started: Instant) -> Result<ConjectureVerdict> {
    let exact = complete_value(3, s)?;
    let colex = colex_lambda_with(3, m, &opts.multistart(opts.seed))?;
    let pass = match colex.exact {
        Some(c) => exact <= c,
        None => rational_to_f64(exact) <= colex.value + opts.tol,
    };
    Ok(ConjectureVerdict {
        m,
        t: s,
        lambda3: rational_to_f64(exact),
        lambda3_exact: Some(exact),
        lambda_colex: colex.value,
        lambda_colex_exact: colex.exact,
        maximizer: Hypergraph::complete(3, s),
        weighting: Weighting::uniform(s),
        estimate: None,
        candidates_examined: 0,
        edge_bound_violations: 0,
        exhaustive: true,
        pass,
        tolerance: opts.tol,
        seconds: started.elapsed().as_secs_f64(),
    })
}

fn finish_verdict(
    m: u64,
    t: usize,
    best: Best,
    exhaustive: bool,
    opts: &HarnessOptions,
    started: Instant,
) -> Result<ConjectureVerdict> {
    let baseline = plateau_value(3, t)?;
    let baseline_f = rational_to_f64(baseline);
    let colex = colex_lambda_with(3, m, &opts.multistart(opts.seed))?;
    let (lambda3, exact, maximizer, weighting, estimate) = match best.graph {
        Some((g, est)) if best.value > baseline_f + BASELINE_MARGIN => {
            (est.value, None, g, est.weighting.clone(), Some(est))
        }
        _ => {
            // C_{3,m} contains [t-1]^(3) and has exactly m edges
            let g = colex_initial_segment(3, m)?;
            let x = Weighting::uniform_on(g.n(), &(1..t).collect::<Vec<_>>());
            (baseline_f, Some(baseline), g, x, None)
        }
    };
    let pass = match (exact, colex.exact) {
        (Some(a), Some(b)) => a <= b,
        _ => lambda3 <= colex.value + opts.tol,
    };
    Ok(ConjectureVerdict {
        m,
        t,
        lambda3,
        lambda3_exact: exact,
        lambda_colex: colex.value,
        lambda_colex_exact: colex.exact,
        maximizer,
        weighting,
        estimate,
        candidates_examined: best.count,
        edge_bound_violations: best.edge_bound_violations,
        exhaustive,
        pass,
        tolerance: opts.tol,
        seconds: started.elapsed().as_secs_f64(),
    })
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))
}

/// `λ₃(m)` by exhaustive search over left-compressed, pair-covering
/// candidates on `[t]`, for `t ≤ 9`.
pub fn lambda3_exhaustive(m: u64, opts: &HarnessOptions) -> Result<ConjectureVerdict> {
    let started = Instant::now();
    if m == 0 {
        return Err(Error::Invalid("m must be positive".into()));
    }
    if let Some(s) = exact_binomial_root(3, m)? {
        return verdict_for_complete(m, s, opts, started);
    }
    let t = support_index(3, m)?;
    if t > MAX_EXHAUSTIVE_T {
        return Err(Error::OutOfScale(format!(
            "m = {m} needs support t = {t}; exhaustive mode stops at t = {MAX_EXHAUSTIVE_T} (m <= {})",
            binomial(MAX_EXHAUSTIVE_T as u64, 3)?
        )));
    }
    let baseline = rational_to_f64(plateau_value(3, t)?);
    let parts = enumerate_left_compressed(3, m as usize, t)?
        .with_filter(CandidateFilter::EXTREMAL)
        .split(opts.jobs.max(1) * 8);
    let results: Vec<Result<Best>> = pool(opts.jobs)?
        .install(|| parts.into_par_iter().map(|p| evaluate(p, opts, m, baseline)).collect());
    let mut best = Best::empty();
    for r in results {
        best = best.merge(r?);
    }
    finish_verdict(m, t, best, true, opts, started)
}

/// Random left-compressed candidates: a random `m`-subset of `[t]^(3)`,
/// fully compressed, kept if it covers pairs and spans `[t]`.
pub fn lambda3_sampled(m: u64, opts: &HarnessOptions) -> Result<ConjectureVerdict> {
    let started = Instant::now();
    if m == 0 {
        return Err(Error::Invalid("m must be positive".into()));
    }
    if let Some(s) = exact_binomial_root(3, m)? {
        return verdict_for_complete(m, s, opts, started);
    }
    let t = support_index(3, m)?;
    let baseline = rational_to_f64(plateau_value(3, t)?);
    let universe = crate::hypergraph::r_subsets(t, 3);
    let mut rng = SplitMix64::new(opts.seed ^ m);
    let mut seen = std::collections::HashSet::new();
    let mut draws = Vec::new();
    for _ in 0..opts.samples {
        let mut pool: Vec<usize> = (0..universe.len()).collect();
        for i in 0..m as usize {
            let j = i + rng.below((pool.len() - i) as u64) as usize;
            pool.swap(i, j);
        }
        let edges = pool[..m as usize].iter().map(|&k| universe[k].clone()).collect();
        let g = Hypergraph::new(3, t, edges)?.compress_full();
        if CandidateFilter::EXTREMAL.accepts(&g) && seen.insert(g.clone()) {
            draws.push(g);
        }
    }
    // C_{3,m} is always offered so the floor λ₃ ≥ λ(C_{3,m}) holds
    let colex = colex_initial_segment(3, m)?.with_vertex_count(t)?;
    if CandidateFilter::EXTREMAL.accepts(&colex) && seen.insert(colex.clone()) {
        draws.push(colex);
    }
    let chunk = draws.len().div_ceil(opts.jobs.max(1) * 4).max(1);
    let results: Vec<Result<Best>> = pool(opts.jobs)?.install(|| {
        draws
            .par_chunks(chunk)
            .map(|c| evaluate(c.iter().cloned(), opts, m, baseline))
            .collect()
    });
    let mut best = Best::empty();
    for r in results {
        best = best.merge(r?);
    }
    finish_verdict(m, t, best, false, opts, started)
}

/// Exhaustive when `t ≤ 9`, sampled beyond.
pub fn lambda3(m: u64, opts: &HarnessOptions) -> Result<ConjectureVerdict> {
    match lambda3_exhaustive(m, opts) {
        Err(Error::OutOfScale(_)) => lambda3_sampled(m, opts),
        other => other,
    }
}
