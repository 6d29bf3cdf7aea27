//! Enumeration of left-compressed families.
//!
//! A family of r-subsets of `[t]` is left-compressed exactly when it is a
//! down-set of the domination order (`A ≤ B` iff `a_k ≤ b_k` for every k,
//! both sorted). Colex order is a linear extension of that order, so the
//! search decides elements in colex order: an element may be taken only if
//! no element below it was rejected. Rejecting an element kills its whole
//! up-set, and a branch is cut as soon as the live elements left cannot
//! bring the family up to `m` edges.

use super::{r_subsets, Hypergraph};
use crate::error::{Error, Result};

/// Largest universe `C(t, r)` the bitmask search supports.
pub const MAX_UNIVERSE: usize = 128;

/// Post-generation filters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CandidateFilter {
    pub cover_pairs: bool,
    pub full_support: bool,
}

impl CandidateFilter {
    pub const NONE: Self = Self { cover_pairs: false, full_support: false };
    pub const EXTREMAL: Self = Self { cover_pairs: true, full_support: true };

    pub fn accepts(&self, g: &Hypergraph) -> bool {
        (!self.full_support || g.spans_all_vertices())
            && (!self.cover_pairs || g.covers_pairs().covers_all)
    }
}

#[derive(Debug)]
struct Universe {
    r: usize,
    t: usize,
    sets: Vec<Vec<usize>>,
    /// `upsets[k]`: every element dominating element `k`, itself included.
    upsets: Vec<u128>,
}

impl Universe {
    fn new(r: usize, t: usize) -> Result<Self> {
        let sets = r_subsets(t, r);
        if sets.len() > MAX_UNIVERSE {
            return Err(Error::OutOfScale(format!(
                "C({t},{r}) = {} exceeds the enumerable universe of {MAX_UNIVERSE}",
                sets.len()
            )));
        }
        let index = |s: &[usize]| sets.binary_search_by(|x| super::colex_cmp(x, s)).unwrap();
        let mut upsets = vec![0u128; sets.len()];
        // upper covers have larger colex rank, so fill from the top
        for k in (0..sets.len()).rev() {
            let s = &sets[k];
            let mut up = 1u128 << k;
            for p in 0..r {
                let bumped = s[p] + 1;
                let limit = if p + 1 < r { s[p + 1] } else { t + 1 };
                if bumped < limit {
                    let mut c = s.clone();
                    c[p] = bumped;
                    up |= upsets[index(&c)];
                }
            }
            upsets[k] = up;
        }
        Ok(Self { r, t, sets, upsets })
    }

    fn len(&self) -> usize {
        self.sets.len()
    }

    fn to_graph(&self, mut mask: u128) -> Hypergraph {
        let mut edges = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let k = mask.trailing_zeros() as usize;
            edges.push(self.sets[k].clone());
            mask &= mask - 1;
        }
        Hypergraph::from_sorted_unchecked(self.r, self.t, edges)
    }
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    idx: usize,
    included: u128,
    dead: u128,
    count: usize,
}

enum Step {
    Yield(u128),
    Expand([Option<Frame>; 2]),
    Prune,
}

/// Depth-first stream of left-compressed `m`-edge families on `[t]`.
#[derive(Debug)]
pub struct LeftCompressedFamilies {
    universe: std::sync::Arc<Universe>,
    m: usize,
    stack: Vec<Frame>,
    filter: CandidateFilter,
}

/// Every left-compressed `r`-graph with `m` edges inside `[t]`, in a fixed
/// depth-first order. Universes larger than [`MAX_UNIVERSE`] are rejected.
pub fn enumerate_left_compressed(r: usize, m: usize, t: usize) -> Result<LeftCompressedFamilies> {
    let universe = Universe::new(r, t)?;
    let root = Frame { idx: 0, included: 0, dead: 0, count: 0 };
    let stack = if m <= universe.len() { vec![root] } else { Vec::new() };
    Ok(LeftCompressedFamilies {
        universe: std::sync::Arc::new(universe),
        m,
        stack,
        filter: CandidateFilter::NONE,
    })
}

impl LeftCompressedFamilies {
    pub fn with_filter(mut self, filter: CandidateFilter) -> Self {
        self.filter = filter;
        self
    }

    fn step(&self, f: Frame) -> Step {
        let n = self.universe.len();
        if f.count == self.m {
            return Step::Yield(f.included);
        }
        if f.idx >= n {
            return Step::Prune;
        }
        let rest = if f.idx == 0 { u128::MAX } else { u128::MAX << f.idx };
        let rest = rest & if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let live = (rest & !f.dead).count_ones() as usize;
        if f.count + live < self.m {
            return Step::Prune;
        }
        let bit = 1u128 << f.idx;
        if f.dead & bit != 0 {
            return Step::Expand([Some(Frame { idx: f.idx + 1, ..f }), None]);
        }
        let take = Frame {
            idx: f.idx + 1,
            included: f.included | bit,
            dead: f.dead,
            count: f.count + 1,
        };
        let skip = Frame {
            idx: f.idx + 1,
            dead: f.dead | self.universe.upsets[f.idx],
            ..f
        };
        Step::Expand([Some(take), Some(skip)])
    }

    /// Splits the remaining search into at least `parts` independent streams
    /// (when the tree is that wide). Concatenating them in order reproduces
    /// this stream exactly.
    pub fn split(self, parts: usize) -> Vec<LeftCompressedFamilies> {
        // stack top is the next frame; frontier is kept in visiting order
        let mut frontier: Vec<Frame> = self.stack.iter().rev().copied().collect();
        loop {
            if frontier.len() >= parts {
                break;
            }
            let mut next = Vec::with_capacity(frontier.len() * 2);
            let mut grew = false;
            for f in &frontier {
                match self.step(*f) {
                    Step::Yield(_) => next.push(*f),
                    Step::Prune => grew = true,
                    Step::Expand(children) => {
                        next.extend(children.into_iter().flatten());
                        grew = true;
                    }
                }
            }
            frontier = next;
            if !grew {
                break;
            }
        }
        frontier
            .into_iter()
            .map(|f| LeftCompressedFamilies {
                universe: self.universe.clone(),
                m: self.m,
                stack: vec![f],
                filter: self.filter,
            })
            .collect()
    }
}

impl Iterator for LeftCompressedFamilies {
    type Item = Hypergraph;

    fn next(&mut self) -> Option<Hypergraph> {
        while let Some(f) = self.stack.pop() {
            match self.step(f) {
                Step::Yield(mask) => {
                    let g = self.universe.to_graph(mask);
                    if self.filter.accepts(&g) {
                        return Some(g);
                    }
                }
                Step::Prune => {}
                Step::Expand([take, skip]) => {
                    self.stack.extend(skip);
                    self.stack.extend(take);
                }
            }
        }
        None
    }
}
