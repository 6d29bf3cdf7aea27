//! Uniform hypergraphs on `[n]` with edges kept in colex order.

mod compress;
pub mod edgelist;
mod enumerate;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

pub use enumerate::{enumerate_left_compressed, CandidateFilter, LeftCompressedFamilies};

use crate::error::{invalid, Result};

/// Colex comparison of two sorted sets of equal size.
pub fn colex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// An `r`-uniform hypergraph on the vertex set `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Result of [`Hypergraph::covers_pairs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCoverage {
    pub covers_all: bool,
    /// Colex-least pair contained in no edge.
    pub witness: Option<(usize, usize)>,
}

impl Hypergraph {
    /// Validates and canonicalizes an edge list.
    pub fn new(r: usize, n: usize, mut edges: Vec<Vec<usize>>) -> Result<Self> {
        if r == 0 {
            return invalid("uniformity must be at least 1");
        }
        for e in &edges {
            if e.len() != r {
                return invalid(format!("edge {e:?} has size {}, expected {r}", e.len()));
            }
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return invalid(format!("edge {e:?} is not strictly increasing"));
            }
            if e[0] == 0 || e[r - 1] > n {
                return invalid(format!("edge {e:?} is not contained in [{n}]"));
            }
        }
        edges.sort_by(|a, b| colex_cmp(a, b));
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("duplicate edge {:?}", w[0]));
        }
        Ok(Self { r, n, edges })
    }

    pub(crate) fn from_sorted_unchecked(r: usize, n: usize, edges: Vec<Vec<usize>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| colex_cmp(&w[0], &w[1]) == Ordering::Less));
        Self { r, n, edges }
    }

    fn from_unsorted_unchecked(r: usize, n: usize, mut edges: Vec<Vec<usize>>) -> Self {
        edges.sort_by(|a, b| colex_cmp(a, b));
        edges.dedup();
        Self { r, n, edges }
    }

    /// `K_n^(r)`.
    pub fn complete(r: usize, n: usize) -> Self {
        Self::from_sorted_unchecked(r, n, r_subsets(n, r))
    }

    pub fn empty(r: usize, n: usize) -> Self {
        Self { r, n, edges: Vec::new() }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn contains(&self, edge: &[usize]) -> bool {
        self.edges.binary_search_by(|e| colex_cmp(e, edge)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// Same edges on a larger (or equal) vertex set.
    pub fn with_vertex_count(&self, n: usize) -> Result<Self> {
        if self.edges.iter().any(|e| e[self.r - 1] > n) {
            return invalid(format!("edges use vertices beyond {n}"));
        }
        Ok(Self { n, ..self.clone() })
    }

    /// Relabels vertex `v` as `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm.iter().any(|&p| p == 0 || p > self.n || std::mem::replace(&mut seen[p - 1], true))
        {
            return invalid(format!("{perm:?} is not a permutation of [{}]", self.n));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut f: Vec<usize> = e.iter().map(|&v| perm[v - 1]).collect();
                f.sort_unstable();
                f
            })
            .collect();
        Ok(Self::from_unsorted_unchecked(self.r, self.n, edges))
    }

    fn check_vertex_set(&self, set: &[usize]) -> Result<Vec<usize>> {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() >= self.r {
            return invalid(format!(
                "link set {set:?} must have fewer than r = {} vertices",
                self.r
            ));
        }
        if s.iter().any(|&v| v == 0 || v > self.n) {
            return invalid(format!("link set {set:?} is not contained in [{}]", self.n));
        }
        Ok(s)
    }

    /// The link `G_S`: the `(r − |S|)`-graph of sets `A` with `A ∪ S ∈ E`.
    pub fn link(&self, set: &[usize]) -> Result<Self> {
        let s = self.check_vertex_set(set)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| s.iter().all(|v| e.contains(v)))
            .map(|e| e.iter().copied().filter(|v| !s.contains(v)).collect())
            .collect();
        Ok(Self::from_unsorted_unchecked(self.r - s.len(), self.n, edges))
    }

    /// `G^c_S`: sets `A ⊆ [n] \ S` with `A ∪ S` a non-edge.
    pub fn complement_link(&self, set: &[usize]) -> Result<Self> {
        let s = self.check_vertex_set(set)?;
        let k = self.r - s.len();
        let edges = r_subsets(self.n, k)
            .into_iter()
            .filter(|a| a.iter().all(|v| !s.contains(v)))
            .filter(|a| {
                let mut full: Vec<usize> = a.iter().chain(s.iter()).copied().collect();
                full.sort_unstable();
                !self.contains(&full)
            })
            .collect();
        Ok(Self::from_sorted_unchecked(k, self.n, edges))
    }

    /// `G_{i\j}`: sets of `E_i \ E_j` that avoid `j`.
    pub fn link_difference(&self, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return invalid(format!("link_difference needs distinct vertices, got {i} twice"));
        }
        let li = self.link(&[i])?;
        let lj = self.link(&[j])?;
        let edges = li
            .edges
            .into_iter()
            .filter(|a| !a.contains(&j) && !lj.contains(a))
            .collect();
        Ok(Self::from_sorted_unchecked(self.r - 1, self.n, edges))
    }

    /// `G − i`, relabelled onto `[n − 1]`.
    pub fn delete_vertex(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n {
            return invalid(format!("vertex {i} is not in [{}]", self.n));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(&i))
            .map(|e| e.iter().map(|&v| if v > i { v - 1 } else { v }).collect())
            .collect();
        // relabelling is order preserving, so colex order is kept
        Ok(Self::from_sorted_unchecked(self.r, self.n - 1, edges))
    }

    /// Induced subgraph on `[k]`.
    pub fn restrict_to_prefix(&self, k: usize) -> Self {
        let edges = self
            .edges
            .iter()
            .filter(|e| e[self.r - 1] <= k)
            .cloned()
            .collect();
        Self::from_sorted_unchecked(self.r, k.min(self.n), edges)
    }

    pub fn covers_pairs(&self) -> PairCoverage {
        let n = self.n;
        let mut covered = vec![false; n * n];
        for e in &self.edges {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    covered[(u - 1) * n + (v - 1)] = true;
                }
            }
        }
        // colex order on pairs: by larger element, then smaller
        for v in 2..=n {
            for u in 1..v {
                if !covered[(u - 1) * n + (v - 1)] {
                    return PairCoverage { covers_all: false, witness: Some((u, v)) };
                }
            }
        }
        PairCoverage { covers_all: true, witness: None }
    }

    /// True when every vertex of `[n]` lies in some edge.
    pub fn spans_all_vertices(&self) -> bool {
        let mut seen = vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                seen[v - 1] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// The `r`-subsets of `[n]` that are not edges, in colex order.
    pub fn non_edges(&self) -> Vec<Vec<usize>> {
        r_subsets(self.n, self.r)
            .into_iter()
            .filter(|e| !self.contains(e))
            .collect()
    }

    pub(crate) fn edge_set(&self) -> HashSet<&[usize]> {
        self.edges.iter().map(Vec::as_slice).collect()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            let joined: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", joined.join(if self.n >= 10 { " " } else { "" }))?;
        }
        write!(f, "}} on [{}]", self.n)
    }
}

/// All `k`-subsets of `[n]` in colex order.
pub fn r_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in k..=n {
        for mut s in r_subsets(last - 1, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out
}
