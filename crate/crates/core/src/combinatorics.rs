//! Exact binomials, colex rank/unrank, colex initial segments and the real
//! binomial inverse used by the smooth bound.
//!
//! Vertices are 1-based everywhere; colex ranks are 0-based.

use num_rational::Ratio;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;

/// Exact fraction over 64-bit integers, always in lowest terms.
pub type Rational = Ratio<i64>;

/// 0-based position of an r-set in the colex order of `ℕ^(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColexIndex(pub u64);

/// The real `s ≥ r − 1` with `binom(s, r) = m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealShape {
    pub s: f64,
    pub r: usize,
}

/// `C(n, k)`, or an overflow error if it does not fit in a `u64`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::Overflow(format!("C({n},{k})")))?
            / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow(format!("C({n},{k})")));
        }
    }
    Ok(acc as u64)
}

fn checked_pow(base: u64, exp: usize) -> Result<u64> {
    base.checked_pow(exp as u32)
        .ok_or_else(|| Error::Overflow(format!("{base}^{exp}")))
}

/// Rank of a strictly increasing set of positive integers: `Σ_i C(a_i − 1, i)`.
pub fn colex_rank(set: &[usize]) -> Result<ColexIndex> {
    let mut rank: u64 = 0;
    for (pos, &a) in set.iter().enumerate() {
        if a == 0 {
            return invalid(format!("vertex ids are 1-based, got 0 in {set:?}"));
        }
        if pos > 0 && set[pos - 1] >= a {
            return invalid(format!("set {set:?} is not strictly increasing"));
        }
        let term = binomial(a as u64 - 1, pos as u64 + 1)?;
        rank = rank
            .checked_add(term)
            .ok_or_else(|| Error::Overflow(format!("colex rank of {set:?}")))?;
    }
    Ok(ColexIndex(rank))
}

/// Inverse of [`colex_rank`] for `r`-sets.
pub fn colex_unrank(idx: ColexIndex, r: usize) -> Vec<usize> {
    let mut rest = idx.0;
    let mut out = vec![0usize; r];
    let mut hi = u64::MAX;
    for i in (1..=r).rev() {
        // largest c < hi with C(c, i) <= rest; C(i - 1, i) = 0 so c >= i - 1
        let mut lo = (i - 1) as u64;
        let mut top = lo + 1;
        while top < hi && binomial(top, i as u64).is_ok_and(|b| b <= rest) {
            lo = top;
            top = top.saturating_mul(2).min(hi);
        }
        // invariant: C(lo, i) <= rest, and top == hi or C(top, i) > rest
        while top - lo > 1 {
            let mid = lo + (top - lo) / 2;
            if binomial(mid, i as u64).is_ok_and(|b| b <= rest) {
                lo = mid;
            } else {
                top = mid;
            }
        }
        rest -= binomial(lo, i as u64).expect("bounded by rest");
        out[i - 1] = lo as usize + 1;
        hi = lo;
    }
    out
}

/// `C_{r,m}`: the first `m` r-sets in colex order, on vertex set `[n]` with
/// `n` the largest vertex used.
pub fn colex_initial_segment(r: usize, m: u64) -> Result<Hypergraph> {
    if m == 0 {
        return invalid("m = 0: the colex segment must have at least one edge");
    }
    if r == 0 {
        return invalid("uniformity must be at least 1");
    }
    let edges: Vec<Vec<usize>> = (0..m).map(|i| colex_unrank(ColexIndex(i), r)).collect();
    let n = *edges.last().and_then(|e| e.last()).expect("m >= 1");
    Ok(Hypergraph::from_sorted_unchecked(r, n, edges))
}

/// `s(s−1)···(s−r+1)/r!` for real `s`.
pub fn binomial_real(s: f64, r: usize) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (s - i as f64) / (i as f64 + 1.0))
}

/// Solves `binomial_real(s, r) = m` for `s ≥ r − 1` by bisection.
pub fn binomial_inverse_real(m: u64, r: usize) -> Result<RealShape> {
    if m == 0 {
        return invalid("m must be positive");
    }
    if r < 2 {
        return invalid(format!("uniformity must be at least 2, got {r}"));
    }
    let target = m as f64;
    let rf = r as f64;
    let mut lo = rf - 1.0;
    let mut hi = rf - 1.0 + rf * target.powf(1.0 / rf) + 1.0;
    for _ in 0..200 {
        if hi - lo <= 1e-12 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if binomial_real(mid, r) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // exact integer roots are returned exactly
    let s = 0.5 * (lo + hi);
    let rounded = s.round();
    let s = if (s - rounded).abs() <= 1e-9 && binomial(rounded as u64, r as u64)? == m {
        rounded
    } else {
        s
    };
    Ok(RealShape { s, r })
}

/// `λ([t−1]^(r)) = C(t−1, r) / (t−1)^r`, exactly.
pub fn plateau_value(r: usize, t: usize) -> Result<Rational> {
    if r < 2 || t < r {
        return invalid(format!("plateau_value needs t >= r >= 2, got r={r}, t={t}"));
    }
    let num = binomial(t as u64 - 1, r as u64)?;
    let den = checked_pow(t as u64 - 1, r)?;
    let num = i64::try_from(num).map_err(|_| Error::Overflow(format!("C({},{r})", t - 1)))?;
    let den = i64::try_from(den).map_err(|_| Error::Overflow(format!("{}^{r}", t - 1)))?;
    Ok(Rational::new(num, den))
}

/// The range of `m` on which `λ(C_{r,m})` equals [`plateau_value`]:
/// `[C(t−1, r), C(t, r) − C(t−2, r−2)]`.
pub fn plateau_range(r: usize, t: usize) -> Result<(u64, u64)> {
    if r < 2 || t < r {
        return invalid(format!("plateau_range needs t >= r >= 2, got r={r}, t={t}"));
    }
    let (t, r) = (t as u64, r as u64);
    let lo = binomial(t - 1, r)?;
    let hi = binomial(t, r)? - binomial(t - 2, r - 2)?;
    Ok((lo, hi))
}

/// The `t` with `C(t−1, r) ≤ m < C(t, r)`.
pub fn support_index(r: usize, m: u64) -> Result<usize> {
    if m == 0 {
        return invalid("m must be positive");
    }
    let mut t = r;
    while binomial(t as u64, r as u64)? <= m {
        t += 1;
    }
    Ok(t)
}

/// If `m = C(s, r)` for an integer `s`, returns `s`.
pub fn exact_binomial_root(r: usize, m: u64) -> Result<Option<usize>> {
    let t = support_index(r, m)?;
    Ok((binomial(t as u64 - 1, r as u64)? == m).then_some(t - 1))
}

/// `C(t, r) / t^r`, the Lagrangian of the complete graph `K_t^(r)`.
pub fn complete_value(r: usize, t: usize) -> Result<Rational> {
    plateau_value(r, t + 1)
}

pub fn rational_to_f64(q: Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}
