//! Harder-Narasimhan types of unstable strata, their codimension, and the
//! number of real refinements lying over each complex type.
//!
//! Enumeration works on prefix sums. For ranks `r_1..r_n` with prefix sums
//! `R_k`, `D_k`, the codimension of a type splits as the pairwise terms among
//! the first `k` parts plus `D_k * r - R_k * d` (the pairs between the prefix
//! and the whole tail) plus the tail's own pairs, which are positive. So
//!
//! ```text
//! bound_k = sum_{i<j<=k} (d_i r_j - d_j r_i) + D_k r - R_k d + base
//! ```
//!
//! never exceeds the final codimension, where `base = sum_{i<j} r_i r_j (g-1)`.
//! `bound_k` grows with `d_k`, and `d_k` is bounded below by requiring part
//! `k` to be steeper than everything after it, so each level scans a finite
//! interval upward and stops once `bound_k` exceeds the budget.

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One semistable subquotient `(rank, degree)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Part {
    pub rank: u32,
    pub degree: i64,
}

impl Part {
    pub fn new(rank: u32, degree: i64) -> Self {
        Self { rank, degree }
    }
}

/// Ordered parts with strictly decreasing slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComplexHnType {
    pub parts: Vec<Part>,
}

impl ComplexHnType {
    pub fn new(parts: Vec<Part>) -> Result<Self> {
        let t = Self { parts };
        t.check_slopes()?;
        Ok(t)
    }

    pub fn from_pairs(pairs: &[(u32, i64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(r, d)| Part::new(r, d)).collect())
    }

    fn check_slopes(&self) -> Result<()> {
        if self.parts.is_empty() || self.parts.iter().any(|p| p.rank == 0) {
            return Err(Error::InvalidInput(
                "HN type needs parts of positive rank".into(),
            ));
        }
        for (i, w) in self.parts.windows(2).enumerate() {
            // d1/r1 > d2/r2
            if i128::from(w[0].degree) * i128::from(w[1].rank)
                <= i128::from(w[1].degree) * i128::from(w[0].rank)
            {
                return Err(Error::SlopeOrderViolation { at_part: i + 1 });
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.parts.iter().map(|p| p.rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.parts.iter().map(|p| p.degree).sum()
    }
}

/// A real HN type: each part also carries its Stiefel-Whitney vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealHnType {
    pub parts: Vec<(Part, Vec<u8>)>,
}

impl RealHnType {
    pub fn complex_type(&self) -> Result<ComplexHnType> {
        ComplexHnType::new(self.parts.iter().map(|(p, _)| *p).collect())
    }
}

fn pair_term(a: Part, b: Part, g: i64) -> i64 {
    a.degree * i64::from(b.rank) - b.degree * i64::from(a.rank)
        + i64::from(a.rank) * i64::from(b.rank) * (g - 1)
}

/// `sum_{i<j} (d_i r_j - d_j r_i + r_i r_j (g-1))`.
pub fn codimension(hn: &ComplexHnType, g: u32) -> Result<i64> {
    hn.check_slopes()?;
    let g = i64::from(g);
    let p = &hn.parts;
    let mut total = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            total += pair_term(p[i], p[j], g);
        }
    }
    Ok(total)
}

/// Number of real HN types over `hn` for a fixed total Stiefel-Whitney class.
pub fn real_refinement_count(hn: &ComplexHnType, a: u32) -> u64 {
    if a == 0 {
        return u64::from(hn.parts.iter().all(|p| p.degree.is_even()));
    }
    let n = hn.parts.len() as u32;
    1u64 << ((a - 1) * (n - 1))
}

/// Compositions of `r` in lexicographic order.
pub fn compositions(r: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, &mut Vec::new(), &mut out);
    out
}

/// Smallest integer strictly greater than `num / den` (`den > 0`).
fn floor_div_plus_one(num: i64, den: i64) -> i64 {
    Integer::div_floor(&num, &den) + 1
}

/// Largest integer strictly less than `num / den` (`den > 0`).
fn ceil_div_minus_one(num: i64, den: i64) -> i64 {
    Integer::div_ceil(&num, &den) - 1
}

struct Search<'a> {
    ranks: &'a [u32],
    total_rank: i64,
    total_degree: i64,
    g: i64,
    budget: i64,
    even: bool,
    out: Vec<(ComplexHnType, i64)>,
}

impl Search<'_> {
    fn bound_step(&self, lo: i64, even: bool) -> i64 {
        if even && lo.is_odd() {
            lo + 1
        } else {
            lo
        }
    }

    /// `chosen` holds parts 0..k; `pairs` their mutual pairwise slope terms.
    fn extend(&mut self, chosen: &mut Vec<Part>, pairs: i64, prefix_rank: i64, prefix_degree: i64) {
        let k = chosen.len();
        let n = self.ranks.len();
        let rk = i64::from(self.ranks[k]);
        if k == n - 1 {
            let last = Part::new(self.ranks[k], self.total_degree - prefix_degree);
            if self.even && last.degree.is_odd() {
                return;
            }
            chosen.push(last);
            let hn = ComplexHnType {
                parts: chosen.clone(),
            };
            if hn.check_slopes().is_ok() {
                let codim = codimension(&hn, self.g as u32).expect("slopes checked");
                if codim <= self.budget {
                    self.out.push((hn, codim));
                }
            }
            chosen.pop();
            return;
        }
        let rest_rank = self.total_rank - prefix_rank;
        let rest_degree = self.total_degree - prefix_degree;
        // part k steeper than parts k..n combined
        let lo = self.bound_step(floor_div_plus_one(rk * rest_degree, rest_rank), self.even);
        // part k shallower than part k-1
        let hi = chosen
            .last()
            .map(|prev| ceil_div_minus_one(prev.degree * rk, i64::from(prev.rank)));
        let step = if self.even { 2 } else { 1 };
        let base = self.base();
        let mut dk = lo;
        loop {
            if hi.is_some_and(|hi| dk > hi) {
                break;
            }
            let part = Part::new(self.ranks[k], dk);
            let new_pairs = pairs
                + chosen
                    .iter()
                    .map(|p| p.degree * rk - dk * i64::from(p.rank))
                    .sum::<i64>();
            let dsum = prefix_degree + dk;
            let rsum = prefix_rank + rk;
            let bound = new_pairs + dsum * self.total_rank - rsum * self.total_degree + base;
            if bound > self.budget {
                break;
            }
            chosen.push(part);
            self.extend(chosen, new_pairs, rsum, dsum);
            chosen.pop();
            dk += step;
        }
    }

    fn base(&self) -> i64 {
        let mut s = 0;
        for i in 0..self.ranks.len() {
            for j in i + 1..self.ranks.len() {
                s += i64::from(self.ranks[i]) * i64::from(self.ranks[j]);
            }
        }
        s * (self.g - 1)
    }
}

fn enumerate_for_ranks(
    ranks: &[u32],
    d: i64,
    g: u32,
    max_codim: i64,
    even: bool,
) -> Vec<(ComplexHnType, i64)> {
    let mut search = Search {
        ranks,
        total_rank: ranks.iter().map(|&r| i64::from(r)).sum(),
        total_degree: d,
        g: i64::from(g),
        budget: max_codim,
        even,
        out: Vec::new(),
    };
    search.extend(&mut Vec::new(), 0, 0, 0);
    search.out
}

/// Every unstable HN type of rank `r`, degree `d` with codimension at most
/// `max_codim`, sorted by codimension and then by parts.
///
/// With `even_parts_only` every part degree must be even (real bundles over a
/// curve without real points).
pub fn enumerate_unstable_types(
    r: u32,
    d: i64,
    g: u32,
    max_codim: i64,
    even_parts_only: bool,
) -> Result<Vec<(ComplexHnType, i64)>> {
    if r == 0 {
        return Err(Error::InvalidInput("rank must be at least 1".into()));
    }
    if g == 0 {
        return Err(Error::InvalidInput(
            "genus zero is not stratified here".into(),
        ));
    }
    let comps: Vec<Vec<u32>> = compositions(r)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let mut out: Vec<(ComplexHnType, i64)> = comps
        .par_iter()
        .flat_map_iter(|ranks| enumerate_for_ranks(ranks, d, g, max_codim, even_parts_only))
        .collect();
    out.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(&y.0)));
    Ok(out)
}
