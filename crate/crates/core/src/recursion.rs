//! The stratification recursion for semistable equivariant Poincaré series,
//! and the moduli Poincaré polynomial obtained from it.
//!
//! For a real bundle of rank `r` and degree `d`,
//!
//! ```text
//! P_ss(r, d) = P(BG(r, d)) - sum over unstable types  count * t^codim * prod_i P_ss(r_i, d_i)
//! ```
//!
//! where `count` is the number of real refinements of the complex type. Every
//! series involved depends on `(g, a, r, d)` only, so sub-results are memoized
//! on that key (plus truncation order).

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use parking_lot::RwLock;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::{DiskCache, CACHE_FORMAT_VERSION};
use crate::closed_forms::gauge_classifying_series;
use crate::curves::RealCurveTopology;
use crate::error::{Error, Result};
use crate::series::{extract_polynomial, BettiPolynomial, TruncatedSeries, POLYNOMIAL_MARGIN};
use crate::strata::{enumerate_unstable_types, real_refinement_count};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RecursionKey {
    pub genus: u32,
    pub real_circles: u32,
    pub rank: u32,
    pub degree: i64,
    pub order: usize,
}

impl RecursionKey {
    /// With `normalize`, the degree is reduced mod `r` (mod `2r` without real
    /// points), since tensoring by a real line bundle preserves all series.
    pub fn new(topo: &RealCurveTopology, r: u32, d: i64, order: usize, normalize: bool) -> Self {
        let degree = if normalize {
            let modulus = if topo.real_circles == 0 {
                2 * i64::from(r)
            } else {
                i64::from(r)
            };
            d.rem_euclid(modulus)
        } else {
            d
        };
        Self {
            genus: topo.genus,
            real_circles: topo.real_circles,
            rank: r,
            degree,
            order,
        }
    }

    pub fn topology(&self) -> RealCurveTopology {
        RealCurveTopology {
            genus: self.genus,
            real_circles: self.real_circles,
        }
    }

    /// `g{g}a{a}r{r}d{d}N{N}v{version}`
    pub fn canonical(&self) -> String {
        format!(
            "g{}a{}r{}d{}N{}v{}",
            self.genus, self.real_circles, self.rank, self.degree, self.order, CACHE_FORMAT_VERSION
        )
    }
}

/// Polynomial degree of the moduli Poincaré polynomial for coprime `(r, d)`.
pub fn expected_moduli_degree(r: u32, g: u32) -> usize {
    (r as usize).pow(2) * (g as usize).saturating_sub(1) + 1
}

/// Default truncation order for a moduli computation.
pub fn default_order(r: u32, g: u32) -> usize {
    expected_moduli_degree(r, g) + POLYNOMIAL_MARGIN
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuliParams {
    pub genus: u32,
    pub circles: u32,
    pub rank: u32,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiResult {
    pub polynomial: BettiPolynomial,
    pub params: ModuliParams,
    pub order: usize,
    /// Unstable complex HN types summed at the top level.
    pub strata_count: usize,
    pub cache_key: String,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ModuliOptions {
    /// Accept curves without real points (the quaternionic reduction path).
    pub allow_a0: bool,
    /// Raise the truncation order above the default.
    pub order: Option<usize>,
}

/// Memoizing evaluator. Safe to share across threads; concurrent callers may
/// compute the same key twice, and both results are identical.
#[derive(Debug)]
pub struct Engine {
    memo: RwLock<HashMap<RecursionKey, Arc<TruncatedSeries>>>,
    disk: Option<DiskCache>,
    normalize_degree: bool,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Self {
            memo: RwLock::new(HashMap::new()),
            disk: None,
            normalize_degree: true,
        }
    }

    pub fn with_disk_cache(mut self, cache: DiskCache) -> Self {
        self.disk = Some(cache);
        self
    }

    /// Key sub-results by the raw degree instead of its residue. Slower;
    /// useful for checking that normalization changes nothing.
    pub fn raw_degrees(mut self) -> Self {
        self.normalize_degree = false;
        self
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn semistable_series(
        &self,
        r: u32,
        d: i64,
        topo: &RealCurveTopology,
        order: usize,
    ) -> Result<Arc<TruncatedSeries>> {
        let topo = RealCurveTopology::new(topo.genus, topo.real_circles)?;
        if r == 0 {
            return Err(Error::InvalidInput("rank must be at least 1".into()));
        }
        if topo.genus == 0 {
            return Err(Error::InvalidInput("genus must be at least 1".into()));
        }
        if topo.real_circles == 0 && d.is_odd() {
            return Err(Error::InvalidInput(format!(
                "no real bundle of odd degree {d} on a curve without real points"
            )));
        }
        let key = RecursionKey::new(&topo, r, d, order, self.normalize_degree);
        self.lookup_or_compute(key)
    }

    fn lookup_or_compute(&self, key: RecursionKey) -> Result<Arc<TruncatedSeries>> {
        if let Some(hit) = self.memo.read().get(&key) {
            return Ok(Arc::clone(hit));
        }
        if let Some(series) = self.disk.as_ref().and_then(|c| c.load(&key)) {
            return Ok(self.remember(key, series));
        }
        let series = self.compute(&key)?;
        if let Some(cache) = &self.disk {
            cache.store(&key, &series)?;
        }
        Ok(self.remember(key, series))
    }

    fn remember(&self, key: RecursionKey, series: TruncatedSeries) -> Arc<TruncatedSeries> {
        let mut memo = self.memo.write();
        Arc::clone(memo.entry(key).or_insert_with(|| Arc::new(series)))
    }

    fn compute(&self, key: &RecursionKey) -> Result<TruncatedSeries> {
        let topo = key.topology();
        let n = key.order;
        let gauge = gauge_classifying_series(&topo, key.rank, n)?;
        let types = enumerate_unstable_types(
            key.rank,
            key.degree,
            topo.genus,
            n as i64,
            topo.real_circles == 0,
        )?;
        let contributions: Vec<Result<Option<TruncatedSeries>>> = types
            .par_iter()
            .map(|(hn, codim)| {
                let count = real_refinement_count(hn, topo.real_circles);
                if count == 0 {
                    return Ok(None);
                }
                let mut product = TruncatedSeries::one(n);
                for part in &hn.parts {
                    let sub = self.semistable_series(part.rank, part.degree, &topo, n)?;
                    product = &product * &*sub;
                }
                Ok(Some(
                    product.shift(*codim as usize).scale(&BigInt::from(count)),
                ))
            })
            .collect();
        let mut total = gauge;
        for c in contributions {
            if let Some(c) = c? {
                total = &total - &c;
            }
        }
        Ok(total)
    }

    /// Poincaré polynomial `(1 - t) P_ss(r, d)` of the moduli space, for
    /// coprime rank and degree.
    pub fn moduli_betti(
        &self,
        r: u32,
        d: i64,
        topo: &RealCurveTopology,
        opts: &ModuliOptions,
    ) -> Result<BettiResult> {
        let topo = RealCurveTopology::new(topo.genus, topo.real_circles)?;
        if r == 0 {
            return Err(Error::InvalidInput("rank must be at least 1".into()));
        }
        if d.gcd(&i64::from(r)) != 1 {
            return Err(Error::NotCoprime { rank: r, degree: d });
        }
        if topo.genus < 2 {
            return Err(Error::InvalidInput("genus must be at least 2".into()));
        }
        if topo.real_circles == 0 && !opts.allow_a0 {
            return Err(Error::InvalidInput(
                "curves without real points require allow_a0".into(),
            ));
        }
        let dim = expected_moduli_degree(r, topo.genus);
        let default = default_order(r, topo.genus);
        let order = match opts.order {
            Some(o) if o < default => {
                return Err(Error::InvalidInput(format!(
                    "order {o} is below the minimum {default}"
                )))
            }
            Some(o) => o,
            None => default,
        };
        let ss = self.semistable_series(r, d, &topo, order)?;
        let one_minus_t = TruncatedSeries::from_i64s(&[1, -1], order);
        let polynomial = extract_polynomial(&(&*ss * &one_minus_t), dim)?;
        let strata_count =
            enumerate_unstable_types(r, d, topo.genus, order as i64, topo.real_circles == 0)?.len();
        let key = RecursionKey::new(&topo, r, d, order, self.normalize_degree);
        Ok(BettiResult {
            polynomial,
            params: ModuliParams {
                genus: topo.genus,
                circles: topo.real_circles,
                rank: r,
                degree: d,
            },
            order,
            strata_count,
            cache_key: key.canonical(),
        })
    }
}

/// One-shot evaluation with a fresh in-memory engine.
pub fn semistable_series(
    r: u32,
    d: i64,
    topo: &RealCurveTopology,
    order: usize,
) -> Result<TruncatedSeries> {
    Engine::new()
        .semistable_series(r, d, topo, order)
        .map(|s| (*s).clone())
}

pub fn moduli_betti(r: u32, d: i64, topo: &RealCurveTopology) -> Result<BettiResult> {
    Engine::new().moduli_betti(r, d, topo, &ModuliOptions::default())
}
