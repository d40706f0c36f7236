//! Topological input data: the real curve `(g, a)` and the topological types
//! of real and quaternionic bundles over it.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Genus and number of real circles of a real curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RealCurveTopology {
    pub genus: u32,
    pub real_circles: u32,
}

impl RealCurveTopology {
    pub fn new(genus: u32, real_circles: u32) -> Result<Self> {
        validate_topology(genus.into(), real_circles.into())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn real_circles(&self) -> u32 {
        self.real_circles
    }

    /// `b = a - 1`, the exponent appearing in the low-rank closed forms.
    /// `None` when there are no real points.
    pub fn b(&self) -> Option<u32> {
        self.real_circles.checked_sub(1)
    }
}

/// Harnack bound: at most `g + 1` real circles.
pub fn validate_topology(g: i64, a: i64) -> Result<RealCurveTopology> {
    if g < 0 || a < 0 || a > g + 1 || g > u32::MAX as i64 {
        return Err(Error::InvalidTopology {
            genus: g,
            circles: a,
        });
    }
    Ok(RealCurveTopology {
        genus: g as u32,
        real_circles: a as u32,
    })
}

/// A real bundle type: rank, degree and Stiefel-Whitney numbers on the circles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RealBundleType {
    pub rank: u32,
    pub degree: i64,
    pub w: Vec<u8>,
}

impl RealBundleType {
    pub fn new(rank: u32, degree: i64, w: Vec<u8>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be at least 1".into()));
        }
        if w.iter().any(|&x| x > 1) {
            return Err(Error::InvalidStiefelWhitney(
                "entries must be 0 or 1".into(),
            ));
        }
        let sum: i64 = w.iter().map(|&x| i64::from(x)).sum();
        if (degree - sum).is_odd() {
            return Err(Error::InvalidStiefelWhitney(format!(
                "sum of w is {sum} but degree is {degree}"
            )));
        }
        Ok(Self { rank, degree, w })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuaternionicBundleType {
    pub rank: u32,
    pub degree: i64,
}

impl QuaternionicBundleType {
    pub fn new(rank: u32, degree: i64, topo: &RealCurveTopology) -> Result<Self> {
        if !quaternionic_admissible(rank, degree, topo) {
            return Err(Error::NotAdmissible { rank, degree });
        }
        Ok(Self { rank, degree })
    }
}

/// All Stiefel-Whitney vectors compatible with degree `d` over `a` circles,
/// in lexicographic order of `w`.
pub fn enumerate_real_types(r: u32, d: i64, a: u32) -> Vec<RealBundleType> {
    assert!(a < 64, "too many real circles");
    let parity = d.rem_euclid(2) as u32;
    (0u64..1 << a)
        .filter(|mask| mask.count_ones() % 2 == parity)
        .map(|mask| {
            let w = (0..a).map(|i| ((mask >> (a - 1 - i)) & 1) as u8).collect();
            RealBundleType {
                rank: r,
                degree: d,
                w,
            }
        })
        .collect()
}

pub fn quaternionic_admissible(r: u32, d: i64, topo: &RealCurveTopology) -> bool {
    let parity_ok = (d - i64::from(r) * (i64::from(topo.genus) - 1)).is_even();
    let locus_ok = r.is_even() || topo.real_circles == 0;
    parity_ok && locus_ok
}

/// Tensors a quaternionic moduli problem with a quaternionic line bundle of
/// the smallest nonnegative degree, giving an isomorphic real one.
pub fn quaternionic_to_real(r: u32, d: i64, topo: &RealCurveTopology) -> Result<(u32, i64)> {
    if !quaternionic_admissible(r, d, topo) {
        return Err(Error::NotAdmissible { rank: r, degree: d });
    }
    if d.gcd(&i64::from(r)) != 1 {
        return Err(Error::NotCoprime { rank: r, degree: d });
    }
    let line_degree = (i64::from(topo.genus) - 1).rem_euclid(2);
    Ok((r, d + i64::from(r) * line_degree))
}
