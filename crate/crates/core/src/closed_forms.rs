//! Closed-form Poincaré series, each written down as factor data and then
//! expanded exactly.
//!
//! Nothing here is derived: every [`FormulaId`] transcribes one printed
//! formula into a [`ClosedForm`], a signed sum of [`FactorProduct`] terms,
//! and [`ClosedForm::expand`] evaluates it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::curves::RealCurveTopology;
use crate::error::{Error, Result};
use crate::series::{series_from_factors, FactorProduct, TruncatedSeries};

/// One summand `coefficient * product / t^divide_by_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "bigint_string")]
    pub coefficient: BigInt,
    pub product: FactorProduct,
    pub divide_by_t: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub terms: Vec<Term>,
}

impl ClosedForm {
    pub fn single(product: FactorProduct) -> Self {
        Self {
            terms: vec![Term {
                coefficient: BigInt::one(),
                product,
                divide_by_t: 0,
            }],
        }
    }

    fn push(&mut self, coefficient: BigInt, product: FactorProduct, divide_by_t: u32) {
        self.terms.push(Term {
            coefficient,
            product,
            divide_by_t,
        });
    }

    /// Expands every term to `order`. A term carrying `1/t^m` is expanded to
    /// `order + m` and must be divisible by `t^m`; otherwise this errors.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        let mut total = TruncatedSeries::zero(order);
        for term in &self.terms {
            let m = term.divide_by_t as usize;
            let expanded = series_from_factors(&term.product, order + m).unshift(m)?;
            total = &total + &expanded.scale(&term.coefficient);
        }
        Ok(total)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            let negative = term.coefficient < BigInt::from(0);
            if i > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let mag = if negative {
                -&term.coefficient
            } else {
                term.coefficient.clone()
            };
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "[{}]", term.product)?;
            if term.divide_by_t > 0 {
                write!(f, "/t^{}", term.divide_by_t)?;
            }
        }
        Ok(())
    }
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LoopKind {
    /// Involution fixing the circle pointwise.
    Fixed,
    /// Antipodal involution.
    Antipodal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicalFamily {
    O,
    U,
    Sp,
}

/// Rank of a classical group; `Stable` is the direct limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupRank {
    Finite(u32),
    Stable,
}

impl GroupRank {
    /// Number of factors needed to be exact through `order`.
    fn factors_needed(self, order: usize) -> u32 {
        match self {
            GroupRank::Finite(n) => n,
            GroupRank::Stable => order.max(1) as u32,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum FormulaId {
    GaugeReal {
        topo: RealCurveTopology,
        rank: u32,
    },
    LoopGroupFixed {
        rank: u32,
    },
    LoopGroupAntipodal {
        rank: u32,
    },
    ClassicalO {
        n: GroupRank,
    },
    ClassicalU {
        n: GroupRank,
    },
    ClassicalSp {
        n: GroupRank,
    },
    Rank1Moduli {
        topo: RealCurveTopology,
    },
    Rank2Moduli {
        topo: RealCurveTopology,
    },
    Rank3Moduli {
        topo: RealCurveTopology,
    },
    /// `prod 1/(1-t^k)^2`, stable gauge series over the sphere with a real circle.
    GenusZeroStableRealA,
    /// `prod (1+t^(2k-1))/(1-t^(2k))^2`, the fixed-point-free involution.
    GenusZeroStableRealB,
    /// `prod 1/(1-t^(2k))^2`, the complex stable gauge series over the sphere.
    GenusZeroStableComplex,
}

/// Kebab-case names accepted by [`FormulaId::from_name`].
pub const FORMULA_NAMES: &[&str] = &[
    "gauge-real",
    "loop-group-fixed",
    "loop-group-antipodal",
    "classical-o",
    "classical-u",
    "classical-sp",
    "rank1-moduli",
    "rank2-moduli",
    "rank3-moduli",
    "genus-zero-stable-real-a",
    "genus-zero-stable-real-b",
    "genus-zero-stable-complex",
];

/// Parameters for building a [`FormulaId`] from its name.
#[derive(Clone, Copy, Debug, Default)]
pub struct FormulaParams {
    pub genus: Option<u32>,
    pub real_circles: Option<u32>,
    pub rank: Option<u32>,
    /// `None` means the stable limit for classical groups.
    pub n: Option<u32>,
}

impl FormulaId {
    pub fn from_name(name: &str, p: FormulaParams) -> Result<Self> {
        let topo = || -> Result<RealCurveTopology> {
            match (p.genus, p.real_circles) {
                (Some(g), Some(a)) => RealCurveTopology::new(g, a),
                _ => Err(Error::InvalidInput(format!(
                    "{name} needs genus and circles"
                ))),
            }
        };
        let rank = || {
            p.rank
                .ok_or_else(|| Error::InvalidInput(format!("{name} needs a rank")))
        };
        let n = p.n.map_or(GroupRank::Stable, GroupRank::Finite);
        let id = match name {
            "gauge-real" => FormulaId::GaugeReal {
                topo: topo()?,
                rank: rank()?,
            },
            "loop-group-fixed" => FormulaId::LoopGroupFixed { rank: rank()? },
            "loop-group-antipodal" => FormulaId::LoopGroupAntipodal { rank: rank()? },
            "classical-o" => FormulaId::ClassicalO { n },
            "classical-u" => FormulaId::ClassicalU { n },
            "classical-sp" => FormulaId::ClassicalSp { n },
            "rank1-moduli" => FormulaId::Rank1Moduli { topo: topo()? },
            "rank2-moduli" => FormulaId::Rank2Moduli { topo: topo()? },
            "rank3-moduli" => FormulaId::Rank3Moduli { topo: topo()? },
            "genus-zero-stable-real-a" => FormulaId::GenusZeroStableRealA,
            "genus-zero-stable-real-b" => FormulaId::GenusZeroStableRealB,
            "genus-zero-stable-complex" => FormulaId::GenusZeroStableComplex,
            other => return Err(Error::InvalidInput(format!("unknown formula {other}"))),
        };
        id.validate()?;
        Ok(id)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FormulaId::GaugeReal { .. } => "gauge-real",
            FormulaId::LoopGroupFixed { .. } => "loop-group-fixed",
            FormulaId::LoopGroupAntipodal { .. } => "loop-group-antipodal",
            FormulaId::ClassicalO { .. } => "classical-o",
            FormulaId::ClassicalU { .. } => "classical-u",
            FormulaId::ClassicalSp { .. } => "classical-sp",
            FormulaId::Rank1Moduli { .. } => "rank1-moduli",
            FormulaId::Rank2Moduli { .. } => "rank2-moduli",
            FormulaId::Rank3Moduli { .. } => "rank3-moduli",
            FormulaId::GenusZeroStableRealA => "genus-zero-stable-real-a",
            FormulaId::GenusZeroStableRealB => "genus-zero-stable-real-b",
            FormulaId::GenusZeroStableComplex => "genus-zero-stable-complex",
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = |r: u32| {
            if r == 0 {
                Err(Error::InvalidInput("rank must be at least 1".into()))
            } else {
                Ok(())
            }
        };
        let needs_real_points = |t: &RealCurveTopology| {
            if t.real_circles == 0 {
                Err(Error::InvalidTopology {
                    genus: t.genus.into(),
                    circles: t.real_circles.into(),
                })
            } else {
                Ok(())
            }
        };
        match self {
            FormulaId::GaugeReal { topo, rank } => {
                RealCurveTopology::new(topo.genus, topo.real_circles)?;
                positive(*rank)
            }
            FormulaId::LoopGroupFixed { rank } | FormulaId::LoopGroupAntipodal { rank } => {
                positive(*rank)
            }
            FormulaId::Rank1Moduli { topo } => {
                RealCurveTopology::new(topo.genus, topo.real_circles).map(|_| ())
            }
            FormulaId::Rank2Moduli { topo } | FormulaId::Rank3Moduli { topo } => {
                RealCurveTopology::new(topo.genus, topo.real_circles)?;
                needs_real_points(topo)
            }
            _ => Ok(()),
        }
    }

    /// The formula as factor data, with infinite products cut off at the
    /// first factor that cannot affect coefficients through `order`.
    pub fn closed_form(&self, order: usize) -> Result<ClosedForm> {
        self.validate()?;
        let stable = order.max(1) as u32;
        Ok(match *self {
            FormulaId::GaugeReal { topo, rank } => ClosedForm::single(gauge_product(&topo, rank)),
            FormulaId::LoopGroupFixed { rank } => {
                let mut fp = FactorProduct::new().plus(rank, -1);
                for k in 1..=rank {
                    fp = fp.plus(k, 2).minus(2 * k, -1);
                }
                ClosedForm::single(fp)
            }
            FormulaId::LoopGroupAntipodal { rank } => {
                let mut fp = FactorProduct::new();
                for k in 1..=rank {
                    fp = fp.plus(2 * k - 1, 1).minus(2 * k, -1);
                }
                ClosedForm::single(fp)
            }
            FormulaId::ClassicalO { n } => {
                ClosedForm::single(classical_product(ClassicalFamily::O, n, order))
            }
            FormulaId::ClassicalU { n } => {
                ClosedForm::single(classical_product(ClassicalFamily::U, n, order))
            }
            FormulaId::ClassicalSp { n } => {
                ClosedForm::single(classical_product(ClassicalFamily::Sp, n, order))
            }
            FormulaId::Rank1Moduli { topo } => {
                ClosedForm::single(FactorProduct::new().plus(1, topo.genus.into()))
            }
            FormulaId::Rank2Moduli { topo } => rank2_moduli(&topo),
            FormulaId::Rank3Moduli { topo } => rank3_moduli(&topo),
            FormulaId::GenusZeroStableRealA => {
                let mut fp = FactorProduct::new();
                for k in 1..=stable {
                    fp = fp.minus(k, -2);
                }
                ClosedForm::single(fp)
            }
            FormulaId::GenusZeroStableRealB => {
                let mut fp = FactorProduct::new();
                for k in 1..=stable {
                    fp = fp.plus(2 * k - 1, 1).minus(2 * k, -2);
                }
                ClosedForm::single(fp)
            }
            FormulaId::GenusZeroStableComplex => {
                let mut fp = FactorProduct::new();
                for k in 1..=stable {
                    fp = fp.minus(2 * k, -2);
                }
                ClosedForm::single(fp)
            }
        })
    }

    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        self.closed_form(order)?.expand(order)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        match self {
            FormulaId::GaugeReal { topo, rank } => {
                write!(f, "(g={}, a={}, r={rank})", topo.genus, topo.real_circles)
            }
            FormulaId::LoopGroupFixed { rank } | FormulaId::LoopGroupAntipodal { rank } => {
                write!(f, "(r={rank})")
            }
            FormulaId::ClassicalO { n }
            | FormulaId::ClassicalU { n }
            | FormulaId::ClassicalSp { n } => match n {
                GroupRank::Finite(n) => write!(f, "(n={n})"),
                GroupRank::Stable => f.write_str("(n=inf)"),
            },
            FormulaId::Rank1Moduli { topo }
            | FormulaId::Rank2Moduli { topo }
            | FormulaId::Rank3Moduli { topo } => {
                write!(f, "(g={}, a={})", topo.genus, topo.real_circles)
            }
            _ => Ok(()),
        }
    }
}

impl FromStr for LoopKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed" => Ok(LoopKind::Fixed),
            "antipodal" => Ok(LoopKind::Antipodal),
            other => Err(Error::InvalidInput(format!("unknown loop kind {other}"))),
        }
    }
}

/// `(1 - t^2r)/(1 + t^r)^a * prod_k (1+t^k)^2a (1+t^(2k-1))^(g+1-a) / (1-t^2k)^2`
fn gauge_product(topo: &RealCurveTopology, r: u32) -> FactorProduct {
    let a = i64::from(topo.real_circles);
    let g = i64::from(topo.genus);
    let mut fp = FactorProduct::new().minus(2 * r, 1).plus(r, -a);
    for k in 1..=r {
        fp = fp
            .plus(k, 2 * a)
            .plus(2 * k - 1, g + 1 - a)
            .minus(2 * k, -2);
    }
    fp
}

fn classical_product(family: ClassicalFamily, n: GroupRank, order: usize) -> FactorProduct {
    let step = match family {
        ClassicalFamily::O => 1,
        ClassicalFamily::U => 2,
        ClassicalFamily::Sp => 4,
    };
    let mut fp = FactorProduct::new();
    for k in 1..=n.factors_needed(order) {
        fp = fp.minus(step * k, -1);
    }
    fp
}

fn pow2(e: u32) -> BigInt {
    Pow::pow(BigInt::from(2), e)
}

/// `[(1+t)^(g+b) (1+t^2)^b (1+t^3)^(g-b) - 2^b t^g (1+t)^2g] / ((1-t)(1-t^2))`
fn rank2_moduli(topo: &RealCurveTopology) -> ClosedForm {
    let g = i64::from(topo.genus);
    let b = topo.b().expect("validated a >= 1");
    let bi = i64::from(b);
    let denominator = FactorProduct::new().minus(1, -1).minus(2, -1);
    let mut form = ClosedForm::default();
    form.push(
        BigInt::one(),
        FactorProduct::new()
            .plus(1, g + bi)
            .plus(2, bi)
            .plus(3, g - bi)
            .combine(&denominator),
        0,
    );
    form.push(
        -pow2(b),
        FactorProduct::new()
            .with_monomial(topo.genus)
            .plus(1, 2 * g)
            .combine(&denominator),
        0,
    );
    form
}

/// Three-term rank-three formula; the last two terms carry an explicit `1/t`.
fn rank3_moduli(topo: &RealCurveTopology) -> ClosedForm {
    let g = i64::from(topo.genus);
    let b = topo.b().expect("validated a >= 1");
    let bi = i64::from(b);
    let mut form = ClosedForm::default();
    // (1+t)^(g+b) (1+t^2)^2b (1+t^3)^g (1+t^5)^(g-b) / ((1-t)(1-t^2)^2(1-t^3))
    form.push(
        BigInt::one(),
        FactorProduct::new()
            .plus(1, g + bi)
            .plus(2, 2 * bi)
            .plus(3, g)
            .plus(5, g - bi)
            .minus(1, -1)
            .minus(2, -2)
            .minus(3, -1),
        0,
    );
    // 2^b t^2g (1+t)^(2g+b) (1+t^2)^b (1+t^3)^(g-b) / (t (1-t)^3 (1-t^3))
    form.push(
        -pow2(b),
        FactorProduct::new()
            .with_monomial(2 * topo.genus)
            .plus(1, 2 * g + bi)
            .plus(2, bi)
            .plus(3, g - bi)
            .minus(1, -3)
            .minus(3, -1),
        1,
    );
    // 4^b t^3g (1+t)^3g (1+t^2+t^4) / (t (1-t)^2 (1-t^2) (1-t^6)),
    // with 1+t^2+t^4 = (1-t^6)/(1-t^2)
    form.push(
        pow2(2 * b),
        FactorProduct::new()
            .with_monomial(3 * topo.genus)
            .plus(1, 3 * g)
            .minus(6, 1)
            .minus(2, -1)
            .minus(1, -2)
            .minus(2, -1)
            .minus(6, -1),
        1,
    );
    form
}

/// Poincaré series of the classifying space of the real gauge group.
/// Depends only on the curve topology and the rank.
pub fn gauge_classifying_series(
    topo: &RealCurveTopology,
    r: u32,
    order: usize,
) -> Result<TruncatedSeries> {
    FormulaId::GaugeReal {
        topo: *topo,
        rank: r,
    }
    .expand(order)
}

pub fn loop_group_series(r: u32, kind: LoopKind, order: usize) -> Result<TruncatedSeries> {
    match kind {
        LoopKind::Fixed => FormulaId::LoopGroupFixed { rank: r },
        LoopKind::Antipodal => FormulaId::LoopGroupAntipodal { rank: r },
    }
    .expand(order)
}

pub fn classical_group_series(
    family: ClassicalFamily,
    n: GroupRank,
    order: usize,
) -> TruncatedSeries {
    series_from_factors(&classical_product(family, n, order), order)
}

/// Closed-form moduli Poincaré series for ranks one to three.
pub fn low_rank_moduli_closed_form(
    r: u32,
    topo: &RealCurveTopology,
    order: usize,
) -> Result<TruncatedSeries> {
    let id = match r {
        1 => FormulaId::Rank1Moduli { topo: *topo },
        2 => FormulaId::Rank2Moduli { topo: *topo },
        3 => FormulaId::Rank3Moduli { topo: *topo },
        other => return Err(Error::UnsupportedRank(other)),
    };
    id.expand(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{extract_polynomial, series_div, BettiPolynomial};

    fn topo(g: u32, a: u32) -> RealCurveTopology {
        RealCurveTopology::new(g, a).unwrap()
    }

    fn fp_series(fp: FactorProduct, order: usize) -> TruncatedSeries {
        series_from_factors(&fp, order)
    }

    #[test]
    fn gauge_rank_one_collapses() {
        for g in 0..6 {
            for a in 0..=g + 1 {
                let expected = fp_series(FactorProduct::new().plus(1, g.into()).minus(1, -1), 30);
                assert_eq!(
                    gauge_classifying_series(&topo(g, a), 1, 30).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn gauge_rank_two_matches_rank_two_stratum_sum() {
        // b = 0 form of (1+t)^(g+b)(1+t^2)^b(1+t^3)^(g-b)/((1-t)^2(1-t^2)) at g = 2
        let other = FactorProduct::new()
            .plus(1, 2)
            .plus(3, 2)
            .minus(1, -2)
            .minus(2, -1);
        let compact = FactorProduct::new().plus(1, 1).plus(3, 2).minus(1, -3);
        let gauge = gauge_classifying_series(&topo(2, 1), 2, 40).unwrap();
        assert_eq!(gauge, fp_series(other, 40));
        assert_eq!(gauge, fp_series(compact, 40));
    }

    #[test]
    fn gauge_rejects_bad_topology() {
        let bad = RealCurveTopology {
            genus: 2,
            real_circles: 4,
        };
        assert!(matches!(
            gauge_classifying_series(&bad, 2, 10),
            Err(Error::InvalidTopology { .. })
        ));
    }

    #[test]
    fn loop_groups() {
        let geo = fp_series(FactorProduct::new().minus(1, -1), 25);
        assert_eq!(loop_group_series(1, LoopKind::Fixed, 25).unwrap(), geo);
        assert_eq!(loop_group_series(1, LoopKind::Antipodal, 25).unwrap(), geo);
        // H*(SO_2) (x) S(w1, w2): (1+t) / ((1-t)(1-t^2))
        let so2 = fp_series(
            FactorProduct::new().plus(1, 1).minus(1, -1).minus(2, -1),
            25,
        );
        assert_eq!(loop_group_series(2, LoopKind::Fixed, 25).unwrap(), so2);
    }

    #[test]
    fn classical_groups() {
        let geo = fp_series(FactorProduct::new().minus(1, -1), 10);
        assert_eq!(
            classical_group_series(ClassicalFamily::O, GroupRank::Finite(1), 10),
            geo
        );
        assert_eq!(
            classical_group_series(ClassicalFamily::U, GroupRank::Finite(2), 6),
            TruncatedSeries::from_i64s(&[1, 0, 1, 0, 2, 0, 2], 6)
        );
        assert_eq!(
            classical_group_series(ClassicalFamily::O, GroupRank::Stable, 5),
            TruncatedSeries::from_i64s(&[1, 1, 2, 3, 5, 7], 5)
        );
        assert_eq!(
            classical_group_series(ClassicalFamily::Sp, GroupRank::Finite(0), 5),
            TruncatedSeries::one(5)
        );
    }

    fn poly(c: &[u64]) -> BettiPolynomial {
        BettiPolynomial::from_u64s(c).unwrap()
    }

    #[test]
    fn printed_low_rank_examples() {
        let s = low_rank_moduli_closed_form(2, &topo(2, 1), 20).unwrap();
        assert_eq!(
            extract_polynomial(&s, 5).unwrap(),
            poly(&[1, 3, 4, 4, 3, 1])
        );
        let s = low_rank_moduli_closed_form(3, &topo(2, 2), 25).unwrap();
        assert_eq!(
            extract_polynomial(&s, 10).unwrap(),
            poly(&[1, 4, 11, 25, 40, 46, 40, 25, 11, 4, 1])
        );
        let s = low_rank_moduli_closed_form(1, &topo(5, 1), 20).unwrap();
        assert_eq!(
            extract_polynomial(&s, 5).unwrap(),
            poly(&[1, 5, 10, 10, 5, 1])
        );
    }

    #[test]
    fn low_rank_are_palindromic_polynomials() {
        for r in 1..=3u32 {
            for g in 2..=5u32 {
                for a in 1..=g + 1 {
                    let dim = (r * r * (g - 1) + 1) as usize;
                    let s = low_rank_moduli_closed_form(r, &topo(g, a), dim + 10).unwrap();
                    let p = extract_polynomial(&s, dim).unwrap();
                    assert_eq!(p.degree(), dim, "r={r} g={g} a={a}");
                    assert!(p.is_palindromic());
                }
            }
        }
    }

    #[test]
    fn low_rank_errors() {
        assert!(matches!(
            low_rank_moduli_closed_form(4, &topo(2, 1), 10),
            Err(Error::UnsupportedRank(4))
        ));
        assert!(matches!(
            low_rank_moduli_closed_form(2, &topo(2, 0), 10),
            Err(Error::InvalidTopology { .. })
        ));
    }

    #[test]
    fn rank_two_numerator_over_denominator() {
        // Same formula assembled by explicit series division.
        let t = topo(3, 2);
        let num1 = fp_series(FactorProduct::new().plus(1, 4).plus(2, 1).plus(3, 2), 30);
        let num2 =
            fp_series(FactorProduct::new().with_monomial(3).plus(1, 6), 30).scale(&BigInt::from(2));
        let den = fp_series(FactorProduct::new().minus(1, 1).minus(2, 1), 30);
        let direct = series_div(&(&num1 - &num2), &den).unwrap();
        assert_eq!(low_rank_moduli_closed_form(2, &t, 30).unwrap(), direct);
    }

    #[test]
    fn nondivisible_term_is_reported() {
        let form = ClosedForm {
            terms: vec![Term {
                coefficient: BigInt::one(),
                product: FactorProduct::new().plus(1, 1),
                divide_by_t: 1,
            }],
        };
        assert!(matches!(form.expand(5), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn names_round_trip() {
        let p = FormulaParams {
            genus: Some(2),
            real_circles: Some(1),
            rank: Some(2),
            n: Some(3),
        };
        for name in FORMULA_NAMES {
            let id = FormulaId::from_name(name, p).unwrap();
            assert_eq!(id.name(), *name);
            assert!(id.expand(12).unwrap().has_nonnegative_coeffs(), "{name}");
        }
        assert!(FormulaId::from_name("rank2-moduli", FormulaParams::default()).is_err());
        assert!(FormulaId::from_name("nope", p).is_err());
    }
}
