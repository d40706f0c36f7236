//! Coefficientwise checks of the genus-zero generating-function identities.
//!
//! Each check expands both sides independently to a common order and reports
//! the first differing coefficient, if any. A `perturb` switch bends one
//! exponent on the right-hand side so tests can confirm a mismatch is seen.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{classical_group_series, ClassicalFamily, FormulaId, GroupRank};
use crate::series::{series_from_factors, FactorProduct, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    /// `prod 1/(1-t^2k)^2 = prod 1/(1-t^2k) * sum t^(2n^2) prod_{k<=n} 1/(1-t^2k)^2`
    StableCp1Complex,
    /// `prod 1/(1-x^k) = sum x^(d^2) / prod_{k<=d} (1-x^k)^2`
    Partition,
    /// `prod 1/(1-t^k)^2 = P(BO) sum t^(n^2) P(BO_n)^2`
    GenusZeroRealA,
    /// `prod (1+t^(2k-1))/(1-t^2k)^2 = P(BO) sum t^(4n^2) P(BSp_n)^2`
    GenusZeroRealB,
}

impl IdentityId {
    pub const ALL: [IdentityId; 4] = [
        IdentityId::StableCp1Complex,
        IdentityId::Partition,
        IdentityId::GenusZeroRealA,
        IdentityId::GenusZeroRealB,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::StableCp1Complex => "stable-cp1-complex",
            IdentityId::Partition => "partition",
            IdentityId::GenusZeroRealA => "genus-zero-real-a",
            IdentityId::GenusZeroRealB => "genus-zero-real-b",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub order: usize,
    pub equal: bool,
    pub mismatch: Option<Mismatch>,
}

impl IdentityReport {
    fn compare(id: IdentityId, order: usize, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        let mismatch = (0..=order)
            .find(|&i| lhs.coeff(i) != rhs.coeff(i))
            .map(|index| Mismatch {
                index,
                lhs: lhs.coeff(index).to_string(),
                rhs: rhs.coeff(index).to_string(),
            });
        Self {
            id,
            order,
            equal: mismatch.is_none(),
            mismatch,
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "{}: equal through t^{}", self.id, self.order),
            Some(m) => write!(
                f,
                "{}: mismatch at t^{} (lhs {}, rhs {})",
                self.id, m.index, m.lhs, m.rhs
            ),
        }
    }
}

/// `sum_{n : weight(n) <= order} t^(exponent(n)) * term(n)`, the shape of every
/// right-hand side here. The perturbed variant adds one to the `n = 1` exponent.
fn sum_over_squares(
    order: usize,
    perturb: bool,
    exponent: impl Fn(usize) -> usize,
    term: impl Fn(usize) -> TruncatedSeries,
) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    let mut n = 0;
    loop {
        let e = exponent(n) + usize::from(perturb && n == 1);
        if exponent(n) > order {
            break;
        }
        total = &total + &term(n).shift(e);
        n += 1;
    }
    total
}

fn finite_product(step: u32, power: i64, n: usize, order: usize) -> TruncatedSeries {
    let mut fp = FactorProduct::new();
    for k in 1..=n as u32 {
        fp = fp.minus(step * k, power);
    }
    series_from_factors(&fp, order)
}

pub fn verify_stable_cp1_complex(order: usize) -> IdentityReport {
    check(IdentityId::StableCp1Complex, order, false)
}

pub fn verify_partition_identity(order: usize) -> IdentityReport {
    check(IdentityId::Partition, order, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenusZeroKind {
    A,
    B,
}

pub fn verify_genus_zero_real(kind: GenusZeroKind, order: usize) -> IdentityReport {
    let id = match kind {
        GenusZeroKind::A => IdentityId::GenusZeroRealA,
        GenusZeroKind::B => IdentityId::GenusZeroRealB,
    };
    check(id, order, false)
}

/// Runs one identity, optionally with the right-hand side deliberately bent.
pub fn check(id: IdentityId, order: usize, perturb: bool) -> IdentityReport {
    let (lhs, rhs) = sides(id, order, perturb);
    IdentityReport::compare(id, order, &lhs, &rhs)
}

fn sides(id: IdentityId, order: usize, perturb: bool) -> (TruncatedSeries, TruncatedSeries) {
    let stable_o = || classical_group_series(ClassicalFamily::O, GroupRank::Stable, order);
    match id {
        IdentityId::StableCp1Complex => {
            let lhs = FormulaId::GenusZeroStableComplex
                .expand(order)
                .expect("no parameters");
            let sum = sum_over_squares(
                order,
                perturb,
                |n| 2 * n * n,
                |n| finite_product(2, -2, n, order),
            );
            let bu = classical_group_series(ClassicalFamily::U, GroupRank::Stable, order);
            (lhs, &bu * &sum)
        }
        IdentityId::Partition => {
            let lhs = stable_o();
            let rhs = sum_over_squares(
                order,
                perturb,
                |d| d * d,
                |d| finite_product(1, -2, d, order),
            );
            (lhs, rhs)
        }
        IdentityId::GenusZeroRealA => {
            let lhs = FormulaId::GenusZeroStableRealA
                .expand(order)
                .expect("no parameters");
            let sum = sum_over_squares(
                order,
                perturb,
                |n| n * n,
                |n| {
                    let bo = classical_group_series(
                        ClassicalFamily::O,
                        GroupRank::Finite(n as u32),
                        order,
                    );
                    &bo * &bo
                },
            );
            (lhs, &stable_o() * &sum)
        }
        IdentityId::GenusZeroRealB => {
            let lhs = FormulaId::GenusZeroStableRealB
                .expand(order)
                .expect("no parameters");
            let sum = sum_over_squares(
                order,
                perturb,
                |n| 4 * n * n,
                |n| {
                    let bsp = classical_group_series(
                        ClassicalFamily::Sp,
                        GroupRank::Finite(n as u32),
                        order,
                    );
                    &bsp * &bsp
                },
            );
            (lhs, &stable_o() * &sum)
        }
    }
}

/// Number of partitions of `n`, by recursive enumeration over the largest
/// part. Uses no power series.
pub fn partition_count_brute_force(n: usize) -> u64 {
    fn count(n: usize, max_part: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max_part.min(n)).map(|p| count(n - p, p)).sum()
    }
    count(n, n)
}

/// Partition identity plus a comparison of the product side against
/// [`partition_count_brute_force`] for `n <= min(order, 30)`.
pub fn verify_partition_identity_with_oracle(order: usize) -> (IdentityReport, Option<Mismatch>) {
    let report = verify_partition_identity(order);
    let lhs = classical_group_series(ClassicalFamily::O, GroupRank::Stable, order);
    let oracle = (0..=order.min(30)).find_map(|n| {
        let brute = BigInt::from(partition_count_brute_force(n));
        (lhs.coeff(n) != brute).then(|| Mismatch {
            index: n,
            lhs: lhs.coeff(n).to_string(),
            rhs: brute.to_string(),
        })
    });
    (report, oracle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        assert!(verify_stable_cp1_complex(40).equal);
        assert!(verify_stable_cp1_complex(0).equal);
        assert!(verify_partition_identity(30).equal);
        assert!(verify_partition_identity(1).equal);
        assert!(verify_genus_zero_real(GenusZeroKind::A, 50).equal);
        assert!(verify_genus_zero_real(GenusZeroKind::B, 50).equal);
        assert!(verify_genus_zero_real(GenusZeroKind::A, 0).equal);
    }

    #[test]
    fn brute_force_partitions() {
        let expected = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in expected.iter().enumerate() {
            assert_eq!(partition_count_brute_force(n), p);
        }
        assert_eq!(partition_count_brute_force(30), 5604);
        let (report, oracle) = verify_partition_identity_with_oracle(30);
        assert!(report.equal);
        assert!(oracle.is_none());
    }

    #[test]
    fn partition_order_one() {
        let report = verify_partition_identity(1);
        assert!(report.equal);
        let (lhs, rhs) = sides(IdentityId::Partition, 1, false);
        assert_eq!(lhs, TruncatedSeries::from_i64s(&[1, 1], 1));
        assert_eq!(rhs, lhs);
    }

    #[test]
    fn terms_past_the_order_are_skipped() {
        // only d = 0, 1, 2 have d^2 <= 5
        let direct = (0..3).fold(TruncatedSeries::zero(5), |acc, d| {
            &acc + &finite_product(1, -2, d, 5).shift(d * d)
        });
        assert_eq!(sides(IdentityId::Partition, 5, false).1, direct);
    }

    #[test]
    fn perturbations_are_caught() {
        for id in IdentityId::ALL {
            let report = check(id, 60, true);
            assert!(!report.equal, "{id}");
            let m = report.mismatch.unwrap();
            assert!(m.index <= 60);
            assert_ne!(m.lhs, m.rhs);
        }
    }
}
