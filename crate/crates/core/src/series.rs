//! Truncated formal power series in `t` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` knows its coefficients for `t^0..=t^N`
//! exactly. Binary operations truncate to the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of coefficients above the expected degree that must vanish
/// before a series is accepted as a polynomial.
pub const POLYNOMIAL_MARGIN: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series of the given order from leading coefficients.
    /// Missing coefficients are zero; extra ones are dropped.
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `t^exponent`, which is the zero series when `exponent > order`.
    pub fn monomial(exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`; zero past the order.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `order` (no-op if `order` is not smaller).
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `t^exponent`, keeping the order.
    pub fn shift(&self, exponent: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, c) in self
            .coeffs
            .iter()
            .enumerate()
            .take((n + 1).saturating_sub(exponent))
        {
            coeffs[i + exponent] = c.clone();
        }
        Self { coeffs }
    }

    /// Divides by `t^exponent`. The low coefficients must vanish; the result
    /// loses `exponent` orders of precision.
    pub fn unshift(&self, exponent: usize) -> Result<Self> {
        if exponent > self.order() {
            return Err(Error::InsufficientOrder {
                needed: exponent,
                available: self.order(),
            });
        }
        if let Some(index) = self.coeffs[..exponent].iter().position(|c| !c.is_zero()) {
            return Err(Error::NotDivisible {
                power: exponent,
                index,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[exponent..].to_vec(),
        })
    }

    /// In place multiplication by `(1 + sign * t^k)`.
    pub(crate) fn mul_binomial(&mut self, negative: bool, k: usize) {
        for i in (k..self.coeffs.len()).rev() {
            let prev = self.coeffs[i - k].clone();
            if negative {
                self.coeffs[i] -= prev;
            } else {
                self.coeffs[i] += prev;
            }
        }
    }

    /// In place division by `(1 + sign * t^k)`.
    pub(crate) fn div_binomial(&mut self, negative: bool, k: usize) {
        for i in k..self.coeffs.len() {
            let prev = self.coeffs[i - k].clone();
            if negative {
                self.coeffs[i] += prev;
            } else {
                self.coeffs[i] -= prev;
            }
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Cauchy product truncated at the smaller order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let n = a.order().min(b.order());
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, x) in a.coeffs[..=n].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs[..=n - i].iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    TruncatedSeries { coeffs: out }
}

/// Exact quotient `a / b`. Only `±1` constant terms are accepted.
pub fn series_div(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    let b0 = &b.coeffs[0];
    if b0.abs() != BigInt::one() {
        return Err(Error::DivisorNotUnit {
            constant_term: b0.to_string(),
        });
    }
    let n = a.order().min(b.order());
    let mut q: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = a.coeffs[i].clone();
        for j in 1..=i {
            let bj = &b.coeffs[j];
            if !bj.is_zero() {
                acc -= bj * &q[i - j];
            }
        }
        // b0 is its own inverse
        q.push(acc * b0);
    }
    Ok(TruncatedSeries { coeffs: q })
}

fn zip_with(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    f: impl Fn(&BigInt, &BigInt) -> BigInt,
) -> TruncatedSeries {
    let n = a.order().min(b.order());
    TruncatedSeries {
        coeffs: (0..=n).map(|i| f(&a.coeffs[i], &b.coeffs[i])).collect(),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        series_mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: Self) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + O(t^{})",
            render_terms(&self.coeffs),
            self.order() + 1
        )
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Renders coefficients in ascending powers, e.g. `1 + 3t + 4t^2`.
pub fn render_terms(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let show_coeff = i == 0 || !mag.is_one();
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        match i {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Wire form shared by series and polynomials.
#[derive(Serialize, Deserialize)]
struct CoeffRepr {
    order: usize,
    coeffs: Vec<String>,
}

fn parse_coeffs<E: serde::de::Error>(repr: CoeffRepr) -> std::result::Result<Vec<BigInt>, E> {
    if repr.coeffs.len() != repr.order + 1 {
        return Err(E::custom(format!(
            "expected {} coefficients for order {}, found {}",
            repr.order + 1,
            repr.order,
            repr.coeffs.len()
        )));
    }
    repr.coeffs
        .iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|e| E::custom(format!("bad coefficient {s:?}: {e}")))
        })
        .collect()
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CoeffRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = parse_coeffs(CoeffRepr::deserialize(deserializer)?)?;
        Ok(Self { coeffs })
    }
}

/// One factor `(1 ± t^k)^power` of a [`FactorProduct`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    /// `true` for `(1 - t^k)`, `false` for `(1 + t^k)`.
    pub negative: bool,
    pub exponent: u32,
    pub power: i64,
}

impl Factor {
    pub fn plus(exponent: u32, power: i64) -> Self {
        Self {
            negative: false,
            exponent,
            power,
        }
    }

    pub fn minus(exponent: u32, power: i64) -> Self {
        Self {
            negative: true,
            exponent,
            power,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { '-' } else { '+' };
        match self.exponent {
            1 => write!(f, "(1{sign}t)")?,
            k => write!(f, "(1{sign}t^{k})")?,
        }
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

/// Symbolic product `t^m * prod (1 ± t^k)^e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorProduct {
    pub monomial: u32,
    pub factors: Vec<Factor>,
}

impl FactorProduct {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_monomial(mut self, m: u32) -> Self {
        self.monomial = m;
        self
    }

    pub fn times(mut self, factor: Factor) -> Self {
        self.factors.push(factor);
        self
    }

    pub fn plus(self, exponent: u32, power: i64) -> Self {
        self.times(Factor::plus(exponent, power))
    }

    pub fn minus(self, exponent: u32, power: i64) -> Self {
        self.times(Factor::minus(exponent, power))
    }

    /// Product of two symbolic products.
    pub fn combine(mut self, other: &FactorProduct) -> Self {
        self.monomial += other.monomial;
        self.factors.extend_from_slice(&other.factors);
        self
    }
}

impl fmt::Display for FactorProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.monomial > 0 {
            write!(f, "t^{}", self.monomial)?;
            first = false;
        }
        for factor in &self.factors {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{factor}")?;
            first = false;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Expands a symbolic product exactly to the given order.
///
/// Each unit of a power is one O(N) sweep: multiplication by `(1 ± t^k)`
/// runs downward, division (geometric-series inversion) runs upward.
///
/// # Panics
/// If a factor has exponent 0; such a factor has no constant term 1.
pub fn series_from_factors(fp: &FactorProduct, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::monomial(fp.monomial as usize, order);
    for f in &fp.factors {
        assert!(f.exponent >= 1, "factor exponent must be positive");
        let k = f.exponent as usize;
        if k > order {
            continue;
        }
        for _ in 0..f.power.unsigned_abs() {
            if f.power > 0 {
                s.mul_binomial(f.negative, k);
            } else {
                s.div_binomial(f.negative, k);
            }
        }
    }
    s
}

/// A nonzero polynomial with nonnegative integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BettiPolynomial {
    coeffs: Vec<BigInt>,
}

impl BettiPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if let Some(index) = coeffs.iter().position(Signed::is_negative) {
            return Err(Error::NegativeCoefficient {
                index,
                value: coeffs[index].to_string(),
            });
        }
        Ok(Self { coeffs })
    }

    pub fn from_u64s(coeffs: &[u64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_palindromic(&self) -> bool {
        is_palindromic(self)
    }

    /// Value at `t = 1`, the total Betti number.
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.clone(), order)
    }
}

impl fmt::Debug for BettiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.coeffs))
    }
}

impl fmt::Display for BettiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.coeffs))
    }
}

impl Serialize for BettiPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CoeffRepr {
            order: self.degree(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BettiPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = parse_coeffs(CoeffRepr::deserialize(deserializer)?)?;
        let poly = Self::new(coeffs).map_err(serde::de::Error::custom)?;
        Ok(poly)
    }
}

/// Reads off a polynomial of degree at most `expected_degree`, insisting that
/// [`POLYNOMIAL_MARGIN`] further coefficients are known and all vanish.
pub fn extract_polynomial(s: &TruncatedSeries, expected_degree: usize) -> Result<BettiPolynomial> {
    extract_polynomial_with_margin(s, expected_degree, POLYNOMIAL_MARGIN)
}

pub fn extract_polynomial_with_margin(
    s: &TruncatedSeries,
    expected_degree: usize,
    margin: usize,
) -> Result<BettiPolynomial> {
    let needed = expected_degree + margin;
    if s.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            available: s.order(),
        });
    }
    if let Some(offset) = s.coeffs[expected_degree + 1..]
        .iter()
        .position(|c| !c.is_zero())
    {
        let index = expected_degree + 1 + offset;
        return Err(Error::TailNotZero {
            expected_degree,
            index,
            value: s.coeffs[index].to_string(),
        });
    }
    BettiPolynomial::new(s.coeffs[..=expected_degree].to_vec())
}

pub fn is_palindromic(p: &BettiPolynomial) -> bool {
    let c = &p.coeffs;
    c.iter().eq(c.iter().rev())
}
