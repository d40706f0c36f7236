//! Reference tables of published moduli Poincaré polynomials, bundled as data,
//! and their recomputation through the recursion.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::curves::RealCurveTopology;
use crate::error::{Error, Result};
use crate::recursion::{BettiResult, Engine, ModuliOptions};

const GOLDEN_JSON: &str = include_str!("../data/golden_tables.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableSection {
    #[serde(rename = "rank2-g2")]
    Rank2Genus2,
    #[serde(rename = "rank2-g3")]
    Rank2Genus3,
    #[serde(rename = "rank3-g2")]
    Rank3Genus2,
}

impl TableSection {
    pub const ALL: [TableSection; 3] = [
        TableSection::Rank2Genus2,
        TableSection::Rank2Genus3,
        TableSection::Rank3Genus2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TableSection::Rank2Genus2 => "rank2-g2",
            TableSection::Rank2Genus3 => "rank2-g3",
            TableSection::Rank3Genus2 => "rank3-g2",
        }
    }
}

impl fmt::Display for TableSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableSection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableSection::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown table {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub rank: u32,
    pub degree: i64,
    pub genus: u32,
    pub circles: u32,
    pub coeffs: Vec<u64>,
}

pub fn golden_rows(section: TableSection) -> Vec<GoldenRow> {
    let mut all: BTreeMap<TableSection, Vec<GoldenRow>> =
        serde_json::from_str(GOLDEN_JSON).expect("bundled golden tables parse");
    all.remove(&section).unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub golden: GoldenRow,
    pub computed: BettiResult,
    pub matches: bool,
}

/// Recomputes every row of a table with the recursion.
pub fn recompute(section: TableSection, engine: &Engine) -> Result<Vec<TableRow>> {
    golden_rows(section)
        .into_iter()
        .map(|golden| {
            let topo = RealCurveTopology::new(golden.genus, golden.circles)?;
            let computed = engine.moduli_betti(
                golden.rank,
                golden.degree,
                &topo,
                &ModuliOptions::default(),
            )?;
            let expected: Vec<BigInt> = golden.coeffs.iter().map(|&c| BigInt::from(c)).collect();
            let matches = computed.polynomial.coeffs() == expected.as_slice();
            Ok(TableRow {
                golden,
                computed,
                matches,
            })
        })
        .collect()
}
