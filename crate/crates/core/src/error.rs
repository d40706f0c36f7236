use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("DivisorNotUnit constant_term={constant_term}")]
    DivisorNotUnit { constant_term: String },

    #[error("TailNotZero expected_degree={expected_degree} index={index} value={value}")]
    TailNotZero {
        expected_degree: usize,
        index: usize,
        value: String,
    },

    #[error("InsufficientOrder needed={needed} available={available}")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("NotDivisible power={power} index={index}")]
    NotDivisible { power: usize, index: usize },

    #[error("ZeroPolynomial")]
    ZeroPolynomial,

    #[error("NegativeCoefficient index={index} value={value}")]
    NegativeCoefficient { index: usize, value: String },

    #[error("InvalidTopology genus={genus} circles={circles}")]
    InvalidTopology { genus: i64, circles: i64 },

    #[error("InvalidStiefelWhitney {0}")]
    InvalidStiefelWhitney(String),

    #[error("NotAdmissible rank={rank} degree={degree}")]
    NotAdmissible { rank: u32, degree: i64 },

    #[error("NotCoprime rank={rank} degree={degree}")]
    NotCoprime { rank: u32, degree: i64 },

    #[error("SlopeOrderViolation at_part={at_part}")]
    SlopeOrderViolation { at_part: usize },

    #[error("UnsupportedRank rank={0}")]
    UnsupportedRank(u32),

    #[error("InvalidInput {0}")]
    InvalidInput(String),

    #[error("Cache {0}")]
    Cache(String),
}

impl Error {
    /// Errors caused by the caller's parameters, as opposed to an internal
    /// inconsistency (an output that should have been a polynomial was not).
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::TailNotZero { .. }
                | Error::NotDivisible { .. }
                | Error::NegativeCoefficient { .. }
                | Error::ZeroPolynomial
                | Error::Cache(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Cache(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Cache(e.to_string())
    }
}
