use thiserror::Error;

/// Every failure the kernel can report. `name()` gives the stable identifier
/// used by the command-line front-end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} outside 1..={rank}")]
    IndexOutOfRange { index: i64, rank: usize },
    #[error("rank must be a natural number, got {0}")]
    NonCanonicalRank(i64),
    #[error("rank {0} exceeds the supported maximum of {max}", max = crate::monomial::MAX_RANK)]
    RankTooLarge(usize),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("element with zero body is not invertible")]
    NotInvertible,
    #[error("image of generator {0} is not odd")]
    NotOdd(usize),
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("subalgebra has no odd elements")]
    NoOddSector,
    #[error("domain mismatch: expected ({0},{1}), found ({2},{3})")]
    DomainMismatch(usize, usize, usize, usize),
    #[error("form is not closed")]
    NotClosed,
    #[error("block needs {needed} monomials, cap is {cap}")]
    BudgetExceeded { needed: usize, cap: usize },
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("form of degree {0} where a function was expected")]
    NotAFunction(usize),
    #[error("construction failed its own check: {0}")]
    VerificationFailed(String),
    #[error("parse error at byte {position}: {message}")]
    ParseError { position: usize, message: String },
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NonCanonicalRank(_) => "NonCanonicalRank",
            Error::RankTooLarge(_) => "RankTooLarge",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::NotInvertible => "NotInvertible",
            Error::NotOdd(_) => "NotOdd",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::NoOddSector => "NoOddSector",
            Error::DomainMismatch(..) => "DomainMismatch",
            Error::NotClosed => "NotClosed",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::ParityViolation(_) => "ParityViolation",
            Error::NotAFunction(_) => "NotAFunction",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::ParseError { .. } => "ParseError",
        }
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::ParseError {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn expect_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}
