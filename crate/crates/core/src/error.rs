use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not a prime >= 5")]
    InvalidPrime(i64),

    #[error("niveau {0} is not one of 1, 2, 3")]
    InvalidNiveau(u32),

    #[error("cannot embed niveau {from} into niveau {to}")]
    InvalidEmbedding { from: u32, to: u32 },

    #[error("rank {0} is not supported (expected 1, 2 or 3)")]
    InvalidRank(usize),

    #[error("{coords:?} is not a restricted dominant weight for p = {p}")]
    NotRestricted { coords: Vec<i64>, p: i64 },

    #[error("primes do not match: {0} vs {1}")]
    PrimeMismatch(i64, i64),

    #[error("wrong alcove: {0}")]
    WrongAlcove(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("tame type is not irreducible of niveau 3")]
    NotIrreducible,

    #[error("exponents {0:?} are not stable under Frobenius")]
    NotFrobeniusStable(Vec<i64>),

    #[error("invalid Breuil module data: {0}")]
    InvalidBreuil(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid slope data: {0}")]
    InvalidSlopeData(String),

    #[error("cycling verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// Stable machine-readable tag, used by the command-line front end.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPrime(_) => "invalid_prime",
            Error::InvalidNiveau(_) => "invalid_niveau",
            Error::InvalidEmbedding { .. } => "invalid_embedding",
            Error::InvalidRank(_) => "invalid_rank",
            Error::NotRestricted { .. } => "not_restricted",
            Error::PrimeMismatch(..) => "prime_mismatch",
            Error::WrongAlcove(_) => "wrong_alcove",
            Error::Hypothesis(_) => "hypothesis_violated",
            Error::NotIrreducible => "not_irreducible",
            Error::NotFrobeniusStable(_) => "not_frobenius_stable",
            Error::InvalidBreuil(_) => "invalid_breuil",
            Error::Unsupported(_) => "unsupported",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::InvalidSlopeData(_) => "invalid_slope_data",
            Error::Verification(_) => "verification_failed",
        }
    }
}
