use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator n{index} = {value} is not positive")]
    NonPositiveGenerator { index: usize, value: i64 },

    /// `m_hi/n_hi < m_lo/n_lo` where the ordering requires `>=`.
    #[error("ratio order violated: m{hi}/n{hi} < m{lo}/n{lo} (ratios must satisfy m3/n3 <= m2/n2 <= m1/n1)")]
    RatioOrderViolated { hi: usize, lo: usize },

    #[error("all ratios m_i/n_i are equal; at least one inequality must be strict")]
    AllRatiosEqual,

    #[error("generators are not coprime (gcd = {gcd})")]
    GeneratorsNotCoprime { gcd: i64 },

    #[error("generators are not pairwise distinct")]
    GeneratorsNotDistinct,

    #[error("input value {value} exceeds the supported magnitude {limit}")]
    InputTooLarge { value: i128, limit: i128 },

    #[error("arithmetic overflow in 128-bit exact computation")]
    Overflow,

    #[error("the semigroup element must be positive here")]
    ZeroElement,

    #[error("length multiset is empty")]
    EmptyMultiset,

    #[error("{n} is not an element of the semigroup")]
    NotInSemigroup { n: u64 },

    #[error("invalid window: alpha ({alpha}) must not exceed beta ({beta})")]
    InvalidWindow { alpha: String, beta: String },

    #[error("cannot parse {0:?} as a rational number")]
    ParseRational(String),

    #[error("weightings do not form a supersymmetric pair: {0}")]
    NotSupersymmetric(String),

    #[error("supersymmetric structure violated at n = {n}: {detail}")]
    StructureViolated { n: u64, detail: String },
}

impl Error {
    /// Errors caused by inputs that violate a hypothesis, as opposed to
    /// failures while computing.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Overflow | Error::StructureViolated { .. })
    }
}
