use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("table is not associative: ({i} * {j}) * {k} != {i} * ({j} * {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("group of order {order} exceeds the size limit {limit}")]
    SizeLimitExceeded { order: usize, limit: usize },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("member set is not closed or lacks the identity")]
    NotASubgroup,
    #[error("candidate kernel is not a subset of the subgroup")]
    NotASubset,
    #[error("kernel is not normal in the subgroup (conjugate of {k} by {h} escapes)")]
    NotNormal { h: usize, k: usize },
    #[error("invalid coset representatives: {0}")]
    InvalidRepresentatives(String),
    #[error("operation requires a {expected} coset system")]
    WrongSide { expected: &'static str },
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("carrier groups differ")]
    CarrierMismatch,
    #[error("element support leaves the subgroup (element {0})")]
    SupportOutsideSubgroup(usize),
    #[error("operation not supported for this coefficient ring")]
    UnsupportedRing,
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("determinant requires an abelian carrier group")]
    NonAbelianCarrier,
    #[error("quotient group is not abelian")]
    NonAbelianQuotient,
    #[error("coset systems disagree on group, subgroup, side, or coset order")]
    SystemMismatch,
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
