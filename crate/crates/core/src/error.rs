use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("inconsistent polycyclic presentation: {0}")]
    InconsistentPresentation(String),
    #[error("group order exceeds the configured cap of {cap} elements")]
    OrderLimitExceeded { cap: usize },
    #[error("invalid group description: {0}")]
    InvalidGroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not normal in K")]
    NotNormalInK,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("q = {q} is not coprime to {order}")]
    NotCoprime { q: u64, order: u64 },
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("no primitive {n}-th root of unity in a field of order {field_order}")]
    NoSuchRoot { n: u64, field_order: u128 },
    #[error("field of order {0}^{1} is too large for explicit arithmetic")]
    FieldTooLarge(u64, u64),
    #[error("element does not normalise the kernel")]
    NotInNormalizer,
    #[error("stabiliser of cyclotomic cosets is not constant on an orbit")]
    StabilizerMismatch,
    #[error("[E:A] = {index} does not divide o = {order}")]
    DivisibilityViolation { index: u64, order: u64 },
    #[error("decomposition does not cover the whole group algebra")]
    IncompleteDecomposition,
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("no closed form for this family")]
    UnsupportedFamily,
    #[error("simple component dimension {dim} is not n^2 * {f}")]
    NonSquareDimension { dim: usize, f: usize },
    #[error("oracle is limited to groups of order at most {0}")]
    OracleLimit(usize),
    #[error("centre splitting made no progress")]
    SplittingStalled,
}
