use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("group enumeration exceeded the bound of {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("matrix determinant is not a unit (+-1)")]
    NotUnimodular,
    #[error("element does not match the even or odd Hecke pattern: {0}")]
    CorruptElement(String),
    #[error("parity is undefined for the modular group (q = 3)")]
    ParityUndefined,
    #[error("gcd({a}, {c}, {n}) != 1")]
    NotCoprime { a: i64, c: i64, n: u32 },
    #[error("modulus {0} is even; coordinate models need odd n")]
    EvenModulus(u32),
    #[error("search length {length} exceeds the bound {max}")]
    SearchBound { length: usize, max: usize },
    #[error("boundary construction failed: {0}")]
    Boundary(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown coordinate label `{0}`")]
    UnknownLabel(String),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("render depth {depth} exceeds the bound {max}")]
    DepthBound { depth: usize, max: usize },
}
