use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word has {got} letters, expected {expected} (n = {n}, d = {d})")]
    WordShape {
        got: usize,
        expected: usize,
        n: usize,
        d: usize,
    },
    #[error("word does not belong to the given alphabet")]
    NotInAlphabet,
    #[error("no preimage under the sweep map (sweep implementation inconsistent)")]
    NotInImage,
    #[error("shift N = {0} violates the separation or positivity bound on some class member")]
    BadN(i64),
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
    #[error("invalid EL-chart: {0}")]
    InvalidChart(String),
    #[error("vector is not a type: {0}")]
    NotAType(String),
    #[error("lambda mismatch: {0}")]
    LambdaMismatch(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid sigma invariants: {0}")]
    InvalidInvariants(String),
    #[error("{m} and {n} are not coprime")]
    NotCoprime { m: i64, n: i64 },
    #[error("slope group of size {size} with slope {slope} does not split into superbasic blocks")]
    NonIntegralDecomposition { size: usize, slope: String },
    #[error("class not contained in B(G, mu): {0}")]
    NotInBGmu(String),
    #[error("size mismatch: GL_{0} vs GL_{1}")]
    SizeMismatch(usize, usize),
    #[error("no straight element found: {0}")]
    NoneFound(String),
    #[error("lambda class does not match kappa: {0}")]
    ClassMismatch(String),
    #[error("cocharacter is not minuscule")]
    NotMinuscule,
    #[error("enumeration exceeded the cap of {0} witnesses")]
    Overflow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
