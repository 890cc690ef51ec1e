use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}: words use only the letters A and B")]
    InvalidLetter(char),
    #[error("invalid slope {k}/{n}: need 0 < k <= n")]
    InvalidSlope { k: usize, n: usize },
    #[error("a periodic word needs a non-empty period")]
    EmptyPeriod,
    #[error("a configuration needs at least one spot")]
    EmptyConfiguration,
    #[error("window length {m} out of range 1..={max}")]
    WindowOutOfRange { m: usize, max: usize },
    #[error("invalid query (n {n}, k {k}, s {s}): need 1 <= k < n and 1 <= s < n")]
    InvalidQuery { n: usize, k: usize, s: usize },
    #[error("need 1 <= k < n, got n {n}, k {k}")]
    InvalidPair { n: usize, k: usize },
    #[error("n and k not coprime (gcd {gcd})")]
    NotCoprime { gcd: usize },
    #[error("continued fraction needs p > q >= 1, got {p}/{q}")]
    InvalidFraction { p: usize, q: usize },
    #[error("empty quotient list")]
    EmptyQuotients,
    #[error("quotient {index} is zero; only the first quotient may be zero")]
    ZeroQuotient { index: usize },
    #[error("cannot rotate the empty word")]
    EmptyWord,
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
