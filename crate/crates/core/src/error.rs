use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("zero has infinitely many divisors")]
    ZeroDivisors,

    #[error("side lengths must be positive, got ({0}, {1}, {2})")]
    ZeroSide(u64, u64, u64),

    #[error("({0}, {1}, {2}) violates the strict triangle inequality")]
    Degenerate(u64, u64, u64),

    #[error("xyz parameters must be positive, got ({0}, {1}, {2})")]
    ZeroParameter(u64, u64, u64),

    #[error("perimeter {0} is odd, semiperimeter is not an integer")]
    OddPerimeter(u64),

    #[error("perimeter bound {0} is below the minimum of 3")]
    BoundTooSmall(u64),

    #[error("perimeter {perimeter} does not divide 2*{area}^2")]
    NotDivisible { perimeter: u64, area: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
