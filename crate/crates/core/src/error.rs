use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators {0:?} have gcd {1}, not a numerical semigroup")]
    NotNumerical(Vec<u32>, u32),
    #[error("{0} is not a positive integer")]
    NonPositive(u32),
    #[error("the full semigroup N has no parent")]
    IsRoot,
    #[error("{0} is not a big primitive")]
    NotBigPrimitive(u32),
    #[error("semigroup has infinitely many descendants (gcd of left elements is {0})")]
    InfiniteDescent(u32),
    #[error("counter for multiplicity {m}, genus {g} overflowed")]
    CapacityExceeded { m: u32, g: u32 },
    #[error("recurrence applied at m = {m}, g = {g}, where 2g < 3m fails")]
    GuardViolation { m: u32, g: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
