// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    EvenPrime(u64),
    #[error("modulus {0} is below 7, where the closed forms are not asserted")]
    SmallPrime(u64),
    #[error("modulus {0} is not one of the excluded primes 3 or 5")]
    WrongModulus(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("leading coefficient vanishes modulo {0}")]
    DegenerateLeading(u64),
    #[error("quadratic character must be +1 or -1, got {0}")]
    InvalidCharacter(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
