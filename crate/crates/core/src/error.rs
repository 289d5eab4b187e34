//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A series inversion was attempted on a non-unit constant term.
    #[error("non-invertible series: constant term {0} is not a unit")]
    NonInvertible(String),

    /// A comparison bound exceeded the available truncation order.
    #[error("insufficient order: requested exponent {through} but only {available} coefficients are available")]
    InsufficientOrder { through: usize, available: usize },

    /// The modular counting path requires a prime modulus.
    #[error("{0} is not prime: the modular counting path relies on a prime modulus")]
    NotPrime(u64),

    /// A check name was not found in the registry.
    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    /// A congruence family would need more coefficients than the configured cap.
    #[error("out of desk scale: the check needs {required} coefficients but the cap is {cap}")]
    OutOfDeskScale { required: u128, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
