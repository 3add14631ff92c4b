use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated an operation's domain (bad range, non-prime
    /// prime argument, malformed input).
    #[error("domain error: {0}")]
    Domain(String),

    /// Inverse requested for a residue that shares a factor with the modulus.
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },

    /// The unit group modulo 2^alpha is not cyclic for alpha >= 3.
    #[error("no primitive root modulo 2^{alpha}")]
    NoPrimitiveRoot { alpha: u32 },

    /// The computation would leave the supported fixed-width range, or an
    /// internal work budget ran out. Never a silent wrong answer.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn capacity(msg: impl Into<String>) -> Error {
    Error::Capacity(msg.into())
}
