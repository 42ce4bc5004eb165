use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the contract of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or limit provably fails to converge for these parameters.
    #[error("divergence: {0}")]
    Divergence(String),

    /// The requested tolerance could not be met; `achieved` is the bound
    /// that was reached.
    #[error("accuracy failure: achieved {achieved:.3e}, requested {requested:.3e}")]
    Accuracy { achieved: f64, requested: f64 },

    /// The result exceeds double-precision range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A computation produced NaN or infinity where a finite value is required.
    #[error("non-finite value: {0}")]
    NonFinite(String),
}
