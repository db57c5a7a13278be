//! Kernel-level errors.
//!
//! Fuel exhaustion is deliberately *not* fatal in most of the API — it is
//! the `Unknown` leg of a semidecision. It only surfaces as an error from
//! operations that must return a finished value (decoding a natural,
//! extracting a rational approximation, a finite subcover index).

use thiserror::Error;

use crate::fuel::Interrupt;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error(transparent)]
    Interrupted(#[from] Interrupt),
    #[error("descriptor mismatch: expected {expected}, found {found}")]
    DescriptorMismatch { expected: String, found: String },
    #[error("space {space} does not carry the {capability} capability")]
    MissingCapability {
        space: String,
        capability: &'static str,
    },
    #[error("value does not fit the host word: {0}")]
    Overflow(&'static str),
    #[error("malformed name: {0}")]
    Malformed(String),
}

pub type KernelResult<T> = Result<T, KernelError>;
