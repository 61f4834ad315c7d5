//! Shared error type for parameter-domain violations.

use thiserror::Error;

/// A request outside the parameter range on which a quantity is defined,
/// e.g. a hypersimplex slice index `k` outside `1..=n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct DomainError {
    message: String,
}

impl DomainError {
    /// Creates a domain error carrying a human-readable description.
    pub fn new(message: impl Into<String>) -> Self {
        DomainError {
            message: message.into(),
        }
    }

    /// The description of what was out of range.
    pub fn message(&self) -> &str {
        &self.message
    }
}
