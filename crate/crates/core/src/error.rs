use alloc::string::String;

/// Errors shared by every module of the crate.
///
/// The variants line up with the CLI exit codes: domain errors are bad
/// input, resource errors are guards tripping, verification errors are
/// failed self-checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("recurrence is not simple: characteristic polynomial has a repeated root")]
    NotSimple,
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("root isolation did not converge: {0}")]
    Numerical(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn resource(msg: impl Into<String>) -> Error {
    Error::Resource(msg.into())
}
