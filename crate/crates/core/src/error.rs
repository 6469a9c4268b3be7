use alloc::string::String;

use thiserror::Error;

/// A formula mentions a name its model's signature does not declare.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BindError {
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("`{0}` is not a point of the model")]
    UnknownPoint(String),
    #[error("model fails validation ({0} violation(s))")]
    InvalidModel(usize),
    #[error("{what} has {size} elements, above the configured cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("argument model is trivial: it admits no ultrafilter over its strength preorder")]
    Trivial,
    #[error("source model is not normalized: `{0}` is false at the current world")]
    NotNormalized(String),
    #[error(transparent)]
    Bind(#[from] BindError),
}
