use std::fmt;

use crate::error::Error;
use crate::io::{load_embedding, GraphFile};

/// The structural property a validation run stopped at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Simplicity,
    Connectivity,
    Embedding,
    Invariants,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub failure: Option<(Property, Error)>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "pass"),
            Some((p, e)) => write!(f, "fail ({p:?}): {e}"),
        }
    }
}

/// Loads `input` and re-checks every embedding invariant on the result,
/// reporting the first violated property.
pub fn validate(input: &GraphFile) -> ValidationReport {
    let fail = |e: Error| {
        let p = match &e {
            Error::MalformedGraph(_) => Property::Simplicity,
            Error::Disconnected => Property::Connectivity,
            Error::NotPlanarEmbedding(_) => Property::Embedding,
            _ => Property::Invariants,
        };
        ValidationReport { failure: Some((p, e)) }
    };
    match load_embedding(input).and_then(|g| g.check_invariants()) {
        Ok(()) => ValidationReport { failure: None },
        Err(e) => fail(e),
    }
}
