use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The three quandle axioms, in the order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Idempotency,
    RightInvertibility,
    SelfDistributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Idempotency => "idempotency",
            Axiom::RightInvertibility => "right invertibility",
            Axiom::SelfDistributivity => "right self-distributivity",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{axiom} fails at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("{what} exceeds cap ({cap})")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("search budget of {0} congruences exhausted")]
    BudgetExceeded(usize),

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator `{name}` at {line}:{column}")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("vector {0:?} is not primitive")]
    NonPrimitive(Vec<i64>),

    #[error("unsupported Coxeter type `{0}`")]
    UnsupportedType(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
