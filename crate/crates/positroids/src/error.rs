use thiserror::Error;

/// Errors surfaced by constructors and checks.
///
/// Variants distinguish bad user input from violated operation
/// preconditions, structural validation failures (which carry a witness),
/// capacity overflow of the 16-element ground-set bound, and internal
/// consistency failures that indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("basis exchange fails: bases {{{b1}}} and {{{b2}}} have no exchange for element {a}")]
    ExchangeViolation { b1: String, b2: String, a: String },

    #[error("cyclic-flat axiom ({axiom}) violated: {detail}")]
    CyclicFlatAxiom { axiom: &'static str, detail: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
