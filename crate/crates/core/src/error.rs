use crate::assignment::Assignment;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} exceeds the supported maximum of 64")]
    DimensionTooLarge(usize),
    #[error("weight {weight} at index {index} is outside the allowed range [{min}, {max}]")]
    WeightOutOfRange { index: usize, weight: i64, min: i64, max: i64 },
    #[error("weight bound must be positive")]
    ZeroWeightBound,
    #[error("arity mismatch: combiner takes {expected} inputs, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(&'static str),
    #[error("automaton sum range does not fit a 64-bit state key")]
    StateKeyOverflow,
    #[error("round limit of {limit} exhausted")]
    RoundLimitExceeded { limit: usize },
    #[error("no answer recorded for {0}")]
    MissingAnswer(Assignment),
    #[error("contradictory order witnesses for variables {0} and {1}")]
    InconsistentOrder(usize, usize),
    #[error(
        "no candidate is consistent with the non-adaptive query answers; \
         the query set did not separate the target from every candidate (f => g coverage)"
    )]
    NonAdaptiveCoverage,
    #[error("malformed assignment string")]
    MalformedAssignment,
}
