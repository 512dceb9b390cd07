use thiserror::Error;

/// Errors produced by the library surface.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{context}: argument {value} is outside the valid domain")]
    Domain { context: &'static str, value: f64 },

    #[error("distribution must contain at least one atom")]
    EmptyDistribution,

    #[error("atom weight {weight} at x = {x} is not positive")]
    BadWeight { x: f64, weight: f64 },

    #[error("weights sum to {sum}, which deviates from 1 by more than 1e-6")]
    WeightSum { sum: f64 },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("input has mean {mean}; a centered (zero-mean) distribution is required")]
    NotCentered { mean: f64 },

    #[error("threshold split is degenerate: tail probability is {tail_prob}")]
    DegenerateSplit { tail_prob: f64 },

    #[error("invalid search configuration: {0}")]
    BadConfig(String),

    #[error("root bracketing failed: {0}")]
    Bracket(String),

    #[error("internal consistency check failed: {0}")]
    Check(String),
}

pub type Result<T> = std::result::Result<T, Error>;
