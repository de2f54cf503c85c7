use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cell ({i}, {j}) lies outside the diagram of [{partition}]")]
    InvalidCell {
        partition: String,
        i: usize,
        j: usize,
    },
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("momentum {0} is excluded for this quantity")]
    MomentumExcluded(String),
    #[error("root finder did not converge after {iterations} iterations (last correction {last_step:e})")]
    NumericFailure {
        iterations: usize,
        last_step: f64,
        trace: Vec<f64>,
    },
    #[error("roots are not pairwise distinct (separation {0:e})")]
    DegenerateRoots(f64),
    #[error("{0}")]
    Domain(String),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
