use alloc::boxed::Box;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("network has {0} node(s), at least two are required")]
    InsufficientNodes(usize),

    #[error("angle is undefined for a zero vector")]
    ZeroVector,

    #[error("first-winner similarity {first} exceeds second-winner similarity {second}")]
    UnorderedSimilarities { first: f64, second: f64 },

    #[error("exact hypervolume is only implemented for up to 3 objectives (got {0})")]
    UnsupportedDimension(usize),

    #[error("population is empty")]
    EmptyPopulation,

    #[error("individual has not been evaluated")]
    NotEvaluated,

    #[error("evaluation failed in generation {generation}: {source}")]
    Evaluation { generation: usize, source: Box<Error> },
}

impl Error {
    pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
