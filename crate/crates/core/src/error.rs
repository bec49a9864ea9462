use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("configuration is not pointed: its kernel meets the nonnegative orthant nontrivially")]
    NotPointed,

    #[error("support sets must be nonempty, disjoint subsets of the column index range")]
    InvalidSupport,

    #[error("vector is not in the integer kernel of the configuration")]
    NotInKernel,

    #[error("generator set part is empty")]
    EmptyPart,

    #[error("part {part} spans the full kernel; its subconfiguration would define the same ideal")]
    PartSpansKernel { part: usize },

    #[error("cover search requires at least two parts, got {got}")]
    TooFewParts { got: usize },

    #[error("budget exhausted during {phase} (limit {limit})")]
    BudgetExhausted { phase: &'static str, limit: u64 },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("unknown catalogued example id: {0}")]
    UnknownExample(String),

    #[error("graph is invalid: {0}")]
    InvalidGraph(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted { .. })
    }
}
