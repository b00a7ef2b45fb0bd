use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("duplicate label `{0}` in domain")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("invalid label `{0}`: {1}")]
    InvalidLabel(String, String),

    #[error("label collision: `{0}` occurs in both graphs")]
    LabelCollision(String),

    #[error("edge {0} is already present")]
    DuplicateEdge(String),

    #[error("edge {0} is not present")]
    MissingEdge(String),

    #[error("self-loop at `{0}`")]
    SelfLoop(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("cycle notation: {0}")]
    CycleSyntax(String),

    #[error("partition does not match the group's domain: {0}")]
    PartitionMismatch(String),

    #[error("group is not transitive")]
    Intransitive,

    #[error("graph has no root")]
    Unrooted,

    #[error("replacement {0} is not feasible")]
    InfeasibleReplacement(String),

    #[error("size guard exceeded: {what} has {size} points, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid size parameter: {0}")]
    InvalidSize(String),

    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
