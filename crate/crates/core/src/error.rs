use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("cannot embed a degree-{from} permutation into degree {to}")]
    Embedding { from: usize, to: usize },
    #[error("square root requested of non-positive rational {0}")]
    NonPositiveRadicand(String),
    #[error("radicand {0} is too large to certify its square-free part")]
    RadicandTooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableaux {0} and {1} have different shapes")]
    ShapeMismatch(String, String),
    #[error("a single-box tableau has no parent")]
    NoParent,
    #[error("symmetrizer blocks overlap or leave 1..={0}")]
    InvalidBlocks(usize),
    #[error("operator is not proportional to the Young projector of {0}")]
    NotProportional(String),
    #[error("Young transition basis undefined beyond m=4 (got m={0})")]
    YoungBeyondFour(usize),
    #[error("transition between {0} and {1} has a vanishing normalization")]
    VanishingNormalization(String, String),
    #[error("transition normalization {0} is not a positive rational")]
    BadNormalization(String),
    #[error("cannot place the compact cut: {0}")]
    CutSite(String),
    #[error("matrix of {rows} rows exceeds the size cap {cap}")]
    SizeCap { rows: usize, cap: usize },
    #[error("orthonormality does not hold for a Young basis")]
    OrthonormalityOnYoung,
}
