use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("image list is not a bijection of 0..{0}")]
    InvalidPermutation(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group has more than {0} elements")]
    CapExceeded(usize),
    #[error("coset enumeration exceeded {0} cosets")]
    CosetLimitExceeded(usize),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("search budget exhausted after {0} nodes")]
    SearchBudget(u64),
    #[error("central subgroups are not cyclic of equal order")]
    CentralMismatch,
    #[error("presentation mismatch: {0}")]
    PresentationMismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;
