use obrsk_core::Root;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdealError {
    #[error("column {0} is not in beta")]
    ColumnNotInBeta(u32),
    #[error("Pfaffian of odd size {0}")]
    OddSize(usize),
    #[error("{0} is not a variable of this patch")]
    ContextMismatch(Root),
    #[error("term order is not a strict total order: {0}")]
    OrderViolation(String),
    #[error(transparent)]
    Core(#[from] obrsk_core::Error),
}

pub type Result<T> = std::result::Result<T, IdealError>;
