use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("certification failed at precision ceiling {ceiling} bits: {detail}")]
    CertificationFailed { ceiling: u32, detail: String },
    #[error("bound of {0} exceeded")]
    Exceeded(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
