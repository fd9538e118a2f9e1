use std::io;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid UTF-8{}", match .line { Some(l) => format!(" on line {l}"), None => String::new() })]
    InvalidEncoding { line: Option<usize> },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("unsupported model version {found}, this build reads version {supported}")]
    VersionMismatch { found: u8, supported: u8 },

    #[error("model checksum mismatch, file is corrupt")]
    ChecksumMismatch,

    #[error("model file truncated")]
    TruncatedFile,

    #[error("not a model file")]
    BadMagic,

    #[error("corrupt model file: {0}")]
    CorruptModel(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
