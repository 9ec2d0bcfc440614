use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable {0} is not in the ambient ring")]
    UnknownVariable(String),

    #[error("ideals live in different ambient rings")]
    AmbientMismatch,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("generator {0} is a single variable")]
    VariableGenerator(String),

    #[error("invalid field specification: {0}")]
    InvalidField(String),

    #[error("multidegree support of {0} variables exceeds the engine limit of 64")]
    TooManyVariables(usize),

    #[error("time budget exhausted")]
    Timeout,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
