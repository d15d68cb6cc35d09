use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 1..={2}")]
    OutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a loop")]
    Loop(usize),
    #[error("edge ({0}, {1}) is not written with i < j")]
    NotIncreasing(usize, usize),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("color {color} is not one of the {q} colors")]
    InvalidColor { color: usize, q: usize },
    #[error("{what} is {value}, above the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("malformed data: {0}")]
    Parse(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
