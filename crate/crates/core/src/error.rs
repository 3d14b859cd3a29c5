use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be positive")]
    ZeroDegree,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("not a bijection: {0}")]
    NotBijection(String),

    #[error("malformed {what} at `{token}`: {reason}")]
    Parse {
        what: &'static str,
        token: String,
        reason: String,
    },

    #[error("{}", describe_matching(.repeated, .unmatched))]
    BadMatching {
        repeated: Vec<usize>,
        unmatched: Vec<usize>,
    },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },

    #[error("diagram has a horizontal edge {0}-{1}")]
    HorizontalEdge(usize, usize),

    #[error("n = {n} is below the minimum {min}")]
    TooSmall { n: usize, min: usize },

    #[error("n = {n} exceeds the exhaustive cap {cap}")]
    OverCap { n: usize, cap: usize },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn parse(what: &'static str, token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            token: token.into(),
            reason: reason.into(),
        }
    }
}

fn describe_matching(repeated: &[usize], unmatched: &[usize]) -> String {
    let mut parts = Vec::new();
    parts.extend(repeated.iter().map(|v| format!("vertex {v} matched twice")));
    parts.extend(unmatched.iter().map(|v| format!("vertex {v} unmatched")));
    parts.join(", ")
}
