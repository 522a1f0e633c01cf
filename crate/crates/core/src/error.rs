use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed element {0:?}: expected (i,j,[p)) or 0")]
    MalformedElement(String),
    #[error("malformed family {0:?}: expected comma-separated tail indices")]
    MalformedFamily(String),
    #[error("syntax error in endomorphism expression at {pos}: {msg}")]
    Expression { pos: usize, msg: String },
    #[error("tail index {0} is not a member of the family")]
    NotInFamily(u64),
    #[error("the zero element only exists when the family contains the empty set")]
    NoZero,
    #[error("family must contain at least one tail")]
    EmptyFamily,
    #[error("family is not closed: [{a})∩(−{n}+[{b})) = [{got}) is missing")]
    NotClosed { a: u64, b: u64, n: u64, got: u64 },
    #[error("element {0} does not belong to B_w^F2")]
    NotInF2(String),
    #[error("coordinate overflow")]
    Overflow,
    #[error("invalid parameters: {0}")]
    InvalidParameter(String),
    #[error("not an endomorphism: {0}")]
    NotEndomorphism(String),
    #[error("map does not match any normal form: {0}")]
    Unclassified(String),
    #[error("window bound {0} is too small (need at least {1})")]
    WindowTooSmall(u64, u64),
    #[error("window map: {0}")]
    WindowMap(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
