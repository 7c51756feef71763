use thiserror::Error;

/// Errors produced by the domain constructors and evaluators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a measure space needs at least one atom")]
    EmptySpace,

    #[error("atom {atom} has weight {weight}; weights must be positive and finite")]
    BadWeight { atom: usize, weight: f64 },

    #[error("a function family needs at least two functions, got {0}")]
    FamilyTooSmall(usize),

    #[error("function {function} has {len} values but the space has {atoms} atoms")]
    RowLength {
        function: usize,
        len: usize,
        atoms: usize,
    },

    #[error("function {function} takes the value {value} at atom {atom}; values must be non-negative and finite")]
    NegativeValue {
        function: usize,
        atom: usize,
        value: f64,
    },

    #[error("a row of {len} values does not match the {atoms} atoms of the space")]
    LengthMismatch { len: usize, atoms: usize },

    #[error("p = 0 is outside the domain of the L^p functionals")]
    ZeroP,

    #[error("f^p with p < 0 is undefined on an identically zero function (empty support)")]
    EmptySupport,

    #[error("every function in the family vanishes identically")]
    ZeroFamily,

    #[error("{0} vanishes identically but a nonzero function is required")]
    ZeroFunction(&'static str),

    #[error("{name} = {value} is outside its domain ({constraint})")]
    Domain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("scenario parse error at line {line}: {msg}")]
    Scenario { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, constraint: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        constraint,
    }
}
