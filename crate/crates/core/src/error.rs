use thiserror::Error;

/// Everything that can go wrong while reading words or building the
/// matrices and groups attached to them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty kneading word")]
    EmptyWord,

    #[error("unknown symbol {found:?} at position {position}")]
    UnknownSymbol { position: usize, found: String },

    #[error("turning point symbol C at position {position} before the end of the word")]
    EarlyTurningPoint { position: usize },

    #[error("kneading word must end with the turning point symbol C")]
    MissingTurningPoint,

    #[error("period {0} is too short, at least 2 symbols are required")]
    PeriodTooShort(usize),

    #[error("orbit points {0} and {1} are not separated by the signed order")]
    DegenerateOrder(usize, usize),

    #[error("matrix is not 0-1 valued")]
    NotZeroOne,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("closed form and Smith normal form disagree for {word}: {detail}")]
    TheoremViolation { word: String, detail: String },

    #[error("parameter mu = {0} outside [0, 4]")]
    ParameterOutOfRange(f64),

    #[error("superstable parameter search failed: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
