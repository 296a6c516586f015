use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("curve degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: u32, got: u32 },
    #[error("symbolic expansion refused for a {side}x{side} matrix (cap {cap}); use numeric evaluation")]
    SymbolicCap { side: usize, cap: usize },
    #[error("letter must be a single term, got {0} terms")]
    LetterNotMonomial(usize),
    #[error("truncation {truncation} is below the requested index {index}")]
    Truncation { truncation: usize, index: i64 },
    #[error("variable {0} cannot be re-expressed (A to D needs index >= 2)")]
    NotReexpressible(String),
    #[error("variable {var} does not belong to alphabet {alphabet}")]
    ForeignVariable { var: String, alphabet: String },
    #[error("variable {0} has no value in the assignment")]
    MissingVariable(String),
    #[error("monomial of degree {degree} exceeds homogenization target {target}")]
    HomogenizeDegree { degree: u32, target: u32 },
    #[error("polynomial is not in the psi subring (depends on psi_1)")]
    NotInPsiSubring,
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("derivative jet of order {have} is too short, need order {need}")]
    JetTooShort { have: usize, need: usize },
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("no smooth base point found after {0} attempts")]
    ResamplingExhausted(u32),
    #[error("x0 must be nonzero when r > 0")]
    ZeroBasePoint,
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
