use thiserror::Error;

/// Errors raised by the exact kernel, the operator algebra and the
/// polynomial-family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero {0}")]
    DivisionByZero(&'static str),

    #[error(
        "polynomial in x has a nonzero odd coefficient at degree {degree}; result left the space of polynomials in λ"
    )]
    OddPartPresent { degree: usize },

    #[error("operator result is not a polynomial: denominator {denominator} remains")]
    NotPolynomial { denominator: String },

    #[error("identity failed at shift offset {offset}: residual coefficient {residual}")]
    IdentityFailed { offset: i32, residual: String },

    #[error("degree-raising property violated: λ^{input} mapped to degree {output}")]
    DegreeRaisingViolated { input: usize, output: usize },

    #[error("singular Pochhammer symbol {symbol} (zero factor {factor})")]
    SingularPochhammer { symbol: String, factor: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("degenerate lattice: points {first} and {second} coincide (value {value})")]
    DegenerateLattice { first: usize, second: usize, value: String },

    #[error("σ = 1/(a+b−c−d) undefined: a+b = c+d")]
    SigmaUndefined,

    #[error("closed form disagrees with the literal S4 average at offset {offset}")]
    ClosedFormMismatch { offset: i32 },

    #[error("realizations disagree for generator {generator} at offset {offset}: residual {residual}")]
    RealizationMismatch {
        generator: &'static str,
        offset: i32,
        residual: String,
    },

    #[error("singular linear system (rank {rank} < {size})")]
    SingularSystem { rank: usize, size: usize },

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
