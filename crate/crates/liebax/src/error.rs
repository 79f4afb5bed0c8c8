use thiserror::Error;

/// Errors raised by the library and the CLI front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("bilinear form is not invariant")]
    NotInvariant,
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("tensor is not skew-symmetric")]
    NotSkew,
    #[error("map is not a centrum map")]
    NotCentrum,
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("weight is singular")]
    SingularWeight,
    #[error("Rota-Baxter identity fails: {nonzero} nonzero residual entries")]
    NotRotaBaxter { nonzero: usize },
    #[error(
        "not a solution of the classical Yang-Baxter equation: {nonzero} nonzero residual entries"
    )]
    CybeRejected { nonzero: usize },
    #[error("symmetric part of the tensor is not ad-invariant")]
    SymmetricPartNotInvariant,
    #[error("not a Lie coalgebra: the dual product fails the Jacobi identity")]
    NotLieCoalgebra,
    #[error("target map is not in the span of the centroid")]
    NotInCentroid,
    #[error("not a direct sum decomposition into subalgebras")]
    BadDecomposition,
    #[error("division by zero")]
    ZeroDivision,
    #[error("{0}")]
    InvalidInput(String),
    #[error("internal verification failed: {0}")]
    Verification(&'static str),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse: {0}")]
    Parse(String),
}

impl Error {
    /// Exit-code class for the CLI: mathematical rejections exit 1,
    /// malformed or invalid input exits 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CybeRejected { .. }
            | Error::NotRotaBaxter { .. }
            | Error::SymmetricPartNotInvariant
            | Error::NotLieCoalgebra => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
