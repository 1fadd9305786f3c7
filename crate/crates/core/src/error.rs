use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate plane: all-zero covector")]
    DegeneratePlane,
    #[error("degenerate triple: points are coincident or collinear")]
    DegenerateTriple,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("projected point coincides with the projection centre")]
    ProjectionCenter,
    #[error("image lies on the line at infinity of the chosen chart")]
    AtInfinity,
    #[error("duplicate points at indices {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("collinear triple at indices ({0}, {1}, {2})")]
    Collinear(usize, usize, usize),
    #[error("degenerate curve: r = s^2, q = s^3 and p = s^4")]
    DegenerateCurve,
    #[error("plane meets curve in a line's worth of parameters")]
    IndeterminateFourth,
    #[error("second species / no canonical form of this shape")]
    SecondSpecies,
    #[error("degenerate fundamental quartic: single fourth power")]
    DegenerateQuartic,
    #[error("rank-ambiguous catalecticant kernel: pivot ratio {ratio:e} against tolerance {tolerance:e}")]
    RankAmbiguous { ratio: f64, tolerance: f64 },
    #[error("decomposition residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },
    #[error("guard `{0}` vanishes at the evaluation point")]
    Guard(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("formula value {0} is not an integer")]
    NonIntegral(String),
    #[error("placed only {placed} of {wanted} points in general position within the redraw budget")]
    RedrawBudget { placed: usize, wanted: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }

    /// True for errors that signal a violated input precondition rather than a
    /// failure inside the library.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::Collinear(..)
                | Error::DuplicatePoint(..)
                | Error::DegenerateTriple
                | Error::DegeneratePlane
                | Error::DegenerateCurve
                | Error::ZeroPoint
                | Error::SecondSpecies
                | Error::InvalidParameter(_)
                | Error::Parse { .. }
        )
    }
}
