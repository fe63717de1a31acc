use thiserror::Error;

/// Domain failures shared by every geometry module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("triangle is degenerate (vertices collinear or coincident)")]
    DegenerateTriangle,
    #[error("triangle is equilateral: the orthocentroidal circle is undefined")]
    EquilateralDegenerate,
    #[error("lines are parallel: no unique intersection")]
    Parallel,
    #[error("circumradius must exceed 1 in the Euler frame, got {0}")]
    InvalidRadius(f64),
    #[error("vertex A at theta = {theta} lies on the forbidden arc")]
    ForbiddenPosition { theta: f64 },
    #[error("vertex A at theta = {theta} collapses the triangle onto a chord")]
    DegenerateChord { theta: f64 },
    #[error("point is the nine-point center: no locus passes through it")]
    AtNinePointCenter,
    #[error("point is not strictly inside the orthocentroidal circle")]
    OutsideDisc,
    #[error("largest angle {degrees:.6} degrees exceeds 120 degrees")]
    AngleTooLarge { degrees: f64 },
    #[error("a = sqrt(3) b: equilateral triangle, Fermat point sits at the midpoint of GH")]
    Midpoint,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
