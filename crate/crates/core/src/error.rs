use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("matrix is not unitary (max |U†U - I| entry = {0:e})")]
    NotUnitary(f64),

    #[error("chord endpoints must differ (got j = k = {0})")]
    CoincidentIndices(usize),

    #[error("index {0} out of range 0..4")]
    IndexOutOfRange(usize),

    #[error("pair ({0}, {1}) is not a diametral chord")]
    NotDiametral(usize, usize),

    #[error("not a perfect entangler")]
    NotPerfectEntangler,

    #[error("region precondition violated: {0}")]
    RegionMismatch(String),

    #[error("origin lies outside triangle {0:?}")]
    OutsideTriangle([usize; 3]),

    #[error("triangle {0:?} is degenerate; use segment weights")]
    DegenerateTriangle([usize; 3]),

    #[error("{quantity}: routes disagree ({left_route} = {left}, {right_route} = {right})")]
    RouteDisagreement {
        quantity: &'static str,
        left_route: &'static str,
        left: f64,
        right_route: &'static str,
        right: f64,
    },

    #[error("mixing parameter p = {0} outside [-1, 1]")]
    InfeasibleMixing(f64),

    #[error("sample count must be at least 1")]
    EmptySample,
}

pub type Result<T> = std::result::Result<T, Error>;
