use thiserror::Error;

/// Errors raised by the geometry, region, sampling and statistics layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate cloud: need at least 2 points, got {0}")]
    DegenerateCloud(usize),

    #[error("undefined angle: the origin has no polar angle")]
    UndefinedAngle,

    #[error("shape constant out of range (circle-like pole excluded): q = {0} is not in (0,2)")]
    ShapeConstantOutOfRange(f64),

    #[error("invalid region parameter: {0}")]
    InvalidRegionParameter(String),

    #[error("A2: no unique major axis (b = {b} must be < a = {a})")]
    NoUniqueMajorAxis { a: f64, b: f64 },

    #[error("degenerate region: {0}")]
    DegenerateRegion(String),

    #[error("cap undefined for h = {h} (valid range is (0, {max}))")]
    CapUndefined { h: f64, max: f64 },

    #[error("A6 violated for this h: no intersection with the circle of radius a - h = {0}")]
    A6Violated(f64),

    #[error("sampler stalled (region area anomaly) after {0} consecutive misses")]
    SamplerStalled(u64),

    #[error("statistic undefined: cloud has {0} points")]
    StatisticUndefined(usize),

    #[error("invalid NA parameters: sigma = {sigma}, tau = {tau}, m = {m}")]
    InvalidNaParameters { sigma: f64, tau: f64, m: usize },

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("empty sample set")]
    EmptySample,

    #[error("probability {0} outside (0,1)")]
    InvalidProbability(f64),

    #[error("invalid quadrant index {0}")]
    InvalidQuadrant(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
