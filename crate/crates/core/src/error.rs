use crate::rational::Rational;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("vanishing denominator factor {factor}")]
    VanishingFactor { factor: String },

    #[error("degenerate scaling: 2 + a1 + b1 = 0")]
    DegenerateScaling,

    #[error("denominator polynomial is identically zero")]
    ZeroDenominator,

    #[error("repeated abscissa {0}")]
    RepeatedAbscissa(Rational),

    #[error("parameter {name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: String },

    #[error("parameter {name} must be an integer, got {value}")]
    NonInteger { name: &'static str, value: String },

    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,

    #[error("{n} variables exceeds the exact-integration limit of {max}")]
    TooManyVariables { n: usize, max: usize },

    #[error("partition weight {weight} exceeds the cap {cap}")]
    WeightCap { weight: usize, cap: usize },

    #[error("limit is infinite: numerator degree {num_degree} > denominator degree {den_degree}")]
    InfiniteLimit { num_degree: usize, den_degree: usize },

    #[error("invalid chain configuration: {0}")]
    InvalidConfig(String),

    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
