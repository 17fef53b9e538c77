use thiserror::Error;

/// Everything that can go wrong when constructing inputs or running an
/// analysis. Every variant names the violated precondition so callers can
/// print the message as-is.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    /// A probability (or rate) must lie strictly inside (0, 1): the
    /// endpoints have no finite log-odds.
    #[error("probability {value} is outside the open interval (0, 1)")]
    ProbabilityRange { value: f64 },

    /// A p-value must lie strictly inside (0, 1) to have a finite certainty.
    #[error("p-value {value} is outside the open interval (0, 1)")]
    PValueRange { value: f64 },

    /// A quantity that is required to be a finite real number was not.
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    /// A quantity that is required to be strictly positive was not.
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    /// A quantity that is required to be nonnegative was not.
    #[error("{name} must be nonnegative, got {value}")]
    NegativeValue { name: &'static str, value: f64 },

    /// The `x` argument of the regularized incomplete beta lies outside [0, 1].
    #[error("incomplete-beta argument x = {value} lies outside [0, 1]")]
    BetaArgRange { value: f64 },

    /// A 2x2 cell is zero, so the log-odds-ratio standard error
    /// (which sums reciprocal cells) is undefined.
    #[error("cell {cell} of the 2x2 table is zero, so the standard error of the log odds ratio is undefined; a 0.5-per-cell correction is available as an explicit opt-in")]
    ZeroCell { cell: char },

    /// A margin of the 2x2 table is empty, so a group rate is undefined.
    #[error("the {group} group of the 2x2 table has no observations")]
    EmptyGroup { group: &'static str },

    /// Sensitivity or specificity of exactly 0 or 1 makes a likelihood
    /// shift infinite.
    #[error("degenerate test: {name} is {value}; finite positive/negative likelihood shifts need rates strictly inside (0, 1)")]
    DegenerateTest { name: &'static str, value: f64 },

    /// Too few observations for the requested statistic.
    #[error("sample needs at least {min} values, got {len}")]
    SampleTooSmall { min: usize, len: usize },

    /// Both samples are constant in log-odds space but their means differ,
    /// so the t statistic is unbounded.
    #[error("both samples have zero variance in log-odds space but different means; the t statistic is unbounded")]
    ZeroVariance,

    /// A zero impact has no maximal risk reduction (1/0 is undefined).
    #[error("impact is zero; the maximal absolute risk reduction and its number needed to treat are undefined")]
    ZeroImpact,

    /// Nothing to combine.
    #[error("no certainties to combine")]
    EmptyCertaintyList,

    /// The coefficient of determination must lie in [0, 1).
    #[error("r-squared {value} lies outside [0, 1)")]
    RSquaredRange { value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
