//! Combining and correcting certainties across studies: additive pooling
//! with a conservatism penalty, multiple-comparison shrinkage, the chance
//! that an independent replication reaches nominal significance, and the
//! certainty carried by a regression fit.

use std::num::NonZeroU32;

use crate::dist::{normal_cdf, normal_quantile, student_t_two_sided_p, DegreesOfFreedom};
use crate::error::{Error, Result};
use crate::space::{certainty_for_report, clamp_open_unit, p_from_certainty, Certainty, Probability};

/// Certainties pooled across independent studies of the same effect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinedCertainty {
    /// Plain sum of the study certainties.
    pub raw_sum: Certainty,
    /// Sum plus one unit per study beyond the first, plus one more unit
    /// when the underlying data are not normally distributed.
    pub corrected: Certainty,
    /// Number of studies pooled.
    pub study_count: usize,
    /// Whether the penalty for non-normal data was waived.
    pub normal_data: bool,
}

/// Pools study certainties by addition, then walks the total back toward
/// zero by one unit for every study after the first (independent studies
/// rarely agree as well as a naive sum claims) and one further unit when
/// the data are not normal.
pub fn combine_certainties(
    certainties: &[Certainty],
    normal_data: bool,
) -> Result<CombinedCertainty> {
    if certainties.is_empty() {
        return Err(Error::EmptyCertaintyList);
    }
    let raw_sum: f64 = certainties.iter().map(|c| c.value()).sum();
    let penalty = (certainties.len() - 1) as f64 + if normal_data { 0.0 } else { 1.0 };
    Ok(CombinedCertainty {
        raw_sum: Certainty(raw_sum),
        corrected: Certainty(raw_sum + penalty),
        study_count: certainties.len(),
        normal_data,
    })
}

/// Shrinks a certainty toward zero to pay for having made `comparisons`
/// looks at the data: the certainty is divided by √comparisons.
pub fn multiplicity_adjust(certainty: Certainty, comparisons: NonZeroU32) -> Certainty {
    Certainty(certainty.value() / f64::from(comparisons.get()).sqrt())
}

/// How likely an exact, equally powered replication of a result is to
/// reach two-sided p < 0.05 on its own.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReplicationEstimate {
    /// Certainty of the original result.
    pub c: Certainty,
    /// Probability that the replication is itself nominally significant.
    pub probability_replicates: Probability,
}

/// Chance that an independent replication of a result with certainty `c`
/// reaches p < 0.05: the original z-score is treated as the true effect of
/// the replicate, so the answer is Φ(z_observed − z_0.975).
pub fn replication_probability(c: Certainty) -> ReplicationEstimate {
    let p = p_from_certainty(c);
    // p is clamped inside (0, 1), so p/2 and 0.975 are always valid quantile
    // arguments.
    let z_observed = -normal_quantile(p / 2.0).expect("p/2 lies strictly inside (0, 1)");
    let z_critical = normal_quantile(0.975).expect("0.975 lies strictly inside (0, 1)");
    let probability = clamp_open_unit(normal_cdf(z_observed - z_critical));
    ReplicationEstimate { c, probability_replicates: Probability(probability) }
}

/// The certainty that a regression slope is real, from its fit quality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegressionCertainty {
    /// t statistic of the slope: √((n − 2) · r² / (1 − r²)).
    pub t: f64,
    /// Two-sided p-value on n − 2 degrees of freedom.
    pub p: f64,
    /// The p-value as a certainty.
    pub c: Certainty,
}

/// Converts a coefficient of determination and a sample size into slope
/// certainty via the exact t relation for simple regression.
///
/// `r_squared` must lie in [0, 1) — a perfect fit has unbounded t — and at
/// least three points are needed for a nonzero-degree t test.
pub fn regression_certainty(r_squared: f64, n: usize) -> Result<RegressionCertainty> {
    if !(0.0..1.0).contains(&r_squared) {
        return Err(Error::RSquaredRange { value: r_squared });
    }
    if n < 3 {
        return Err(Error::SampleTooSmall { min: 3, len: n });
    }
    let df = (n - 2) as f64;
    let t = (df * r_squared / (1.0 - r_squared)).sqrt();
    let p = student_t_two_sided_p(t, DegreesOfFreedom::new(df)?);
    Ok(RegressionCertainty { t, p, c: certainty_for_report(p) })
}
