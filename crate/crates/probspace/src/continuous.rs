//! Statistics for samples of proportions, computed both in raw probability
//! space and in log-odds space, plus a two-sample comparison that yields an
//! impact and a certainty.

use crate::dist::{student_t_two_sided_p, DegreesOfFreedom};
use crate::error::{Error, Result};
use crate::space::{
    certainty_for_report, prob_to_weight, weight_to_prob, Certainty, Impact, Probability, Weight,
};

/// A labeled, ordered sample of proportions, each strictly inside (0, 1).
#[derive(Debug, Clone, PartialEq)]
pub struct ProportionSample {
    label: String,
    values: Vec<Probability>,
}

impl ProportionSample {
    pub fn new(label: impl Into<String>, values: Vec<Probability>) -> Self {
        Self { label: label.into(), values }
    }

    /// Builds a sample from raw floats, rejecting anything outside (0, 1).
    pub fn from_values(label: impl Into<String>, values: &[f64]) -> Result<Self> {
        let values = values
            .iter()
            .map(|&v| Probability::new(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { label: label.into(), values })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[Probability] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn weights(&self) -> Vec<f64> {
        self.values.iter().map(|&p| prob_to_weight(p).value()).collect()
    }
}

/// Mean and sample (n−1) standard deviation.
fn mean_sd(xs: &[f64]) -> (f64, f64) {
    // A constant sample must report exactly zero spread; the general path
    // can round the mean by an ulp and manufacture a microscopic variance.
    if xs.iter().all(|&x| x == xs[0]) {
        return (xs[0], 0.0);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let ss = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>();
    (mean, (ss / (n - 1.0)).sqrt())
}

/// The same sample summarized in raw probability space and in log-odds
/// space, with the log-odds summary mapped back for comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceComparison {
    /// Mean of the raw proportions.
    pub raw_mean: Probability,
    /// Sample SD of the raw proportions.
    pub raw_sd: f64,
    /// Mean of the log-odds values.
    pub w_mean: Weight,
    /// Sample SD of the log-odds values.
    pub w_sd: f64,
    /// The log-odds mean back in probability space.
    pub back_mean: Probability,
    /// The log-odds spread back in probability space, measured upward from
    /// the back-transformed mean: p(w̄ + s) − p(w̄).
    pub back_sd: f64,
    /// back_mean − raw_mean.
    pub mean_difference: f64,
    /// back_sd − raw_sd.
    pub sd_difference: f64,
}

/// Summarizes a sample in both coordinate systems.
///
/// The back-transformed spread is one-sided above the mean, p(w̄+s) − p(w̄):
/// the back-transform is nonlinear, so an interval symmetric in log-odds is
/// asymmetric in probability, and the upper half-width is the convention
/// the reference outputs follow. For samples centered at probability 0.5 it
/// coincides with the symmetric half-range.
pub fn sample_stats(sample: &ProportionSample) -> Result<SpaceComparison> {
    if sample.len() < 2 {
        return Err(Error::SampleTooSmall { min: 2, len: sample.len() });
    }
    let raw: Vec<f64> = sample.values.iter().map(|p| p.value()).collect();
    let (raw_mean, raw_sd) = mean_sd(&raw);
    let (w_mean, w_sd) = mean_sd(&sample.weights());

    let back_mean = weight_to_prob(Weight(w_mean));
    let back_sd = weight_to_prob(Weight(w_mean + w_sd)).value() - back_mean.value();

    Ok(SpaceComparison {
        raw_mean: Probability(raw_mean),
        raw_sd,
        w_mean: Weight(w_mean),
        w_sd,
        back_mean,
        back_sd,
        mean_difference: back_mean.value() - raw_mean,
        sd_difference: back_sd - raw_sd,
    })
}

/// Which variance model the two-sample comparison uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VarianceModel {
    /// Unequal variances (Welch), with Welch–Satterthwaite degrees of
    /// freedom. The robust default.
    #[default]
    Unequal,
    /// Classic pooled variance, degrees of freedom n1 + n2 − 2. Offered for
    /// sensitivity checks only.
    Pooled,
}

/// Result of a two-sample comparison in log-odds space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSampleTest {
    /// Log-odds mean of sample 2 minus log-odds mean of sample 1.
    pub impact: Impact,
    /// |impact| / standard error of the difference.
    pub t: f64,
    /// Two-sided p-value of `t`.
    pub p: f64,
    /// `p` in log-odds units.
    pub c: Certainty,
    /// Degrees of freedom used (fractional under the Welch model).
    pub df: f64,
}

/// Compares two proportion samples in log-odds space.
///
/// Both samples are transformed to weights; the impact is the difference of
/// the weight means (sample 2 minus sample 1), tested with a two-sample t.
pub fn two_sample_w_test(
    s1: &ProportionSample,
    s2: &ProportionSample,
    model: VarianceModel,
) -> Result<TwoSampleTest> {
    if s1.len() < 2 {
        return Err(Error::SampleTooSmall { min: 2, len: s1.len() });
    }
    if s2.len() < 2 {
        return Err(Error::SampleTooSmall { min: 2, len: s2.len() });
    }
    let n1 = s1.len() as f64;
    let n2 = s2.len() as f64;
    let (m1, sd1) = mean_sd(&s1.weights());
    let (m2, sd2) = mean_sd(&s2.weights());
    let impact = Impact(m2 - m1);

    let (se2, df) = match model {
        VarianceModel::Unequal => {
            let v1 = sd1 * sd1 / n1;
            let v2 = sd2 * sd2 / n2;
            let se2 = v1 + v2;
            let df = se2 * se2 / (v1 * v1 / (n1 - 1.0) + v2 * v2 / (n2 - 1.0));
            (se2, df)
        }
        VarianceModel::Pooled => {
            let pooled =
                ((n1 - 1.0) * sd1 * sd1 + (n2 - 1.0) * sd2 * sd2) / (n1 + n2 - 2.0);
            (pooled * (1.0 / n1 + 1.0 / n2), n1 + n2 - 2.0)
        }
    };

    if se2 == 0.0 {
        if impact.value() == 0.0 {
            // Two identical constant samples: no difference, no evidence.
            return Ok(TwoSampleTest {
                impact,
                t: 0.0,
                p: 1.0,
                c: Certainty(0.0),
                df: n1 + n2 - 2.0,
            });
        }
        return Err(Error::ZeroVariance);
    }

    let t = impact.value().abs() / se2.sqrt();
    let p = student_t_two_sided_p(t, DegreesOfFreedom(df));
    Ok(TwoSampleTest { impact, t, p, c: certainty_for_report(p), df })
}
