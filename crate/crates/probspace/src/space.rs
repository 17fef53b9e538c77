//! The core coordinate system: probabilities expressed as base-10 log-odds
//! ("weights"), differences of weights ("impacts"), and p-values expressed
//! in the same coordinate ("certainties").
//!
//! All logarithms are base 10. A natural-log variant is deliberately not
//! offered; mixing bases silently changes every downstream number.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// A probability strictly inside (0, 1).
///
/// The endpoints are rejected because they have no finite log-odds and every
/// operation in this crate ultimately works on log-odds.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(pub(crate) f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        // NaN fails both comparisons and is rejected too.
        if value > 0.0 && value < 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::ProbabilityRange { value })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The complementary probability 1 − p.
    pub fn complement(self) -> Self {
        Self(1.0 - self.0)
    }

    /// Odds p/(1 − p).
    pub fn odds(self) -> f64 {
        self.0 / (1.0 - self.0)
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A probability as base-10 log-odds: W = log₁₀(p/(1−p)).
///
/// Weights are the linear coordinate of this crate: effects that multiply
/// odds add in weight.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Weight(pub(crate) f64);

impl Weight {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::NonFinite { name: "weight", value })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An effect size: the difference of two weights. Equals log₁₀ of the odds
/// ratio between the two states.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Impact(pub(crate) f64);

impl Impact {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::NonFinite { name: "impact", value })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Impact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A p-value in log-odds units: C = log₁₀(p/(1−p)).
///
/// More negative means more certain that a difference exists; C = −1.3 is
/// the familiar p = 0.05.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Certainty(pub(crate) f64);

impl Certainty {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(Self(value))
        } else {
            Err(Error::NonFinite { name: "certainty", value })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// Weights move by impacts; the difference of two weights is an impact.

impl Add<Impact> for Weight {
    type Output = Weight;
    fn add(self, rhs: Impact) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl Sub for Weight {
    type Output = Impact;
    fn sub(self, rhs: Weight) -> Impact {
        Impact(self.0 - rhs.0)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

impl Add for Impact {
    type Output = Impact;
    fn add(self, rhs: Impact) -> Impact {
        Impact(self.0 + rhs.0)
    }
}

impl Sub for Impact {
    type Output = Impact;
    fn sub(self, rhs: Impact) -> Impact {
        Impact(self.0 - rhs.0)
    }
}

impl Neg for Impact {
    type Output = Impact;
    fn neg(self) -> Impact {
        Impact(-self.0)
    }
}

/// Clamp a computed probability into the open unit interval.
///
/// Extreme weights (|W| beyond roughly 308) would otherwise round to exactly
/// 0 or 1 in double precision; the nearest representable interior values are
/// used instead so that `Probability`'s invariant always holds.
pub(crate) fn clamp_open_unit(p: f64) -> f64 {
    p.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0)
}

/// W = log₁₀(p/(1−p)).
pub fn prob_to_weight(p: Probability) -> Weight {
    Weight((p.0 / (1.0 - p.0)).log10())
}

/// p = 10^W/(1+10^W), the exact inverse of [`prob_to_weight`].
///
/// Computed from the side of the unit interval closest to the result so that
/// extreme weights lose no precision; weights beyond roughly ±308 saturate
/// to the nearest representable probability inside (0, 1).
pub fn weight_to_prob(w: Weight) -> Probability {
    let p = if w.0 <= 0.0 {
        let odds = 10f64.powf(w.0);
        odds / (1.0 + odds)
    } else {
        let inv_odds = 10f64.powf(-w.0);
        1.0 / (1.0 + inv_odds)
    };
    Probability(clamp_open_unit(p))
}

/// The effect size moving a state from `w1` to `w2`: I = w2 − w1.
pub fn impact_between(w1: Weight, w2: Weight) -> Impact {
    w2 - w1
}

/// C = log₁₀(p/(1−p)) for a p-value strictly inside (0, 1).
pub fn certainty_from_p(p: f64) -> Result<Certainty> {
    if p > 0.0 && p < 1.0 {
        Ok(Certainty((p / (1.0 - p)).log10()))
    } else {
        Err(Error::PValueRange { value: p })
    }
}

/// Inverse of [`certainty_from_p`]: p = 10^C/(1+10^C).
pub fn p_from_certainty(c: Certainty) -> f64 {
    weight_to_prob(Weight(c.0)).0
}

/// Certainty for a p-value produced by a test, for use inside reports.
///
/// Tests can legitimately produce p = 1 (a statistic of exactly zero), where
/// the log-odds formula diverges to +∞. A p-value of 1 carries zero evidence
/// of any difference, so reports record it as C = 0 rather than failing.
/// Saturated tail p-values stay finite by construction, so every other input
/// is strictly inside (0, 1).
pub(crate) fn certainty_for_report(p: f64) -> Certainty {
    if p >= 1.0 {
        Certainty(0.0)
    } else {
        Certainty((p / (1.0 - p)).log10())
    }
}

/// Qualitative effect-size band, decided by |I|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ImpactBand {
    /// |I| < 0.1
    Low,
    /// 0.1 ≤ |I| < 0.2
    Intermediate,
    /// 0.2 ≤ |I| < 0.4
    High,
    /// |I| ≥ 0.4
    VeryHigh,
}

impl fmt::Display for ImpactBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ImpactBand::Low => "Low",
            ImpactBand::Intermediate => "Intermediate",
            ImpactBand::High => "High",
            ImpactBand::VeryHigh => "Very High",
        })
    }
}

/// Qualitative certainty band, decided by C.
///
/// Thresholds sit at −0.4, −1.3, −2, −4 and −9; a value exactly on a
/// threshold belongs to the more certain band (C = −1.3 is already
/// `MarginallyDifferent`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertaintyBand {
    /// C > −0.4
    Similar,
    /// −1.3 < C ≤ −0.4
    Indeterminate,
    /// −2 < C ≤ −1.3
    MarginallyDifferent,
    /// −4 < C ≤ −2
    Different,
    /// −9 < C ≤ −4
    VeryDifferent,
    /// C ≤ −9
    VeryDifferentPhysicsLevel,
}

impl CertaintyBand {
    /// Interpretation caveat attached to some bands.
    ///
    /// Calling two groups "Similar" assumes neither was designated in
    /// advance as the control; when one was, the honest call is
    /// indeterminate, not similar.
    pub fn caveat(self) -> Option<&'static str> {
        match self {
            CertaintyBand::Similar => Some(
                "calling the groups similar assumes agnostic group assignment; \
                 with a designated control group read this as indeterminate",
            ),
            _ => None,
        }
    }
}

impl fmt::Display for CertaintyBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertaintyBand::Similar => "Similar",
            CertaintyBand::Indeterminate => "Indeterminate",
            CertaintyBand::MarginallyDifferent => "Marginally Different",
            CertaintyBand::Different => "Different",
            CertaintyBand::VeryDifferent => "Very Different",
            CertaintyBand::VeryDifferentPhysicsLevel => "Very Different (physics level)",
        })
    }
}

/// Effect-size band for an impact, by absolute value.
pub fn classify_impact(i: Impact) -> ImpactBand {
    let a = i.0.abs();
    if a < 0.1 {
        ImpactBand::Low
    } else if a < 0.2 {
        ImpactBand::Intermediate
    } else if a < 0.4 {
        ImpactBand::High
    } else {
        ImpactBand::VeryHigh
    }
}

/// Certainty band for a C value; boundaries go to the more certain side.
pub fn classify_certainty(c: Certainty) -> CertaintyBand {
    let v = c.0;
    if v > -0.4 {
        CertaintyBand::Similar
    } else if v > -1.3 {
        CertaintyBand::Indeterminate
    } else if v > -2.0 {
        CertaintyBand::MarginallyDifferent
    } else if v > -4.0 {
        CertaintyBand::Different
    } else if v > -9.0 {
        CertaintyBand::VeryDifferent
    } else {
        CertaintyBand::VeryDifferentPhysicsLevel
    }
}
