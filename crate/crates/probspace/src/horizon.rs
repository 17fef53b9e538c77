//! Time extrapolation of trial results under a constant-hazard model:
//! fit the exponential time constant from a control rate and duration,
//! project rates and absolute risk reduction to other horizons, and derive
//! the best-case risk reduction a given impact can ever deliver.
//!
//! Both operations assume the impact itself is constant over time — a
//! strong clinical assumption that the caller inherits.

use crate::error::{Error, Result};
use crate::space::{clamp_open_unit, prob_to_weight, weight_to_prob, Impact, Probability, Weight};

/// Time constant τ of the exponential event model, from an observed control
/// event rate over a trial duration: τ = −t / ln(1 − rate).
pub fn fit_tau(control_rate: Probability, duration_years: f64) -> Result<f64> {
    if !(duration_years.is_finite() && duration_years > 0.0) {
        return Err(Error::NonPositive { name: "trial duration", value: duration_years });
    }
    Ok(-duration_years / (-control_rate.value()).ln_1p())
}

/// A trial effect projected to one time horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorizonProjection {
    /// Exponential time constant in years.
    pub tau: f64,
    /// Horizon in years.
    pub horizon: f64,
    /// Control event rate at the horizon: 1 − exp(−horizon/τ).
    pub control_rate: Probability,
    /// Control rate as a weight.
    pub control_weight: Weight,
    /// Control weight plus the trial impact.
    pub treated_weight: Weight,
    /// Treated weight back in probability space.
    pub treated_rate: Probability,
    /// control_rate − treated_rate at the horizon.
    pub arr: f64,
}

/// Projects an impact to a horizon, given the fitted time constant.
pub fn project(impact: Impact, tau: f64, horizon_years: f64) -> Result<HorizonProjection> {
    if !(tau.is_finite() && tau > 0.0) {
        return Err(Error::NonPositive { name: "time constant tau", value: tau });
    }
    if !(horizon_years.is_finite() && horizon_years > 0.0) {
        return Err(Error::NonPositive { name: "horizon", value: horizon_years });
    }
    let control_rate = Probability(clamp_open_unit(-(-horizon_years / tau).exp_m1()));
    let control_weight = prob_to_weight(control_rate);
    let treated_weight = control_weight + impact;
    let treated_rate = weight_to_prob(treated_weight);
    Ok(HorizonProjection {
        tau,
        horizon: horizon_years,
        control_rate,
        control_weight,
        treated_weight,
        treated_rate,
        arr: control_rate.value() - treated_rate.value(),
    })
}

/// The largest absolute risk reduction an impact can produce, over all
/// baseline rates, and the baseline that produces it.
///
/// The reduction control → treated peaks when the two weights straddle
/// zero symmetrically: control at −I/2 and treated at +I/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaximalEffect {
    pub impact: Impact,
    /// Control rate at the peak: weight −I/2 as a probability.
    pub rate_half_control: Probability,
    /// Treated rate at the peak: weight +I/2 as a probability.
    pub rate_half_treated: Probability,
    /// |rate difference| at the peak.
    pub arr_maximal: f64,
    /// 1 / arr_maximal: the fewest patients per event prevented (or caused,
    /// for a harmful impact).
    pub nnt_maximal: f64,
}

/// Best-case effect of an impact. Zero impact is an error: 1/0 patients
/// per prevented event is undefined.
pub fn maximal_effect(impact: Impact) -> Result<MaximalEffect> {
    if impact.value() == 0.0 {
        return Err(Error::ZeroImpact);
    }
    let rate_half_control = weight_to_prob(Weight(-impact.value() / 2.0));
    let rate_half_treated = weight_to_prob(Weight(impact.value() / 2.0));
    let arr_maximal = (rate_half_control.value() - rate_half_treated.value()).abs();
    Ok(MaximalEffect {
        impact,
        rate_half_control,
        rate_half_treated,
        arr_maximal,
        nnt_maximal: 1.0 / arr_maximal,
    })
}
