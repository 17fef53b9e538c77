//! Full analysis of a 2x2 event table: odds ratio, impact, standard errors,
//! 95% confidence interval, t-based and chi-square-based certainty, group
//! rates and weights, absolute/relative risk measures, and diagnostic-test
//! characteristics.

use crate::dist::{chi_square_upper_p, student_t_two_sided_p, DegreesOfFreedom};
use crate::error::{Error, Result};
use crate::space::{
    certainty_for_report, classify_certainty, classify_impact, prob_to_weight, Certainty,
    CertaintyBand, Impact, ImpactBand, Probability, Weight,
};

/// Event counts for a treated/exposed group and a control/unexposed group.
///
/// `a` and `b` count subjects **with** the outcome (treated and control
/// respectively); `c` and `d` count subjects **without** it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoByTwoTable {
    /// Treated/exposed, with outcome.
    pub a: u64,
    /// Control/unexposed, with outcome.
    pub b: u64,
    /// Treated/exposed, no outcome.
    pub c: u64,
    /// Control/unexposed, no outcome.
    pub d: u64,
}

impl TwoByTwoTable {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Self {
        Self { a, b, c, d }
    }

    /// Total number of subjects.
    pub fn total(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }
}

/// Every statistic derived from one 2x2 table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContingencyReport {
    /// OR = ad/bc.
    pub odds_ratio: f64,
    /// I = log₁₀ OR.
    pub impact: Impact,
    /// Standard error of ln OR: √(1/a + 1/b + 1/c + 1/d).
    pub se_ln_or: f64,
    /// Standard error of log₁₀ OR: SE[ln OR]/ln 10.
    pub se_log10_or: f64,
    /// I − 1.96·SE[log₁₀ OR].
    pub ci95_low: Impact,
    /// I + 1.96·SE[log₁₀ OR].
    pub ci95_high: Impact,
    /// |I| / SE[log₁₀ OR].
    pub t_stat: f64,
    /// Two-sided t-tail of `t_stat` at n − 2 degrees of freedom.
    pub p_t: f64,
    /// `p_t` in log-odds units.
    pub c_t: Certainty,
    /// n(ad − bc)² / ((a+b)(c+d)(a+c)(b+d)), without continuity correction.
    pub chi_square: f64,
    /// Upper chi-square tail at 1 degree of freedom.
    pub p_chi: f64,
    /// `p_chi` in log-odds units.
    pub c_chi: Certainty,
    /// b/(b+d).
    pub control_rate: Probability,
    /// a/(a+c).
    pub treated_rate: Probability,
    /// Absolute risk reduction: control rate − treated rate (positive means
    /// the treated group did better).
    pub arr: f64,
    /// Relative risk: treated rate / control rate.
    pub rr: f64,
    /// Relative risk reduction: 1 − RR.
    pub rrr: f64,
    /// Number needed to treat: 1/ARR, signed, not rounded (±∞ when ARR = 0).
    pub nnt: f64,
    /// Control rate as a weight.
    pub weight_control: Weight,
    /// Treated rate as a weight.
    pub weight_treated: Weight,
    /// weight_treated − weight_control; algebraically equals `impact`.
    pub impact_from_weights: Impact,
    /// Effect-size band of `impact`.
    pub impact_band: ImpactBand,
    /// Certainty band of `c_t`.
    pub certainty_band: CertaintyBand,
}

/// Diagnostic-test view of a 2x2 table: how much a positive or negative
/// result shifts a pretest weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestCharacteristics {
    /// True-positive rate a/(a+b).
    pub sensitivity: Probability,
    /// True-negative rate d/(c+d).
    pub specificity: Probability,
    /// Weight shift of a positive result: log₁₀(sens/(1−spec)).
    pub i_plus: Impact,
    /// Weight shift of a negative result: log₁₀((1−sens)/spec).
    pub i_minus: Impact,
    /// i_plus − i_minus; equals log₁₀ OR of the table.
    pub i_test: Impact,
}

impl TestCharacteristics {
    /// Builds the characteristics directly from published sensitivity and
    /// specificity, for tests whose raw counts are not available.
    pub fn from_rates(sensitivity: Probability, specificity: Probability) -> Self {
        let sens = sensitivity.value();
        let spec = specificity.value();
        let i_plus = Impact((sens / (1.0 - spec)).log10());
        let i_minus = Impact(((1.0 - sens) / spec).log10());
        Self {
            sensitivity,
            specificity,
            i_plus,
            i_minus,
            i_test: i_plus - i_minus,
        }
    }
}

/// The shared computation, on (possibly 0.5-corrected) cell values.
///
/// `dof` is the t-test degrees of freedom, fixed by the caller so that the
/// corrected path can keep the uncorrected sample's n − 2 + 2 = n.
fn analyze_cells(a: f64, b: f64, c: f64, d: f64, dof: f64) -> ContingencyReport {
    let n = a + b + c + d;

    let odds_ratio = (a * d) / (b * c);
    let impact = Impact(odds_ratio.log10());

    let se_ln_or = (1.0 / a + 1.0 / b + 1.0 / c + 1.0 / d).sqrt();
    let se_log10_or = se_ln_or / std::f64::consts::LN_10;
    // The reference tables use the plain 1.96 normal multiplier, not a
    // t quantile, so the interval matches them verbatim.
    let ci95_low = Impact(impact.0 - 1.96 * se_log10_or);
    let ci95_high = Impact(impact.0 + 1.96 * se_log10_or);

    let t_stat = impact.0.abs() / se_log10_or;
    let p_t = student_t_two_sided_p(t_stat, DegreesOfFreedom(dof));
    let c_t = certainty_for_report(p_t);

    // Grouped so that transposing the table (swapping b and c) multiplies
    // the same floats in the same order: the statistic is bit-identical
    // under transposition.
    let chi_square = n * (a * d - b * c).powi(2) / (((a + b) * (c + d)) * ((a + c) * (b + d)));
    let p_chi = chi_square_upper_p(chi_square, DegreesOfFreedom(1.0))
        .expect("chi-square statistic is a square and therefore nonnegative");
    let c_chi = certainty_for_report(p_chi);

    let control_rate = Probability(b / (b + d));
    let treated_rate = Probability(a / (a + c));
    let arr = control_rate.0 - treated_rate.0;
    let rr = treated_rate.0 / control_rate.0;
    let rrr = 1.0 - rr;
    let nnt = 1.0 / arr;

    let weight_control = prob_to_weight(control_rate);
    let weight_treated = prob_to_weight(treated_rate);
    let impact_from_weights = weight_treated - weight_control;

    ContingencyReport {
        odds_ratio,
        impact,
        se_ln_or,
        se_log10_or,
        ci95_low,
        ci95_high,
        t_stat,
        p_t,
        c_t,
        chi_square,
        p_chi,
        c_chi,
        control_rate,
        treated_rate,
        arr,
        rr,
        rrr,
        nnt,
        weight_control,
        weight_treated,
        impact_from_weights,
        impact_band: classify_impact(impact),
        certainty_band: classify_certainty(c_t),
    }
}

/// Analyzes a 2x2 table. All four cells must be at least 1, because the
/// standard error of the log odds ratio sums reciprocal cells.
///
/// The t-test degrees of freedom are n − 2, the choice that reproduces the
/// published reference tables; their source never states one.
pub fn analyze_2x2(table: &TwoByTwoTable) -> Result<ContingencyReport> {
    for (cell, count) in [('a', table.a), ('b', table.b), ('c', table.c), ('d', table.d)] {
        if count == 0 {
            return Err(Error::ZeroCell { cell });
        }
    }
    let dof = (table.total() - 2) as f64;
    Ok(analyze_cells(
        table.a as f64,
        table.b as f64,
        table.c as f64,
        table.d as f64,
        dof,
    ))
}

/// Analyzes a 2x2 table after adding 0.5 to every cell, the classic
/// correction for tables with empty cells. Never applied implicitly:
/// callers opt in, and the report reflects the corrected cells throughout.
///
/// The t-test degrees of freedom stay tied to the effective counts
/// (corrected n − 2, which equals the raw total).
pub fn analyze_2x2_corrected(table: &TwoByTwoTable) -> ContingencyReport {
    let a = table.a as f64 + 0.5;
    let b = table.b as f64 + 0.5;
    let c = table.c as f64 + 0.5;
    let d = table.d as f64 + 0.5;
    let dof = a + b + c + d - 2.0;
    analyze_cells(a, b, c, d, dof)
}

/// Sensitivity, specificity and the weight shifts of a positive/negative
/// result, from test-vs-outcome counts.
///
/// Here the rows are read as test results: `a` true positives, `b` false
/// negatives, `c` false positives, `d` true negatives.
pub fn test_characteristics(table: &TwoByTwoTable) -> Result<TestCharacteristics> {
    let with_outcome = table.a + table.b;
    let without_outcome = table.c + table.d;
    if with_outcome == 0 {
        return Err(Error::EmptyGroup { group: "with-outcome" });
    }
    if without_outcome == 0 {
        return Err(Error::EmptyGroup { group: "without-outcome" });
    }
    let sens = table.a as f64 / with_outcome as f64;
    let spec = table.d as f64 / without_outcome as f64;
    if sens <= 0.0 || sens >= 1.0 {
        return Err(Error::DegenerateTest { name: "sensitivity", value: sens });
    }
    if spec <= 0.0 || spec >= 1.0 {
        return Err(Error::DegenerateTest { name: "specificity", value: spec });
    }
    Ok(TestCharacteristics::from_rates(
        Probability(sens),
        Probability(spec),
    ))
}
