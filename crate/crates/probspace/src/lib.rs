//! Statistics on the base-10 log-odds scale.
//!
//! Probabilities compress badly near 0 and 1: the step from 0.95 to 0.99 is
//! a far bigger claim than the step from 0.50 to 0.54, yet both cover four
//! points. This crate works in a coordinate where such steps are comparable:
//! every probability `p` becomes a **weight** `W = log₁₀(p/(1−p))`. In that
//! coordinate
//!
//! * effect sizes are plain differences of weights (**impacts**, numerically
//!   the base-10 log odds ratio),
//! * p-values become **certainties** (the same transform applied to the
//!   p-value, so −1.3 ≈ p 0.05 and −2 ≈ p 0.01),
//! * diagnostic tests and risk factors *add* their impacts to a pretest
//!   weight, and
//! * both impacts and certainties fall into small qualitative bands that are
//!   easy to carry around in one's head.
//!
//! On top of the coordinate itself the crate offers a full 2x2 contingency
//! analysis ([`analyze_2x2`]), summaries and t tests for samples of
//! proportions ([`sample_stats`], [`two_sample_w_test`]), sequential
//! evidence chains ([`run_chain`]), exponential projection of trial results
//! to longer horizons ([`project`], [`maximal_effect`]), and cross-study
//! corrections ([`combine_certainties`], [`multiplicity_adjust`],
//! [`replication_probability`], [`regression_certainty`]).
//!
//! The special functions behind the p-values (regularized incomplete gamma
//! and beta, accurate normal CDF and quantile) are implemented in
//! [`dist`] and exposed, since they are useful on their own.
//!
//! ```
//! use probspace::{analyze_2x2, CertaintyBand, ImpactBand, TwoByTwoTable};
//!
//! // deaths / survivors in a treated and a control arm
//! let table = TwoByTwoTable::new(464, 691, 1757, 1532);
//! let report = analyze_2x2(&table)?;
//!
//! assert!((report.impact.value() + 0.2325).abs() < 5e-5);
//! assert_eq!(report.impact_band, ImpactBand::High);
//! assert_eq!(report.certainty_band, CertaintyBand::VeryDifferentPhysicsLevel);
//! assert!((report.nnt - 9.811).abs() < 5e-4);
//! # Ok::<(), probspace::Error>(())
//! ```

pub mod chain;
pub mod contingency;
pub mod continuous;
pub mod dist;
pub mod error;
pub mod horizon;
pub mod meta;
pub mod space;

pub use chain::{run_chain, ChainReport, ChainStep, Pretest};
pub use contingency::{
    analyze_2x2, analyze_2x2_corrected, test_characteristics, ContingencyReport,
    TestCharacteristics, TwoByTwoTable,
};
pub use continuous::{
    sample_stats, two_sample_w_test, ProportionSample, SpaceComparison, TwoSampleTest,
    VarianceModel,
};
pub use dist::{
    chi_square_upper_p, is_saturated, log_gamma, normal_cdf, normal_quantile,
    reg_incomplete_beta, reg_lower_gamma, student_t_two_sided_p, DegreesOfFreedom,
};
pub use error::{Error, Result};
pub use horizon::{fit_tau, maximal_effect, project, HorizonProjection, MaximalEffect};
pub use meta::{
    combine_certainties, multiplicity_adjust, regression_certainty, replication_probability,
    CombinedCertainty, RegressionCertainty, ReplicationEstimate,
};
pub use space::{
    certainty_from_p, classify_certainty, classify_impact, impact_between, p_from_certainty,
    prob_to_weight, weight_to_prob, Certainty, CertaintyBand, Impact, ImpactBand, Probability,
    Weight,
};
