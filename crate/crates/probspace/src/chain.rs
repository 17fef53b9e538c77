//! Additive Bayes updating: a pretest weight plus an ordered sequence of
//! impacts (treatments applied, test results observed) gives a posttest
//! weight, with the full step-by-step trail retained.
//!
//! Sequential test impacts assume the tests are conditionally independent
//! given the outcome; that assumption is not checkable from the inputs and
//! is the caller's to defend.

use crate::space::{prob_to_weight, weight_to_prob, Impact, Probability, Weight};

/// Starting point of a chain, given in whichever coordinate is at hand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pretest {
    Probability(Probability),
    Weight(Weight),
}

impl Pretest {
    fn weight(self) -> Weight {
        match self {
            Pretest::Probability(p) => prob_to_weight(p),
            Pretest::Weight(w) => w,
        }
    }
}

/// One applied impact, with the cumulative state after it.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainStep {
    pub label: String,
    pub impact: Impact,
    pub running_weight: Weight,
    pub running_probability: Probability,
}

/// A complete chain evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub pretest_weight: Weight,
    pub pretest_probability: Probability,
    pub steps: Vec<ChainStep>,
    pub posttest_weight: Weight,
    pub posttest_probability: Probability,
}

/// Applies a sequence of labeled impacts to a pretest state.
///
/// The posttest weight is the pretest weight plus every impact in order;
/// each step records the running weight and its probability.
pub fn run_chain<L: Into<String>>(
    pretest: Pretest,
    impacts: impl IntoIterator<Item = (L, Impact)>,
) -> ChainReport {
    let pretest_weight = pretest.weight();
    let pretest_probability = weight_to_prob(pretest_weight);

    let mut running = pretest_weight;
    let steps: Vec<ChainStep> = impacts
        .into_iter()
        .map(|(label, impact)| {
            running = running + impact;
            ChainStep {
                label: label.into(),
                impact,
                running_weight: running,
                running_probability: weight_to_prob(running),
            }
        })
        .collect();

    ChainReport {
        pretest_weight,
        pretest_probability,
        posttest_weight: running,
        posttest_probability: weight_to_prob(running),
        steps,
    }
}
