//! `probspace`: analyze probabilities on the base-10 log-odds scale from
//! the command line. Converts single values, analyzes 2x2 count tables and
//! proportion samples from CSV, chains diagnostic impacts, projects trial
//! effects over time, and pools or corrects certainty values.

mod input;
mod output;

use std::num::NonZeroU32;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};
use probspace::{
    analyze_2x2, analyze_2x2_corrected, combine_certainties, fit_tau, is_saturated,
    maximal_effect, multiplicity_adjust, project, prob_to_weight, regression_certainty,
    replication_probability, run_chain, sample_stats, test_characteristics, two_sample_w_test,
    weight_to_prob, Certainty, ChainReport, ContingencyReport, Impact, Pretest, Probability,
    TestCharacteristics, TwoByTwoTable, VarianceModel, Weight,
};

use input::{read_sample_csv, read_table_csv};
use output::{render, Format, Record};

#[derive(Parser)]
#[command(name = "probspace", version, about = "Statistics on the base-10 log-odds scale")]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between a probability and its log-odds weight.
    Convert {
        /// Probability strictly inside (0, 1).
        #[arg(long, allow_negative_numbers = true, conflicts_with = "weight")]
        prob: Option<f64>,
        /// Log-odds weight.
        #[arg(long, allow_negative_numbers = true)]
        weight: Option<f64>,
    },
    /// Analyze 2x2 event tables: effect size, confidence interval,
    /// certainty, rates, and derived clinical statistics.
    Table {
        /// CSV file with header `label,a,b,c,d`, one table per row.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Events in the treated/exposed group.
        #[arg(long)]
        a: Option<u64>,
        /// Events in the control group.
        #[arg(long)]
        b: Option<u64>,
        /// Non-events in the treated/exposed group.
        #[arg(long)]
        c: Option<u64>,
        /// Non-events in the control group.
        #[arg(long)]
        d: Option<u64>,
        /// Label for an inline table.
        #[arg(long, default_value = "table")]
        label: String,
        /// Add 0.5 to every cell so tables with empty cells stay analyzable.
        #[arg(long)]
        haldane: bool,
    },
    /// Diagnostic-test characteristics: sensitivity, specificity, and the
    /// weight shifts of positive and negative results.
    Testchar {
        /// CSV-free inline counts, as in `table`.
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        /// Published sensitivity, if counts are unavailable.
        #[arg(long, requires = "spec", conflicts_with_all = ["a", "b", "c", "d"])]
        sens: Option<f64>,
        /// Published specificity, if counts are unavailable.
        #[arg(long, requires = "sens")]
        spec: Option<f64>,
    },
    /// Chain impacts onto a pretest state and report each posttest step.
    Chain {
        /// Pretest log-odds weight.
        #[arg(long, allow_negative_numbers = true, conflicts_with = "pretest_p")]
        pretest_w: Option<f64>,
        /// Pretest probability strictly inside (0, 1).
        #[arg(long, allow_negative_numbers = true)]
        pretest_p: Option<f64>,
        /// Comma-separated impacts, applied in order.
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        impacts: Vec<f64>,
    },
    /// Project an impact to a time horizon under an exponential event model.
    Project {
        /// Effect size in log-odds units.
        #[arg(long, allow_negative_numbers = true)]
        impact: f64,
        /// Time constant in years, if already fitted.
        #[arg(long, conflicts_with_all = ["control_rate", "duration"])]
        tau: Option<f64>,
        /// Control-arm event rate observed over `--duration`.
        #[arg(long, requires = "duration")]
        control_rate: Option<f64>,
        /// Trial duration in years.
        #[arg(long, requires = "control_rate")]
        duration: Option<f64>,
        /// Horizon to project to, in years.
        #[arg(long)]
        horizon: f64,
    },
    /// Best-case absolute effect of an impact over all baseline rates.
    Maximal {
        /// Effect size in log-odds units.
        #[arg(long, allow_negative_numbers = true)]
        impact: f64,
    },
    /// Pool study certainties with the conservatism correction.
    Combine {
        /// Comma-separated certainty values, one per study.
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        certainties: Vec<f64>,
        /// Apply the extra one-unit penalty for non-normal data.
        #[arg(long)]
        not_normal: bool,
    },
    /// Shrink a certainty for the number of comparisons performed.
    Adjust {
        #[arg(long, allow_negative_numbers = true)]
        certainty: f64,
        /// How many looks at the data the certainty must pay for.
        #[arg(long)]
        comparisons: NonZeroU32,
    },
    /// Chance that an identical replication reaches p < 0.05 on its own.
    Replication {
        #[arg(long, allow_negative_numbers = true)]
        certainty: f64,
    },
    /// Certainty of a regression slope from its fit quality.
    Regress {
        /// Coefficient of determination, in [0, 1).
        #[arg(long)]
        r_squared: f64,
        /// Number of points the regression was fitted to (at least 3).
        #[arg(long)]
        n: usize,
    },
    /// Summarize labeled proportion samples, or compare two of them.
    Sample {
        /// CSV file with header `label,value`, values strictly inside (0, 1).
        #[arg(long)]
        file: PathBuf,
        /// Compare instead of summarize; the file must hold exactly two labels.
        #[arg(long)]
        compare: bool,
        /// Use the pooled-variance model instead of unequal variances.
        #[arg(long, requires = "compare")]
        pooled: bool,
    },
}

enum CliError {
    /// Invalid data or a violated precondition: exit status 1.
    Domain(String),
    /// Arguments that cannot be dispatched at all: exit status 2.
    Usage(String),
}

impl From<probspace::Error> for CliError {
    fn from(e: probspace::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    // Nothing reaches the primary stream until the whole run has succeeded.
    match run(cli.command) {
        Ok(records) => print!("{}", render(&records, cli.format)),
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            process::exit(1);
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<Vec<Record>, CliError> {
    match command {
        Command::Convert { prob, weight } => convert(prob, weight),
        Command::Table { file, a, b, c, d, label, haldane } => {
            table(file, inline_counts(a, b, c, d)?, label, haldane)
        }
        Command::Testchar { a, b, c, d, sens, spec } => {
            testchar(inline_counts(a, b, c, d)?, sens, spec)
        }
        Command::Chain { pretest_w, pretest_p, impacts } => chain(pretest_w, pretest_p, &impacts),
        Command::Project { impact, tau, control_rate, duration, horizon } => {
            horizon_projection(impact, tau, control_rate, duration, horizon)
        }
        Command::Maximal { impact } => {
            let best = maximal_effect(Impact::new(impact)?)?;
            Ok(vec![Record::new()
                .float("impact", best.impact.value())
                .float("rate_half_control", best.rate_half_control.value())
                .float("rate_half_treated", best.rate_half_treated.value())
                .float("arr_maximal", best.arr_maximal)
                .float("nnt_maximal", best.nnt_maximal)])
        }
        Command::Combine { certainties, not_normal } => {
            let cs: Vec<Certainty> =
                certainties.iter().map(|&c| Certainty::new(c)).collect::<Result<_, _>>()?;
            let combined = combine_certainties(&cs, !not_normal)?;
            Ok(vec![Record::new()
                .float("raw_sum", combined.raw_sum.value())
                .float("corrected", combined.corrected.value())
                .uint("study_count", combined.study_count as u64)
                .bool("normal_data", combined.normal_data)])
        }
        Command::Adjust { certainty, comparisons } => {
            let adjusted = multiplicity_adjust(Certainty::new(certainty)?, comparisons);
            Ok(vec![Record::new()
                .float("certainty", certainty)
                .uint("comparisons", u64::from(comparisons.get()))
                .float("adjusted", adjusted.value())])
        }
        Command::Replication { certainty } => {
            let estimate = replication_probability(Certainty::new(certainty)?);
            Ok(vec![Record::new()
                .float("c", estimate.c.value())
                .float("probability_replicates", estimate.probability_replicates.value())])
        }
        Command::Regress { r_squared, n } => {
            let fit = regression_certainty(r_squared, n)?;
            Ok(vec![Record::new().float("t", fit.t).float("p", fit.p).float("c", fit.c.value())])
        }
        Command::Sample { file, compare, pooled } => sample(&file, compare, pooled),
    }
}

/// Inline 2x2 counts are all-or-nothing.
fn inline_counts(
    a: Option<u64>,
    b: Option<u64>,
    c: Option<u64>,
    d: Option<u64>,
) -> Result<Option<TwoByTwoTable>, CliError> {
    match (a, b, c, d) {
        (Some(a), Some(b), Some(c), Some(d)) => Ok(Some(TwoByTwoTable::new(a, b, c, d))),
        (None, None, None, None) => Ok(None),
        _ => Err(CliError::Usage("provide all of --a, --b, --c, --d or none of them".to_owned())),
    }
}

fn convert(prob: Option<f64>, weight: Option<f64>) -> Result<Vec<Record>, CliError> {
    let (p, w) = match (prob, weight) {
        (Some(prob), None) => {
            let p = Probability::new(prob)?;
            (p, prob_to_weight(p))
        }
        (None, Some(weight)) => {
            let w = Weight::new(weight)?;
            (weight_to_prob(w), w)
        }
        _ => return Err(CliError::Usage("provide exactly one of --prob or --weight".to_owned())),
    };
    Ok(vec![Record::new()
        .float("probability", p.value())
        .float("weight", w.value())
        .float("odds", p.odds())])
}

fn table(
    file: Option<PathBuf>,
    inline: Option<TwoByTwoTable>,
    label: String,
    haldane: bool,
) -> Result<Vec<Record>, CliError> {
    let tables = match (file, inline) {
        (Some(path), None) => read_table_csv(&path).map_err(CliError::Domain)?,
        (None, Some(table)) => vec![(label, table)],
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("provide either --file or inline counts, not both".to_owned()))
        }
        (None, None) => {
            return Err(CliError::Usage("provide --file or inline counts --a --b --c --d".to_owned()))
        }
    };
    tables
        .into_iter()
        .map(|(label, table)| {
            let report =
                if haldane { analyze_2x2_corrected(&table) } else { analyze_2x2(&table)? };
            Ok(contingency_record(&label, &report))
        })
        .collect()
}

fn contingency_record(label: &str, r: &ContingencyReport) -> Record {
    let mut record = Record::new()
        .text("label", label)
        .float("odds_ratio", r.odds_ratio)
        .float("impact", r.impact.value())
        .float("se_ln_or", r.se_ln_or)
        .float("se_log10_or", r.se_log10_or)
        .float("ci95_low", r.ci95_low.value())
        .float("ci95_high", r.ci95_high.value())
        .float("t_stat", r.t_stat)
        .float("p_t", r.p_t)
        .float("c_t", r.c_t.value())
        .float("chi_square", r.chi_square)
        .float("p_chi", r.p_chi)
        .float("c_chi", r.c_chi.value())
        .float("control_rate", r.control_rate.value())
        .float("treated_rate", r.treated_rate.value())
        .float("arr", r.arr)
        .float("rr", r.rr)
        .float("rrr", r.rrr)
        .float("nnt", r.nnt)
        .float("weight_control", r.weight_control.value())
        .float("weight_treated", r.weight_treated.value())
        .float("impact_from_weights", r.impact_from_weights.value())
        .text("impact_band", r.impact_band.to_string())
        .text("certainty_band", r.certainty_band.to_string());
    if is_saturated(r.p_t) || is_saturated(r.p_chi) {
        record = record.note(
            "a tail probability is saturated at the smallest positive double; \
             the exact value is even smaller",
        );
    }
    if let Some(caveat) = r.certainty_band.caveat() {
        record = record.note(caveat);
    }
    record
}

fn testchar(
    inline: Option<TwoByTwoTable>,
    sens: Option<f64>,
    spec: Option<f64>,
) -> Result<Vec<Record>, CliError> {
    let tc = match (inline, sens, spec) {
        (Some(table), None, None) => test_characteristics(&table)?,
        (None, Some(sens), Some(spec)) => {
            TestCharacteristics::from_rates(Probability::new(sens)?, Probability::new(spec)?)
        }
        _ => {
            return Err(CliError::Usage(
                "provide counts --a --b --c --d or rates --sens --spec".to_owned(),
            ))
        }
    };
    Ok(vec![Record::new()
        .float("sensitivity", tc.sensitivity.value())
        .float("specificity", tc.specificity.value())
        .float("i_plus", tc.i_plus.value())
        .float("i_minus", tc.i_minus.value())
        .float("i_test", tc.i_test.value())])
}

fn chain(
    pretest_w: Option<f64>,
    pretest_p: Option<f64>,
    impacts: &[f64],
) -> Result<Vec<Record>, CliError> {
    let pretest = match (pretest_w, pretest_p) {
        (Some(w), None) => Pretest::Weight(Weight::new(w)?),
        (None, Some(p)) => Pretest::Probability(Probability::new(p)?),
        _ => {
            return Err(CliError::Usage(
                "provide exactly one of --pretest-w or --pretest-p".to_owned(),
            ))
        }
    };
    let steps: Vec<(String, Impact)> = impacts
        .iter()
        .enumerate()
        .map(|(i, &impact)| Ok((format!("{}", i + 1), Impact::new(impact)?)))
        .collect::<Result<_, probspace::Error>>()?;
    Ok(vec![chain_record(&run_chain(pretest, steps))])
}

fn chain_record(report: &ChainReport) -> Record {
    let mut record = Record::new()
        .float("pretest_weight", report.pretest_weight.value())
        .float("pretest_probability", report.pretest_probability.value());
    for step in &report.steps {
        let field = |suffix: &str| format!("step_{}_{suffix}", step.label);
        record = record
            .float(&field("impact"), step.impact.value())
            .float(&field("running_weight"), step.running_weight.value())
            .float(&field("running_probability"), step.running_probability.value());
    }
    record
        .float("posttest_weight", report.posttest_weight.value())
        .float("posttest_probability", report.posttest_probability.value())
}

fn horizon_projection(
    impact: f64,
    tau: Option<f64>,
    control_rate: Option<f64>,
    duration: Option<f64>,
    horizon: f64,
) -> Result<Vec<Record>, CliError> {
    let tau = match (tau, control_rate, duration) {
        (Some(tau), None, None) => tau,
        (None, Some(rate), Some(duration)) => fit_tau(Probability::new(rate)?, duration)?,
        _ => {
            return Err(CliError::Usage(
                "provide --tau, or both --control-rate and --duration".to_owned(),
            ))
        }
    };
    let p = project(Impact::new(impact)?, tau, horizon)?;
    Ok(vec![Record::new()
        .float("tau", p.tau)
        .float("horizon", p.horizon)
        .float("control_rate", p.control_rate.value())
        .float("control_weight", p.control_weight.value())
        .float("treated_weight", p.treated_weight.value())
        .float("treated_rate", p.treated_rate.value())
        .float("arr", p.arr)])
}

fn sample(path: &std::path::Path, compare: bool, pooled: bool) -> Result<Vec<Record>, CliError> {
    let samples = read_sample_csv(path).map_err(CliError::Domain)?;
    if !compare {
        return samples
            .iter()
            .map(|sample| {
                let stats = sample_stats(sample)?;
                Ok(Record::new()
                    .text("label", sample.label())
                    .uint("n", sample.len() as u64)
                    .float("raw_mean", stats.raw_mean.value())
                    .float("raw_sd", stats.raw_sd)
                    .float("w_mean", stats.w_mean.value())
                    .float("w_sd", stats.w_sd)
                    .float("back_mean", stats.back_mean.value())
                    .float("back_sd", stats.back_sd)
                    .float("mean_difference", stats.mean_difference)
                    .float("sd_difference", stats.sd_difference))
            })
            .collect();
    }
    let [first, second] = samples.as_slice() else {
        return Err(CliError::Domain(format!(
            "comparison needs exactly two labeled samples, found {}",
            samples.len()
        )));
    };
    let model = if pooled { VarianceModel::Pooled } else { VarianceModel::Unequal };
    let test = two_sample_w_test(first, second, model)?;
    Ok(vec![Record::new()
        .text("label", format!("{} vs {}", second.label(), first.label()))
        .float("impact", test.impact.value())
        .float("t", test.t)
        .float("p", test.p)
        .float("c", test.c.value())
        .float("df", test.df)])
}
