//! Ring-size recognition: `C_5` against `C_6` cycles whose closing edge
//! arrives last, classified by leave-one-out 1-NN on CPA Betti blocks and on
//! the persistence baseline summaries.

mod dataset;
mod eval;
mod features;

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use dataset::{
    dataset_manifest, generate_dataset, generate_instance, CycleClass, Instance, CLOSER_WEIGHT,
    INSTANCES_PER_CLASS, TREE_WEIGHT_RANGE,
};
pub use eval::{loo_1nn, mcnemar, mcnemar_chi2, McNemar};
pub use features::{vectorize_baseline, vectorize_cpa, FeatureVector, Layout};

use crate::cpa::run_cpa;
use crate::error::Result;
use crate::ph::{run_ph_baseline, summarize};

pub const DEFAULT_SEED: u64 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub pad_events: usize,
    pub pad_betti: usize,
    /// Timed repeats per graph; the median is kept.
    pub repeats: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            seed: DEFAULT_SEED,
            pad_events: 6,
            pad_betti: 7,
            repeats: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictionRow {
    pub index: usize,
    pub label: CycleClass,
    pub cpa: CycleClass,
    pub baseline: CycleClass,
}

/// Deterministic outcome of a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    pub seed: u64,
    pub instances: usize,
    pub accuracy_cpa: f64,
    pub accuracy_baseline: f64,
    pub mcnemar_b: usize,
    pub mcnemar_c: usize,
    pub mcnemar_chi2: f64,
    pub predictions: Vec<PredictionRow>,
}

/// Mean over graphs of the per-graph median wall-clock time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub cpa_ms: f64,
    pub baseline_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentOutput {
    pub report: EvalReport,
    pub timings: Timings,
}

fn median_time(repeats: usize, mut f: impl FnMut() -> Result<()>) -> Result<Duration> {
    let mut times = Vec::with_capacity(repeats.max(1));
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        f()?;
        times.push(start.elapsed());
    }
    times.sort();
    Ok(times[times.len() / 2])
}

fn mean_ms(times: &[Duration]) -> f64 {
    times.iter().map(|t| t.as_secs_f64() * 1e3).sum::<f64>() / times.len().max(1) as f64
}

pub fn run_experiment(config: ExperimentConfig) -> Result<ExperimentOutput> {
    let data = generate_dataset(config.seed);
    let labels: Vec<CycleClass> = data.iter().map(|i| i.label).collect();
    let mut cpa_features = Vec::with_capacity(data.len());
    let mut base_features = Vec::with_capacity(data.len());
    let mut cpa_times = Vec::with_capacity(data.len());
    let mut base_times = Vec::with_capacity(data.len());
    for inst in &data {
        let r = run_cpa(&inst.graph)?;
        cpa_features.push(vectorize_cpa::<f64, f64>(&r, config.pad_events, config.pad_betti)?);
        let s = summarize(&run_ph_baseline(&inst.graph)?);
        base_features.push(vectorize_baseline(&s));
        cpa_times.push(median_time(config.repeats, || {
            let r = run_cpa(&inst.graph)?;
            vectorize_cpa::<f64, f64>(&r, config.pad_events, config.pad_betti).map(drop)
        })?);
        base_times.push(median_time(config.repeats, || {
            run_ph_baseline(&inst.graph).map(|t| drop(vectorize_baseline(&summarize(&t))))
        })?);
    }
    let (accuracy_cpa, pred_cpa) = loo_1nn(&cpa_features, &labels)?;
    let (accuracy_baseline, pred_base) = loo_1nn(&base_features, &labels)?;
    let test = mcnemar(&pred_base, &pred_cpa, &labels)?;
    let predictions = (0..data.len())
        .map(|i| PredictionRow {
            index: i,
            label: labels[i],
            cpa: pred_cpa[i],
            baseline: pred_base[i],
        })
        .collect();
    Ok(ExperimentOutput {
        report: EvalReport {
            seed: config.seed,
            instances: data.len(),
            accuracy_cpa,
            accuracy_baseline,
            mcnemar_b: test.b,
            mcnemar_c: test.c,
            mcnemar_chi2: test.chi2,
            predictions,
        },
        timings: Timings {
            cpa_ms: mean_ms(&cpa_times),
            baseline_ms: mean_ms(&base_times),
        },
    })
}

impl ExperimentOutput {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Table with columns Method, Accuracy (LOO), Avg. time / graph (ms),
/// followed by the McNemar line.
impl fmt::Display for ExperimentOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.report;
        writeln!(f, "{:<20} {:>14} {:>24}", "Method", "Accuracy (LOO)", "Avg. time / graph (ms)")?;
        writeln!(
            f,
            "{:<20} {:>14.2} {:>24.3}",
            "PH baseline", r.accuracy_baseline, self.timings.baseline_ms
        )?;
        writeln!(f, "{:<20} {:>14.2} {:>24.3}", "CPA", r.accuracy_cpa, self.timings.cpa_ms)?;
        write!(
            f,
            "McNemar: b={} c={} chi2={:.2} (seed {}, {} graphs)",
            r.mcnemar_b, r.mcnemar_c, r.mcnemar_chi2, r.seed, r.instances
        )
    }
}
