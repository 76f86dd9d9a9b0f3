use serde::Serialize;

use super::FeatureVector;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Leave-one-out 1-nearest-neighbour under Euclidean distance. Ties go to
/// the lowest index. Returns the accuracy and each instance's prediction.
pub fn loo_1nn<F: Real, L: Clone + PartialEq>(
    features: &[FeatureVector<F>],
    labels: &[L],
) -> Result<(f64, Vec<L>)> {
    let k = features.len();
    if k < 2 || labels.len() != k {
        return Err(Error::InvalidInput(format!(
            "need at least 2 instances with one label each, got {k} vectors and {} labels",
            labels.len()
        )));
    }
    if labels.iter().all(|l| *l == labels[0]) {
        return Err(Error::InvalidInput("need at least 2 classes".into()));
    }
    if features.iter().any(|f| f.len() != features[0].len()) {
        return Err(Error::InvalidInput("feature vectors differ in length".into()));
    }
    let predictions: Vec<L> = (0..k)
        .map(|i| {
            let mut best: Option<(usize, F)> = None;
            for j in (0..k).filter(|&j| j != i) {
                let d = features[i].distance(&features[j]);
                if best.is_none_or(|(_, bd)| d < bd) {
                    best = Some((j, d));
                }
            }
            labels[best.expect("another instance exists").0].clone()
        })
        .collect();
    let correct = predictions.iter().zip(labels).filter(|(p, l)| p == l).count();
    Ok((correct as f64 / k as f64, predictions))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct McNemar {
    /// Baseline correct, CPA wrong.
    pub b: usize,
    /// CPA correct, baseline wrong.
    pub c: usize,
    pub chi2: f64,
}

/// Continuity-corrected McNemar statistic `(|b - c| - 1)^2 / (b + c)`,
/// zero when there are no discordant pairs.
pub fn mcnemar<L: PartialEq>(baseline: &[L], cpa: &[L], labels: &[L]) -> Result<McNemar> {
    if baseline.len() != labels.len() || cpa.len() != labels.len() {
        return Err(Error::InvalidInput("prediction lengths differ".into()));
    }
    let mut b = 0;
    let mut c = 0;
    for ((pb, pc), l) in baseline.iter().zip(cpa).zip(labels) {
        match (pb == l, pc == l) {
            (true, false) => b += 1,
            (false, true) => c += 1,
            _ => {}
        }
    }
    Ok(McNemar {
        b,
        c,
        chi2: mcnemar_chi2(b, c),
    })
}

pub fn mcnemar_chi2(b: usize, c: usize) -> f64 {
    if b + c == 0 {
        return 0.0;
    }
    let diff = (b as f64 - c as f64).abs() - 1.0;
    diff * diff / (b + c) as f64
}
