use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cpa::CpaResult;
use crate::error::{Error, Result};
use crate::ph::PhSummary;
use crate::poly::betti_from_e;
use crate::scalar::Real;

/// Shape of a feature vector: `blocks` blocks of `width` slots each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Layout {
    pub blocks: usize,
    pub width: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeatureVector<F = f64> {
    pub values: Vec<F>,
    pub layout: Layout,
}

impl<F: Real> FeatureVector<F> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn block(&self, i: usize) -> &[F] {
        &self.values[i * self.layout.width..(i + 1) * self.layout.width]
    }

    pub fn distance(&self, other: &Self) -> F {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| (a - b) * (a - b))
            .fold(F::zero(), |acc, x| acc + x)
            .sqrt()
    }
}

/// Betti vectors of `H_1, ..., H_m`, each zero-padded to `pad_betti`, then
/// zero blocks up to `pad_events`.
pub fn vectorize_cpa<F: Real, W: Real>(
    r: &CpaResult<W>,
    pad_events: usize,
    pad_betti: usize,
) -> Result<FeatureVector<F>> {
    let m = r.m();
    if m > pad_events {
        return Err(Error::Padding(format!("{m} events but pad_events = {pad_events}")));
    }
    if r.n + 1 > pad_betti {
        return Err(Error::Padding(format!(
            "{} Betti numbers but pad_betti = {pad_betti}",
            r.n + 1
        )));
    }
    let mut values = Vec::with_capacity(pad_events * pad_betti);
    for e in &r.e_polys[1..] {
        for b in betti_from_e(e, r.n)?.padded(pad_betti)? {
            values.push(F::from(b.to_f64().unwrap_or(f64::INFINITY)).expect("finite cast"));
        }
    }
    values.resize(pad_events * pad_betti, F::zero());
    Ok(FeatureVector {
        values,
        layout: Layout {
            blocks: pad_events,
            width: pad_betti,
        },
    })
}

/// `[auc_b0, auc_b1, final_b1, b1_jumps, b1_birth_norm]`.
pub fn vectorize_baseline<F: Real>(s: &PhSummary<F>) -> FeatureVector<F> {
    FeatureVector {
        values: s.to_vec(),
        layout: Layout {
            blocks: 1,
            width: 5,
        },
    }
}
