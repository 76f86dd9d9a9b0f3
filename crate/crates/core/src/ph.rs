//! Graph persistent homology baseline: `b_0` and `b_1` of the threshold
//! subgraphs, and five scalar summaries.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_threshold_chain, DisjointSet, WeightedGraph};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhRecord<F = f64> {
    pub j: usize,
    /// Threshold divided by the largest threshold.
    pub tau: F,
    pub b0: usize,
    pub b1: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhTrace<F = f64> {
    pub n: usize,
    pub records: Vec<PhRecord<F>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhSummary<F = f64> {
    pub auc_b0: F,
    pub auc_b1: F,
    pub final_b1: usize,
    pub b1_jumps: usize,
    /// `tau` of the first event with `b1 > 0`, or `1` if there is none.
    pub b1_birth_norm: F,
}

/// Union-find sweep over the threshold chain. Weights must be positive.
pub fn run_ph_baseline<F: Real>(g: &WeightedGraph<F>) -> Result<PhTrace<F>> {
    let chain = build_threshold_chain(g)?;
    let Some(last) = chain.events().last() else {
        return Err(Error::InvalidInput("baseline needs at least one edge".into()));
    };
    let t_max = last.weight;
    if chain.events()[0].weight <= F::zero() {
        return Err(Error::InvalidInput("baseline needs positive weights".into()));
    }
    let n = chain.n();
    let mut ds = DisjointSet::new(n);
    let mut b1 = 0;
    let records = chain
        .events()
        .iter()
        .map(|ev| {
            if !ds.union(ev.edge.u(), ev.edge.v()) {
                b1 += 1;
            }
            PhRecord {
                j: ev.index,
                tau: ev.weight / t_max,
                b0: ds.set_count(),
                b1,
            }
        })
        .collect();
    Ok(PhTrace { n, records })
}

fn trapezoid<F: Real>(points: impl Iterator<Item = (F, F)>) -> F {
    let pts: Vec<(F, F)> = points.collect();
    let two = F::one() + F::one();
    pts.windows(2)
        .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / two)
        .fold(F::zero(), |a, b| a + b)
}

/// Trapezoid areas over `tau in [tau_1, 1]`, with `b0` divided by `n`.
pub fn summarize<F: Real>(trace: &PhTrace<F>) -> PhSummary<F> {
    let n = F::from(trace.n).expect("vertex count fits");
    let as_f = |k: usize| F::from(k).expect("count fits");
    let recs = &trace.records;
    let auc_b0 = trapezoid(recs.iter().map(|r| (r.tau, as_f(r.b0) / n)));
    let auc_b1 = trapezoid(recs.iter().map(|r| (r.tau, as_f(r.b1))));
    let final_b1 = recs.last().map_or(0, |r| r.b1);
    let b1_jumps = recs
        .iter()
        .scan(0, |prev, r| {
            let up = r.b1 > *prev;
            *prev = r.b1;
            Some(up)
        })
        .filter(|&up| up)
        .count();
    let b1_birth_norm = recs.iter().find(|r| r.b1 > 0).map_or(F::one(), |r| r.tau);
    PhSummary {
        auc_b0,
        auc_b1,
        final_b1,
        b1_jumps,
        b1_birth_norm,
    }
}

impl<F: Real> PhTrace<F> {
    /// Columns `j,tau,b0,b1`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,tau,b0,b1\n");
        for r in &self.records {
            out.push_str(&format!("{},{},{},{}\n", r.j, r.tau, r.b0, r.b1));
        }
        out
    }
}

impl<F: Real> PhSummary<F> {
    pub fn to_vec(&self) -> Vec<F> {
        let as_f = |k: usize| F::from(k).expect("count fits");
        vec![
            self.auc_b0,
            self.auc_b1,
            as_f(self.final_b1),
            as_f(self.b1_jumps),
            self.b1_birth_norm,
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> WeightedGraph {
        WeightedGraph::new(
            5,
            [(0, 1, 0.1), (1, 2, 0.2), (2, 3, 0.15), (3, 4, 0.25), (4, 0, 0.95)],
        )
        .unwrap()
    }

    #[test]
    fn single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 0.4)]).unwrap();
        let t = run_ph_baseline(&g).unwrap();
        assert_eq!(t.records, vec![PhRecord { j: 1, tau: 1.0, b0: 1, b1: 0 }]);
        let s = summarize(&t);
        assert_eq!((s.auc_b0, s.auc_b1, s.b1_birth_norm), (0.0, 0.0, 1.0));
    }

    #[test]
    fn cycle_born_at_last_event() {
        let t = run_ph_baseline(&c5()).unwrap();
        let b1: Vec<usize> = t.records.iter().map(|r| r.b1).collect();
        assert_eq!(b1, vec![0, 0, 0, 0, 1]);
        let s = summarize(&t);
        assert_eq!((s.final_b1, s.b1_jumps, s.b1_birth_norm), (1, 1, 1.0));
        assert!(t.to_csv().starts_with("j,tau,b0,b1\n1,"));
    }

    #[test]
    fn forest_with_two_edges() {
        let g = WeightedGraph::new(4, [(0, 1, 1.0f64), (2, 3, 2.0)]).unwrap();
        let t = run_ph_baseline(&g).unwrap();
        let b0: Vec<usize> = t.records.iter().map(|r| r.b0).collect();
        assert_eq!(b0, vec![3, 2]);
        let s = summarize(&t);
        assert_eq!(s.to_vec()[1..], [0.0, 0.0, 0.0, 1.0]);
        // b0/n goes 0.75 -> 0.5 over tau 0.5 -> 1
        assert!((s.auc_b0 - 0.3125).abs() < 1e-12);
    }

    #[test]
    fn single_precision() {
        let g: WeightedGraph<f32> = c5().map_weights(|w| w as f32).unwrap();
        let s = summarize(&run_ph_baseline(&g).unwrap());
        assert_eq!(s.b1_birth_norm, 1.0f32);
    }

    #[test]
    fn rejects_nonpositive_weights_and_empty_graphs() {
        let g = WeightedGraph::new(2, [(0, 1, 0.0)]).unwrap();
        assert!(run_ph_baseline(&g).is_err());
        assert!(run_ph_baseline(&WeightedGraph::<f64>::new(2, []).unwrap()).is_err());
    }
}
