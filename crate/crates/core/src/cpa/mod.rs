//! Event-driven persistence of the diagonal E-polynomial along a threshold
//! chain.
//!
//! Starting from `E_0 = s^n`, each inserted edge `e_j` subtracts the jump
//! `Delta_j = chi(H_j / e_j)(s)`, and the barcode zeta collects the factor
//! `(1 - T^j)^(-Delta_j)`.

mod verify;
mod zeta;

use std::time::{Duration, Instant};

use serde::Serialize;

pub use verify::{verify_correctness, Divergence, VerifyReport};
pub use zeta::{zeta_update, BarcodeZeta, ZetaSeries};

use crate::chromatic::{chi_auto_with, forest_chromatic, AutoOptions, EngineChoice, MemoTable};
use crate::error::Result;
use crate::graph::{build_threshold_chain, DisjointSet, Edge, SimpleGraph, WeightedGraph};
use crate::poly::{DiagonalEPolynomial, IntPolynomial, RationalPolynomial};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CpaOptions {
    pub auto: AutoOptions,
    /// Zeta truncation order; `None` means `m`.
    pub zeta_order: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CpaEvent<W = f64> {
    /// 1-based event index.
    pub j: usize,
    pub edge: Edge,
    pub weight: W,
    pub engine: EngineChoice,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CpaResult<W = f64> {
    pub n: usize,
    pub events: Vec<CpaEvent<W>>,
    /// `E_0, ..., E_m`.
    pub e_polys: Vec<DiagonalEPolynomial>,
    /// `Delta_1, ..., Delta_m`.
    pub jumps: Vec<DiagonalEPolynomial>,
    pub zeta: BarcodeZeta,
}

pub fn run_cpa<W: Real>(g: &WeightedGraph<W>) -> Result<CpaResult<W>> {
    run_cpa_with(g, &MemoTable::new(), CpaOptions::default())
}

/// While `H_j` stays acyclic no graph is built: `H_j / e_j` is then a
/// forest on `n - 1` vertices with `j - 1` edges.
pub fn run_cpa_with<W: Real>(
    g: &WeightedGraph<W>,
    memo: &MemoTable,
    opts: CpaOptions,
) -> Result<CpaResult<W>> {
    let chain = build_threshold_chain(g)?;
    let n = chain.n();
    let m = chain.len();
    let mut zeta = BarcodeZeta::new(opts.zeta_order.unwrap_or(m));
    let mut e_polys = Vec::with_capacity(m + 1);
    e_polys.push(DiagonalEPolynomial::edgeless(n));
    let mut jumps = Vec::with_capacity(m);
    let mut events = Vec::with_capacity(m);

    let mut components = DisjointSet::new(n);
    let mut acyclic = true;
    // built when the first cycle closes
    let mut h: Option<SimpleGraph> = None;
    for ev in chain.events() {
        let start = Instant::now();
        let (u, v) = ev.edge.endpoints();
        acyclic &= components.union(u, v);
        if let Some(h) = h.as_mut() {
            h.insert_edge(u, v);
        } else if !acyclic {
            h = Some(chain.subgraph(ev.index));
        }
        let (delta, engine) = if acyclic {
            (
                DiagonalEPolynomial::from_factored(forest_chromatic(n - 1, ev.index - 1)),
                EngineChoice::ClosedForm,
            )
        } else {
            let minor = h.as_ref().expect("built once cyclic").contract_edge(ev.edge)?;
            let (chi, engine) = chi_auto_with(&minor, memo, opts.auto);
            (DiagonalEPolynomial::from_poly(&chi), engine)
        };
        let e = e_polys.last().expect("E_0 present").sub(&delta);
        zeta.push(ev.index, &delta);
        e_polys.push(e);
        jumps.push(delta);
        events.push(CpaEvent {
            j: ev.index,
            edge: ev.edge,
            weight: ev.weight,
            engine,
            elapsed: start.elapsed(),
        });
    }
    Ok(CpaResult {
        n,
        events,
        e_polys,
        jumps,
        zeta,
    })
}

#[derive(Serialize)]
struct EventJson {
    j: usize,
    edge: [usize; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<f64>,
    delta: IntPolynomial,
    #[serde(rename = "E")]
    e: IntPolynomial,
    engine: EngineChoice,
}

#[derive(Serialize)]
struct ResultJson {
    n: usize,
    #[serde(rename = "E0")]
    e0: IntPolynomial,
    events: Vec<EventJson>,
    zeta: Vec<RationalPolynomial>,
}

impl<W: Real> CpaResult<W> {
    pub fn m(&self) -> usize {
        self.events.len()
    }

    pub fn final_e(&self) -> &DiagonalEPolynomial {
        self.e_polys.last().expect("E_0 present")
    }

    pub fn engines(&self) -> impl Iterator<Item = EngineChoice> + '_ {
        self.events.iter().map(|e| e.engine)
    }

    pub fn total_time(&self) -> Duration {
        self.events.iter().map(|e| e.elapsed).sum()
    }

    /// JSON depending only on the event order: weights and timings are left
    /// out, so monotone reweightings give identical bytes.
    pub fn to_json(&self) -> String {
        self.json(false)
    }

    /// As [`CpaResult::to_json`] with a `weight` on every event.
    pub fn to_json_with_weights(&self) -> String {
        self.json(true)
    }

    fn json(&self, weights: bool) -> String {
        let doc = ResultJson {
            n: self.n,
            e0: self.e_polys[0].to_poly(),
            events: self
                .events
                .iter()
                .zip(&self.jumps)
                .zip(&self.e_polys[1..])
                .map(|((ev, delta), e)| EventJson {
                    j: ev.j,
                    edge: [ev.edge.u(), ev.edge.v()],
                    weight: weights.then(|| ev.weight.to_f64().unwrap_or(f64::NAN)),
                    delta: delta.to_poly(),
                    e: e.to_poly(),
                    engine: ev.engine,
                })
                .collect(),
            zeta: self.zeta.series().coeffs().to_vec(),
        };
        serde_json::to_string(&doc).expect("result serialises")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::cycle_chromatic;
    use num_bigint::BigInt;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn edgeless_graph() {
        let g = WeightedGraph::<f64>::new(3, []).unwrap();
        let r = run_cpa(&g).unwrap();
        assert_eq!(r.e_polys.len(), 1);
        assert_eq!(r.final_e().to_poly(), p(&[0, 0, 0, 1]));
        assert!(r.jumps.is_empty());
        assert_eq!(r.zeta.series().coeffs(), &[RationalPolynomial::one()]);
    }

    #[test]
    fn single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 0.5)]).unwrap();
        let r = run_cpa(&g).unwrap();
        assert_eq!(r.jumps[0].to_poly(), p(&[0, 1]));
        assert_eq!(r.final_e().to_poly(), p(&[0, -1, 1]));
    }

    #[test]
    fn five_cycle_closing_last() {
        let g = WeightedGraph::new(
            5,
            [(0, 1, 0.1), (1, 2, 0.2), (2, 3, 0.15), (3, 4, 0.25), (4, 0, 0.95)],
        )
        .unwrap();
        let r = run_cpa(&g).unwrap();
        let s_minus_1 = p(&[-1, 1]);
        assert_eq!(r.e_polys[4].to_poly(), &p(&[0, 1]) * &s_minus_1.pow(4));
        assert_eq!(r.jumps[4].to_poly(), cycle_chromatic(4));
        assert_eq!(r.final_e().to_poly(), cycle_chromatic(5));
        assert!(r.engines().all(|e| e == EngineChoice::ClosedForm));
    }

    #[test]
    fn json_shape() {
        let g = WeightedGraph::new(2, [(0, 1, 0.5)]).unwrap();
        let r = run_cpa(&g).unwrap();
        assert_eq!(
            r.to_json(),
            r#"{"n":2,"E0":["0","0","1"],"events":[{"j":1,"edge":[0,1],"delta":["0","1"],"E":["0","-1","1"],"engine":"closed_form"}],"zeta":[["1"],["0","1"]]}"#
        );
        assert!(r.to_json_with_weights().contains(r#""weight":0.5"#));
    }

    #[test]
    fn duplicate_weights_are_rejected() {
        let g = WeightedGraph::new(3, [(0, 1, 0.5), (1, 2, 0.5)]).unwrap();
        assert!(matches!(run_cpa(&g), Err(crate::Error::DuplicateWeight { .. })));
    }
}
