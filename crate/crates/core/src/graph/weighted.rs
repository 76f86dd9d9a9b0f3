use std::cmp::Ordering;
use std::collections::HashSet;

use super::{Edge, SimpleGraph};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedEdge<W = f64> {
    pub edge: Edge,
    pub weight: W,
}

/// Simple graph with a finite real weight on every edge.
///
/// Weights are not required to be distinct here; that requirement belongs to
/// [`build_threshold_chain`], which is the only consumer that depends on it.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph<W = f64> {
    n: usize,
    edges: Vec<WeightedEdge<W>>,
}

impl<W: Real> WeightedGraph<W> {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, W)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b, w) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) references a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if !w.is_finite() {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) has weight {w}")));
            }
            let edge = Edge::new(a, b);
            if !seen.insert(edge) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
            out.push(WeightedEdge { edge, weight: w });
        }
        Ok(WeightedGraph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[WeightedEdge<W>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.n, self.edges.iter().map(|e| e.edge.endpoints()))
            .expect("validated on construction")
    }

    /// Apply `f` to every weight. The result is revalidated (finiteness).
    pub fn map_weights<V: Real>(&self, mut f: impl FnMut(W) -> V) -> Result<WeightedGraph<V>> {
        WeightedGraph::new(
            self.n,
            self.edges.iter().map(|e| (e.edge.u(), e.edge.v(), f(e.weight))),
        )
    }
}

/// One edge insertion of a threshold chain; `index` runs from 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChainEvent<W = f64> {
    pub index: usize,
    pub edge: Edge,
    pub weight: W,
}

/// Edge insertions in strictly increasing weight order. The `j`-th prefix
/// spans the threshold subgraph `H_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdChain<W = f64> {
    n: usize,
    events: Vec<ChainEvent<W>>,
}

impl<W: Real> ThresholdChain<W> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn events(&self) -> &[ChainEvent<W>] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// `H_j`, the graph spanned by the first `j` events.
    pub fn subgraph(&self, j: usize) -> SimpleGraph {
        SimpleGraph::from_edges(self.n, self.events[..j].iter().map(|e| e.edge.endpoints()))
            .expect("chain edges are simple")
    }
}

/// Sort edges by weight into a threshold chain.
///
/// Ties have no canonical resolution (they would change which subgraphs
/// appear), so equal weights are rejected.
pub fn build_threshold_chain<W: Real>(g: &WeightedGraph<W>) -> Result<ThresholdChain<W>> {
    let mut edges = g.edges().to_vec();
    edges.sort_by(|a, b| {
        a.weight
            .partial_cmp(&b.weight)
            .unwrap_or(Ordering::Equal)
            .then(a.edge.cmp(&b.edge))
    });
    if let Some(pair) = edges.windows(2).find(|w| w[0].weight == w[1].weight) {
        return Err(Error::DuplicateWeight {
            weight: pair[0].weight.to_string(),
            first_u: pair[0].edge.u(),
            first_v: pair[0].edge.v(),
            second_u: pair[1].edge.u(),
            second_v: pair[1].edge.v(),
        });
    }
    let events = edges
        .into_iter()
        .enumerate()
        .map(|(i, e)| ChainEvent {
            index: i + 1,
            edge: e.edge,
            weight: e.weight,
        })
        .collect();
    Ok(ThresholdChain { n: g.n(), events })
}
