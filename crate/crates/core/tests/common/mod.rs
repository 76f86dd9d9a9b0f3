#![allow(dead_code)]

use std::collections::HashSet;

use cpa_core::{SimpleGraph, WeightedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p).
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    SimpleGraph::from_edges(n, edges).unwrap()
}

/// `n` in `min_n..=max_n`, edge probability uniform in `[0.1, 0.9]`.
pub fn random_small_graph(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> SimpleGraph {
    let n = rng.gen_range(min_n..=max_n);
    let p = rng.gen_range(0.1..0.9);
    random_graph(rng, n, p)
}

/// Pairwise distinct weights in `(0, 1)`, in random order.
pub fn distinct_weights(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(m);
    while out.len() < m {
        let w: f64 = rng.gen_range(0.001..1.0);
        if seen.insert(w.to_bits()) {
            out.push(w);
        }
    }
    out
}

pub fn weighted(rng: &mut ChaCha8Rng, h: &SimpleGraph) -> WeightedGraph {
    let w = distinct_weights(rng, h.edge_count());
    WeightedGraph::new(h.n(), h.edges().zip(w).map(|(e, w)| (e.u(), e.v(), w))).unwrap()
}

/// Connected graph: a random spanning tree plus extra random edges, at most
/// `max_m` edges in total, with distinct weights.
pub fn random_connected_weighted(rng: &mut ChaCha8Rng, n: usize, max_m: usize) -> WeightedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let parent = order[rng.gen_range(0..i)];
            (order[i].min(parent), order[i].max(parent))
        })
        .collect();
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|p| !edges.contains(p))
        .collect();
    rest.shuffle(rng);
    let max_total = max_m.max(n - 1);
    let extra = rng.gen_range(0..=max_total - (n - 1)).min(rest.len());
    edges.extend(rest.into_iter().take(extra));
    let h = SimpleGraph::from_edges(n, edges).unwrap();
    weighted(rng, &h)
}

/// Orientations with no directed cycle, by enumeration.
pub fn acyclic_orientations(h: &SimpleGraph) -> u64 {
    let edges: Vec<(usize, usize)> = h.edges().map(|e| e.endpoints()).collect();
    let m = edges.len();
    let n = h.n();
    (0u64..1 << m)
        .filter(|mask| {
            let mut indeg = vec![0usize; n];
            let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (i, &(a, b)) in edges.iter().enumerate() {
                let (s, t) = if mask >> i & 1 == 1 { (b, a) } else { (a, b) };
                out[s].push(t);
                indeg[t] += 1;
            }
            let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
            let mut seen = 0;
            while let Some(v) = stack.pop() {
                seen += 1;
                for &w in &out[v] {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        stack.push(w);
                    }
                }
            }
            seen == n
        })
        .count() as u64
}
