//! Exact canonical graph keys and the shared memo table.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::graph::SimpleGraph;
use crate::poly::IntPolynomial;

/// Largest vertex count for which keys are canonical (isomorphism-invariant).
/// Larger graphs get an identity-labelled key.
pub const CANONICAL_MAX_VERTICES: usize = 10;

/// Exact adjacency key. Two canonical keys are equal iff the graphs are
/// isomorphic; identity keys are equal iff the labelled graphs are equal.
/// Keys never collide across the two kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphKey {
    n: usize,
    canonical: bool,
    bits: Vec<u64>,
}

impl GraphKey {
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Upper-triangle adjacency as a `0`/`1` string, row by row.
    pub fn adjacency_string(&self) -> String {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        (0..pairs)
            .map(|k| {
                if self.bits[k / 64] >> (k % 64) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn identity_key(h: &SimpleGraph) -> GraphKey {
    let n = h.n();
    let pairs = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; pairs.div_ceil(64).max(1)];
    for e in h.edges() {
        let k = pair_index(n, e.u(), e.v());
        bits[k / 64] |= 1 << (k % 64);
    }
    GraphKey {
        n,
        canonical: false,
        bits,
    }
}

/// Key for memoising graph invariants.
pub fn graph_key(h: &SimpleGraph) -> GraphKey {
    if h.n() > CANONICAL_MAX_VERTICES {
        return identity_key(h);
    }
    let code = canonical_code(h);
    GraphKey {
        n: h.n(),
        canonical: true,
        bits: vec![code],
    }
}

/// Minimum adjacency code over all labellings reachable by
/// individualisation and refinement.
///
/// Pair `(i, j)` of the relabelled graph sets bit `pair_index(i, j)`; with
/// `n <= 10` there are at most 45 pairs, so a code fits in a `u64`. The set
/// of leaves explored is isomorphism-invariant, and twins (vertices with the
/// same neighbourhood up to each other) are explored once since swapping
/// them is an automorphism fixing everything individualised so far.
pub fn canonical_code(h: &SimpleGraph) -> u64 {
    let n = h.n();
    assert!(n <= CANONICAL_MAX_VERTICES);
    if n <= 1 {
        return 0;
    }
    let mut adj = vec![0u16; n];
    for e in h.edges() {
        adj[e.u()] |= 1 << e.v();
        adj[e.v()] |= 1 << e.u();
    }
    let start = refine(&adj, vec![(0..n).collect()]);
    let mut best = u64::MAX;
    search(&adj, start, &mut best);
    best
}

type Partition = Vec<Vec<usize>>;

/// Equitable refinement of an ordered partition. Each cell is split by the
/// vector of neighbour counts into every cell, sub-cells ordered by that
/// vector, until nothing splits.
fn refine(adj: &[u16], mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|&m| (adj[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() != cells.len() {
            changed = true;
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn are_twins(adj: &[u16], a: usize, b: usize) -> bool {
    let without = !((1u16 << a) | (1u16 << b));
    adj[a] & without == adj[b] & without
}

fn search(adj: &[u16], cells: Partition, best: &mut u64) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let n = adj.len();
        let mut label = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            label[c[0]] = i;
        }
        let mut code = 0u64;
        for v in 0..n {
            let mut rest = adj[v];
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let (i, j) = (label[v], label[w]);
                if i < j {
                    code |= 1 << pair_index(n, i, j);
                }
            }
        }
        *best = (*best).min(code);
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if tried.iter().any(|&t| are_twins(adj, t, v)) {
            continue;
        }
        tried.push(v);
        let mut split = cells.clone();
        let rest: Vec<usize> = split[target].iter().copied().filter(|&w| w != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(adj, refine(adj, split), best);
    }
}

/// Chromatic polynomials keyed by [`GraphKey`].
///
/// Safe to share between threads: lookups take a read lock and inserts a
/// write lock, so a reader either misses an entry (and recomputes it) or
/// sees it complete.
#[derive(Default)]
pub struct MemoTable {
    map: RwLock<HashMap<GraphKey, IntPolynomial>>,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &GraphKey) -> Option<IntPolynomial> {
        self.map.read().expect("memo lock poisoned").get(key).cloned()
    }

    pub fn insert(&self, key: GraphKey, value: IntPolynomial) {
        self.map
            .write()
            .expect("memo lock poisoned")
            .entry(key)
            .or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().expect("memo lock poisoned").clear();
    }
}

impl std::fmt::Debug for MemoTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MemoTable").field("entries", &self.len()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn permuted(h: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
        SimpleGraph::from_edges(h.n(), h.edges().map(|e| (perm[e.u()], perm[e.v()]))).unwrap()
    }

    /// Reference canonical form: minimum over all n! labellings.
    fn brute_code(h: &SimpleGraph) -> u64 {
        fn rec(h: &SimpleGraph, perm: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut u64) {
            let n = h.n();
            if perm.len() == n {
                let mut code = 0u64;
                for e in h.edges() {
                    let (i, j) = (perm[e.u()].min(perm[e.v()]), perm[e.u()].max(perm[e.v()]));
                    code |= 1 << pair_index(n, i, j);
                }
                *best = (*best).min(code);
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    perm.push(x);
                    rec(h, perm, used, best);
                    perm.pop();
                    used[x] = false;
                }
            }
        }
        let mut best = u64::MAX;
        rec(h, &mut Vec::new(), &mut vec![false; h.n()], &mut best);
        if h.n() <= 1 {
            0
        } else {
            best
        }
    }

    fn arb_graph_on(n: usize) -> impl Strategy<Value = SimpleGraph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges = pairs.iter().zip(mask).filter(|(_, m)| *m).map(|(p, _)| *p);
            SimpleGraph::from_edges(n, edges).unwrap()
        })
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
        (1..=max_n).prop_flat_map(arb_graph_on)
    }

    #[test]
    fn symmetric_graphs_are_cheap_and_consistent() {
        for n in 2..=10 {
            let k = SimpleGraph::complete(n);
            assert_eq!(canonical_code(&k).count_ones() as usize, n * (n - 1) / 2);
        }
        let c10 = SimpleGraph::cycle(10);
        let shuffled = permuted(&c10, &[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert_eq!(graph_key(&c10), graph_key(&shuffled));
    }

    #[test]
    fn non_isomorphic_graphs_differ() {
        // C_6 vs two triangles: same degree sequence
        let c6 = SimpleGraph::cycle(6);
        let two = SimpleGraph::cycle(3).disjoint_union(&SimpleGraph::cycle(3));
        assert_ne!(graph_key(&c6), graph_key(&two));
    }

    #[test]
    fn large_graphs_use_identity_keys() {
        let p = SimpleGraph::path(11);
        let key = graph_key(&p);
        assert!(!key.is_canonical());
        let rotated = permuted(&p, &(0..11).map(|i| (i + 1) % 11).collect::<Vec<_>>());
        assert_ne!(key, graph_key(&rotated));
        assert_eq!(graph_key(&SimpleGraph::path(3)).adjacency_string().len(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn code_describes_an_isomorphic_graph(h in arb_graph(7)) {
            let n = h.n();
            let code = canonical_code(&h);
            let decoded = SimpleGraph::from_edges(
                n,
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| code >> pair_index(n, i, j) & 1 == 1),
            ).unwrap();
            prop_assert_eq!(brute_code(&decoded), brute_code(&h));
        }

        #[test]
        fn equal_codes_iff_isomorphic((a, b) in (1..=6usize).prop_flat_map(|n| (arb_graph_on(n), arb_graph_on(n)))) {
            prop_assert_eq!(canonical_code(&a) == canonical_code(&b), brute_code(&a) == brute_code(&b));
        }

        #[test]
        fn invariant_under_relabelling(h in arb_graph(10), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..h.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(graph_key(&h), graph_key(&permuted(&h, &perm)));
        }
    }

    #[test]
    fn memo_table_basics() {
        let memo = MemoTable::new();
        let key = graph_key(&SimpleGraph::path(3));
        assert!(memo.get(&key).is_none());
        memo.insert(key.clone(), IntPolynomial::one());
        assert_eq!(memo.get(&key), Some(IntPolynomial::one()));
        assert_eq!(memo.len(), 1);
        memo.clear();
        assert!(memo.is_empty());
    }
}
