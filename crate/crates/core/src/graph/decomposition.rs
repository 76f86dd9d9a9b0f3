use std::collections::BTreeSet;

use super::{DisjointSet, SimpleGraph};
use crate::error::{Error, Result};

/// Tree of vertex bags.
///
/// Valid for a graph when (1) every vertex and every edge lies in some bag,
/// (2) the bags holding any vertex form a connected subtree, and (3) the bag
/// adjacency is a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Bags are sorted internally; no validity check is made here.
    pub fn new(mut bags: Vec<Vec<usize>>, tree: Vec<(usize, usize)>) -> Self {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        TreeDecomposition { bags, tree }
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree
    }

    /// Largest bag size minus one; `0` for a decomposition with no bags.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn validate(&self, h: &SimpleGraph) -> Result<()> {
        let k = self.bags.len();
        let fail = |msg: String| Err(Error::InvalidDecomposition(msg));
        if h.n() > 0 && k == 0 {
            return fail("no bags".into());
        }
        if let Some(b) = self.bags.iter().flatten().find(|&&v| v >= h.n()) {
            return fail(format!("bag mentions vertex {b} outside the graph"));
        }
        // tree: k - 1 edges, connected, in range
        if k > 0 && self.tree.len() != k - 1 {
            return fail(format!("{} tree edges for {k} bags", self.tree.len()));
        }
        let mut ds = DisjointSet::new(k);
        for &(a, b) in &self.tree {
            if a >= k || b >= k {
                return fail(format!("tree edge ({a}, {b}) out of range"));
            }
            if !ds.union(a, b) {
                return fail(format!("tree edge ({a}, {b}) closes a cycle"));
            }
        }
        // coverage
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                holders[v].push(i);
            }
        }
        if let Some(v) = holders.iter().position(Vec::is_empty) {
            return fail(format!("vertex {v} is in no bag"));
        }
        for e in h.edges() {
            let (u, v) = e.endpoints();
            let covered = holders[u]
                .iter()
                .any(|&i| self.bags[i].binary_search(&v).is_ok());
            if !covered {
                return fail(format!("edge ({u}, {v}) is in no bag"));
            }
        }
        // running intersection: the bags holding v induce a connected subtree
        for (v, hold) in holders.iter().enumerate() {
            let mut local = DisjointSet::new(k);
            let inside: BTreeSet<usize> = hold.iter().copied().collect();
            for &(a, b) in &self.tree {
                if inside.contains(&a) && inside.contains(&b) {
                    local.union(a, b);
                }
            }
            let root = local.find(hold[0]);
            if hold.iter().any(|&i| local.find(i) != root) {
                return fail(format!("bags containing vertex {v} are not connected"));
            }
        }
        Ok(())
    }
}

/// Elimination ordering chosen greedily by minimum fill-in, ties broken by
/// degree then vertex id.
pub fn min_fill_ordering(h: &SimpleGraph) -> Vec<usize> {
    let n = h.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| h.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill_in(&adj, v), adj[v].len(), v))
            .expect("a vertex remains");
        let nbrs: Vec<usize> = adj[best].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &nbrs {
            adj[a].remove(&best);
        }
        adj[best].clear();
        alive[best] = false;
        order.push(best);
    }
    order
}

fn fill_in(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let nbrs: Vec<usize> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !adj[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Decomposition induced by an elimination ordering: one bag per vertex
/// (the vertex plus its later neighbours in the filled graph), attached to
/// the bag of the earliest-eliminated of those neighbours.
pub fn decomposition_from_ordering(h: &SimpleGraph, order: &[usize]) -> TreeDecomposition {
    let n = h.n();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| h.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = adj[v]
            .iter()
            .copied()
            .filter(|&w| position[w] > i)
            .collect();
        for (a_idx, &a) in later.iter().enumerate() {
            for &b in &later[a_idx + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        parent[i] = later.iter().map(|&w| position[w]).min();
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    let mut tree: Vec<(usize, usize)> = Vec::with_capacity(n.saturating_sub(1));
    let mut roots = Vec::new();
    for (i, p) in parent.iter().enumerate() {
        match p {
            Some(p) => tree.push((i, *p)),
            None => roots.push(i),
        }
    }
    // separate components: chain their roots together
    for w in roots.windows(2) {
        tree.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, tree)
}

/// Heuristic decomposition from the min-fill ordering. Its width is an upper
/// bound on the treewidth, exact on trees, cycles and complete graphs.
pub fn tree_decomposition(h: &SimpleGraph) -> TreeDecomposition {
    decomposition_from_ordering(h, &min_fill_ordering(h))
}
