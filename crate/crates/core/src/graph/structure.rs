//! Connectivity, blocks, and structural recognition.

use std::collections::BTreeMap;

use super::{DisjointSet, Edge, SimpleGraph};

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn components(h: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut ds = DisjointSet::new(h.n());
    for e in h.edges() {
        ds.union(e.u(), e.v());
    }
    let mut index_of_root: Vec<Option<usize>> = vec![None; h.n()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in 0..h.n() {
        let r = ds.find(v);
        match index_of_root[r] {
            Some(i) => out[i].push(v),
            None => {
                index_of_root[r] = Some(out.len());
                out.push(vec![v]);
            }
        }
    }
    out
}

pub fn component_count(h: &SimpleGraph) -> usize {
    let mut ds = DisjointSet::new(h.n());
    for e in h.edges() {
        ds.union(e.u(), e.v());
    }
    ds.set_count()
}

/// `|E| - n + c`: the number of independent cycles.
pub fn cycle_rank(h: &SimpleGraph) -> usize {
    h.edge_count() + component_count(h) - h.n()
}

/// Biconnected components as edge lists (Hopcroft–Tarjan, iterative).
///
/// Every edge lies in exactly one block. Bridges form single-edge blocks;
/// any block with two or more edges is 2-connected, so its edges all lie on
/// cycles. Isolated vertices belong to no block.
pub fn blocks(h: &SimpleGraph) -> Vec<Vec<Edge>> {
    const UNSEEN: usize = usize::MAX;
    let n = h.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut out = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN || h.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, next) = *frame;
            if next < h.degree(v) {
                frame.2 += 1;
                let w = h.neighbors(v)[next];
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(Edge::new(v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let tree_edge = Edge::new(u, v);
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == tree_edge {
                                break;
                            }
                        }
                        block.sort();
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Edges lying on at least one cycle (i.e. non-bridges), sorted.
pub fn cycle_edges(h: &SimpleGraph) -> Vec<Edge> {
    let mut out: Vec<Edge> = blocks(h)
        .into_iter()
        .filter(|b| b.len() > 1)
        .flatten()
        .collect();
    out.sort();
    out
}

/// Coarsest structural class, tested in order of specificity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Forest,
    /// Every component is a tree or a single cycle, and at least one is a
    /// cycle.
    TreesAndCycles,
    /// No `K_4` minor: every block reduces to an edge by series and parallel
    /// reductions.
    SeriesParallel,
    General,
}

impl GraphClass {
    pub fn is_series_parallel(self) -> bool {
        self != GraphClass::General
    }

    pub fn has_closed_form(self) -> bool {
        matches!(self, GraphClass::Forest | GraphClass::TreesAndCycles)
    }
}

/// True when every component is a tree or a cycle.
pub fn is_trees_and_cycles(h: &SimpleGraph) -> bool {
    components(h).iter().all(|comp| {
        let edges: usize = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        edges + 1 == comp.len() || (edges == comp.len() && comp.iter().all(|&v| h.degree(v) == 2))
    })
}

pub fn classify(h: &SimpleGraph) -> GraphClass {
    if cycle_rank(h) == 0 {
        return GraphClass::Forest;
    }
    if is_trees_and_cycles(h) {
        return GraphClass::TreesAndCycles;
    }
    let all_reduce = blocks(h)
        .iter()
        .all(|b| reduce_two_terminal(b, || (), |_, _| (), |_, _| ()).is_some());
    if all_reduce {
        GraphClass::SeriesParallel
    } else {
        GraphClass::General
    }
}

/// Reduce a block (a single edge, or a 2-connected edge set) to one edge by
/// repeated series reductions of degree-2 vertices and merging of parallel
/// edges, carrying a label on every edge.
///
/// `series(a, b)` labels the edge that replaces a path `x -a- m -b- y`;
/// `parallel(a, b)` labels the merge of two edges between the same pair.
/// Labels must be symmetric in the two terminals. Returns `None` when the
/// reduction gets stuck, which for a 2-connected block means it has a `K_4`
/// minor.
pub fn reduce_two_terminal<L: Clone>(
    block: &[Edge],
    leaf: impl Fn() -> L,
    series: impl Fn(&L, &L) -> L,
    parallel: impl Fn(&L, &L) -> L,
) -> Option<L> {
    let mut adj: BTreeMap<usize, BTreeMap<usize, L>> = BTreeMap::new();
    for e in block {
        adj.entry(e.u()).or_default().insert(e.v(), leaf());
        adj.entry(e.v()).or_default().insert(e.u(), leaf());
    }
    let mut work: Vec<usize> = adj.keys().rev().copied().collect();
    while adj.len() > 2 {
        let Some(m) = work.pop() else {
            return None;
        };
        let Some(nbrs) = adj.get(&m) else {
            continue;
        };
        if nbrs.len() != 2 {
            continue;
        }
        let mut it = nbrs.iter();
        let (&x, lx) = it.next().expect("degree two");
        let (&y, ly) = it.next().expect("degree two");
        let merged = series(lx, ly);
        adj.remove(&m);
        adj.get_mut(&x).expect("neighbour present").remove(&m);
        adj.get_mut(&y).expect("neighbour present").remove(&m);
        let label = match adj[&x].get(&y) {
            Some(existing) => parallel(existing, &merged),
            None => merged,
        };
        adj.get_mut(&x).expect("neighbour present").insert(y, label.clone());
        adj.get_mut(&y).expect("neighbour present").insert(x, label);
        work.push(y);
        work.push(x);
    }
    let mut rest = adj.iter();
    let (&x, nbrs) = rest.next()?;
    let (&y, _) = rest.next()?;
    nbrs.get(&y).cloned().filter(|_| x != y)
}
