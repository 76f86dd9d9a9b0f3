use std::fmt;

use crate::error::{Error, Result};

/// Undirected edge with endpoints stored in increasing order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Panics on a loop; graphs in this crate are simple.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges of a simple graph");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// Finite simple graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted, so two graphs with the same edge set
/// compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn edgeless(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = Self::edgeless(n);
        for e in edges {
            let (a, b) = e.into();
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) references a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if !g.insert_edge(a, b) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let offset = self.n();
        let edges = self
            .edges()
            .map(|e| e.endpoints())
            .chain(other.edges().map(|e| (e.u() + offset, e.v() + offset)));
        Self::from_edges(offset + other.n(), edges).expect("disjoint union is simple")
    }

    /// Inserts `{a, b}`; returns false if it was already present.
    pub(crate) fn insert_edge(&mut self, a: usize, b: usize) -> bool {
        match self.adj[a].binary_search(&b) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[a].insert(pos, b);
                let pos = self.adj[b].binary_search(&a).unwrap_err();
                self.adj[b].insert(pos, a);
                self.edge_count += 1;
                true
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge { u, v })
        })
    }

    fn require_edge(&self, e: Edge) -> Result<()> {
        if self.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(Error::MissingEdge(e.u, e.v))
        }
    }

    /// `H \ e`: same vertex set, one edge fewer.
    pub fn delete_edge(&self, e: Edge) -> Result<SimpleGraph> {
        self.require_edge(e)?;
        let mut adj = self.adj.clone();
        adj[e.u].retain(|&x| x != e.v);
        adj[e.v].retain(|&x| x != e.u);
        Ok(SimpleGraph {
            adj,
            edge_count: self.edge_count - 1,
        })
    }

    /// `H / e` with parallel edges collapsed.
    ///
    /// The merged vertex keeps the smaller id `e.u()`; ids above `e.v()`
    /// shift down by one, so the result is on `0..n-1`.
    pub fn contract_edge(&self, e: Edge) -> Result<SimpleGraph> {
        self.require_edge(e)?;
        let (keep, gone) = e.endpoints();
        let relabel = |x: usize| -> usize {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n() - 1];
        let mut edge_count = 0;
        for edge in self.edges() {
            let (a, b) = (relabel(edge.u), relabel(edge.v));
            if a == b {
                continue;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(SimpleGraph {
            adj,
            edge_count: edge_count / 2,
        })
    }

    /// Subgraph induced on `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph::edgeless(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Number of common neighbours of `a` and `b`.
    pub fn common_neighbors(&self, a: usize, b: usize) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        let (x, y) = (&self.adj[a], &self.adj[b]);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
