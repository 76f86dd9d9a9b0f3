//! Simple and weighted graphs, threshold chains, minors and structure.

mod decomposition;
mod io;
mod simple;
mod structure;
mod union_find;
mod weighted;

pub use decomposition::{
    decomposition_from_ordering, min_fill_ordering, tree_decomposition, TreeDecomposition,
};
pub use io::{format_edge_list, parse_edge_list};
pub use simple::{Edge, SimpleGraph};
pub use structure::{
    blocks, classify, component_count, components, cycle_edges, cycle_rank, is_trees_and_cycles,
    reduce_two_terminal, GraphClass,
};
pub use union_find::DisjointSet;
pub use weighted::{build_threshold_chain, ChainEvent, ThresholdChain, WeightedEdge, WeightedGraph};
