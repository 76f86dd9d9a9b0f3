use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{format_edge_list, Edge, WeightedGraph};

pub const INSTANCES_PER_CLASS: usize = 30;
pub const CLOSER_WEIGHT: f64 = 0.95;
pub const TREE_WEIGHT_RANGE: (f64, f64) = (0.1, 0.3);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CycleClass {
    C5,
    C6,
}

impl CycleClass {
    pub fn len(self) -> usize {
        match self {
            CycleClass::C5 => 5,
            CycleClass::C6 => 6,
        }
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.len())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub label: CycleClass,
    /// Seed of this instance's own generator.
    pub seed: u64,
    pub graph: WeightedGraph,
    /// The edge carrying [`CLOSER_WEIGHT`].
    pub closer: Edge,
}

/// One labelled cycle: a uniformly chosen closing edge gets weight 0.95,
/// the others i.i.d. uniform weights in `[0.1, 0.3]`, redrawn until
/// pairwise distinct.
pub fn generate_instance(label: CycleClass, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = label.len();
    let closer_at = rng.gen_range(0..n);
    let weights: Vec<f64> = loop {
        let w: Vec<f64> = (0..n - 1)
            .map(|_| rng.gen_range(TREE_WEIGHT_RANGE.0..=TREE_WEIGHT_RANGE.1))
            .collect();
        let mut sorted = w.clone();
        sorted.sort_by(f64::total_cmp);
        if sorted.windows(2).all(|p| p[0] != p[1]) {
            break w;
        }
    };
    let mut tree_weights = weights.into_iter();
    let edges: Vec<(usize, usize, f64)> = (0..n)
        .map(|i| {
            let w = if i == closer_at {
                CLOSER_WEIGHT
            } else {
                tree_weights.next().expect("n - 1 tree weights")
            };
            (i, (i + 1) % n, w)
        })
        .collect();
    let graph = WeightedGraph::new(n, edges).expect("cycle is simple");
    Instance {
        label,
        seed,
        graph,
        closer: Edge::new(closer_at, (closer_at + 1) % n),
    }
}

/// 30 `C_5` then 30 `C_6` instances. Instance seeds are drawn in order from
/// a ChaCha8 generator seeded with `seed`.
pub fn generate_dataset(seed: u64) -> Vec<Instance> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    [CycleClass::C5, CycleClass::C6]
        .into_iter()
        .flat_map(|c| std::iter::repeat(c).take(INSTANCES_PER_CLASS))
        .map(|label| generate_instance(label, master.next_u64()))
        .collect()
}

#[derive(Serialize)]
struct ManifestEntry {
    index: usize,
    label: CycleClass,
    seed: u64,
    edge_list: String,
}

#[derive(Serialize)]
struct Manifest {
    seed: u64,
    instances: Vec<ManifestEntry>,
}

/// JSON manifest: the master seed and each instance as an edge list.
pub fn dataset_manifest(seed: u64, instances: &[Instance]) -> String {
    let doc = Manifest {
        seed,
        instances: instances
            .iter()
            .enumerate()
            .map(|(index, inst)| ManifestEntry {
                index,
                label: inst.label,
                seed: inst.seed,
                edge_list: format_edge_list(&inst.graph),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("manifest serialises")
}
