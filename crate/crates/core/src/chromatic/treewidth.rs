//! Colouring counts by dynamic programming over a tree decomposition.
//!
//! For a fixed `q` each table maps a set partition of the current bag
//! (restricted-growth labels over the sorted bag) to the number of ways to
//! colour the vertices already forgotten below, for any one colouring of the
//! bag inducing that partition. The count only depends on the partition, so
//! at the root, where every vertex has been forgotten, the single entry is
//! the number of proper `q`-colourings. Counts for `q = 0..=n` are then
//! interpolated.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::graph::{SimpleGraph, TreeDecomposition};
use crate::poly::{interpolate_consecutive, IntPolynomial};

type Pattern = Vec<u8>;

#[derive(Clone, Debug)]
struct Table {
    bag: Vec<usize>,
    rows: HashMap<Pattern, BigInt>,
}

fn normalize(labels: &mut [u8]) {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    for l in labels.iter_mut() {
        if map[*l as usize] == u8::MAX {
            map[*l as usize] = next;
            next += 1;
        }
        *l = map[*l as usize];
    }
}

fn block_count(p: &[u8]) -> usize {
    p.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
}

impl Table {
    fn empty() -> Self {
        let mut rows = HashMap::new();
        rows.insert(Vec::new(), BigInt::one());
        Table {
            bag: Vec::new(),
            rows,
        }
    }

    fn introduce(&mut self, h: &SimpleGraph, v: usize, q: usize) {
        let pos = self.bag.partition_point(|&u| u < v);
        let mut rows = HashMap::with_capacity(self.rows.len());
        for (p, count) in self.rows.drain() {
            let k = block_count(&p);
            let mut options: Vec<u8> = (0..k as u8)
                .filter(|&b| {
                    !p.iter()
                        .zip(&self.bag)
                        .any(|(&l, &u)| l == b && h.has_edge(u, v))
                })
                .collect();
            if k < q {
                options.push(k as u8);
            }
            for b in options {
                let mut next = p.clone();
                next.insert(pos, b);
                normalize(&mut next);
                *rows.entry(next).or_insert_with(BigInt::zero) += &count;
            }
        }
        self.bag.insert(pos, v);
        self.rows = rows;
    }

    fn forget(&mut self, v: usize, q: usize) {
        let pos = self.bag.binary_search(&v).expect("forgotten vertex is in the bag");
        let mut rows = HashMap::with_capacity(self.rows.len());
        for (p, count) in self.rows.drain() {
            let label = p[pos];
            let alone = p.iter().filter(|&&l| l == label).count() == 1;
            let mut rest = p;
            rest.remove(pos);
            normalize(&mut rest);
            let weight = if alone {
                let free = q as i64 - block_count(&rest) as i64;
                if free <= 0 {
                    continue;
                }
                count * BigInt::from(free)
            } else {
                count
            };
            *rows.entry(rest).or_insert_with(BigInt::zero) += weight;
        }
        self.bag.remove(pos);
        self.rows = rows;
    }

    /// Move to `target` by forgetting then introducing.
    fn rebag(mut self, h: &SimpleGraph, target: &[usize], q: usize) -> Self {
        let gone: Vec<usize> = self
            .bag
            .iter()
            .copied()
            .filter(|v| target.binary_search(v).is_err())
            .collect();
        for v in gone {
            self.forget(v, q);
        }
        let new: Vec<usize> = target
            .iter()
            .copied()
            .filter(|v| self.bag.binary_search(v).is_err())
            .collect();
        for v in new {
            self.introduce(h, v, q);
        }
        self
    }

    fn join(mut self, other: &Table) -> Self {
        debug_assert_eq!(self.bag, other.bag);
        self.rows.retain(|p, _| other.rows.contains_key(p));
        for (p, c) in self.rows.iter_mut() {
            *c *= &other.rows[p];
        }
        self
    }
}

/// Children lists and a post-order for the bag tree rooted at bag 0.
fn rooted(td: &TreeDecomposition) -> (Vec<Vec<usize>>, Vec<usize>) {
    let adj = td.tree_adjacency();
    let k = adj.len();
    let mut children = vec![Vec::new(); k];
    let mut order = Vec::with_capacity(k);
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(b) = stack.pop() {
        order.push(b);
        for &c in &adj[b] {
            if !seen[c] {
                seen[c] = true;
                children[b].push(c);
                stack.push(c);
            }
        }
    }
    order.reverse();
    (children, order)
}

/// Number of proper `q`-colourings of `h`, given a validated decomposition.
fn count_colourings(h: &SimpleGraph, td: &TreeDecomposition, q: usize) -> BigInt {
    if h.n() == 0 {
        return BigInt::one();
    }
    let (children, order) = rooted(td);
    let mut tables: Vec<Option<Table>> = vec![None; td.bags().len()];
    for &b in &order {
        let bag = &td.bags()[b];
        let mut acc: Option<Table> = None;
        for &c in &children[b] {
            let t = tables[c].take().expect("child done").rebag(h, bag, q);
            acc = Some(match acc {
                None => t,
                Some(a) => a.join(&t),
            });
        }
        tables[b] = Some(acc.unwrap_or_else(|| Table::empty().rebag(h, bag, q)));
    }
    let root = tables[0].take().expect("root done").rebag(h, &[], q);
    root.rows.get(&Vec::new()).cloned().unwrap_or_default()
}

pub fn chi_treewidth_dp(h: &SimpleGraph, td: &TreeDecomposition) -> Result<IntPolynomial> {
    td.validate(h)?;
    let values: Vec<BigInt> = (0..=h.n()).map(|q| count_colourings(h, td, q)).collect();
    interpolate_consecutive(&values)
}
