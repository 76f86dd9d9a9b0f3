use num_bigint::BigInt;
use num_traits::Zero;

use super::EngineChoice;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poly::{interpolate_consecutive, IntPolynomial};

/// Largest graph the oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 10;

/// `a[k]` = number of partitions of the vertex set into `k` nonempty
/// independent sets, by backtracking over restricted-growth labellings.
fn independent_partitions(h: &SimpleGraph) -> Vec<u64> {
    fn rec(h: &SimpleGraph, v: usize, labels: &mut Vec<usize>, blocks: usize, out: &mut [u64]) {
        if v == h.n() {
            out[blocks] += 1;
            return;
        }
        for b in 0..=blocks {
            let clash = h.neighbors(v).iter().any(|&u| u < v && labels[u] == b);
            if !clash {
                labels.push(b);
                rec(h, v + 1, labels, blocks.max(b + 1), out);
                labels.pop();
            }
        }
    }
    let mut out = vec![0; h.n() + 1];
    rec(h, 0, &mut Vec::with_capacity(h.n()), 0, &mut out);
    out
}

/// Exact chromatic polynomial by exhaustive enumeration, for `n <= 10`.
///
/// The number of proper colourings with `q` colours is
/// `sum_k a[k] q (q-1) ... (q-k+1)`; this is evaluated at `q = 0..=n` and
/// interpolated.
pub fn chi_bruteforce_oracle(h: &SimpleGraph) -> Result<IntPolynomial> {
    if h.n() > ORACLE_MAX_VERTICES {
        return Err(Error::precondition(
            EngineChoice::BruteForce,
            format!("{} vertices, limit is {ORACLE_MAX_VERTICES}", h.n()),
        ));
    }
    let a = independent_partitions(h);
    let values: Vec<BigInt> = (0..=h.n() as i64)
        .map(|q| {
            let mut total = BigInt::zero();
            let mut falling = BigInt::from(1);
            for (k, &count) in a.iter().enumerate() {
                total += &falling * count;
                falling *= q - k as i64;
            }
            total
        })
        .collect();
    interpolate_consecutive(&values)
}

/// Proper `q`-colourings counted over all `q^n` assignments.
pub fn count_proper_colourings(h: &SimpleGraph, q: usize) -> u64 {
    let n = h.n();
    if n == 0 {
        return 1;
    }
    if q == 0 {
        return 0;
    }
    let mut colours = vec![0usize; n];
    let mut total = 0;
    loop {
        if h.edges().all(|e| colours[e.u()] != colours[e.v()]) {
            total += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return total;
            }
            colours[i] += 1;
            if colours[i] < q {
                break;
            }
            colours[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let k2 = chi_bruteforce_oracle(&SimpleGraph::complete(2)).unwrap();
        assert_eq!(k2, IntPolynomial::new(vec![0.into(), (-1).into(), 1.into()]));
    }

    #[test]
    fn five_cycle_with_three_colours() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(count_proper_colourings(&c5, 3), 30);
        assert_eq!(chi_bruteforce_oracle(&c5).unwrap().eval(&BigInt::from(3)), BigInt::from(30));
    }

    #[test]
    fn tree_on_five_vertices() {
        let t = SimpleGraph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let expected = &IntPolynomial::x() * &IntPolynomial::binomial_power(-1, 4);
        assert_eq!(chi_bruteforce_oracle(&t).unwrap(), expected);
    }

    #[test]
    fn enumeration_agrees_with_partition_count() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let chi = chi_bruteforce_oracle(&g).unwrap();
        for q in 0..=5 {
            assert_eq!(chi.eval(&BigInt::from(q)), BigInt::from(count_proper_colourings(&g, q)));
        }
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(chi_bruteforce_oracle(&SimpleGraph::path(11)).is_err());
        assert_eq!(chi_bruteforce_oracle(&SimpleGraph::edgeless(0)).unwrap(), IntPolynomial::one());
    }
}
