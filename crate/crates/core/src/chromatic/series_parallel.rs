//! Two-terminal recurrences for series–parallel graphs.
//!
//! Each edge of a block being reduced carries a pair `(a, b)` counting
//! colourings of the two-terminal piece it stands for, per fixed colouring
//! of the terminals: `a` when the terminals share a colour, `b` when they
//! differ. A bare edge is `(0, 1)`.
//!
//! * parallel: `(a1 a2, b1 b2)`
//! * series through a middle vertex `m`, summing over `m`'s colour:
//!   `a = a1 a2 + (q-1) b1 b2` and `b = a1 b2 + b1 a2 + (q-2) b1 b2`
//!
//! A block reduced to a single labelled edge has `chi = q (a + (q-1) b)`,
//! and blocks glue at cut vertices by `chi(G1 u_v G2) = chi(G1) chi(G2) / q`,
//! so overall `chi = q^c * prod over blocks of (a + (q-1) b)`.

use num_bigint::BigInt;

use super::EngineChoice;
use crate::error::{Error, Result};
use crate::graph::{blocks, component_count, reduce_two_terminal, SimpleGraph};
use crate::poly::IntPolynomial;

#[derive(Clone, Debug, PartialEq)]
struct TerminalPair {
    same: IntPolynomial,
    distinct: IntPolynomial,
}

pub fn chi_series_parallel(h: &SimpleGraph) -> Result<IntPolynomial> {
    let q = IntPolynomial::x();
    let q_minus_1 = IntPolynomial::linear_root(BigInt::from(1));
    let q_minus_2 = IntPolynomial::linear_root(BigInt::from(2));

    let leaf = || TerminalPair {
        same: IntPolynomial::zero(),
        distinct: IntPolynomial::one(),
    };
    let series = |x: &TerminalPair, y: &TerminalPair| {
        let bb = &x.distinct * &y.distinct;
        TerminalPair {
            same: &(&x.same * &y.same) + &(&q_minus_1 * &bb),
            distinct: &(&(&x.same * &y.distinct) + &(&x.distinct * &y.same)) + &(&q_minus_2 * &bb),
        }
    };
    let parallel = |x: &TerminalPair, y: &TerminalPair| TerminalPair {
        same: &x.same * &y.same,
        distinct: &x.distinct * &y.distinct,
    };

    let mut acc = q.pow(component_count(h));
    for block in blocks(h) {
        let pair = reduce_two_terminal(&block, leaf, series, parallel).ok_or_else(|| {
            Error::precondition(
                EngineChoice::SeriesParallel,
                format!(
                    "block containing edge ({}, {}) does not reduce (K4 minor)",
                    block[0].u(),
                    block[0].v()
                ),
            )
        })?;
        acc = &acc * &(&pair.same + &(&q_minus_1 * &pair.distinct));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::closed_form::cycle_chromatic;
    use crate::chromatic::oracle::chi_bruteforce_oracle;

    #[test]
    fn single_edge() {
        let k2 = SimpleGraph::complete(2);
        assert_eq!(
            chi_series_parallel(&k2).unwrap(),
            IntPolynomial::new(vec![0.into(), (-1).into(), 1.into()])
        );
    }

    #[test]
    fn two_parallel_paths_make_a_four_cycle() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        assert_eq!(chi_series_parallel(&g).unwrap(), cycle_chromatic(4));
    }

    #[test]
    fn theta_graph_matches_enumeration() {
        let theta =
            SimpleGraph::from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
        let chi = chi_series_parallel(&theta).unwrap();
        let oracle = chi_bruteforce_oracle(&theta).unwrap();
        for q in 0..=6 {
            let q = BigInt::from(q);
            assert_eq!(chi.eval(&q), oracle.eval(&q));
        }
        assert_eq!(chi, oracle);
    }

    #[test]
    fn blocks_glue_at_cut_vertices() {
        // bowtie: two triangles sharing vertex 2, plus a pendant and an isolated vertex
        let g = SimpleGraph::from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])
            .unwrap();
        assert_eq!(chi_series_parallel(&g).unwrap(), chi_bruteforce_oracle(&g).unwrap());
    }

    #[test]
    fn rejects_k4() {
        assert!(matches!(
            chi_series_parallel(&SimpleGraph::complete(4)),
            Err(Error::EnginePrecondition {
                engine: EngineChoice::SeriesParallel,
                ..
            })
        ));
    }
}
