use super::closed_form::forest_chromatic;
use super::memo::{graph_key, MemoTable};
use crate::graph::{cycle_edges, cycle_rank, SimpleGraph};
use crate::poly::IntPolynomial;

/// `chi(H) = chi(H - e) - chi(H / e)`, pivoting on the smallest edge that
/// lies on a cycle. Forests return their closed form directly; everything
/// else goes through `memo`.
pub fn chi_deletion_contraction(h: &SimpleGraph, memo: &MemoTable) -> IntPolynomial {
    if cycle_rank(h) == 0 {
        return forest_chromatic(h.n(), h.edge_count()).to_dense();
    }
    let key = graph_key(h);
    if let Some(hit) = memo.get(&key) {
        return hit;
    }
    let pivot = cycle_edges(h)[0];
    let deleted = h.delete_edge(pivot).expect("pivot is an edge");
    let contracted = h.contract_edge(pivot).expect("pivot is an edge");
    let chi = chi_deletion_contraction(&deleted, memo) - chi_deletion_contraction(&contracted, memo);
    memo.insert(key, chi.clone());
    chi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::closed_form::cycle_chromatic;
    use num_bigint::BigInt;

    #[test]
    fn triangle() {
        let k3 = chi_deletion_contraction(&SimpleGraph::complete(3), &MemoTable::new());
        let expected = IntPolynomial::falling_factorial(3);
        assert_eq!(k3, expected);
        let values: Vec<BigInt> = (1..=3).map(|q| k3.eval(&BigInt::from(q))).collect();
        assert_eq!(values, vec![0.into(), 0.into(), 6.into()]);
    }

    #[test]
    fn four_cycle_and_edgeless() {
        let memo = MemoTable::new();
        assert_eq!(chi_deletion_contraction(&SimpleGraph::cycle(4), &memo), cycle_chromatic(4));
        assert_eq!(
            chi_deletion_contraction(&SimpleGraph::edgeless(3), &memo),
            IntPolynomial::monomial(BigInt::from(1), 3)
        );
    }

    #[test]
    fn warm_memo_gives_identical_output() {
        let k6 = SimpleGraph::complete(6);
        let cold = chi_deletion_contraction(&k6, &MemoTable::new());
        let memo = MemoTable::new();
        let first = chi_deletion_contraction(&k6, &memo);
        assert!(!memo.is_empty());
        let second = chi_deletion_contraction(&k6, &memo);
        assert_eq!(cold, first);
        assert_eq!(first, second);
        assert_eq!(cold, IntPolynomial::falling_factorial(6));
    }
}
