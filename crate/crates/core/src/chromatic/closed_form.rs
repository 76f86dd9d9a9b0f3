use num_bigint::BigInt;

use super::EngineChoice;
use crate::error::{Error, Result};
use crate::graph::{components, SimpleGraph};
use crate::poly::{FactoredPolynomial, IntPolynomial};

/// `q^c (q-1)^k` for a forest with `c` components and `k` edges.
pub fn forest_chromatic(n: usize, edges: usize) -> FactoredPolynomial {
    FactoredPolynomial::from_parts(n - edges, edges, IntPolynomial::one())
}

/// `(q-1)^k + (-1)^k (q-1)`
pub fn cycle_chromatic(k: usize) -> IntPolynomial {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    &IntPolynomial::binomial_power(-1, k) + &IntPolynomial::linear_root(BigInt::from(1)).scale(&BigInt::from(sign))
}

/// Product of tree and cycle closed forms over the components, kept
/// factored.
pub fn chi_closed_form_factored(h: &SimpleGraph) -> Result<FactoredPolynomial> {
    let mut acc = FactoredPolynomial::one();
    for comp in components(h) {
        let k = comp.len();
        let edges = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        let factor = if edges + 1 == k {
            forest_chromatic(k, edges)
        } else if edges == k && comp.iter().all(|&v| h.degree(v) == 2) {
            FactoredPolynomial::from_dense(&cycle_chromatic(k))
        } else {
            return Err(Error::precondition(
                EngineChoice::ClosedForm,
                format!(
                    "component containing vertex {} is neither a tree nor a cycle",
                    comp[0]
                ),
            ));
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

pub fn chi_closed_form(h: &SimpleGraph) -> Result<IntPolynomial> {
    chi_closed_form_factored(h).map(|f| f.to_dense())
}
