use std::fmt;

use serde::Serialize;

use super::run_cpa;
use crate::chromatic::{chi_bruteforce_oracle, ORACLE_MAX_VERTICES, EngineChoice};
use crate::error::{Error, Result};
use crate::graph::{build_threshold_chain, WeightedGraph};
use crate::poly::IntPolynomial;
use crate::scalar::Real;

/// First place where the pipeline and the oracle disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Divergence {
    pub j: usize,
    /// `"E"` or `"delta"`.
    pub quantity: &'static str,
    pub expected: IntPolynomial,
    pub actual: IntPolynomial,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub events_checked: usize,
    pub passed: bool,
    pub divergence: Option<Divergence>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.divergence {
            None => write!(f, "pass ({} events)", self.events_checked),
            Some(d) => write!(
                f,
                "fail at j={}: {} expected {} got {}",
                d.j,
                d.quantity,
                d.expected.display_with("s"),
                d.actual.display_with("s")
            ),
        }
    }
}

/// Check `E_j = chi(H_j)(s)` and `Delta_j = chi(H_j / e_j)(s)` for every
/// event against the brute-force oracle. Needs `n <= 10`.
pub fn verify_correctness<W: Real>(g: &WeightedGraph<W>) -> Result<VerifyReport> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::precondition(
            EngineChoice::BruteForce,
            format!("verification needs n <= {ORACLE_MAX_VERTICES}, got {}", g.n()),
        ));
    }
    let result = run_cpa(g)?;
    let chain = build_threshold_chain(g)?;
    let mut report = VerifyReport {
        n: g.n(),
        events_checked: 0,
        passed: true,
        divergence: None,
    };
    for j in 0..=chain.len() {
        let h = chain.subgraph(j);
        let expected = chi_bruteforce_oracle(&h)?;
        let actual = result.e_polys[j].to_poly();
        if expected != actual {
            report.divergence = Some(Divergence {
                j,
                quantity: "E",
                expected,
                actual,
            });
            break;
        }
        if j > 0 {
            let minor = h.contract_edge(chain.events()[j - 1].edge)?;
            let expected = chi_bruteforce_oracle(&minor)?;
            let actual = result.jumps[j - 1].to_poly();
            if expected != actual {
                report.divergence = Some(Divergence {
                    j,
                    quantity: "delta",
                    expected,
                    actual,
                });
                break;
            }
            report.events_checked = j;
        }
    }
    report.passed = report.divergence.is_none();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_pass() {
        let g = WeightedGraph::new(6, [(0, 1, 3.0), (0, 2, 1.0), (2, 3, 2.0), (3, 4, 5.0), (3, 5, 4.0)])
            .unwrap();
        let report = verify_correctness(&g).unwrap();
        assert!(report.passed);
        assert_eq!(report.events_checked, 5);
        assert_eq!(report.to_string(), "pass (5 events)");
    }

    #[test]
    fn six_cycle_spanning_tree_first() {
        let g = WeightedGraph::new(
            6,
            [(0, 1, 0.1), (1, 2, 0.2), (2, 3, 0.3), (3, 4, 0.25), (4, 5, 0.15), (5, 0, 0.95)],
        )
        .unwrap();
        assert!(verify_correctness(&g).unwrap().passed);
    }

    #[test]
    fn refuses_large_graphs() {
        let g = WeightedGraph::new(11, (0..10).map(|i| (i, i + 1, i as f64))).unwrap();
        assert!(verify_correctness(&g).is_err());
    }
}
