//! Chromatic polynomial engines and the automatic dispatcher.

pub mod closed_form;
pub mod deletion_contraction;
pub mod memo;
pub mod oracle;
pub mod series_parallel;
pub mod treewidth;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use closed_form::{chi_closed_form, chi_closed_form_factored, cycle_chromatic, forest_chromatic};
pub use deletion_contraction::chi_deletion_contraction;
pub use memo::{canonical_code, graph_key, GraphKey, MemoTable, CANONICAL_MAX_VERTICES};
pub use oracle::{chi_bruteforce_oracle, count_proper_colourings, ORACLE_MAX_VERTICES};
pub use series_parallel::chi_series_parallel;
pub use treewidth::chi_treewidth_dp;

use crate::error::{Error, Result};
use crate::graph::{classify, tree_decomposition, GraphClass, SimpleGraph};
use crate::poly::IntPolynomial;

/// Which engine produced a chromatic polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineChoice {
    ClosedForm,
    SeriesParallel,
    TreewidthDp,
    DeletionContraction,
    BruteForce,
}

impl EngineChoice {
    pub const ALL: [EngineChoice; 5] = [
        EngineChoice::ClosedForm,
        EngineChoice::SeriesParallel,
        EngineChoice::TreewidthDp,
        EngineChoice::DeletionContraction,
        EngineChoice::BruteForce,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EngineChoice::ClosedForm => "closed_form",
            EngineChoice::SeriesParallel => "series_parallel",
            EngineChoice::TreewidthDp => "treewidth_dp",
            EngineChoice::DeletionContraction => "deletion_contraction",
            EngineChoice::BruteForce => "brute_force",
        }
    }

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            EngineChoice::ClosedForm => "closed",
            EngineChoice::SeriesParallel => "sp",
            EngineChoice::TreewidthDp => "twdp",
            EngineChoice::DeletionContraction => "delcon",
            EngineChoice::BruteForce => "brute",
        }
    }
}

impl fmt::Display for EngineChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EngineChoice {
    type Err = Error;

    /// Accepts both the short and the long names.
    fn from_str(s: &str) -> Result<Self> {
        EngineChoice::ALL
            .into_iter()
            .find(|e| e.as_str() == s || e.short_name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown engine '{s}'")))
    }
}

/// Dispatcher settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutoOptions {
    /// Largest min-fill width handed to the treewidth DP.
    pub max_dp_width: usize,
}

pub const DEFAULT_MAX_DP_WIDTH: usize = 8;

impl Default for AutoOptions {
    fn default() -> Self {
        AutoOptions {
            max_dp_width: DEFAULT_MAX_DP_WIDTH,
        }
    }
}

/// Run one engine. The treewidth DP uses the min-fill decomposition.
pub fn chi_with(engine: EngineChoice, h: &SimpleGraph, memo: &MemoTable) -> Result<IntPolynomial> {
    match engine {
        EngineChoice::ClosedForm => chi_closed_form(h),
        EngineChoice::SeriesParallel => chi_series_parallel(h),
        EngineChoice::TreewidthDp => chi_treewidth_dp(h, &tree_decomposition(h)),
        EngineChoice::DeletionContraction => Ok(chi_deletion_contraction(h, memo)),
        EngineChoice::BruteForce => chi_bruteforce_oracle(h),
    }
}

pub fn chi_auto(h: &SimpleGraph, memo: &MemoTable) -> (IntPolynomial, EngineChoice) {
    chi_auto_with(h, memo, AutoOptions::default())
}

/// Closed form, then series–parallel, then the treewidth DP when the
/// min-fill width is at most `opts.max_dp_width`, else deletion–contraction.
pub fn chi_auto_with(h: &SimpleGraph, memo: &MemoTable, opts: AutoOptions) -> (IntPolynomial, EngineChoice) {
    let class = classify(h);
    let result = match class {
        GraphClass::Forest | GraphClass::TreesAndCycles => {
            chi_closed_form(h).map(|p| (p, EngineChoice::ClosedForm))
        }
        GraphClass::SeriesParallel => chi_series_parallel(h).map(|p| (p, EngineChoice::SeriesParallel)),
        GraphClass::General => {
            let td = tree_decomposition(h);
            if td.width() <= opts.max_dp_width {
                chi_treewidth_dp(h, &td).map(|p| (p, EngineChoice::TreewidthDp))
            } else {
                Ok((chi_deletion_contraction(h, memo), EngineChoice::DeletionContraction))
            }
        }
    };
    result.unwrap_or_else(|_| (chi_deletion_contraction(h, memo), EngineChoice::DeletionContraction))
}
