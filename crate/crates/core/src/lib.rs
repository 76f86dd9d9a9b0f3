//! Chromatic persistence of weighted graphs.
//!
//! Edges enter in increasing weight order. After each insertion the
//! diagonal E-polynomial of the graphic arrangement complement of the
//! current subgraph drops by the chromatic polynomial of a contracted minor;
//! the drops, the per-threshold Betti vectors and a truncated zeta product
//! summarise the filtration.
//!
//! * [`graph`]: simple and weighted graphs, threshold chains, minors,
//!   structure recognition and tree decompositions
//! * [`poly`]: exact polynomials and the chromatic/Poincaré/E conversions
//! * [`chromatic`]: closed-form, series–parallel, treewidth and
//!   deletion–contraction engines plus a brute-force oracle
//! * [`cpa`]: the pipeline, barcode zeta and oracle verification
//! * [`ph`]: the `b_0`/`b_1` persistence baseline
//! * [`experiment`]: the `C_5` vs `C_6` classification harness

pub mod chromatic;
pub mod cpa;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod ph;
pub mod poly;
pub mod scalar;

pub use chromatic::{chi_auto, EngineChoice, MemoTable};
pub use cpa::{run_cpa, verify_correctness, BarcodeZeta, CpaResult};
pub use error::{Error, Result};
pub use graph::{SimpleGraph, WeightedGraph};
pub use ph::{run_ph_baseline, summarize, PhSummary, PhTrace};
pub use poly::{BettiVector, DiagonalEPolynomial, FactoredPolynomial, IntPolynomial, RationalPolynomial};
pub use scalar::{Real, Ring};

/// Weighted graph with double-precision weights.
pub type WeightedGraphF64 = WeightedGraph<f64>;
/// Weighted graph with single-precision weights.
pub type WeightedGraphF32 = WeightedGraph<f32>;
pub type CpaResultF64 = CpaResult<f64>;
pub type PhTraceF64 = PhTrace<f64>;
pub type PhSummaryF64 = PhSummary<f64>;
