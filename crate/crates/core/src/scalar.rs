//! Scalar abstractions shared across the crate.
//!
//! Polynomial arithmetic is written once against [`Ring`] and instantiated for
//! exact integers ([`num_bigint::BigInt`]), exact rationals
//! ([`num_rational::BigRational`]) and, where convenient in tests, machine
//! floats. Real-valued summaries (persistence traces, feature vectors,
//! nearest-neighbour distances) are generic over [`Real`].

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_traits::{Float, Num};

/// Commutative ring with identity, as far as polynomial code needs it.
///
/// Division is only used by code paths that run over fields (interpolation,
/// zeta coefficients); integer instantiations never reach them.
pub trait Ring: Clone + PartialEq + Debug + Num + Neg<Output = Self> {}

impl<T> Ring for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> {}

/// Floating-point type used for weights, thresholds and feature vectors.
pub trait Real: Float + Debug + Display + FromStr + Send + Sync + 'static {}

impl<T> Real for T where T: Float + Debug + Display + FromStr + Send + Sync + 'static {}
