//! Exact polynomial arithmetic and the chromatic/Poincaré/E conversions.

mod convert;
mod dense;
mod factored;
mod interpolate;

pub use convert::{
    betti_from_e, betti_vector, chromatic_to_e, chromatic_to_poincare, poincare_to_chromatic,
    BettiVector, DiagonalEPolynomial,
};
pub use dense::Polynomial;
pub use factored::FactoredPolynomial;
pub use interpolate::{interpolate, interpolate_consecutive, lagrange_interpolate};

pub type IntPolynomial = Polynomial<num_bigint::BigInt>;
pub type RationalPolynomial = Polynomial<num_rational::BigRational>;
