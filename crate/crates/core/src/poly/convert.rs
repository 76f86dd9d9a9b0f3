//! Chromatic, Poincaré and diagonal E-polynomials of graphic arrangement
//! complements.
//!
//! For a graph `H` on `n` vertices the complement `M(H)` of its graphic
//! arrangement has
//!
//! * Poincaré polynomial `P(t) = (-t)^n chi_H(-1/t)`, and
//! * E-polynomial `E(u, v) = chi_H(uv)`, a function of `s = uv` alone.
//!
//! Both are coefficient reindexings of the chromatic polynomial, so every
//! conversion here is exact and linear in the degree.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{FactoredPolynomial, IntPolynomial};
use crate::error::{Error, Result};

/// E-polynomial restricted to the diagonal `s = uv`.
///
/// Stored factored; [`DiagonalEPolynomial::to_poly`] gives the dense form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiagonalEPolynomial(FactoredPolynomial);

impl DiagonalEPolynomial {
    pub fn from_factored(f: FactoredPolynomial) -> Self {
        DiagonalEPolynomial(f)
    }

    pub fn from_poly(p: &IntPolynomial) -> Self {
        DiagonalEPolynomial(FactoredPolynomial::from_dense(p))
    }

    /// `s^n`, the class of the edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        DiagonalEPolynomial(FactoredPolynomial::from_parts(n, 0, IntPolynomial::one()))
    }

    pub fn factored(&self) -> &FactoredPolynomial {
        &self.0
    }

    pub fn to_poly(&self) -> IntPolynomial {
        self.0.to_dense()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.0.leading_coeff()
    }

    pub fn sub(&self, other: &Self) -> Self {
        DiagonalEPolynomial(self.0.sub(&other.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        DiagonalEPolynomial(self.0.add(&other.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        DiagonalEPolynomial(self.0.mul(&other.0))
    }

    /// Read back as a chromatic polynomial in `q` (the substitution is the
    /// identity on coefficients).
    pub fn to_chromatic(&self) -> IntPolynomial {
        self.to_poly()
    }
}

impl fmt::Debug for DiagonalEPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({})", self.to_poly().display_with("s"))
    }
}

impl Serialize for DiagonalEPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_poly().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DiagonalEPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        IntPolynomial::deserialize(deserializer).map(|p| Self::from_poly(&p))
    }
}

/// Betti numbers `b_0..b_n` of an arrangement complement.
///
/// Serialised as a JSON array of decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector(Vec<BigUint>);

impl Serialize for BettiVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|b| b.to_string()))
    }
}

impl<'de> Deserialize<'de> for BettiVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter()
            .map(|s| s.parse::<BigUint>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()
            .map(BettiVector)
    }
}

impl BettiVector {
    pub fn as_slice(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&BigUint> {
        self.0.get(k)
    }

    /// Lossy conversion for feature vectors; huge counts saturate to
    /// infinity.
    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.0
            .iter()
            .map(|b| b.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }

    pub fn to_u64_vec(&self) -> Option<Vec<u64>> {
        self.0.iter().map(|b| b.to_u64()).collect()
    }
}

fn check_chromatic_degree(chi: &IntPolynomial, n: usize) -> Result<()> {
    match chi.degree() {
        Some(d) if d == n => Ok(()),
        Some(d) => Err(Error::NotChromatic(format!(
            "degree {d} does not match vertex count {n}"
        ))),
        None => Err(Error::NotChromatic("zero polynomial".into())),
    }
}

/// `P(t) = (-t)^n chi(-1/t)`: the coefficient of `t^k` is
/// `(-1)^k [q^{n-k}] chi`.
pub fn chromatic_to_poincare(chi: &IntPolynomial, n: usize) -> Result<IntPolynomial> {
    check_chromatic_degree(chi, n)?;
    let coeffs: Vec<BigInt> = (0..=n)
        .map(|k| {
            let c = chi.coeff(n - k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    if let Some((k, c)) = coeffs.iter().enumerate().find(|(_, c)| c.is_negative()) {
        return Err(Error::NotChromatic(format!(
            "Poincaré coefficient of t^{k} would be {c}"
        )));
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Inverse of [`chromatic_to_poincare`]: `chi(q) = (-q)^n P(-1/q)`.
pub fn poincare_to_chromatic(p: &IntPolynomial, n: usize) -> Result<IntPolynomial> {
    if p.degree().is_some_and(|d| d > n) {
        return Err(Error::InvalidInput(format!(
            "Poincaré polynomial of degree {} exceeds vertex count {n}",
            p.degree().unwrap_or(0)
        )));
    }
    let coeffs = (0..=n)
        .map(|i| {
            let c = p.coeff(n - i);
            if (n - i) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Ok(IntPolynomial::new(coeffs))
}

/// `E(M(H); u, v) = chi_H(uv)` on the diagonal.
pub fn chromatic_to_e(chi: &IntPolynomial) -> DiagonalEPolynomial {
    DiagonalEPolynomial::from_poly(chi)
}

/// Betti numbers read off the Poincaré polynomial, padded with zeros to
/// length `n + 1`.
pub fn betti_vector(p: &IntPolynomial, n: usize) -> Result<BettiVector> {
    if let Some(d) = p.degree() {
        if d > n {
            return Err(Error::InvalidInput(format!(
                "Poincaré polynomial of degree {d} exceeds vertex count {n}"
            )));
        }
    }
    let mut b = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let c = p.coeff(k);
        match c.sign() {
            Sign::Minus => {
                return Err(Error::NegativeCoefficient {
                    degree: k,
                    coefficient: c.to_string(),
                })
            }
            _ => b.push(c.magnitude().clone()),
        }
    }
    Ok(BettiVector(b))
}

/// Betti vector of `M(H)` given `E(M(H))` and the vertex count.
pub fn betti_from_e(e: &DiagonalEPolynomial, n: usize) -> Result<BettiVector> {
    betti_vector(&chromatic_to_poincare(&e.to_chromatic(), n)?, n)
}

impl BettiVector {
    /// Pad with zeros to `len`.
    pub fn padded(&self, len: usize) -> Result<Vec<BigUint>> {
        if len < self.0.len() && self.0[len..].iter().any(|b| !b.is_zero()) {
            return Err(Error::Padding(format!(
                "Betti vector of length {} does not fit in {len} slots",
                self.0.len()
            )));
        }
        let mut out = self.0.clone();
        out.resize(len, BigUint::zero());
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn betti(cs: &[u64]) -> BettiVector {
        BettiVector(cs.iter().map(|&c| BigUint::from(c)).collect())
    }

    fn forest_chi(n: usize, k: usize) -> IntPolynomial {
        // n vertices, k edges, n - k components
        IntPolynomial::binomial_power(-1, k).shift(n - k)
    }

    fn cycle_chi(n: usize) -> IntPolynomial {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        &IntPolynomial::binomial_power(-1, n) + &p(&[-1, 1]).scale(&BigInt::from(sign))
    }

    #[test]
    fn edgeless_has_trivial_poincare() {
        let chi = IntPolynomial::monomial(BigInt::one(), 5);
        assert_eq!(chromatic_to_poincare(&chi, 5).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn forest_poincare_is_binomial() {
        for k in 0..6 {
            let got = chromatic_to_poincare(&forest_chi(6, k), 6).unwrap();
            assert_eq!(got, IntPolynomial::binomial_power(1, k));
        }
    }

    #[test]
    fn five_cycle_poincare() {
        let p5 = chromatic_to_poincare(&cycle_chi(5), 5).unwrap();
        assert_eq!(p5, p(&[1, 5, 10, 10, 4]));
        // (1+t)^5 - t^4 (1+t)
        let expected = &IntPolynomial::binomial_power(1, 5) - &p(&[1, 1]).shift(4);
        assert_eq!(p5, expected);
    }

    #[test]
    fn rejects_non_chromatic_input() {
        // q^2 + q would give P = 1 - t
        assert!(matches!(
            chromatic_to_poincare(&p(&[0, 1, 1]), 2),
            Err(Error::NotChromatic(_))
        ));
        assert!(chromatic_to_poincare(&p(&[0, 1]), 2).is_err());
    }

    #[test]
    fn e_substitution_is_identity_on_coefficients() {
        let chi = p(&[0, -1, 1]);
        assert_eq!(chromatic_to_e(&chi).to_poly(), chi);
        assert_eq!(
            DiagonalEPolynomial::edgeless(5).to_poly(),
            IntPolynomial::monomial(BigInt::one(), 5)
        );
        let c4 = cycle_chi(4);
        assert_eq!(chromatic_to_e(&c4).to_poly(), c4);
    }

    #[test]
    fn betti_vectors() {
        assert_eq!(betti_vector(&IntPolynomial::one(), 5).unwrap(), betti(&[1, 0, 0, 0, 0, 0]));
        let path = IntPolynomial::binomial_power(1, 4);
        assert_eq!(betti_vector(&path, 5).unwrap(), betti(&[1, 4, 6, 4, 1, 0]));
        let c5 = chromatic_to_poincare(&cycle_chi(5), 5).unwrap();
        assert_eq!(betti_vector(&c5, 5).unwrap(), betti(&[1, 5, 10, 10, 4, 0]));
        assert!(matches!(
            betti_vector(&p(&[1, -1]), 2),
            Err(Error::NegativeCoefficient { degree: 1, .. })
        ));
    }

    #[test]
    fn six_cycle_betti() {
        let b = betti_from_e(&chromatic_to_e(&cycle_chi(6)), 6).unwrap();
        assert_eq!(b, betti(&[1, 6, 15, 20, 15, 5, 0]));
    }

    #[test]
    fn poincare_round_trip() {
        for n in 3..8 {
            let chi = cycle_chi(n);
            let back = poincare_to_chromatic(&chromatic_to_poincare(&chi, n).unwrap(), n).unwrap();
            assert_eq!(back, chi);
        }
    }

    #[test]
    fn padding() {
        let b = betti(&[1, 2, 1]);
        assert_eq!(b.padded(4).unwrap().len(), 4);
        assert!(b.padded(2).is_err());
        assert_eq!(betti(&[1, 2, 0]).padded(2).unwrap().len(), 2);
    }
}
