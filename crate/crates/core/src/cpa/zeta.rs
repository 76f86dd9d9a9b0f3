//! Barcode zeta `Z(T) = prod_j (1 - T^j)^(-Delta_j)`, truncated.
//!
//! Each factor expands as the generalised binomial series
//! `sum_k C(Delta + k - 1, k) T^(jk)` with
//! `C(Delta + k - 1, k) = Delta (Delta + 1) ... (Delta + k - 1) / k!`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::poly::{DiagonalEPolynomial, IntPolynomial, RationalPolynomial};

fn to_rational(p: &IntPolynomial) -> RationalPolynomial {
    p.map(|c| BigRational::from_integer(c.clone()))
}

/// Power series in `T` with coefficients in `Q[s]`, truncated after `T^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaSeries {
    coeffs: Vec<RationalPolynomial>,
}

impl ZetaSeries {
    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![RationalPolynomial::zero(); order + 1];
        coeffs[0] = RationalPolynomial::one();
        ZetaSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `T^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> RationalPolynomial {
        self.coeffs.get(k).cloned().unwrap_or_else(RationalPolynomial::zero)
    }

    pub fn coeffs(&self) -> &[RationalPolynomial] {
        &self.coeffs
    }

    /// Multiply by `(1 - T^j)^(-delta)` in place.
    pub fn mul_euler_factor(&mut self, j: usize, delta: &IntPolynomial) {
        assert!(j >= 1, "event indices start at 1");
        let order = self.order();
        if j > order || delta.is_zero() {
            return;
        }
        let delta = to_rational(delta);
        // binom[k] = C(delta + k - 1, k)
        let mut binom = vec![RationalPolynomial::one()];
        for k in 1..=order / j {
            let shifted = &delta + &RationalPolynomial::constant(BigRational::from_integer(BigInt::from(k - 1)));
            let inv_k = BigRational::new(BigInt::from(1), BigInt::from(k));
            binom.push((&binom[k - 1] * &shifted).scale(&inv_k));
        }
        let old = std::mem::take(&mut self.coeffs);
        self.coeffs = (0..=order)
            .map(|t| {
                (0..=t / j).fold(RationalPolynomial::zero(), |acc, k| {
                    &acc + &(&old[t - j * k] * &binom[k])
                })
            })
            .collect();
    }
}

impl Serialize for ZetaSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

/// `z * (1 - T^j)^(-delta)`, truncated at `z`'s order.
pub fn zeta_update(z: &ZetaSeries, j: usize, delta: &DiagonalEPolynomial) -> ZetaSeries {
    let mut out = z.clone();
    out.mul_euler_factor(j, &delta.to_poly());
    out
}

/// Factors of the barcode zeta, expanded on demand.
///
/// Only factors with `j <= order` are kept; the rest are `1` modulo
/// `T^(order + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarcodeZeta {
    order: usize,
    factors: Vec<(usize, DiagonalEPolynomial)>,
}

impl BarcodeZeta {
    pub fn new(order: usize) -> Self {
        BarcodeZeta {
            order,
            factors: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn push(&mut self, j: usize, delta: &DiagonalEPolynomial) {
        if j <= self.order {
            self.factors.push((j, delta.clone()));
        }
    }

    pub fn factors(&self) -> &[(usize, DiagonalEPolynomial)] {
        &self.factors
    }

    pub fn series(&self) -> ZetaSeries {
        let mut z = ZetaSeries::one(self.order);
        for (j, delta) in &self.factors {
            z.mul_euler_factor(*j, &delta.to_poly());
        }
        z
    }

    /// Same factors, truncated lower.
    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order);
        BarcodeZeta {
            order,
            factors: self.factors.iter().filter(|(j, _)| *j <= order).cloned().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> DiagonalEPolynomial {
        DiagonalEPolynomial::from_poly(&IntPolynomial::x())
    }

    fn rat(cs: &[(i64, i64)]) -> RationalPolynomial {
        RationalPolynomial::new(
            cs.iter()
                .map(|&(a, b)| BigRational::new(a.into(), b.into()))
                .collect(),
        )
    }

    #[test]
    fn first_order_term() {
        let z = zeta_update(&ZetaSeries::one(1), 1, &s());
        assert_eq!(z.coeffs(), &[rat(&[(1, 1)]), rat(&[(0, 1), (1, 1)])]);
    }

    #[test]
    fn only_k_equal_one_fits() {
        let z = zeta_update(&ZetaSeries::one(3), 2, &s());
        assert_eq!(z.coeff(1), RationalPolynomial::zero());
        assert_eq!(z.coeff(2), rat(&[(0, 1), (1, 1)]));
        assert_eq!(z.coeff(3), RationalPolynomial::zero());
    }

    #[test]
    fn zero_jump_is_identity() {
        let zero = DiagonalEPolynomial::from_poly(&IntPolynomial::zero());
        let z = zeta_update(&ZetaSeries::one(4), 1, &s());
        assert_eq!(zeta_update(&z, 2, &zero), z);
    }

    #[test]
    fn binomial_series_second_coefficient() {
        // (1 - T)^(-s): coefficient of T^2 is s (s + 1) / 2
        let z = zeta_update(&ZetaSeries::one(2), 1, &s());
        assert_eq!(z.coeff(2), rat(&[(0, 1), (1, 2), (1, 2)]));
    }

    #[test]
    fn lazy_and_eager_agree() {
        let mut lazy = BarcodeZeta::new(3);
        let mut eager = ZetaSeries::one(3);
        let deltas = [s(), DiagonalEPolynomial::from_poly(&IntPolynomial::linear_root(BigInt::from(1)))];
        for (i, d) in deltas.iter().enumerate() {
            lazy.push(i + 1, d);
            eager = zeta_update(&eager, i + 1, d);
        }
        assert_eq!(lazy.series(), eager);
        assert_eq!(lazy.truncated(1).series().coeffs(), &eager.coeffs()[..2]);
    }
}
