use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;

/// Integer polynomial held as `x^a (x-1)^b c(x)` with `c(0) != 0` and
/// `c(1) != 0`.
///
/// Chromatic polynomials of forests and of most threshold subgraphs are
/// dominated by the `x` and `x - 1` factors, and successive thresholds
/// differ by a single such factor. Keeping those exponents symbolic makes a
/// threshold update cost independent of the vertex count on trees and
/// forests, where a dense expansion would be quadratic.
///
/// The representation is canonical (unique factorisation in `Z[x]`), so the
/// derived equality coincides with polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FactoredPolynomial {
    x_pow: usize,
    x_minus_one_pow: usize,
    cofactor: IntPolynomial,
}

impl FactoredPolynomial {
    pub fn zero() -> Self {
        FactoredPolynomial {
            x_pow: 0,
            x_minus_one_pow: 0,
            cofactor: IntPolynomial::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_parts(0, 0, IntPolynomial::one())
    }

    /// `x^a (x-1)^b c(x)`; `c` need not be reduced.
    pub fn from_parts(x_pow: usize, x_minus_one_pow: usize, cofactor: IntPolynomial) -> Self {
        if cofactor.is_zero() {
            return Self::zero();
        }
        let mut f = FactoredPolynomial {
            x_pow,
            x_minus_one_pow,
            cofactor,
        };
        f.reduce();
        f
    }

    pub fn from_dense(p: &IntPolynomial) -> Self {
        Self::from_parts(0, 0, p.clone())
    }

    fn reduce(&mut self) {
        let leading_zeros = self
            .cofactor
            .coeffs()
            .iter()
            .take_while(|c| c.is_zero())
            .count();
        if leading_zeros > 0 {
            self.cofactor = IntPolynomial::new(self.cofactor.coeffs()[leading_zeros..].to_vec());
            self.x_pow += leading_zeros;
        }
        let one = BigInt::one();
        while self.cofactor.degree().is_some_and(|d| d > 0) && self.cofactor.coeff_sum().is_zero() {
            let (quotient, _) = self.cofactor.div_linear(&one);
            self.cofactor = quotient;
            self.x_minus_one_pow += 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cofactor.is_zero()
    }

    pub fn x_pow(&self) -> usize {
        self.x_pow
    }

    pub fn x_minus_one_pow(&self) -> usize {
        self.x_minus_one_pow
    }

    pub fn cofactor(&self) -> &IntPolynomial {
        &self.cofactor
    }

    pub fn degree(&self) -> Option<usize> {
        self.cofactor
            .degree()
            .map(|d| d + self.x_pow + self.x_minus_one_pow)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.cofactor.leading_coeff()
    }

    pub fn to_dense(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let body = if self.x_minus_one_pow == 0 {
            self.cofactor.clone()
        } else {
            &IntPolynomial::binomial_power(-1, self.x_minus_one_pow) * &self.cofactor
        };
        body.shift(self.x_pow)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_parts(
            self.x_pow + other.x_pow,
            self.x_minus_one_pow + other.x_minus_one_pow,
            &self.cofactor * &other.cofactor,
        )
    }

    pub fn neg(&self) -> Self {
        FactoredPolynomial {
            x_pow: self.x_pow,
            x_minus_one_pow: self.x_minus_one_pow,
            cofactor: -&self.cofactor,
        }
    }

    /// Subtraction after pulling out the shared `x` and `x - 1` powers; only
    /// the residual quotients are expanded.
    pub fn sub(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.neg();
        }
        let a = self.x_pow.min(other.x_pow);
        let b = self.x_minus_one_pow.min(other.x_minus_one_pow);
        let left = self.residual(a, b);
        let right = other.residual(a, b);
        Self::from_parts(a, b, &left - &right)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.sub(&other.neg())
    }

    fn residual(&self, a: usize, b: usize) -> IntPolynomial {
        let extra_b = self.x_minus_one_pow - b;
        let body = if extra_b == 0 {
            self.cofactor.clone()
        } else {
            &IntPolynomial::binomial_power(-1, extra_b) * &self.cofactor
        };
        body.shift(self.x_pow - a)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let xm1 = x - BigInt::one();
        num_traits::pow(x.clone(), self.x_pow)
            * num_traits::pow(xm1, self.x_minus_one_pow)
            * self.cofactor.eval(x)
    }
}

impl From<&IntPolynomial> for FactoredPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        Self::from_dense(p)
    }
}

impl fmt::Debug for FactoredPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x^{} (x-1)^{} ({})",
            self.x_pow,
            self.x_minus_one_pow,
            self.cofactor.display_with("x")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn forest_step_is_one_factor() {
        // x^3 (x-1)^2 - x^2 (x-1)^2 = x^2 (x-1)^3
        let e = FactoredPolynomial::from_parts(3, 2, IntPolynomial::one());
        let d = FactoredPolynomial::from_parts(2, 2, IntPolynomial::one());
        let diff = e.sub(&d);
        assert_eq!(diff.x_pow(), 2);
        assert_eq!(diff.x_minus_one_pow(), 3);
        assert_eq!(diff.cofactor(), &IntPolynomial::one());
    }

    #[test]
    fn cycle_polynomial_reduces() {
        // (x-1)^4 + (x-1) = x (x-1) (x^2 - 3x + 3)
        let c4 = &IntPolynomial::binomial_power(-1, 4) + &p(&[-1, 1]);
        let f = FactoredPolynomial::from_dense(&c4);
        assert_eq!((f.x_pow(), f.x_minus_one_pow()), (1, 1));
        assert_eq!(f.cofactor(), &p(&[3, -3, 1]));
        assert_eq!(f.to_dense(), c4);
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-6i64..=6, 0..6).prop_map(|cs| p(&cs))
    }

    proptest! {
        #[test]
        fn arithmetic_agrees_with_dense(a in small_poly(), b in small_poly(), i in 0usize..4, j in 0usize..4) {
            let a = a.shift(i) * IntPolynomial::binomial_power(-1, j);
            let fa = FactoredPolynomial::from_dense(&a);
            let fb = FactoredPolynomial::from_dense(&b);
            prop_assert_eq!(fa.to_dense(), a.clone());
            prop_assert_eq!(fa.sub(&fb).to_dense(), &a - &b);
            prop_assert_eq!(fa.add(&fb).to_dense(), &a + &b);
            prop_assert_eq!(fa.mul(&fb).to_dense(), &a * &b);
            prop_assert_eq!(fa.degree(), a.degree());
            prop_assert_eq!(fa.eval(&BigInt::from(3)), a.eval(&BigInt::from(3)));
        }
    }
}
