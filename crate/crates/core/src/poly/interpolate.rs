use num_bigint::BigInt;
use num_rational::BigRational;

use super::{IntPolynomial, Polynomial};
use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Newton divided-difference interpolation over a field.
///
/// Returns the unique polynomial of degree `< xs.len()` through the points.
/// Panics on length mismatch; duplicate abscissae are the caller's problem
/// (see [`lagrange_interpolate`] for the checked integer entry point).
pub fn interpolate<F: Ring>(xs: &[F], ys: &[F]) -> Polynomial<F> {
    assert_eq!(xs.len(), ys.len(), "interpolation needs one value per node");
    let k = xs.len();
    let mut table = ys.to_vec();
    for level in 1..k {
        for i in (level..k).rev() {
            let num = table[i].clone() - table[i - 1].clone();
            let den = xs[i].clone() - xs[i - level].clone();
            table[i] = num / den;
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..k).rev() {
        acc = &(&acc * &Polynomial::linear_root(xs[i].clone())) + &Polynomial::constant(table[i].clone());
    }
    acc
}

/// Interpolate integer samples of a polynomial known to have integer
/// coefficients.
///
/// A non-integral coefficient means the samples did not come from such a
/// polynomial, which upstream signals a miscount, so it is reported rather
/// than rounded.
pub fn lagrange_interpolate(points: &[(BigInt, BigInt)]) -> Result<IntPolynomial> {
    if points.is_empty() {
        return Err(Error::Interpolation("no sample points".into()));
    }
    let mut seen = points.iter().map(|(x, _)| x).collect::<Vec<_>>();
    seen.sort();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Interpolation(format!("duplicate abscissa {}", w[0])));
    }
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
    let ys: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
    let poly = interpolate(&xs, &ys);
    let mut coeffs = Vec::with_capacity(poly.coeffs().len());
    for (k, c) in poly.coeffs().iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Interpolation(format!(
                "coefficient of degree {k} is {c}, not an integer"
            )));
        }
        coeffs.push(c.to_integer());
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Convenience wrapper for samples at `x = 0, 1, ..., len - 1`.
pub fn interpolate_consecutive(values: &[BigInt]) -> Result<IntPolynomial> {
    let points: Vec<_> = values
        .iter()
        .enumerate()
        .map(|(x, y)| (BigInt::from(x), y.clone()))
        .collect();
    let p = lagrange_interpolate(&points)?;
    debug_assert!(values.iter().enumerate().all(|(x, y)| p.eval(&BigInt::from(x)) == *y));
    Ok(p)
}
