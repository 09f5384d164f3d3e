use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{format_scalar, int, vec_as_strings, Scalar};
use crate::error::{Error, Result};

/// Univariate polynomial in `d` with exact rational coefficients, constant term first.
///
/// Serializes as a JSON array of `num/den` strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalPolynomial {
    #[serde(with = "vec_as_strings")]
    coeffs: Vec<Scalar>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `x - a`
    pub fn linear_root(a: i64) -> Self {
        Self::new(vec![int(-a), int(1)])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Scalar {
        self.eval(&int(x))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Scalar::zero();
        RationalPolynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        self + &rhs.scale(&int(-1))
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{}", format_scalar(&a))?;
            }
            match k {
                0 => {}
                1 if show_coeff => write!(f, "*d")?,
                1 => write!(f, "d")?,
                _ if show_coeff => write!(f, "*d^{k}")?,
                _ => write!(f, "d^{k}")?,
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree `< points.len()` through all points.
///
/// Newton divided differences, expanded to the monomial basis.
pub fn lagrange_interpolate(points: &[(i64, Scalar)]) -> Result<RationalPolynomial> {
    if points.is_empty() {
        return Err(Error::InsufficientPoints { needed: 1, got: 0 });
    }
    let mut seen = HashSet::new();
    for (x, _) in points {
        if !seen.insert(*x) {
            return Err(Error::DuplicateAbscissa(*x));
        }
    }
    let xs: Vec<i64> = points.iter().map(|p| p.0).collect();
    let mut table: Vec<Scalar> = points.iter().map(|p| p.1.clone()).collect();
    let n = points.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let gap = int(xs[i] - xs[i - level]);
            table[i] = (&table[i] - &table[i - 1]) / gap;
        }
    }
    // Horner on the Newton form
    let mut acc = RationalPolynomial::constant(table[n - 1].clone());
    for i in (0..n - 1).rev() {
        acc = &(&acc * &RationalPolynomial::linear_root(xs[i])) + &RationalPolynomial::constant(table[i].clone());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ratio;
    use proptest::prelude::*;

    #[test]
    fn three_points() {
        let pts = [(0, int(1)), (1, int(3)), (2, int(7))];
        assert_eq!(
            lagrange_interpolate(&pts).unwrap(),
            RationalPolynomial::from_ints(&[1, 1, 1])
        );
    }

    #[test]
    fn single_point_is_constant() {
        let p = lagrange_interpolate(&[(5, int(42))]).unwrap();
        assert_eq!(p, RationalPolynomial::constant(int(42)));
        assert_eq!(p.degree(), Some(0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            lagrange_interpolate(&[]),
            Err(Error::InsufficientPoints { .. })
        ));
        assert!(matches!(
            lagrange_interpolate(&[(1, int(1)), (1, int(2))]),
            Err(Error::DuplicateAbscissa(1))
        ));
    }

    #[test]
    fn zero_data_gives_zero_polynomial() {
        let p = lagrange_interpolate(&[(0, int(0)), (3, int(0))]).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn rendering() {
        let p = RationalPolynomial::new(vec![ratio(-1, 2), int(0), int(1), int(-3)]);
        assert_eq!(p.to_string(), "-3*d^3 + d^2 - 1/2");
        assert_eq!(RationalPolynomial::linear_root(2).to_string(), "d - 2");
    }

    #[test]
    fn json_is_array_of_strings() {
        let p = RationalPolynomial::new(vec![ratio(1, 3), int(-2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/3","-2"]"#);
        assert_eq!(serde_json::from_str::<RationalPolynomial>(&s).unwrap(), p);
    }

    proptest! {
        #[test]
        fn reproduces_every_point(
            ys in prop::collection::vec((-1000i64..1000, 1i64..50), 1..9),
            start in -20i64..20,
            step in 1i64..4,
        ) {
            let pts: Vec<(i64, Scalar)> = ys.iter().enumerate()
                .map(|(i, &(n, d))| (start + step * i as i64, ratio(n, d)))
                .collect();
            let p = lagrange_interpolate(&pts).unwrap();
            prop_assert!(p.degree().is_none_or(|k| k < pts.len()));
            for (x, y) in &pts {
                prop_assert_eq!(&p.eval_int(*x), y);
            }
        }
    }
}
