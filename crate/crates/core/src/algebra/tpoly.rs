use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{format_scalar, Scalar};

/// Polynomial in the formal perturbation parameter `t`, constant term first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TPoly(Vec<Scalar>);

impl TPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly(coeffs)
    }

    pub fn zero() -> Self {
        TPoly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = vec![Scalar::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn t() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero and free of `t`.
    pub fn is_nonzero_constant(&self) -> bool {
        self.0.len() == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Largest `k` with `t^k` dividing the polynomial; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// Exact division by `t^k`; caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.valuation().is_none_or(|v| v >= k));
        TPoly(self.0.iter().skip(k).cloned().collect())
    }

    pub fn constant_term(&self) -> Scalar {
        self.0.first().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.0.iter().rev().fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TPoly(self.0.iter().map(|a| a * c).collect())
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: Self) -> TPoly {
        let (long, short) = if self.0.len() >= rhs.0.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.0.clone();
        for (o, s) in out.iter_mut().zip(&short.0) {
            *o += s;
        }
        TPoly::new(out)
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        *self = &*self + rhs;
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: Self) -> TPoly {
        self + &-rhs
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: Self) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            let show = k == 0 || !a.is_one();
            if show {
                write!(f, "{}", format_scalar(&a))?;
            }
            match (k, show) {
                (0, _) => {}
                (1, true) => write!(f, "*t")?,
                (1, false) => write!(f, "t")?,
                (_, true) => write!(f, "*t^{k}")?,
                (_, false) => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}
