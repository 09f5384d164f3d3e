use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::weights::WeightSystem;

/// A monomial `x1^a x2^b x3^c x4^e` in the four homogeneous coordinates of P3.
///
/// Ordered graded-lexicographically with `x1 > x2 > x3 > x4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 4] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn times_var(mut self, i: usize) -> Self {
        self.0[i] += 1;
        self
    }

    /// Partial derivative with respect to `x_i`: `(exponent, monomial / x_i)`,
    /// or `None` when `x_i` does not divide.
    pub fn derivative(mut self, i: usize) -> Option<(u32, Self)> {
        let e = self.0[i];
        if e == 0 {
            return None;
        }
        self.0[i] -= 1;
        Some((e, self))
    }

    pub fn weight(&self, w: &WeightSystem) -> i64 {
        monomial_weight(self, w)
    }

    /// Weight under the rank-4 torus, i.e. the exponent vector itself.
    pub fn torus_character(&self) -> [i64; 4] {
        self.0.map(i64::from)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

/// All `C(k+3, 3)` monomials of degree `k`, largest first (`x1^k`, ..., `x4^k`).
pub fn monomials_of_degree(k: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(binomial(k as u64 + 3, 3) as usize);
    for a in (0..=k).rev() {
        for b in (0..=k - a).rev() {
            for c in (0..=k - a - b).rev() {
                out.push(Monomial([a, b, c, k - a - b - c]));
            }
        }
    }
    out
}

pub fn monomial_weight(m: &Monomial, w: &WeightSystem) -> i64 {
    m.0.iter().zip(w.values()).map(|(&e, wi)| i64::from(e) * wi).sum()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(monomials_of_degree(0), vec![Monomial::ONE]);
        assert_eq!(monomials_of_degree(1).len(), 4);
        assert_eq!(monomials_of_degree(3).len(), 20);
        assert_eq!(monomials_of_degree(18).len(), 1330);
    }

    #[test]
    fn variables_in_order() {
        let m = monomials_of_degree(1);
        assert_eq!(m, (0..4).map(Monomial::var).collect::<Vec<_>>());
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        for k in 0..7 {
            let ms = monomials_of_degree(k);
            assert!(ms.windows(2).all(|p| p[0] > p[1]));
            assert!(ms.iter().all(|m| m.degree() == k));
        }
    }

    #[test]
    fn weights() {
        let w = WeightSystem::default();
        assert_eq!(monomial_weight(&Monomial([0, 2, 0, 0]), &w), 4);
        assert_eq!(monomial_weight(&Monomial([0, 0, 1, 1]), &w), 17);
        assert_eq!(monomial_weight(&Monomial::ONE, &w), 0);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial([1, 0, 2, 0]).to_string(), "x1 x3^2");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }
}
