use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{from_bigint, Scalar};
use crate::error::{Error, Result};

/// Integer weights `(w1, w2, w3, w4)` of a one-parameter torus acting by
/// `x_i -> t^{w_i} x_i`.
///
/// Only admissible systems can be constructed: the four weights are pairwise
/// distinct and so are the six pair sums `w_i + w_j`, which makes every
/// fixed point of P5 and of G(2,4) isolated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 4]", into = "[i64; 4]")]
pub struct WeightSystem([i64; 4]);

impl WeightSystem {
    pub fn new(weights: [i64; 4]) -> Result<Self> {
        let bad = |reason: String| Error::InadmissibleWeights { weights, reason };
        for i in 0..4 {
            for j in i + 1..4 {
                if weights[i] == weights[j] {
                    return Err(bad(format!("w{} = w{}", i + 1, j + 1)));
                }
            }
        }
        let sums: Vec<_> = Pair::all().map(|p| (p, weights[p.i()] + weights[p.j()])).collect();
        for (a, (p, s)) in sums.iter().enumerate() {
            for (q, t) in &sums[a + 1..] {
                if s == t {
                    return Err(bad(format!("pair sums {p} and {q} both equal {s}")));
                }
            }
        }
        Ok(WeightSystem(weights))
    }

    pub fn values(&self) -> [i64; 4] {
        self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn pair_sum(&self, p: Pair) -> i64 {
        self.0[p.i()] + self.0[p.j()]
    }

    /// The system `w'` with `w'_i = w_{sigma(i)}` (0-based permutation).
    pub fn permuted(&self, sigma: [usize; 4]) -> Self {
        WeightSystem(sigma.map(|s| self.0[s]))
    }
}

impl Default for WeightSystem {
    fn default() -> Self {
        WeightSystem([0, 2, 7, 10])
    }
}

impl TryFrom<[i64; 4]> for WeightSystem {
    type Error = Error;
    fn try_from(w: [i64; 4]) -> Result<Self> {
        WeightSystem::new(w)
    }
}

impl From<WeightSystem> for [i64; 4] {
    fn from(w: WeightSystem) -> Self {
        w.0
    }
}

impl FromStr for WeightSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<_>>()?;
        let arr: [i64; 4] = parts
            .try_into()
            .map_err(|v: Vec<i64>| Error::Parse(format!("expected 4 weights, got {}", v.len())))?;
        WeightSystem::new(arr)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a},{b},{c},{d}")
    }
}

/// An unordered pair `{i, j}` of coordinate indices, stored 1-based with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u8; 2]", into = "[u8; 2]")]
pub struct Pair(u8, u8);

impl Pair {
    pub fn new(i: u8, j: u8) -> Result<Self> {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        if a < 1 || b > 4 || a == b {
            return Err(Error::InvalidPair(i, j));
        }
        Ok(Pair(a, b))
    }

    /// The six pairs in canonical order {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
    pub fn all() -> impl Iterator<Item = Pair> {
        [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
            .into_iter()
            .map(|(i, j)| Pair(i, j))
    }

    /// 0-based first index.
    pub fn i(&self) -> usize {
        usize::from(self.0 - 1)
    }

    /// 0-based second index.
    pub fn j(&self) -> usize {
        usize::from(self.1 - 1)
    }

    pub fn one_based(&self) -> [u8; 2] {
        [self.0, self.1]
    }

    pub fn complement(&self) -> Pair {
        let mut rest = (1..=4u8).filter(|&k| k != self.0 && k != self.1);
        Pair(rest.next().unwrap(), rest.next().unwrap())
    }

    /// Image under a 0-based permutation of the coordinates.
    pub fn mapped(&self, sigma: [usize; 4]) -> Pair {
        let a = sigma[self.i()] as u8 + 1;
        let b = sigma[self.j()] as u8 + 1;
        Pair::new(a, b).expect("permutation keeps indices distinct")
    }
}

impl TryFrom<[u8; 2]> for Pair {
    type Error = Error;
    fn try_from([i, j]: [u8; 2]) -> Result<Self> {
        Pair::new(i, j)
    }
}

impl From<Pair> for [u8; 2] {
    fn from(p: Pair) -> Self {
        p.one_based()
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// Weights of an equivariant vector space, one entry per eigenline.
///
/// Kept sorted ascending so that equality is multiset equality and output is
/// reproducible.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct WeightMultiset(Vec<i64>);

impl WeightMultiset {
    pub fn new(mut weights: Vec<i64>) -> Self {
        weights.sort_unstable();
        WeightMultiset(weights)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        WeightMultiset::new(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Multiset difference `self - other`, or `None` if `other` is not contained in `self`.
    pub fn difference(&self, other: &WeightMultiset) -> Option<WeightMultiset> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(other.len()));
        let mut rest = other.0.iter().peekable();
        for &x in &self.0 {
            match rest.peek() {
                Some(&&y) if y == x => {
                    rest.next();
                }
                Some(&&y) if y < x => return None,
                _ => out.push(x),
            }
        }
        rest.next().is_none().then_some(WeightMultiset(out))
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> WeightMultiset {
        WeightMultiset::new(self.0.iter().map(|&x| f(x)).collect())
    }
}

impl From<Vec<i64>> for WeightMultiset {
    fn from(v: Vec<i64>) -> Self {
        WeightMultiset::new(v)
    }
}

impl From<WeightMultiset> for Vec<i64> {
    fn from(m: WeightMultiset) -> Self {
        m.0
    }
}

impl FromIterator<i64> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        WeightMultiset::new(iter.into_iter().collect())
    }
}

/// `e_k` of the multiset: the coefficient of `t^k` in `prod (1 + s_i t)`.
pub fn elementary_symmetric(k: usize, s: &WeightMultiset) -> Result<Scalar> {
    if k > s.len() {
        return Err(Error::SymmetricIndex { k, size: s.len() });
    }
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for (n, &x) in s.as_slice().iter().enumerate() {
        let x = BigInt::from(x);
        for j in (1..=k.min(n + 1)).rev() {
            let add = &e[j - 1] * &x;
            e[j] += add;
        }
    }
    Ok(from_bigint(e.swap_remove(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;
    use proptest::prelude::*;

    fn fiber_34() -> WeightMultiset {
        vec![-2, 0, 2, 4, 13, 10, 7, 4, 5, 2, -1, -3, -6, 3, 0, -3, -5, -8, -7, -10].into()
    }

    #[test]
    fn e5_of_the_twenty_weights() {
        assert_eq!(elementary_symmetric(5, &fiber_34()).unwrap(), int(105534));
    }

    #[test]
    fn e0_is_one_and_top_is_product() {
        assert_eq!(elementary_symmetric(0, &fiber_34()).unwrap(), int(1));
        let s: WeightMultiset = vec![-15, -10, -7, -8, -5].into();
        assert_eq!(elementary_symmetric(5, &s).unwrap(), int(-42000));
    }

    #[test]
    fn index_too_large() {
        let s: WeightMultiset = vec![1, 2].into();
        assert!(matches!(
            elementary_symmetric(3, &s),
            Err(Error::SymmetricIndex { k: 3, size: 2 })
        ));
    }

    #[test]
    fn admissibility() {
        assert!(WeightSystem::new([0, 2, 7, 10]).is_ok());
        assert!(WeightSystem::new([0, 1, 5, 13]).is_ok());
        assert!(WeightSystem::new([1, 3, 9, 20]).is_ok());
        // w1+w4 = w2+w3
        assert!(WeightSystem::new([0, 1, 2, 3]).is_err());
        assert!(WeightSystem::new([0, 0, 7, 10]).is_err());
        assert!("0,2,7".parse::<WeightSystem>().is_err());
        assert_eq!("0, 2,7,10".parse::<WeightSystem>().unwrap(), WeightSystem::default());
    }

    #[test]
    fn pairs() {
        let all: Vec<_> = Pair::all().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[5], Pair::new(3, 4).unwrap());
        assert_eq!(all[5].complement(), Pair::new(1, 2).unwrap());
        assert!(Pair::new(2, 2).is_err());
        assert!(Pair::new(0, 3).is_err());
        assert_eq!(Pair::new(4, 1).unwrap().one_based(), [1, 4]);
    }

    #[test]
    fn multiset_difference() {
        let a: WeightMultiset = vec![3, 1, 2, 2].into();
        let b: WeightMultiset = vec![2, 3].into();
        assert_eq!(a.difference(&b).unwrap().as_slice(), &[1, 2]);
        assert!(b.difference(&a).is_none());
        assert_eq!(a.difference(&b).unwrap().union(&b), a);
    }

    proptest! {
        #[test]
        fn permutation_invariant(mut v in prop::collection::vec(-20i64..20, 0..12), k in 0usize..12, seed in any::<u64>()) {
            let k = k.min(v.len());
            let before = elementary_symmetric(k, &WeightMultiset(v.clone())).unwrap();
            // rotate + reverse is enough to scramble without a RNG
            let r = (seed as usize) % (v.len().max(1));
            v.rotate_left(r);
            v.reverse();
            let after = elementary_symmetric(k, &WeightMultiset(v)).unwrap();
            prop_assert_eq!(before, after);
        }

        #[test]
        fn top_function_scales_homogeneously(v in prop::collection::vec(-9i64..9, 0..10), c in -5i64..6) {
            let n = v.len();
            let scaled: WeightMultiset = v.iter().map(|x| x * c).collect();
            let lhs = elementary_symmetric(n, &scaled).unwrap();
            let rhs = elementary_symmetric(n, &WeightMultiset::new(v)).unwrap()
                * int(c).pow(n as i32);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn matches_product_expansion(v in prop::collection::vec(-9i64..9, 0..8)) {
            // expand prod (1 + s_i t) directly as a coefficient vector
            let mut coeffs = vec![int(1)];
            for &x in &v {
                let mut next = vec![int(0); coeffs.len() + 1];
                for (j, c) in coeffs.iter().enumerate() {
                    next[j] += c;
                    next[j + 1] += c * int(x);
                }
                coeffs = next;
            }
            let s = WeightMultiset::new(v);
            for (k, c) in coeffs.iter().enumerate() {
                prop_assert_eq!(&elementary_symmetric(k, &s).unwrap(), c);
            }
        }
    }
}
