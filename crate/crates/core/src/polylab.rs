//! Interpolation of degree sequences into exact polynomials in `d`, and the
//! closed forms they are checked against.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{int, lagrange_interpolate, ratio, RationalPolynomial, Scalar, WeightSystem};
use crate::bott::{legendrian_degree_with, FiberSelection};
use crate::error::{Error, Result};
use crate::pencil::{binom_scalar, pencil_degree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Legendrian,
    Pencil,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Legendrian => "legendrian",
            Family::Pencil => "pencil",
        }
    }

    /// Degree bound of the sequence in `d`.
    pub fn degree_bound(self) -> usize {
        match self {
            Family::Legendrian => 15,
            Family::Pencil => 12,
        }
    }

    pub fn points_needed(self) -> usize {
        self.degree_bound() + 1
    }

    pub fn degree(self, d: u32, w: &WeightSystem) -> Result<Scalar> {
        match self {
            Family::Legendrian => Ok(legendrian_degree_with(d, w, FiberSelection::Image)?.total),
            Family::Pencil => Ok(pencil_degree(d, w)?.total),
        }
    }

    pub fn closed_form(self) -> RationalPolynomial {
        match self {
            Family::Legendrian => athusbis_polynomial(),
            Family::Pencil => pencil_polynomial(),
        }
    }

    pub fn closed_form_at(self, d: i64) -> Scalar {
        match self {
            Family::Legendrian => athusbis_closed_form(d),
            Family::Pencil => crate::pencil::pencil_degree_closed_form(d),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "legendrian" => Ok(Family::Legendrian),
            "pencil" => Ok(Family::Pencil),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

const CUBIC: [i64; 4] = [24, 14, 9, 1];
const OCTIC: [i64; 9] = [29808, 44856, 45444, 29872, 13480, 3430, 475, 34, 1];

fn horner(cs: &[i64], d: i64) -> Scalar {
    cs.iter().rev().fold(int(0), |acc, &c| acc * int(d) + int(c))
}

/// `C(d+2,4) (d^3+9d^2+14d+24) (d^8+34d^7+...+29808) / 38880`
pub fn athusbis_closed_form(d: i64) -> Scalar {
    binom_scalar(d + 2, 4) * horner(&CUBIC, d) * horner(&OCTIC, d) / int(38880)
}

/// Product of `x - r` over the roots, times `c`.
fn from_roots(c: Scalar, roots: &[i64]) -> RationalPolynomial {
    roots.iter().fold(RationalPolynomial::constant(c), |acc, &r| {
        &acc * &RationalPolynomial::linear_root(r)
    })
}

/// The Legendrian closed form as a polynomial in `d`, degree 15.
pub fn athusbis_polynomial() -> RationalPolynomial {
    let binom = from_roots(ratio(1, 24 * 38880), &[-2, -1, 0, 1]);
    &(&binom * &RationalPolynomial::from_ints(&CUBIC)) * &RationalPolynomial::from_ints(&OCTIC)
}

/// The pencil closed form as a polynomial in `d`, degree 12.
pub fn pencil_polynomial() -> RationalPolynomial {
    let b5 = from_roots(ratio(5, 120 * 108), &[-4, -3, -2, -1, 0]);
    let b3 = from_roots(ratio(1, 6), &[-3, -2, -1]);
    let q1 = RationalPolynomial::from_ints(&[3, 2, 1]);
    let q2 = RationalPolynomial::from_ints(&[11, 6, 1]);
    &(&(&b5 * &b3) * &q1) * &q2
}

/// Interpolates `points` and requires integer values at three abscissae past the last point.
pub fn fit_sequence(points: &[(i64, Scalar)], degree_bound: usize) -> Result<RationalPolynomial> {
    if points.len() < degree_bound + 1 {
        return Err(Error::InsufficientPoints {
            needed: degree_bound + 1,
            got: points.len(),
        });
    }
    let p = lagrange_interpolate(points)?;
    let last = points.iter().map(|(x, _)| *x).max().unwrap_or(0);
    for d in last + 1..=last + 3 {
        let v = p.eval_int(d);
        if !v.denom().is_one() {
            return Err(Error::NonIntegralInterpolant { d, value: Box::new(v) });
        }
    }
    Ok(p)
}

/// Computed degrees for `d_min..=d_max`, one entry per `d`.
pub fn degree_sequence(family: Family, d_min: u32, d_max: u32, w: &WeightSystem) -> Result<Vec<(i64, Scalar)>> {
    (d_min..=d_max)
        .map(|d| Ok((i64::from(d), family.degree(d, w)?)))
        .collect()
}

/// Interpolates the family over `d_min..=d_max` and compares with its closed form.
pub fn interpolate_family(family: Family, d_min: u32, d_max: u32, w: &WeightSystem) -> Result<RationalPolynomial> {
    let count = (d_max + 1).saturating_sub(d_min) as usize;
    if count < family.points_needed() {
        return Err(Error::InsufficientPoints {
            needed: family.points_needed(),
            got: count,
        });
    }
    let points = degree_sequence(family, d_min, d_max, w)?;
    let p = fit_sequence(&points, family.degree_bound())?;
    if p != family.closed_form() {
        let (d, computed) = points
            .iter()
            .find(|(d, v)| *v != family.closed_form_at(*d))
            .cloned()
            .unwrap_or_else(|| (points[0].0, points[0].1.clone()));
        return Err(Error::OracleMismatch {
            d,
            computed: Box::new(computed),
            expected: Box::new(family.closed_form_at(d)),
        });
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointwiseMatch {
    pub d: i64,
    #[serde(with = "crate::algebra::scalar::as_string")]
    pub computed: Scalar,
    #[serde(with = "crate::algebra::scalar::as_string")]
    pub expected: Scalar,
}

impl PointwiseMatch {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

/// Compares computed degrees against the closed form one `d` at a time.
pub fn pointwise_check(family: Family, d_min: u32, d_max: u32, w: &WeightSystem) -> Result<Vec<PointwiseMatch>> {
    Ok(degree_sequence(family, d_min, d_max, w)?
        .into_iter()
        .map(|(d, computed)| PointwiseMatch {
            d,
            computed,
            expected: family.closed_form_at(d),
        })
        .collect())
}
