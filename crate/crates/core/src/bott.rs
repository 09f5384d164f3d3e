//! Bott localization on `P5` for the Legendrian degree `deg L_d = c_5(M_d)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::scalar::as_string;
use crate::algebra::{elementary_symmetric, format_scalar, Pair, Scalar, WeightMultiset, WeightSystem};
use crate::contact::{
    fixed_points_p5, limit_fiber_checked, limit_fiber_from_basis, FixedPointP5, LimitFiberResult, LimitMethod,
};
use crate::error::{Error, Result};
use crate::par;
use crate::sections::build_phi_basis;

/// Dimension of `P5`.
pub const P5_DIM: usize = 5;

/// One term `e_top(fiber) / e_top(tangent)` of a localization sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointContribution {
    pub pair: Pair,
    #[serde(rename = "num", with = "as_string")]
    pub numerator: Scalar,
    #[serde(rename = "den", with = "as_string")]
    pub denominator: Scalar,
    #[serde(with = "as_string")]
    pub value: Scalar,
}

impl FixedPointContribution {
    pub fn new(pair: Pair, numerator: Scalar, denominator: Scalar) -> Self {
        assert!(!denominator.is_zero(), "vanishing Euler class at {pair}");
        let value = &numerator / &denominator;
        FixedPointContribution {
            pair,
            numerator,
            denominator,
            value,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub d: u32,
    pub weights: WeightSystem,
    pub contributions: Vec<FixedPointContribution>,
    #[serde(rename = "degree", with = "as_string")]
    pub total: Scalar,
}

/// Which limit-fiber route feeds the sum. `Both` computes the two and
/// requires them to agree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FiberSelection {
    #[default]
    Image,
    Kernel,
    Both,
}

/// Weights of `T_{kappa_ij} P5`: `(w_k + w_l) - (w_i + w_j)` over the other five pairs.
pub fn tangent_weights_p5(fp: FixedPointP5, w: &WeightSystem) -> WeightMultiset {
    let base = w.pair_sum(fp.pair());
    Pair::all()
        .filter(|&q| q != fp.pair())
        .map(|q| w.pair_sum(q) - base)
        .collect()
}

/// Sums the contributions and enforces integrality.
pub fn bott_total(contributions: &[FixedPointContribution]) -> Result<Scalar> {
    let total = contributions.iter().fold(Scalar::zero(), |acc, c| acc + &c.value);
    if !total.denom().is_one() {
        return Err(Error::NonIntegral(Box::new(total)));
    }
    Ok(total)
}

pub fn legendrian_degree(d: u32, w: &WeightSystem) -> Result<DegreeReport> {
    legendrian_degree_with(d, w, FiberSelection::Image)
}

pub fn legendrian_degree_with(d: u32, w: &WeightSystem, method: FiberSelection) -> Result<DegreeReport> {
    Ok(legendrian_degree_detailed(d, w, method)?.0)
}

/// The report together with the limit fiber found at each fixed point.
pub fn legendrian_degree_detailed(
    d: u32,
    w: &WeightSystem,
    method: FiberSelection,
) -> Result<(DegreeReport, Vec<LimitFiberResult>)> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange {
            got: i64::from(d),
            min: 2,
        });
    }
    let basis = build_phi_basis(d, w)?;
    let points = fixed_points_p5();
    let fibers = par::map(&points, |&fp| match method {
        FiberSelection::Image => limit_fiber_from_basis(fp, &basis, LimitMethod::ImageFiber),
        FiberSelection::Kernel => limit_fiber_from_basis(fp, &basis, LimitMethod::KernelLimit),
        FiberSelection::Both => limit_fiber_checked(fp, &basis),
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let contributions = points
        .iter()
        .zip(&fibers)
        .map(|(&fp, fiber)| {
            let num = elementary_symmetric(P5_DIM, &fiber.quotient_weights)?;
            let den = elementary_symmetric(P5_DIM, &tangent_weights_p5(fp, w))?;
            Ok(FixedPointContribution::new(fp.pair(), num, den))
        })
        .collect::<Result<Vec<_>>>()?;
    let total = bott_total(&contributions)?;
    Ok((
        DegreeReport {
            d,
            weights: *w,
            contributions,
            total,
        },
        fibers,
    ))
}

impl DegreeReport {
    /// Contributions sorted by the torus weight `w_i + w_j` of their fixed point.
    pub fn contributions_by_weight(&self) -> Vec<&FixedPointContribution> {
        let mut out: Vec<_> = self.contributions.iter().collect();
        out.sort_by_key(|c| (self.weights.pair_sum(c.pair), c.pair));
        out
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("Legendrian foliations, d = {}, weights ({})\n", self.d, self.weights);
        for c in &self.contributions {
            s.push_str(&format!(
                "  {}  {} / {}  = {}\n",
                c.pair,
                format_scalar(&c.numerator),
                format_scalar(&c.denominator),
                format_scalar(&c.value)
            ));
        }
        s.push_str(&format!("degree {}\n", format_scalar(&self.total)));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn fp(i: u8, j: u8) -> FixedPointP5 {
        FixedPointP5(Pair::new(i, j).unwrap())
    }

    #[test]
    fn tangent_weights() {
        let w = WeightSystem::default();
        assert_eq!(tangent_weights_p5(fp(3, 4), &w), vec![-15, -10, -7, -8, -5].into());
        assert_eq!(tangent_weights_p5(fp(1, 2), &w), vec![5, 8, 7, 10, 15].into());
        for p in fixed_points_p5() {
            let t = tangent_weights_p5(p, &w);
            assert_eq!(t.len(), 5);
            assert!(!t.as_slice().contains(&0));
        }
    }

    #[test]
    fn degree_two() {
        let r = legendrian_degree(2, &WeightSystem::default()).unwrap();
        assert_eq!(r.total, int(2224));
        // pairs 12, 13, 14, 23, 24, 34
        let want = [
            ratio(833800359, 42000),
            ratio(-38740434, 1500),
            ratio(7716777, 336),
            ratio(-4199874, 336),
            ratio(-3398841, 1500),
            ratio(-105534, 42000),
        ];
        let got: Vec<_> = r.contributions.iter().map(|c| c.value.clone()).collect();
        assert_eq!(got, want);
        let dens: Vec<_> = r.contributions.iter().map(|c| c.denominator.clone()).collect();
        assert_eq!(dens, [42000, -1500, -336, 336, 1500, -42000].map(int));
        assert_eq!(r.contributions[5].numerator, int(105534));
        let by_weight: Vec<_> = r.contributions_by_weight().iter().map(|c| c.pair.to_string()).collect();
        assert_eq!(by_weight, ["{1,2}", "{1,3}", "{2,3}", "{1,4}", "{2,4}", "{3,4}"]);
    }

    #[test]
    fn degree_below_two_rejected() {
        assert!(matches!(
            legendrian_degree(1, &WeightSystem::default()),
            Err(Error::DegreeOutOfRange { got: 1, min: 2 })
        ));
    }

    #[test]
    fn non_integral_sum_is_an_error() {
        let p = Pair::new(1, 2).unwrap();
        let c = [FixedPointContribution::new(p, int(1), int(3))];
        assert!(matches!(bott_total(&c), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn report_json_shape() {
        let r = legendrian_degree(2, &WeightSystem::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["d"], 2);
        assert_eq!(v["weights"], serde_json::json!([0, 2, 7, 10]));
        assert_eq!(v["degree"], "2224");
        assert_eq!(v["contributions"][0]["pair"], serde_json::json!([1, 2]));
        assert_eq!(v["contributions"][0]["num"], "833800359");
        assert_eq!(v["contributions"][0]["den"], "42000");
        assert_eq!(v["contributions"][0]["value"], "39704779/2000");
        let back: DegreeReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
