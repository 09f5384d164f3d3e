//! Foliations tangent to a pencil of planes: `deg = c_4(P_d (x) wedge^2 Q)`
//! on `G(2,4)`, by localization at the six coordinate planes.

use serde::{Deserialize, Serialize};

use crate::algebra::scalar::as_string;
use crate::algebra::{
    binomial, elementary_symmetric, format_scalar, int, monomials_of_degree, ratio, Pair, Scalar, WeightMultiset,
    WeightSystem,
};
use crate::bott::{bott_total, FixedPointContribution};
use crate::error::{Error, Result};
use crate::par;
use crate::sections::phi_dimension;

pub const G24_DIM: usize = 4;

/// The coordinate subspace `R = <x_i, x_j>` of `S_1`, with quotient `Q` spanned by the other two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FixedPointG24(pub Pair);

impl FixedPointG24 {
    pub fn pair(&self) -> Pair {
        self.0
    }

    pub fn r_weights(&self, w: &WeightSystem) -> [i64; 2] {
        [w.get(self.0.i()), w.get(self.0.j())]
    }

    pub fn q_weights(&self, w: &WeightSystem) -> [i64; 2] {
        let q = self.0.complement();
        [w.get(q.i()), w.get(q.j())]
    }
}

pub fn fixed_points_g24() -> Vec<FixedPointG24> {
    Pair::all().map(FixedPointG24).collect()
}

/// Weights of `Hom(R, Q)`.
pub fn tangent_weights_g24(fp: FixedPointG24, w: &WeightSystem) -> WeightMultiset {
    let r = fp.r_weights(w);
    let q = fp.q_weights(w);
    q.iter().flat_map(|&b| r.iter().map(move |&a| b - a)).collect()
}

/// Weights of `P_d (x) wedge^2 Q`: degree-`(d+1)` monomial weights, minus
/// those of `Sym_{d+1} Q`, all shifted by `w_k + w_l`.
pub fn pd_twisted_weights(fp: FixedPointG24, d: u32, w: &WeightSystem) -> WeightMultiset {
    let [qk, ql] = fp.q_weights(w);
    let all: WeightMultiset = monomials_of_degree(d + 1).iter().map(|m| m.weight(w)).collect();
    let n = i64::from(d) + 1;
    let sym: WeightMultiset = (0..=n).map(|a| a * qk + (n - a) * ql).collect();
    all.difference(&sym)
        .expect("Sym_{d+1} Q is a quotient of S_{d+1}")
        .map(|x| x + qk + ql)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilReport {
    pub family: String,
    pub d: u32,
    pub weights: WeightSystem,
    pub contributions: Vec<FixedPointContribution>,
    #[serde(rename = "degree", with = "as_string")]
    pub total: Scalar,
}

impl PencilReport {
    pub fn render_text(&self) -> String {
        let mut s = format!(
            "Pencil-tangent foliations, d = {}, weights ({})\n",
            self.d, self.weights
        );
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

pub fn pencil_degree(d: u32, w: &WeightSystem) -> Result<PencilReport> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange {
            got: i64::from(d),
            min: 2,
        });
    }
    let points = fixed_points_g24();
    let contributions = par::map(&points, |&fp| {
        let num = elementary_symmetric(G24_DIM, &pd_twisted_weights(fp, d, w))?;
        let den = elementary_symmetric(G24_DIM, &tangent_weights_g24(fp, w))?;
        Ok(FixedPointContribution::new(fp.pair(), num, den))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let total = bott_total(&contributions)?;
    Ok(PencilReport {
        family: "pencil".into(),
        d,
        weights: *w,
        contributions,
        total,
    })
}

/// `5 C(d+4,5) C(d+3,3) (d^2+2d+3)(d^2+6d+11) / 108`
pub fn pencil_degree_closed_form(d: i64) -> Scalar {
    let b5 = binom_scalar(d + 4, 5);
    let b3 = binom_scalar(d + 3, 3);
    int(5) * b5 * b3 * int(d * d + 2 * d + 3) * int(d * d + 6 * d + 11) / int(108)
}

/// `C(n, k)` for any integer `n`, as the polynomial `n(n-1)...(n-k+1)/k!`.
pub(crate) fn binom_scalar(n: i64, k: i64) -> Scalar {
    (0..k).fold(int(1), |acc, i| acc * ratio(n - i, i + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilRanks {
    pub rank_pd: usize,
    pub rank_pi_d: usize,
    pub dim_phi: usize,
}

/// `rank P_d = C(d+4,3) - (d+2)`, `dim Phi_d`, and `rank Pi_d` as their
/// difference; the latter equals `2 C(d+3,3)`.
pub fn pencil_rank_checks(d: u32) -> Result<PencilRanks> {
    if d < 1 {
        return Err(Error::DegreeOutOfRange {
            got: i64::from(d),
            min: 1,
        });
    }
    let rank_pd = binomial(u64::from(d) + 4, 3) as usize - (d as usize + 2);
    let dim_phi = phi_dimension(d);
    Ok(PencilRanks {
        rank_pd,
        rank_pi_d: dim_phi - rank_pd,
        dim_phi,
    })
}

/// `dim Pi_d = 3 + 2 C(d+3,3) - 1`: Grassmannian plus projectivized fiber.
pub fn pencil_variety_dimension(d: u32) -> usize {
    3 + 2 * binomial(u64::from(d) + 3, 3) as usize - 1
}
