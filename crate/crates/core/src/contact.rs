//! Limit fibers of the contraction bundles at the torus-fixed points of
//! `P5 = P(wedge^2 S_1)`.
//!
//! At a coordinate point `kappa_ij` the contraction map `Phi_d -> S_{d+1}`
//! drops rank, so its fiber is recovered along the curve
//! `omega_t = kappa_ij + t * kappa_kl` as `t -> 0`. Two routes are
//! implemented and must agree:
//!
//! * [`LimitMethod::ImageFiber`] row-reduces the `t`-matrix using only
//!   `t`-free pivots, divides the leftover rows by their `t`-content until no
//!   new pivot appears, then sets `t = 0`. Pivot columns index a complement
//!   of the limit kernel.
//! * [`LimitMethod::KernelLimit`] never touches `t`-polynomials. Every block
//!   is weight-homogeneous, so `M(t) = D_r(t)^{-1} M(1) D_c(t)` for diagonal
//!   powers of `t`; the kernel at `t` is a rescaling of `ker M(1)` and its
//!   limit is spanned by the leading pieces of a graded echelon basis.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{binomial, monomials_of_degree, Monomial, Pair, Scalar, TPoly, WeightMultiset, WeightSystem};
use crate::error::{Error, Result};
use crate::linalg::{bipartite_components, Matrix};
use crate::par;
use crate::sections::{build_phi_basis, contract, PerturbedForm, SectionBasis};

/// A torus-fixed point `kappa_ij` of `P5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FixedPointP5(pub Pair);

impl FixedPointP5 {
    pub fn pair(&self) -> Pair {
        self.0
    }

    pub fn complement(&self) -> Pair {
        self.0.complement()
    }
}

/// The six coordinate points in canonical order, ending with `kappa_34`.
pub fn fixed_points_p5() -> Vec<FixedPointP5> {
    Pair::all().map(FixedPointP5).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitMethod {
    ImageFiber,
    KernelLimit,
}

impl LimitMethod {
    pub fn name(&self) -> &'static str {
        match self {
            LimitMethod::ImageFiber => "image-fiber",
            LimitMethod::KernelLimit => "kernel-limit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitFiberResult {
    pub pair: Pair,
    pub d: u32,
    /// Fiber of `M_d = Phi_d / L_d`.
    #[serde(rename = "weights")]
    pub quotient_weights: WeightMultiset,
    /// Fiber of `L_d`.
    pub kernel_weights: WeightMultiset,
    pub method: LimitMethod,
}

/// `C(d+4, 3)`, the rank of `M_d` (equal to `dim S_{d+1}`).
pub fn quotient_rank(d: u32) -> usize {
    binomial(u64::from(d) + 4, 3) as usize
}

/// `(d+4)(d+2)d/3`, the rank of `L_d`.
pub fn kernel_rank(d: u32) -> usize {
    let d = d as usize;
    (d + 4) * (d + 2) * d / 3
}

/// Matrix of `phi -> omega_t . phi` from `Phi_d` to `S_{d+1}`, stored by column.
///
/// Row `mu` has grading weight `wt(mu)`, column `phi` has `wt(phi) + w_i + w_j`
/// and `t` has `(w_i + w_j) - (w_k + w_l)`; every entry is homogeneous for this grading.
#[derive(Clone, Debug)]
pub struct ContractionMatrix {
    fixed_point: FixedPointP5,
    rows: Vec<Monomial>,
    row_weights: Vec<i64>,
    field_weights: Vec<i64>,
    columns: Vec<Vec<(usize, TPoly)>>,
    t_weight: i64,
    shift: i64,
}

impl ContractionMatrix {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn rows(&self) -> &[Monomial] {
        &self.rows
    }

    pub fn column(&self, c: usize) -> &[(usize, TPoly)] {
        &self.columns[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&TPoly> {
        self.columns[c].iter().find(|(i, _)| *i == r).map(|(_, v)| v)
    }

    pub fn t_weight(&self) -> i64 {
        self.t_weight
    }

    pub fn row_weight(&self, r: usize) -> i64 {
        self.row_weights[r]
    }

    pub fn column_weight(&self, c: usize) -> i64 {
        self.field_weights[c] + self.shift
    }

    /// Checks `wt(row) + k * t_weight = wt(col)` for every `c t^k` entry.
    pub fn is_homogeneous(&self) -> bool {
        self.columns.iter().enumerate().all(|(c, col)| {
            col.iter().all(|(r, v)| {
                v.coeffs().iter().enumerate().all(|(k, a)| {
                    a.is_zero() || self.row_weights[*r] + k as i64 * self.t_weight == self.column_weight(c)
                })
            })
        })
    }

    /// Independent sub-blocks (connected components of the nonzero pattern).
    fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let entries = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, _)| (*r, c)));
        bipartite_components(self.n_rows(), self.n_cols(), entries)
    }

    fn dense_block(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<TPoly>> {
        let local: HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let mut out = vec![vec![TPoly::zero(); cols.len()]; rows.len()];
        for (k, &c) in cols.iter().enumerate() {
            for (r, v) in &self.columns[c] {
                out[local[r]][k] = v.clone();
            }
        }
        out
    }
}

pub fn build_contraction_matrix(fp: FixedPointP5, d: u32, basis: &SectionBasis) -> Result<ContractionMatrix> {
    if basis.degree() != d {
        return Err(Error::DimensionMismatch(format!(
            "basis built for d={}, matrix requested for d={d}",
            basis.degree()
        )));
    }
    let w = basis.weights();
    let form = PerturbedForm::new(fp.pair());
    let omega_t = form.to_parametric();
    let rows = monomials_of_degree(d + 1);
    let row_of: HashMap<Monomial, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let columns = basis
        .fields()
        .iter()
        .map(|f| {
            let mut col: Vec<(usize, TPoly)> = contract(&omega_t, f.terms())
                .into_iter()
                .map(|(m, v)| (row_of[&m], v))
                .collect();
            col.sort_by_key(|(r, _)| *r);
            col
        })
        .collect();
    Ok(ContractionMatrix {
        fixed_point: fp,
        row_weights: rows.iter().map(|m| m.weight(w)).collect(),
        rows,
        field_weights: basis.field_weights(),
        columns,
        t_weight: form.t_weight(w),
        shift: w.pair_sum(fp.pair()),
    })
}

pub fn limit_fiber_weights(
    fp: FixedPointP5,
    d: u32,
    w: &WeightSystem,
    method: LimitMethod,
) -> Result<LimitFiberResult> {
    if d < 1 {
        return Err(Error::DegreeOutOfRange {
            got: i64::from(d),
            min: 1,
        });
    }
    let basis = build_phi_basis(d, w)?;
    limit_fiber_from_basis(fp, &basis, method)
}

/// Same as [`limit_fiber_weights`] but reusing a prebuilt basis.
pub fn limit_fiber_from_basis(fp: FixedPointP5, basis: &SectionBasis, method: LimitMethod) -> Result<LimitFiberResult> {
    let d = basis.degree();
    let m = build_contraction_matrix(fp, d, basis)?;
    let blocks = m.blocks();
    let all = WeightMultiset::new(basis.field_weights());
    let (quotient, kernel) = match method {
        LimitMethod::ImageFiber => {
            let cols: Vec<usize> = par::map(&blocks, |(r, c)| image_fiber_block(&m, r, c))
                .into_iter()
                .flatten()
                .collect();
            let quotient: WeightMultiset = cols.iter().map(|&c| m.field_weights[c]).collect();
            check_rank(fp, d, quotient.len(), quotient_rank(d))?;
            let kernel = all.difference(&quotient).expect("pivot columns are basis columns");
            (quotient, kernel)
        }
        LimitMethod::KernelLimit => {
            let kernel: WeightMultiset = par::map(&blocks, |(r, c)| kernel_limit_block(&m, r, c))
                .into_iter()
                .flatten()
                .collect();
            check_rank(fp, d, kernel.len(), kernel_rank(d))?;
            let quotient = all.difference(&kernel).expect("limit weights are basis weights");
            (quotient, kernel)
        }
    };
    Ok(LimitFiberResult {
        pair: fp.pair(),
        d,
        quotient_weights: quotient,
        kernel_weights: kernel,
        method,
    })
}

/// Runs both methods and fails unless they return the same multisets.
pub fn limit_fiber_checked(fp: FixedPointP5, basis: &SectionBasis) -> Result<LimitFiberResult> {
    let image = limit_fiber_from_basis(fp, basis, LimitMethod::ImageFiber)?;
    let kernel = limit_fiber_from_basis(fp, basis, LimitMethod::KernelLimit)?;
    if image.quotient_weights != kernel.quotient_weights || image.kernel_weights != kernel.kernel_weights {
        let p = fp.pair().one_based();
        return Err(Error::MethodMismatch {
            i: p[0],
            j: p[1],
            d: basis.degree(),
            image: image.quotient_weights.as_slice().into(),
            kernel: kernel.quotient_weights.as_slice().into(),
        });
    }
    Ok(image)
}

fn check_rank(fp: FixedPointP5, d: u32, got: usize, expected: usize) -> Result<()> {
    if got == expected {
        return Ok(());
    }
    let p = fp.pair().one_based();
    Err(Error::RankDeficient {
        i: p[0],
        j: p[1],
        d,
        got,
        expected,
    })
}

/// Image-fiber saturation on one block; returns global pivot columns at `t = 0`.
fn image_fiber_block(m: &ContractionMatrix, rows: &[usize], cols: &[usize]) -> Vec<usize> {
    if rows.is_empty() {
        return Vec::new();
    }
    let mut a = m.dense_block(rows, cols);
    let (first, mut pending) = eliminate_constant_pivots(&mut a, (0..rows.len()).collect());
    let mut saturated: Vec<usize> = first.into_iter().map(|(r, _)| r).collect();
    while !pending.is_empty() {
        for &r in &pending {
            remove_content(&mut a[r]);
        }
        let (found, rest) = eliminate_constant_pivots(&mut a, pending);
        if found.is_empty() {
            break;
        }
        saturated.extend(found.into_iter().map(|(r, _)| r));
        pending = rest;
    }
    let mut at_zero: Vec<Vec<TPoly>> = saturated
        .iter()
        .map(|&r| a[r].iter().map(|v| TPoly::constant(v.constant_term())).collect())
        .collect();
    let n = at_zero.len();
    let (pivots, _) = eliminate_constant_pivots(&mut at_zero, (0..n).collect());
    pivots.into_iter().map(|(_, c)| cols[c]).collect()
}

/// Visits `active` rows in order; a row whose first `t`-free nonzero entry
/// sits in column `c` becomes a pivot and clears `c` from the other active
/// rows. Returns `(pivots as (row, col), rows without pivot)`.
fn eliminate_constant_pivots(a: &mut [Vec<TPoly>], active: Vec<usize>) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut live = active.clone();
    let mut pivots = Vec::new();
    let mut without = Vec::new();
    for i in active {
        let Some(c) = a[i].iter().position(TPoly::is_nonzero_constant) else {
            without.push(i);
            continue;
        };
        pivots.push((i, c));
        live.retain(|&r| r != i);
        let inv = a[i][c].constant_term().recip();
        let pivot_row = a[i].clone();
        for &r in &live {
            if a[r][c].is_zero() {
                continue;
            }
            let factor = a[r][c].scale(&inv);
            for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
    }
    (pivots, without)
}

/// Divides a row by its largest common `t`-power and rational content.
fn remove_content(row: &mut [TPoly]) {
    let Some(v) = row.iter().filter_map(TPoly::valuation).min() else {
        return;
    };
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in row.iter().flat_map(|p| p.coeffs()).filter(|c| !c.is_zero()) {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    let content = Scalar::new(num, den);
    let inv = content.recip();
    for p in row.iter_mut() {
        *p = p.shift_down(v).scale(&inv);
    }
}

/// Kernel-limit weights of one block.
fn kernel_limit_block(m: &ContractionMatrix, rows: &[usize], cols: &[usize]) -> Vec<i64> {
    let one = Scalar::one();
    let at_one: Vec<Vec<Scalar>> = m
        .dense_block(rows, cols)
        .into_iter()
        .map(|r| r.iter().map(|v| v.eval(&one)).collect())
        .collect();
    let mut vectors = Matrix::from_rows(cols.len(), at_one).kernel_basis();
    // x_phi(t) = t^{-e_phi} u_phi with e_phi = col_weight / t_weight; the
    // largest e_phi dominates as t -> 0
    let sign = m.t_weight.signum();
    let key = |k: usize| sign * m.field_weights[cols[k]];
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.sort_by_key(|&k| std::cmp::Reverse(key(k)));
    let mut out = Vec::with_capacity(vectors.len());
    let mut start = 0;
    while start < order.len() && !vectors.is_empty() {
        let group_key = key(order[start]);
        let end = start + order[start..].iter().take_while(|&&k| key(k) == group_key).count();
        for &c in &order[start..end] {
            let Some(p) = vectors.iter().position(|v| !v[c].is_zero()) else {
                continue;
            };
            let pivot = vectors.swap_remove(p);
            for v in vectors.iter_mut() {
                if v[c].is_zero() {
                    continue;
                }
                let f = &v[c] / &pivot[c];
                for (x, y) in v.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            out.push(m.field_weights[cols[c]]);
        }
        start = end;
    }
    debug_assert!(vectors.iter().all(|v| v.iter().all(Zero::is_zero)));
    out
}

impl ContractionMatrix {
    pub fn fixed_point(&self) -> FixedPointP5 {
        self.fixed_point
    }

    /// The matrix at a numeric value of `t`, dense.
    pub fn evaluate(&self, t: &Scalar) -> Matrix {
        let mut out = Matrix::zeros(self.n_rows(), self.n_cols());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out.set(*r, c, v.eval(t));
            }
        }
        out
    }
}
