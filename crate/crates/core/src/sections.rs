//! Weight-homogeneous bases of the space of degree-`d` foliations and
//! contraction of vector fields against degree-0 distributions.
//!
//! `H^0(P3, TP3(d-1))` is modelled by the divergence-free part of
//! `S_d (x) S_1^*`: the radial multiples `nu * (sum x_i d_i)` have divergence
//! `(d+3) nu`, so in characteristic zero the divergence-free fields form a
//! complement of the radial ones.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{format_scalar, int, monomials_of_degree, Monomial, Pair, Scalar, TPoly, WeightSystem};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::par;

/// A sparse polynomial in `x1..x4` keyed by monomial.
pub type Polynomial<C> = BTreeMap<Monomial, C>;

/// `coeff * monomial * d/dx_{direction}`, direction 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialField {
    pub coeff: Scalar,
    pub monomial: Monomial,
    pub direction: usize,
}

impl MonomialField {
    pub fn new(coeff: Scalar, monomial: Monomial, direction: usize) -> Self {
        assert!(direction < 4, "direction out of range");
        MonomialField {
            coeff,
            monomial,
            direction,
        }
    }

    /// Weight of the eigenvector `monomial * d_j` under `x_i -> t^{w_i} x_i`.
    pub fn weight(&self, w: &WeightSystem) -> i64 {
        self.monomial.weight(w) - w.get(self.direction)
    }

    /// Character under the full rank-4 torus.
    pub fn torus_character(&self) -> [i64; 4] {
        let mut c = self.monomial.torus_character();
        c[self.direction] -= 1;
        c
    }
}

impl fmt::Display for MonomialField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.coeff.abs();
        if self.coeff.is_negative() {
            write!(f, "-")?;
        }
        match (a.is_one(), self.monomial.degree()) {
            (true, 0) => {}
            (true, _) => write!(f, "{} ", self.monomial)?,
            (false, 0) => write!(f, "{} ", format_scalar(&a))?,
            (false, _) => write!(f, "{}·{} ", format_scalar(&a), self.monomial)?,
        }
        write!(f, "∂{}", self.direction + 1)
    }
}

/// A divergence-free, weight-homogeneous vector field of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisField {
    terms: Vec<MonomialField>,
    weight: i64,
}

impl BasisField {
    pub fn terms(&self) -> &[MonomialField] {
        &self.terms
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    /// Components `(p1, p2, p3, p4)` as sparse polynomials.
    pub fn components(&self) -> [Polynomial<Scalar>; 4] {
        let mut out: [Polynomial<Scalar>; 4] = Default::default();
        for t in &self.terms {
            *out[t.direction].entry(t.monomial).or_insert_with(Scalar::zero) += &t.coeff;
        }
        out
    }
}

impl fmt::Display for BasisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            let s = t.to_string();
            match (k, s.strip_prefix('-')) {
                (0, _) => write!(f, "{s}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

/// Ordered basis of the divergence-free fields of degree `d`, built block by
/// block over the torus weights.
#[derive(Clone, Debug)]
pub struct SectionBasis {
    degree: u32,
    weights: WeightSystem,
    fields: Vec<BasisField>,
}

impl SectionBasis {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn fields(&self) -> &[BasisField] {
        &self.fields
    }

    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }

    pub fn field_weights(&self) -> Vec<i64> {
        self.fields.iter().map(BasisField::weight).collect()
    }
}

/// `(d+4)(d+2)(d+1)/2`
pub fn phi_dimension(d: u32) -> usize {
    let d = d as usize;
    (d + 4) * (d + 2) * (d + 1) / 2
}

pub fn divergence(terms: &[MonomialField]) -> Result<Polynomial<Scalar>> {
    let mut out = Polynomial::new();
    let Some(first) = terms.first() else {
        return Ok(out);
    };
    let deg = first.monomial.degree();
    for t in terms {
        if t.monomial.degree() != deg {
            return Err(Error::MixedDegrees {
                first: deg,
                other: t.monomial.degree(),
            });
        }
        if let Some((e, m)) = t.monomial.derivative(t.direction) {
            let c = out.entry(m).or_insert_with(Scalar::zero);
            *c += &t.coeff * int(i64::from(e));
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// All `mu * d_j` with `deg mu = d`, direction-major, monomials largest first.
pub fn monomial_fields(d: u32) -> Vec<MonomialField> {
    let mons = monomials_of_degree(d);
    (0..4)
        .flat_map(|j| mons.iter().map(move |&m| MonomialField::new(Scalar::one(), m, j)))
        .collect()
}

/// Divergence-free basis of weight eigenvectors.
///
/// Monomial fields are grouped by torus weight; inside each group the kernel
/// of the divergence is read off the reduced row-echelon form (one vector per
/// free column, free coordinate 1). Groups are concatenated by increasing weight.
pub fn build_phi_basis(d: u32, w: &WeightSystem) -> Result<SectionBasis> {
    if d < 1 {
        return Err(Error::DegreeOutOfRange {
            got: i64::from(d),
            min: 1,
        });
    }
    let all = monomial_fields(d);
    let mut blocks: BTreeMap<i64, Vec<&MonomialField>> = BTreeMap::new();
    for f in &all {
        blocks.entry(f.weight(w)).or_default().push(f);
    }
    let blocks: Vec<(i64, Vec<&MonomialField>)> = blocks.into_iter().collect();
    let per_block = par::map(&blocks, |(weight, fields)| divergence_free_block(*weight, fields));
    let fields: Vec<BasisField> = per_block.into_iter().flatten().collect();
    debug_assert_eq!(fields.len(), phi_dimension(d));
    Ok(SectionBasis {
        degree: d,
        weights: *w,
        fields,
    })
}

fn divergence_free_block(weight: i64, fields: &[&MonomialField]) -> Vec<BasisField> {
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut entries = Vec::new();
    for (c, f) in fields.iter().enumerate() {
        if let Some((e, m)) = f.monomial.derivative(f.direction) {
            let n = row_of.len();
            let r = *row_of.entry(m).or_insert(n);
            entries.push((r, c, int(i64::from(e))));
        }
    }
    let mut div = Matrix::zeros(row_of.len(), fields.len());
    for (r, c, v) in entries {
        div.set(r, c, v);
    }
    div.kernel_basis()
        .into_iter()
        .map(|v| BasisField {
            terms: v
                .into_iter()
                .zip(fields)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, f)| MonomialField::new(c, f.monomial, f.direction))
                .collect(),
            weight,
        })
        .collect()
}

/// A degree-0 distribution `sum alpha_ij kappa_ij`, with
/// `kappa_ij = x_j dx_i - x_i dx_j` and coefficients in canonical pair order
/// `12, 13, 14, 23, 24, 34`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisymmetricForm([Scalar; 6]);

impl AntisymmetricForm {
    pub fn new(alpha: [Scalar; 6]) -> Result<Self> {
        if alpha.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(AntisymmetricForm(alpha))
    }

    pub fn from_ints(alpha: [i64; 6]) -> Result<Self> {
        Self::new(alpha.map(int))
    }

    /// The coordinate form `kappa_ij`.
    pub fn coordinate(p: Pair) -> Self {
        let mut a = [0; 6];
        a[pair_index(p)] = 1;
        Self::from_ints(a).expect("nonzero")
    }

    /// `u ^ v` for linear forms `u, v`: `alpha_ij = u_i v_j - u_j v_i`.
    pub fn decomposable(u: [i64; 4], v: [i64; 4]) -> Result<Self> {
        let alpha = Pair::all()
            .map(|p| u[p.i()] * v[p.j()] - u[p.j()] * v[p.i()])
            .collect::<Vec<_>>();
        Self::from_ints(alpha.try_into().unwrap())
    }

    pub fn coefficients(&self) -> &[Scalar; 6] {
        &self.0
    }

    /// `alpha12 alpha34 - alpha13 alpha24 + alpha14 alpha23`; nonzero exactly
    /// for contact forms.
    pub fn pfaffian(&self) -> Scalar {
        let a = &self.0;
        &a[0] * &a[5] - &a[1] * &a[4] + &a[2] * &a[3]
    }

    pub fn is_contact(&self) -> bool {
        !self.pfaffian().is_zero()
    }

    pub fn to_parametric(&self) -> ParametricForm {
        ParametricForm(self.0.clone().map(TPoly::constant))
    }

    /// `omega . phi` for a constant form.
    pub fn contract(&self, terms: &[MonomialField]) -> Polynomial<Scalar> {
        contract(&self.to_parametric(), terms)
            .into_iter()
            .map(|(m, p)| (m, p.constant_term()))
            .collect()
    }
}

/// `omega_t = kappa_base + t * kappa_perturb`, with `perturb` the complementary
/// pair, so the Pfaffian of `omega_t` is `t` and the curve leaves the
/// Pfaff-Plucker quadric transversally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerturbedForm {
    base: Pair,
    perturb: Pair,
}

impl PerturbedForm {
    pub fn new(base: Pair) -> Self {
        PerturbedForm {
            base,
            perturb: base.complement(),
        }
    }

    pub fn base(&self) -> Pair {
        self.base
    }

    pub fn perturb(&self) -> Pair {
        self.perturb
    }

    /// Torus weight carried by `t`: `(w_i + w_j) - (w_k + w_l)`.
    pub fn t_weight(&self, w: &WeightSystem) -> i64 {
        w.pair_sum(self.base) - w.pair_sum(self.perturb)
    }

    pub fn to_parametric(&self) -> ParametricForm {
        let mut a: [TPoly; 6] = Default::default();
        a[pair_index(self.base)] = TPoly::constant(Scalar::one());
        a[pair_index(self.perturb)] = TPoly::t();
        ParametricForm(a)
    }
}

/// A degree-0 form whose six coefficients are polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricForm(pub [TPoly; 6]);

impl From<&AntisymmetricForm> for ParametricForm {
    fn from(f: &AntisymmetricForm) -> Self {
        f.to_parametric()
    }
}

impl From<&PerturbedForm> for ParametricForm {
    fn from(f: &PerturbedForm) -> Self {
        f.to_parametric()
    }
}

fn pair_index(p: Pair) -> usize {
    Pair::all().position(|q| q == p).unwrap()
}

/// `omega . phi = sum a_i p_i` where `(a_1..a_4) = sum alpha_ij kappa_ij`.
pub fn contract(form: &ParametricForm, terms: &[MonomialField]) -> Polynomial<TPoly> {
    let mut out: Polynomial<TPoly> = Polynomial::new();
    for (p, alpha) in Pair::all().zip(&form.0) {
        if alpha.is_zero() {
            continue;
        }
        for t in terms {
            // kappa_ij contributes x_j on dx_i and -x_i on dx_j
            let (var, sign) = if t.direction == p.i() {
                (p.j(), 1)
            } else if t.direction == p.j() {
                (p.i(), -1)
            } else {
                continue;
            };
            let c = alpha.scale(&(&t.coeff * int(sign)));
            *out.entry(t.monomial.times_var(var)).or_default() += &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Dimension of `{phi in Phi_d : omega . phi = 0}` by exact rank.
pub fn tangent_kernel_dimension(form: &AntisymmetricForm, d: u32) -> Result<usize> {
    let basis = build_phi_basis(d, &WeightSystem::default())?;
    let rows = monomials_of_degree(d + 1);
    let row_of: HashMap<Monomial, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut m = Matrix::zeros(rows.len(), basis.len());
    for (c, f) in basis.fields().iter().enumerate() {
        for (mono, v) in form.contract(f.terms()) {
            m.set(row_of[&mono], c, v);
        }
    }
    Ok(basis.len() - m.rank())
}
