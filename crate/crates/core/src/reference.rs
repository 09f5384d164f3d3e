//! Embedded regression constants and the checks that recompute them.

use serde::{Deserialize, Serialize};

use crate::algebra::{elementary_symmetric, format_scalar, parse_scalar, Monomial, Pair, WeightMultiset, WeightSystem};
use crate::bott::{legendrian_degree_detailed, FiberSelection};
use crate::error::{Error, Result};
use crate::sections::{AntisymmetricForm, MonomialField};

/// The constants file shipped with the crate.
pub const EMBEDDED_REFERENCE: &str = include_str!("../data/reference.toml");

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct Reference {
    pub d: u32,
    pub weights: [i64; 4],
    pub fiber: FiberReference,
    pub sum: SumReference,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct FiberReference {
    pub pair: [u8; 2],
    pub weights: Vec<i64>,
    pub e5: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct SumReference {
    /// Fixed point of each entry of `contributions`.
    pub order: Vec<[u8; 2]>,
    pub contributions: Vec<String>,
    pub total: String,
}

impl Reference {
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED_REFERENCE).expect("embedded reference constants parse")
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, expected: String, got: String) -> Self {
        let passed = expected == got;
        let detail = if passed {
            got
        } else {
            format!("expected {expected}, got {got}")
        };
        CheckOutcome {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

fn render(xs: impl IntoIterator<Item = String>) -> String {
    xs.into_iter().collect::<Vec<_>>().join(", ")
}

/// Recomputes the worked example and compares it item by item with `reference`.
pub fn verify(reference: &Reference) -> Result<Vec<CheckOutcome>> {
    let w = WeightSystem::new(reference.weights)?;
    let pair = Pair::new(reference.fiber.pair[0], reference.fiber.pair[1])?;
    let (report, fibers) = legendrian_degree_detailed(reference.d, &w, FiberSelection::Image)?;
    let fiber = fibers
        .iter()
        .find(|f| f.pair == pair)
        .ok_or(Error::InvalidPair(reference.fiber.pair[0], reference.fiber.pair[1]))?;

    let mut out = Vec::new();
    let expected: WeightMultiset = reference.fiber.weights.clone().into();
    out.push(CheckOutcome::new(
        "fiber-weights",
        format!("{:?}", expected.as_slice()),
        format!("{:?}", fiber.quotient_weights.as_slice()),
    ));
    let e5 = elementary_symmetric(5, &fiber.quotient_weights)?;
    out.push(CheckOutcome::new(
        "fiber-e5",
        normalize(&reference.fiber.e5)?,
        format_scalar(&e5),
    ));
    if reference.sum.order.len() != reference.sum.contributions.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} fixed points for {} contributions",
            reference.sum.order.len(),
            reference.sum.contributions.len()
        )));
    }
    let mut want = Vec::new();
    let mut got = Vec::new();
    for (p, value) in reference.sum.order.iter().zip(&reference.sum.contributions) {
        let pair = Pair::new(p[0], p[1])?;
        want.push(format!("{pair}: {}", normalize(value)?));
        let computed = report
            .contributions
            .iter()
            .find(|c| c.pair == pair)
            .map_or_else(|| "missing".to_string(), |c| format_scalar(&c.value));
        got.push(format!("{pair}: {computed}"));
    }
    out.push(CheckOutcome::new("contributions", render(want), render(got)));
    out.push(CheckOutcome::new(
        "total",
        normalize(&reference.sum.total)?,
        format_scalar(&report.total),
    ));
    Ok(out)
}

fn normalize(s: &str) -> Result<String> {
    Ok(format_scalar(&parse_scalar(s)?))
}

/// The contact form `x2 dx1 - x1 dx2 + x4 dx3 - x3 dx4` against
/// `x1^2 d1 + x1 x2 d2 + x3 x4 d3 + x4^2 d4`: the contraction must vanish.
pub fn verify_contact_example() -> CheckOutcome {
    let omega = AntisymmetricForm::from_ints([1, 0, 0, 0, 0, 1]).expect("nonzero form");
    let one = crate::algebra::int(1);
    let field = [
        MonomialField::new(one.clone(), Monomial([2, 0, 0, 0]), 0),
        MonomialField::new(one.clone(), Monomial([1, 1, 0, 0]), 1),
        MonomialField::new(one.clone(), Monomial([0, 0, 1, 1]), 2),
        MonomialField::new(one, Monomial([0, 0, 0, 2]), 3),
    ];
    let contraction = omega.contract(&field);
    let got = if contraction.is_empty() {
        "0".to_string()
    } else {
        format!("{} nonzero terms", contraction.len())
    };
    CheckOutcome::new("contact-example", "0".into(), got)
}
