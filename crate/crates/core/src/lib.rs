//! Exact torus-localization degrees of two families of codimension-one
//! foliations on `P3`: Legendrian foliations, summed over the six coordinate
//! points of `P5`, and foliations tangent to a pencil of planes, summed over
//! the six coordinate planes of `G(2,4)`.
//!
//! All arithmetic is over big rationals. Independent fixed points and weight
//! blocks are processed with rayon when the `parallel` feature is on.
//!
//! ```
//! use foliation_core::{legendrian_degree, WeightSystem};
//!
//! let report = legendrian_degree(2, &WeightSystem::default()).unwrap();
//! assert_eq!(report.total.to_string(), "2224");
//! ```

pub mod algebra;
pub mod bott;
pub mod contact;
pub mod error;
pub mod linalg;
mod par;
pub mod pencil;
pub mod polylab;
pub mod reference;
pub mod sections;

pub use algebra::{
    elementary_symmetric, format_scalar, int, lagrange_interpolate, parse_scalar, ratio, Monomial, Pair,
    RationalPolynomial, Scalar, WeightMultiset, WeightSystem,
};
pub use bott::{legendrian_degree, legendrian_degree_with, DegreeReport, FiberSelection, FixedPointContribution};
pub use contact::{limit_fiber_weights, FixedPointP5, LimitFiberResult, LimitMethod};
pub use error::{Error, Result};
pub use par::is_parallel;
pub use pencil::{pencil_degree, pencil_degree_closed_form, pencil_rank_checks, PencilReport};
pub use polylab::{athusbis_closed_form, interpolate_family, Family};
pub use sections::{build_phi_basis, phi_dimension, tangent_kernel_dimension, AntisymmetricForm, SectionBasis};
