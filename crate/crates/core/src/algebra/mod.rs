//! Exact scalars, monomials, torus weights and univariate polynomials.

pub mod monomial;
pub mod poly;
pub mod scalar;
pub mod tpoly;
pub mod weights;

pub use monomial::{binomial, monomial_weight, monomials_of_degree, Monomial};
pub use poly::{lagrange_interpolate, RationalPolynomial};
pub use scalar::{format_scalar, int, parse_scalar, ratio, Scalar};
pub use tpoly::TPoly;
pub use weights::{elementary_symmetric, Pair, WeightMultiset, WeightSystem};
