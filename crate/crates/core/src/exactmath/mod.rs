//! Exact arithmetic: rationals, dense matrices, sparse polynomials and the
//! gcd, determinant and spectral routines built on them.

pub mod det;
pub mod factor;
pub mod gcd;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod search;
pub mod upoly;

pub use det::{char_poly, eigenvectors, poly_det, rational_eigenvalues, restrict};
pub use factor::{has_rational_linear_factor, linear_factors, LinearFactorization};
pub use gcd::{has_multiple_components, poly_gcd, square_free, squarefree_part, SquareFree};
pub use matrix::Matrix;
pub use poly::{variable_names, MPoly, Monomial, TermRepr};
pub use scalar::{format_rational, int, parse_rational, rat, ExactScalar, Rational, Scalar};
pub use upoly::{RootSet, UPoly};
