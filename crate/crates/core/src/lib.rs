//! Exact second-order data of submanifolds with degenerate Gauss maps: focal
//! hypersurfaces and hypercones, structural classification, duality,
//! example generators and a floating-point cross-check.
//!
//! Matrices and polynomials are generic over the scalar type; the aliases
//! below fix the concrete types used throughout the pipeline.

pub mod error;
pub mod exactmath;
pub mod system;
pub mod duality;
pub mod classify;
pub mod oracle;
pub mod examples;

pub use error::{Error, Result};
pub use exactmath::{Rational, Scalar};

/// Dense matrix over exact rationals.
pub type RMatrix = exactmath::Matrix<Rational>;
/// Dense matrix over `f64`.
pub type FMatrix = exactmath::Matrix<f64>;
/// Sparse multivariate polynomial over exact rationals.
pub type MultiPoly = exactmath::MPoly<Rational>;
/// Univariate polynomial over exact rationals.
pub type UniPoly = exactmath::UPoly<Rational>;
pub use system::{MatrixSystem, ValidationReport};
