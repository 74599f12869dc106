//! Numeric cross-check of the exact pipeline on explicit parametrizations.

mod model;
mod numeric;

pub use model::ParametricModel;
pub use numeric::{
    exact_focal_points, gauss_rank, match_points, max_principal_angle, projective_distance,
    projective_normalize, singular_locus_on_generator, tangent_space, verify_leaf_linearity,
    GaussRank, RankOptions, ScanLine, TangentSpace, DEFAULT_STEP, DEFAULT_TOL, MIN_SAMPLES,
};
