//! Generators of matrix systems and parametric models with known structure:
//! torsal, cone and hypersurface systems, direct sums, osculating torses,
//! and the cubic symmetroid.

mod generators;
mod models;
mod symmetroid;

pub use generators::{
    gen_cone, gen_direct_sum, gen_hypersurface, gen_torsal, gen_valid, random_frame, torse_system,
    GENERATION_ATTEMPTS,
};
pub use models::{
    cone_model, gen_torse_curve, hypersurface_model, plane_model, symmetroid_patch, torsal_model,
};
pub use symmetroid::{adjugate, adjugate_identity_check, symmetroid_model, SymmetroidModel, COORDINATES};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, BlockType, DiagonalStatus, OverallLabel};
    use crate::duality::dualize;
    use crate::exactmath::{int, Matrix};
    use crate::oracle::{
        exact_focal_points, gauss_rank, match_points, singular_locus_on_generator,
        verify_leaf_linearity, RankOptions, ScanLine,
    };
    use crate::{Error, MultiPoly};

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn canonical_torsal_fixture() {
        let s = gen_torsal(1, 2, 2, 0).unwrap();
        let f = &(&x(2, 0) + &x(2, 1)) * &(&x(2, 0) + &x(2, 1).scale(&int(2)));
        assert_eq!(s.focal_hypersurface(), f);
        assert_eq!(s.focal_hypercone(), &x(2, 0) * &x(2, 1));
        assert_eq!(classify(&s).unwrap().label, Some(OverallLabel::Torsal));
    }

    #[test]
    fn torsal_seed_one_has_three_singletons() {
        let rep = classify(&gen_torsal(1, 3, 3, 1).unwrap()).unwrap();
        assert_eq!(rep.label, Some(OverallLabel::Torsal));
        assert_eq!(rep.block_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn rank_one_request_is_a_torse() {
        let s = gen_torsal(2, 1, 2, 0).unwrap();
        assert_eq!(s, torse_system(2, 2).unwrap());
        assert_eq!(s.focal_hypersurface(), x(3, 2));
        assert_eq!(classify(&s).unwrap().label, Some(OverallLabel::Torse));
    }

    #[test]
    fn out_of_range_parameters_are_domain_errors() {
        assert!(matches!(gen_torsal(1, 2, 1, 0), Err(Error::Domain(_))));
        assert!(matches!(gen_cone(1, 2, 2, 0), Err(Error::Domain(_))));
        assert!(matches!(gen_hypersurface(1, 2, 0), Err(Error::Domain(_))));
        assert!(matches!(gen_torse_curve(3, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn seed_zero_cone_is_the_quadric_cone() {
        let s = gen_cone(2, 2, 3, 0).unwrap();
        assert_eq!(s.c()[0], Matrix::identity(2));
        assert!(s.c()[1].is_zero() && s.c()[2].is_zero());
        let phi = &(&x(3, 0) * &x(3, 0)) - &(&(&x(3, 1) * &x(3, 1)) + &(&x(3, 2) * &x(3, 2)));
        assert_eq!(s.focal_hypercone(), phi);
        let rep = classify(&s).unwrap();
        assert_eq!(rep.label, Some(OverallLabel::Cone));
        assert_eq!((rep.vertex_dim, rep.k), (Some(1), 1));
        assert_eq!(classify(&dualize(&s)).unwrap().label, Some(OverallLabel::Hypersurface));
    }

    #[test]
    fn seed_zero_hypersurface_is_the_quadric() {
        let s = gen_hypersurface(2, 2, 0).unwrap();
        let f = &(&x(3, 0) * &x(3, 0)) - &(&(&x(3, 1) * &x(3, 1)) + &(&x(3, 2) * &x(3, 2)));
        assert_eq!(s.focal_hypersurface(), f);
        assert_eq!(s.focal_hypercone(), &x(1, 0) * &x(1, 0));
        assert_eq!(classify(&s).unwrap().label, Some(OverallLabel::Hypersurface));
        assert_eq!(classify(&dualize(&s)).unwrap().label, Some(OverallLabel::Cone));
    }

    #[test]
    fn direct_sums() {
        let t = torse_system(2, 1).unwrap();
        let two = gen_direct_sum(&[t.clone(), t.clone()]).unwrap();
        assert_eq!(two.r(), 2);
        let h = gen_hypersurface(2, 2, 3).unwrap();
        let rep = classify(&gen_direct_sum(&[t, h.clone()]).unwrap()).unwrap();
        assert_eq!(rep.label, Some(OverallLabel::Reducible));
        let types: Vec<_> = rep.blocks.iter().map(|b| b.block_type).collect();
        assert_eq!(types, vec![Some(BlockType::Torse), Some(BlockType::HypersurfaceType)]);

        let torsal = random_frame(2, 2, 2, 5).apply(&gen_torsal(2, 2, 2, 0).unwrap()).unwrap();
        let twin = classify(&gen_direct_sum(&[torsal.clone(), torsal]).unwrap()).unwrap();
        assert_eq!(twin.status, DiagonalStatus::Blocked);

        let bad = gen_direct_sum(&[torse_system(1, 2).unwrap(), torse_system(2, 2).unwrap()]);
        assert!(matches!(bad, Err(Error::Dimension(_))));
    }

    #[test]
    fn valid_generator_passes_validation() {
        for seed in 0..10 {
            let s = gen_valid(1 + seed as usize % 3, 2 + seed as usize % 3, 1 + seed as usize % 4, seed).unwrap();
            assert!(s.validate().passed(), "seed {seed}");
        }
    }

    #[test]
    fn torse_curves_have_rank_one_and_focal_osculating_planes() {
        for (n, l) in [(3, 1), (4, 2)] {
            let (model, sys) = gen_torse_curve(n, l).unwrap();
            assert!(model.is_linear_in_s());
            assert_eq!(gauss_rank(&model, &RankOptions::default()).unwrap().rank, 1);
            let line = ScanLine::default_for(l);
            let numeric = singular_locus_on_generator(&model, &[0.3], &line, 1e-12).unwrap();
            let (exact, _) = exact_focal_points(&sys.focal_hypersurface(), &line).unwrap();
            assert!(match_points(&numeric, &exact) < 1e-6, "N = {n}, l = {l}");
        }
    }

    #[test]
    fn matched_models_degenerate_on_the_focal_hypersurface() {
        let cone = gen_cone(2, 2, 3, 0).unwrap();
        let hyper = gen_hypersurface(2, 2, 0).unwrap();
        let cases = [
            (cone_model(&cone, 0).unwrap(), cone.focal_hypersurface()),
            (hypersurface_model(&hyper).unwrap(), hyper.focal_hypersurface()),
            (torsal_model(), gen_torsal(1, 2, 2, 0).unwrap().focal_hypersurface()),
        ];
        for (k, (model, f)) in cases.iter().enumerate() {
            let u = vec![0.35; model.r()];
            assert!(verify_leaf_linearity(model, &u, 6, 3).unwrap() < 1e-8, "case {k}");
            assert_eq!(gauss_rank(model, &RankOptions::default()).unwrap().rank, model.r());
            let line = ScanLine::default_for(model.l());
            let numeric = singular_locus_on_generator(model, &u, &line, 1e-12).unwrap();
            assert!(!numeric.is_empty(), "case {k}");
            for p in &numeric {
                assert!(f.eval_f64(p).abs() < 1e-6, "case {k}: {p:?}");
            }
            let (exact, complete) = exact_focal_points(f, &line).unwrap();
            if complete {
                assert!(match_points(&numeric, &exact) < 1e-6, "case {k}: {numeric:?} vs {exact:?}");
            }
        }
    }

    #[test]
    fn plane_has_rank_zero() {
        let m = plane_model(2, 4).unwrap();
        assert_eq!(gauss_rank(&m, &RankOptions::default()).unwrap().rank, 0);
    }

    #[test]
    fn symmetroid_patch_has_rank_two() {
        let g = gauss_rank(&symmetroid_patch(), &RankOptions::default()).unwrap();
        assert_eq!(g.rank, 2);
        assert!(g.gap >= 1e6);
    }

    /// Leibniz expansion over the six permutations.
    fn leibniz(m: &Matrix<MultiPoly>) -> MultiPoly {
        let perms = [
            ([0, 1, 2], 1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
            ([1, 0, 2], -1),
        ];
        let nvars = m.get(0, 0).nvars();
        perms.iter().fold(MultiPoly::zero(nvars), |acc, (p, sign)| {
            let prod = &(m.get(0, p[0]) * m.get(1, p[1])) * m.get(2, p[2]);
            &acc + &prod.scale(&int(*sign))
        })
    }

    #[test]
    fn symmetroid_determinant_and_adjugate() {
        let s = symmetroid_model();
        assert_eq!(s.det, leibniz(&s.a));
        assert_eq!(s.det.total_degree(), Some(3));
        assert!(s.cofactors_match_adjugate());
        assert!(adjugate_identity_check());
    }

    #[test]
    fn symmetroid_at_a_rank_two_point() {
        let s = symmetroid_model();
        let point: Vec<_> = [1, 0, 0, 1, 0, 0].iter().map(|&v| int(v)).collect();
        assert_eq!(s.det.eval(&point), int(0));
        let adj: Vec<_> = s.adjugate.entries().iter().map(|p| p.eval(&point)).collect();
        let expected: Vec<_> = [0, 0, 0, 0, 0, 0, 0, 0, 1].iter().map(|&v| int(v)).collect();
        assert_eq!(adj, expected);
        let twice = adjugate(&s.adjugate).unwrap();
        assert!(twice.entries().iter().all(|p| p.eval(&point) == int(0)));
    }
}
