//! Structural classification of matrix systems.
//!
//! The pipeline validates the input, analyses both focal images, moves to a
//! frame with `C_0 = I`, tries to diagonalize through a generic pencil
//! member, refines the resulting coupling blocks through their commutants,
//! types every block and finally reads off the overall label together with
//! the eigenvalue-matrix ranks.

pub mod block;
pub mod blocks;
pub mod commutant;
pub mod diagonalize;
pub mod eigen;
pub mod normalize;
mod report;

pub use block::{classify_block, BlockKind, BlockType, ConeWitness, HypersurfaceWitness};
pub use blocks::{block_decompose, block_sizes};
pub use diagonalize::{simultaneous_diagonalize, DiagonalStatus, DiagonalizedSystem, Route};
pub use eigen::{eigenvalue_matrices, eigenvalue_matrix_b, eigenvalue_matrix_c};
pub use normalize::{normalize, Normalized};
pub use report::{
    analyze_focal, BlockReport, Decomposability, FocalFacts, OverallLabel, StructureReport, Witness,
};

use crate::error::{Error, Result};
use crate::exactmath::Matrix;
use crate::system::{Frame, MatrixSystem};
use crate::RMatrix;

/// Embeds block-local `R` and `Q` factors into a frame on the full system.
fn embed_block_frame(sys: &MatrixSystem, idx: &[usize], r: &RMatrix, q: &RMatrix) -> Frame {
    let mut frame = Frame::for_system(sys);
    for (a, &ia) in idx.iter().enumerate() {
        for (b, &ib) in idx.iter().enumerate() {
            frame.r.set(ia, ib, r.get(a, b).clone());
            frame.q.set(ia, ib, q.get(a, b).clone());
        }
    }
    frame
}

fn inverse(m: &RMatrix, what: &str) -> Result<RMatrix> {
    m.inverse()
        .ok_or_else(|| Error::Domain(format!("{what} is singular")))
}

/// Runs the full classification pipeline.
pub fn classify(sys: &MatrixSystem) -> Result<StructureReport> {
    sys.validated()?;
    let focal = sys.focal_images();
    let mut f_facts = analyze_focal(&focal.f)?;
    let mut phi_facts = analyze_focal(&focal.phi)?;
    let characteristic = sys.characteristic_subspace();

    let norm = normalize(sys)?;
    let m = norm.system.osculating_dimension()?;
    let diag = simultaneous_diagonalize(&norm.system)?;

    // the normal route may leave C_0 != I; the commutant step needs it back
    let mut frame = norm.frame.then(&diag.frame);
    let mut current = diag.system.clone();
    if !current.is_normalized() {
        let again = normalize(&current)?;
        frame = frame.then(&again.frame);
        current = again.system;
    }
    let refined = commutant::refine(&current)?;
    frame = frame.then(&refined.frame);
    current = refined.system;
    let block_frame = frame.clone();
    let block_system = current.clone();

    let mut blocks: Vec<BlockReport> = Vec::new();
    for (idx, unresolved) in refined.blocks.iter().zip(&refined.unresolved) {
        let sub = block_system.restrict_to(idx);
        if *unresolved {
            blocks.push(BlockReport::new(idx.clone(), None, None, true));
            continue;
        }
        match classify_block(&sub)? {
            BlockKind::TorsalSplit(local) => {
                let step = embed_block_frame(&current, idx, &local.r, &local.q);
                current = step.apply(&current)?;
                frame = frame.then(&step);
                for &p in idx {
                    blocks.push(BlockReport::new(vec![p], Some(BlockType::Torse), None, false));
                }
            }
            BlockKind::Hypersurface(w) => {
                // R = b_pq turns every B^a of the block into b^a I
                let step = embed_block_frame(&current, idx, &w.b_pq, &Matrix::identity(idx.len()));
                current = step.apply(&current)?;
                frame = frame.then(&step);
                let witness = Witness::hypersurface(w, &block_frame, idx.len() == sys.r())?;
                blocks.push(BlockReport::new(
                    idx.clone(),
                    Some(BlockType::HypersurfaceType),
                    Some(witness),
                    false,
                ));
            }
            BlockKind::Cone(w) => {
                // R = gamma^{-1} turns every C_i of the block into c_i I
                let r = inverse(&w.gamma, "cone witness matrix")?;
                let step = embed_block_frame(&current, idx, &r, &Matrix::identity(idx.len()));
                current = step.apply(&current)?;
                frame = frame.then(&step);
                let witness = Witness::cone(w, &block_frame, idx.len() == sys.r())?;
                blocks.push(BlockReport::new(
                    idx.clone(),
                    Some(BlockType::ConeType),
                    Some(witness),
                    false,
                ));
            }
            BlockKind::Torse => {
                blocks.push(BlockReport::new(idx.clone(), Some(BlockType::Torse), None, false));
            }
            BlockKind::Unclassified => blocks.push(BlockReport::new(
                idx.clone(),
                Some(BlockType::IrreducibleUnclassified),
                None,
                false,
            )),
        }
    }
    blocks.sort_by_key(|b| b.indices[0]);
    debug_assert_eq!(frame.apply(sys)?, current);

    if blocks.len() >= 2 {
        f_facts.mark_block_decomposable();
        phi_facts.mark_block_decomposable();
    }

    let eigen_b = eigenvalue_matrix_b(&current).ok();
    let eigen_c = eigenvalue_matrix_c(&current).ok();
    let rank_b = eigen_b.as_ref().map(Matrix::rank);
    let rank_c = eigen_c.as_ref().map(Matrix::rank);
    let ambient_reduction = eigen_b
        .as_ref()
        .and_then(|b| eigen::ambient_reduction(b, sys.n()));
    let vertex_dim = eigen_c
        .as_ref()
        .and_then(|c| eigen::vertex_dimension(c, sys.l()));
    let torsal_remark = eigen_b.as_ref().is_some_and(eigen::torsal_remark);

    let label = overall_label(sys, &blocks, &f_facts, &phi_facts);
    let mut warnings = Vec::new();
    if blocks.iter().any(|b| b.unresolved) {
        warnings.push(format!(
            "a block may split only over an extension of the rationals ({})",
            diag.status
        ));
    }
    Ok(StructureReport {
        l: sys.l(),
        r: sys.r(),
        codim: sys.codim(),
        label,
        status: diag.status,
        route: diag.route,
        blocks,
        m,
        m_star: characteristic.m_star,
        k: characteristic.k,
        rank_b,
        rank_c,
        eigen_b,
        eigen_c,
        ambient_reduction,
        vertex_dim,
        torsal_remark,
        f: f_facts,
        phi: phi_facts,
        frame,
        system: current,
        warnings,
    })
}

fn overall_label(
    sys: &MatrixSystem,
    blocks: &[BlockReport],
    f: &FocalFacts,
    phi: &FocalFacts,
) -> Option<OverallLabel> {
    let single = |t: BlockType| blocks.len() == 1 && blocks[0].block_type == Some(t);
    if sys.l() == 0 {
        // a point generator: only the degenerate cone (empty vertex) keeps
        // its structural name, which is what the dual of a hypersurface is
        return Some(if single(BlockType::ConeType) {
            OverallLabel::Cone
        } else {
            OverallLabel::Nondegenerate
        });
    }
    if f.multiple_nonlinear_component || phi.multiple_nonlinear_component {
        return Some(OverallLabel::OutsideTheory);
    }
    if sys.r() == 1 {
        return Some(OverallLabel::Torse);
    }
    if blocks.iter().any(|b| b.unresolved) {
        return None;
    }
    let types: Vec<BlockType> = blocks.iter().filter_map(|b| b.block_type).collect();
    Some(if types.contains(&BlockType::IrreducibleUnclassified) {
        OverallLabel::OutsideTheory
    } else if types.iter().all(|t| *t == BlockType::Torse) {
        OverallLabel::Torsal
    } else if single(BlockType::ConeType) {
        OverallLabel::Cone
    } else if single(BlockType::HypersurfaceType) {
        OverallLabel::Hypersurface
    } else {
        OverallLabel::Reducible
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn m(rows: &[&[i64]]) -> RMatrix {
        Matrix::from_i64_rows(rows)
    }

    fn diag(v: &[i64]) -> RMatrix {
        Matrix::diagonal(&v.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    fn quadric_triple() -> Vec<RMatrix> {
        vec![
            Matrix::identity(2),
            m(&[&[0, 1], &[1, 0]]),
            m(&[&[1, 0], &[0, -1]]),
        ]
    }

    #[test]
    fn diagonal_torsal_system() {
        let s = MatrixSystem::new(
            1,
            2,
            2,
            vec![Matrix::identity(2), diag(&[1, 2])],
            vec![diag(&[1, 0]), diag(&[0, 1])],
        )
        .unwrap();
        let rep = classify(&s).unwrap();
        assert_eq!(rep.label, Some(OverallLabel::Torsal));
        assert_eq!(rep.partition(), vec![vec![1], vec![2]]);
        assert_eq!(rep.rank_b, Some(2));
        assert!(rep.f.square_free);
        assert_eq!(rep.f.linear_factors.len(), 2);
    }

    #[test]
    fn quadric_cone() {
        let c = vec![Matrix::identity(2), Matrix::zeros(2, 2), Matrix::zeros(2, 2)];
        let s = MatrixSystem::new(2, 2, 3, c, quadric_triple()).unwrap();
        let rep = classify(&s).unwrap();
        assert_eq!(rep.label, Some(OverallLabel::Cone));
        assert_eq!(rep.vertex_dim, Some(1));
        assert_eq!(rep.k, 1);
        assert_eq!(rep.rank_c, Some(1));
        assert_eq!(rep.phi.decomposability, Decomposability::NoRationalLinearFactor);
    }

    #[test]
    fn quadric_hypersurface_and_its_dual() {
        let s = MatrixSystem::new(2, 2, 1, quadric_triple(), vec![Matrix::identity(2)]).unwrap();
        let rep = classify(&s).unwrap();
        assert_eq!(rep.label, Some(OverallLabel::Hypersurface));
        assert_eq!(rep.ambient_reduction, Some(s.n() + 1));
        let Some(Witness::Hypersurface { b, .. }) = &rep.blocks[0].witness else {
            panic!("missing witness");
        };
        assert_eq!(b, &vec![int(1)]);
        let dual = classify(&crate::duality::dualize(&s)).unwrap();
        assert_eq!(dual.label, Some(OverallLabel::Cone));
    }

    #[test]
    fn torse_plus_quadric_is_reducible() {
        let c = vec![
            Matrix::block_diag(&[m(&[&[1]]), Matrix::identity(2)]),
            Matrix::block_diag(&[m(&[&[3]]), m(&[&[0, 1], &[1, 0]])]),
            Matrix::block_diag(&[m(&[&[5]]), m(&[&[1, 0], &[0, -1]])]),
        ];
        let s = MatrixSystem::new(2, 3, 1, c, vec![Matrix::identity(3)]).unwrap();
        let rep = classify(&s).unwrap();
        assert_eq!(rep.label, Some(OverallLabel::Reducible));
        assert_eq!(rep.partition(), vec![vec![1], vec![2, 3]]);
        let types: Vec<_> = rep.blocks.iter().map(|b| b.block_type.unwrap()).collect();
        assert_eq!(types, vec![BlockType::Torse, BlockType::HypersurfaceType]);
        assert_eq!(rep.f.decomposability, Decomposability::VerifiedDecomposable);
    }

    #[test]
    fn rotation_gives_partial_report() {
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![Matrix::identity(2), m(&[&[0, 1], &[-1, 0]])],
            vec![diag(&[1, -1])],
        )
        .unwrap();
        let rep = classify(&s).unwrap();
        assert_eq!(rep.label, None);
        assert_eq!(rep.status, DiagonalStatus::SpectrumNotRational);
        assert!(!rep.warnings.is_empty());
    }

    #[test]
    fn squared_quadric_is_outside_theory() {
        let q = quadric_triple();
        let c: Vec<RMatrix> = q.iter().map(|x| Matrix::block_diag(&[x.clone(), x.clone()])).collect();
        let s = MatrixSystem::new(2, 4, 1, c, vec![Matrix::identity(4)]).unwrap();
        let rep = classify(&s).unwrap();
        assert!(rep.f.multiple_nonlinear_component);
        assert_eq!(rep.label, Some(OverallLabel::OutsideTheory));
    }

    #[test]
    fn invalid_system_is_rejected() {
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![Matrix::identity(2), m(&[&[1, 1], &[0, 2]])],
            vec![Matrix::identity(2)],
        )
        .unwrap();
        assert!(matches!(classify(&s), Err(Error::Invalid(_))));
    }
}
