//! Typing of a single block of a decomposed system.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::diagonalize::{simultaneous_diagonalize, DiagonalStatus};
use crate::error::Result;
use crate::exactmath::{linear_factors, MPoly};
use crate::system::{Frame, MatrixSystem};
use crate::{RMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockType {
    Torse,
    ConeType,
    HypersurfaceType,
    IrreducibleUnclassified,
}

impl BlockType {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Torse => "Torse",
            Self::ConeType => "ConeType",
            Self::HypersurfaceType => "HypersurfaceType",
            Self::IrreducibleUnclassified => "IrreducibleUnclassified",
        }
    }
}

/// `B^a = b^a * b_pq` for every `a`, with the hypercone of the block equal
/// to `(b^a xi_a)^r * det(b_pq)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceWitness {
    pub b: Vec<Rational>,
    pub b_pq: RMatrix,
    pub hypercone_verified: bool,
}

/// `C_i = c_i * gamma` for every `i`, with the focal hypersurface of the
/// block equal to `(c_i x^i)^r * det(gamma)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeWitness {
    pub c: Vec<Rational>,
    pub gamma: RMatrix,
    pub hypersurface_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Torse,
    Hypersurface(HypersurfaceWitness),
    Cone(ConeWitness),
    /// Both families diagonalize on the block and both focal images split
    /// into distinct linear factors; the frame makes the block diagonal.
    TorsalSplit(Frame),
    Unclassified,
}

impl BlockKind {
    /// Label of the block; a torsal split reports as its singleton pieces.
    pub fn block_type(&self) -> BlockType {
        match self {
            Self::Torse | Self::TorsalSplit(_) => BlockType::Torse,
            Self::Hypersurface(_) => BlockType::HypersurfaceType,
            Self::Cone(_) => BlockType::ConeType,
            Self::Unclassified => BlockType::IrreducibleUnclassified,
        }
    }
}

/// Scalars `s_k` and a nonzero matrix `m` with `family[k] = s_k m`.
/// The base is the first nonzero member, so its own scalar is 1.
pub fn proportional_family(family: &[RMatrix]) -> Option<(Vec<Rational>, RMatrix)> {
    let base = family.iter().find(|m| !m.is_zero())?;
    let pivot = base.entries().iter().position(|v| !v.is_zero())?;
    let mut scalars = Vec::with_capacity(family.len());
    for m in family {
        let s = &m.entries()[pivot] / &base.entries()[pivot];
        if *m != base.scale(&s) {
            return None;
        }
        scalars.push(s);
    }
    Some((scalars, base.clone()))
}

fn power_bundle(coeffs: &[Rational], r: usize, det: Rational) -> MPoly<Rational> {
    MPoly::linear(coeffs).pow(r as u32).scale(&det)
}

/// Classifies a block extracted in a decomposing basis.
pub fn classify_block(sub: &MatrixSystem) -> Result<BlockKind> {
    let r = sub.r();
    if r == 1 {
        return Ok(BlockKind::Torse);
    }
    if let Some((b, b_pq)) = proportional_family(sub.b()) {
        let expected = power_bundle(&b, r, b_pq.det()?);
        return Ok(BlockKind::Hypersurface(HypersurfaceWitness {
            hypercone_verified: sub.focal_hypercone() == expected,
            b,
            b_pq,
        }));
    }
    if let Some((c, gamma)) = proportional_family(sub.c()) {
        let expected = power_bundle(&c, r, gamma.det()?);
        return Ok(BlockKind::Cone(ConeWitness {
            hypersurface_verified: sub.focal_hypersurface() == expected,
            c,
            gamma,
        }));
    }
    if sub.is_normalized() {
        let f = linear_factors(&sub.focal_hypersurface())?;
        let phi = linear_factors(&sub.focal_hypercone())?;
        if f.splits_into_distinct() && phi.splits_into_distinct() {
            let d = simultaneous_diagonalize(sub)?;
            if d.status == DiagonalStatus::FullyDiagonal {
                return Ok(BlockKind::TorsalSplit(d.frame));
            }
        }
    }
    Ok(BlockKind::Unclassified)
}

/// True when every entry of every matrix is reproduced by the witness.
pub fn reproduces(family: &[RMatrix], scalars: &[Rational], base: &RMatrix) -> bool {
    family.len() == scalars.len()
        && family
            .iter()
            .zip(scalars)
            .all(|(m, s)| *m == base.scale(s))
}
