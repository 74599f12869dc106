//! The cubic symmetroid `det A = 0` in the projective space of symmetric
//! `3 x 3` matrices, and its cofactor map onto the Veronese surface.

use crate::error::Result;
use crate::exactmath::{int, poly_det, Matrix};
use crate::MultiPoly;

/// Coordinates of `P^5` as `(i, j)` entries with `i <= j`.
pub const COORDINATES: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

fn coordinate(i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    COORDINATES
        .iter()
        .position(|&c| c == (i, j))
        .expect("entry of a 3x3 matrix")
}

/// Adjugate of a square polynomial matrix.
pub fn adjugate(m: &Matrix<MultiPoly>) -> Result<Matrix<MultiPoly>> {
    let n = m.nrows();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let minor = Matrix::from_fn(n - 1, n - 1, |a, b| m.get(rows[a], cols[b]).clone());
            let d = poly_det(&minor)?;
            out.push(if (i + j) % 2 == 0 { d } else { -d });
        }
    }
    Matrix::from_vec(n, n, out)
}

#[derive(Clone, Debug)]
pub struct SymmetroidModel {
    /// Symbolic `A` with `a_ij = a_ji` in the six variables of [`COORDINATES`].
    pub a: Matrix<MultiPoly>,
    pub det: MultiPoly,
    pub adjugate: Matrix<MultiPoly>,
}

pub fn symmetroid_model() -> SymmetroidModel {
    let a = Matrix::from_fn(3, 3, |i, j| MultiPoly::var(6, coordinate(i, j)));
    let det = poly_det(&a).expect("square");
    let adjugate = adjugate(&a).expect("square");
    SymmetroidModel { a, det, adjugate }
}

impl SymmetroidModel {
    /// `xi^{ij} = dF/da_ij` on the six coordinates: the cofactor on the
    /// diagonal and twice the cofactor off it.
    pub fn cofactor_map(&self) -> Vec<MultiPoly> {
        (0..6).map(|k| self.det.derivative(k)).collect()
    }

    /// True when the cofactor map equals the adjugate entries (doubled off
    /// the diagonal).
    pub fn cofactors_match_adjugate(&self) -> bool {
        self.cofactor_map().iter().zip(COORDINATES).all(|(d, (i, j))| {
            let adj = self.adjugate.get(i, j);
            if i == j {
                d == adj
            } else {
                *d == adj.scale(&int(2))
            }
        })
    }

    /// `adj(adj A) - det(A) A`, entrywise.
    pub fn adjugate_defect(&self) -> Result<Matrix<MultiPoly>> {
        let twice = adjugate(&self.adjugate)?;
        Ok(Matrix::from_fn(3, 3, |i, j| {
            twice.get(i, j) - &(&self.det * self.a.get(i, j))
        }))
    }
}

/// Exact check of `adj(adj A) = det(A) A` for the symbolic symmetric `A`.
/// On `det A = 0` every `2 x 2` minor of the cofactor matrix vanishes, so the
/// cofactors have rank one and factor as `xi^{ij} = xi^i xi^j`.
pub fn adjugate_identity_check() -> bool {
    symmetroid_model()
        .adjugate_defect()
        .map(|d| d.entries().iter().all(MultiPoly::is_zero))
        .unwrap_or(false)
}
