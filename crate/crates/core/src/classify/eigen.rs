//! Eigenvalue matrices of diagonal families and the rank reductions they
//! imply.

use crate::error::{Error, Result};
use crate::exactmath::Matrix;
use crate::system::MatrixSystem;
use crate::RMatrix;

/// `codim x r` matrix of the diagonal entries `b^a_pp`.
pub fn eigenvalue_matrix_b(sys: &MatrixSystem) -> Result<RMatrix> {
    if !sys.b().iter().all(Matrix::is_diagonal) {
        return Err(Error::Precondition("the B family is not diagonal".into()));
    }
    Ok(Matrix::from_fn(sys.codim(), sys.r(), |a, p| {
        sys.b()[a].get(p, p).clone()
    }))
}

/// `r x (l+1)` matrix of the diagonal entries `c^p_pi`.
pub fn eigenvalue_matrix_c(sys: &MatrixSystem) -> Result<RMatrix> {
    if !sys.c().iter().all(Matrix::is_diagonal) {
        return Err(Error::Precondition("the C family is not diagonal".into()));
    }
    Ok(Matrix::from_fn(sys.r(), sys.l() + 1, |p, i| {
        sys.c()[i].get(p, p).clone()
    }))
}

/// Both eigenvalue matrices with their ranks `(B, r_1, C, r_2)`.
pub fn eigenvalue_matrices(sys: &MatrixSystem) -> Result<(RMatrix, usize, RMatrix, usize)> {
    let b = eigenvalue_matrix_b(sys)?;
    let c = eigenvalue_matrix_c(sys)?;
    let (r1, r2) = (b.rank(), c.rank());
    Ok((b, r1, c, r2))
}

/// Rank of a matrix whose columns are indexed by `p`, if it is at most
/// `r - 1` and survives deleting any single column.
fn stable_deficient_rank(m: &RMatrix) -> Option<usize> {
    let rank = m.rank();
    let r = m.ncols();
    (rank < r && (0..r).all(|p| m.rank_without_column(p) == rank)).then_some(rank)
}

/// `n + r_1` when the B eigenvalue matrix satisfies the hypotheses of the
/// ambient reduction.
pub fn ambient_reduction(b: &RMatrix, n: usize) -> Option<usize> {
    stable_deficient_rank(b).map(|r1| n + r1)
}

/// `l - r_2` when the C eigenvalue matrix satisfies the hypotheses of the
/// vertex statement; deletion runs over the `p` index.
pub fn vertex_dimension(c: &RMatrix, l: usize) -> Option<i64> {
    stable_deficient_rank(&c.transpose()).map(|r2| l as i64 - r2 as i64)
}

/// Full-rank B eigenvalue matrix with more normal directions than `r`: the
/// osculating subspace may move and the submanifold is torsal.
pub fn torsal_remark(b: &RMatrix) -> bool {
    let r = b.ncols();
    b.rank() == r && b.nrows() > r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn diag(v: &[i64]) -> RMatrix {
        Matrix::diagonal(&v.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn unit_normals_give_full_rank() {
        let s = MatrixSystem::new(
            1,
            2,
            2,
            vec![Matrix::identity(2), diag(&[1, 2])],
            vec![diag(&[1, 0]), diag(&[0, 1])],
        )
        .unwrap();
        let (b, r1, _, r2) = eigenvalue_matrices(&s).unwrap();
        assert!(b.is_identity());
        assert_eq!((r1, r2), (2, 2));
        assert_eq!(ambient_reduction(&b, 3), None);
        assert!(!torsal_remark(&b));
    }

    #[test]
    fn single_identity_normal_lies_in_next_space() {
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![Matrix::identity(2), diag(&[1, 2])],
            vec![Matrix::identity(2)],
        )
        .unwrap();
        let b = eigenvalue_matrix_b(&s).unwrap();
        assert_eq!(b, Matrix::from_i64_rows(&[&[1, 1]]));
        assert_eq!(ambient_reduction(&b, s.n()), Some(s.n() + 1));
    }

    #[test]
    fn proportional_columns_give_vertex() {
        let s = MatrixSystem::new(
            1,
            2,
            2,
            vec![Matrix::identity(2), Matrix::identity(2)],
            vec![diag(&[1, 0]), diag(&[0, 1])],
        )
        .unwrap();
        let c = eigenvalue_matrix_c(&s).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(vertex_dimension(&c, 1), Some(0));
    }

    #[test]
    fn nondiagonal_family_is_rejected() {
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![Matrix::identity(2), Matrix::from_i64_rows(&[&[0, 1], &[1, 0]])],
            vec![Matrix::identity(2)],
        )
        .unwrap();
        assert!(matches!(eigenvalue_matrix_c(&s), Err(Error::Precondition(_))));
        assert!(eigenvalue_matrix_b(&s).is_ok());
    }

    #[test]
    fn remark_needs_extra_normals() {
        let b = Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(torsal_remark(&b));
        assert_eq!(ambient_reduction(&b, 3), None);
    }
}
