//! Re-basing a system so that `C_0 = I`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::Matrix;
use crate::system::{unit, Frame, MatrixSystem};
use crate::Rational;

/// A system with `C_0 = I` and the frame that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub system: MatrixSystem,
    pub frame: Frame,
}

/// Moves a regular point to the first generator coordinate and multiplies
/// the C family on the left by the inverse of `C(x)`. Every `B^a` becomes
/// `H^a_0`, hence symmetric.
pub fn normalize(sys: &MatrixSystem) -> Result<Normalized> {
    let x = sys.regular_point()?;
    let n = sys.l() + 1;
    let j0 = x
        .iter()
        .position(|v| !v.is_zero())
        .ok_or_else(|| Error::Domain("regular point is zero".into()))?;
    let others: Vec<usize> = (0..n).filter(|&k| k != j0).collect();
    let columns: Vec<Vec<Rational>> = std::iter::once(x.clone())
        .chain(others.iter().map(|&k| unit(n, k)))
        .collect();
    let a = Matrix::from_fn(n, n, |i, j| columns[j][i].clone());
    let r = sys
        .c_pencil(&x)
        .inverse()
        .ok_or_else(|| Error::Domain("pencil at the regular point is singular".into()))?;
    let frame = Frame {
        r,
        q: Matrix::identity(sys.r()),
        a,
        g: Matrix::identity(sys.codim()),
    };
    let system = frame.apply(sys)?;
    debug_assert!(system.is_normalized());
    Ok(Normalized { system, frame })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use crate::RMatrix;

    fn m(rows: &[&[i64]]) -> RMatrix {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn already_normalized_is_untouched() {
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![m(&[&[1, 0], &[0, 1]]), m(&[&[1, 0], &[0, 2]])],
            vec![m(&[&[1, 0], &[0, 1]])],
        )
        .unwrap();
        let n = normalize(&s).unwrap();
        assert!(n.frame.is_identity());
        assert_eq!(n.system, s);
    }

    #[test]
    fn scalar_c0_is_divided_out() {
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![m(&[&[2, 0], &[0, 2]]), m(&[&[1, 0], &[0, 3]])],
            vec![m(&[&[1, 0], &[0, 1]])],
        )
        .unwrap();
        let n = normalize(&s).unwrap();
        assert!(n.system.is_normalized());
        assert_eq!(
            n.system.c()[1],
            Matrix::diagonal(&[rat(1, 2), rat(3, 2)])
        );
        assert_eq!(n.system.b()[0], m(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn singular_c0_is_rebased() {
        // C_0 and C_1 both singular, C_0 + C_1 invertible
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])],
            vec![m(&[&[1, 0], &[0, 1]])],
        )
        .unwrap();
        let n = normalize(&s).unwrap();
        assert_eq!(n.frame.a.column(0), vec![int(1), int(1)]);
        assert!(n.system.is_normalized());
        assert!(n.system.validate().passed());
        assert!(n.system.b().iter().all(Matrix::is_symmetric));
    }
}
