//! Exchange of the roles of the two matrix families.
//!
//! The dual system has `l* = codim - 1`, `codim* = l + 1`,
//! `C*_a = (B^{a+1})^T` and `B*^b = (C_{b-1})^T`. Since
//! `B*^b C*_a = (B^{a+1} C_{b-1})^T`, the symmetry relations carry over, and
//! the focal hypersurface and hypercone trade places verbatim.

use crate::error::Result;
use crate::system::{Frame, MatrixSystem};

pub fn dualize(sys: &MatrixSystem) -> MatrixSystem {
    let c = sys.b().iter().map(|m| m.transpose()).collect();
    let b = sys.c().iter().map(|m| m.transpose()).collect();
    MatrixSystem::new(sys.codim() - 1, sys.r(), sys.l() + 1, c, b)
        .expect("transposition preserves the shapes")
}

/// The primal frame corresponding to a frame acting on the dual system:
/// if `f` transforms `dualize(s)` into `t`, the returned frame transforms
/// `s` into `dualize(t)`.
pub fn dual_frame(f: &Frame) -> Result<Frame> {
    let r_inv = f.r.inverse().ok_or_else(|| {
        crate::error::Error::Domain("frame factor R is singular".into())
    })?;
    Ok(Frame {
        r: r_inv.transpose(),
        q: f.q.clone(),
        a: f.g.clone(),
        g: f.a.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Matrix;
    use crate::RMatrix;

    fn m(rows: &[&[i64]]) -> RMatrix {
        Matrix::from_i64_rows(rows)
    }

    fn sys() -> MatrixSystem {
        MatrixSystem::new(
            2,
            2,
            1,
            vec![
                m(&[&[1, 0], &[0, 1]]),
                m(&[&[0, 1], &[1, 0]]),
                m(&[&[1, 0], &[0, -1]]),
            ],
            vec![m(&[&[1, 0], &[0, 1]])],
        )
        .unwrap()
    }

    #[test]
    fn involution_and_focal_swap() {
        let s = sys();
        let d = dualize(&s);
        assert_eq!((d.l(), d.codim()), (0, 3));
        assert!(d.validate().passed());
        assert_eq!(dualize(&d), s);
        assert_eq!(d.focal_hypersurface(), s.focal_hypercone());
        assert_eq!(d.focal_hypercone(), s.focal_hypersurface());
    }

    #[test]
    fn dual_frame_commutes_with_dualization() {
        let s = sys();
        let f = Frame {
            r: m(&[&[1, 2], &[0, 1]]),
            q: m(&[&[2, 1], &[1, 1]]),
            a: m(&[&[3]]),
            g: m(&[&[1, 1, 0], &[0, 1, 0], &[1, 0, 1]]),
        };
        let t = f.apply(&dualize(&s)).unwrap();
        let primal = dual_frame(&f).unwrap().apply(&s).unwrap();
        assert_eq!(primal, dualize(&t));
    }
}
