//! Admissible changes of frame acting on a matrix system.
//!
//! A frame `(R, Q, A, G)` sends `C_j` to `R (sum_i A_ij C_i) Q` and `B^b` to
//! `Q^T (sum_a G_ab B^a) R^{-1}`, so every product `B^a C_i` is replaced by a
//! congruent combination and the symmetry relations survive. The focal
//! polynomials transform as
//! `F'(x) = det R det Q F(A x)` and `Phi'(xi) = det Q / det R Phi(G xi)`.

use num_traits::Zero;

use super::MatrixSystem;
use crate::error::{Error, Result};
use crate::exactmath::Matrix;
use crate::{RMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    /// Left factor on the C family, `r x r`.
    pub r: RMatrix,
    /// Right factor on the C family, `r x r`.
    pub q: RMatrix,
    /// Mixing of the generator coordinates, `(l+1) x (l+1)`.
    pub a: RMatrix,
    /// Mixing of the normal directions, `codim x codim`.
    pub g: RMatrix,
}

impl Frame {
    pub fn identity(l: usize, r: usize, codim: usize) -> Self {
        Self {
            r: Matrix::identity(r),
            q: Matrix::identity(r),
            a: Matrix::identity(l + 1),
            g: Matrix::identity(codim),
        }
    }

    pub fn for_system(sys: &MatrixSystem) -> Self {
        Self::identity(sys.l(), sys.r(), sys.codim())
    }

    pub fn is_identity(&self) -> bool {
        self.r.is_identity() && self.q.is_identity() && self.a.is_identity() && self.g.is_identity()
    }

    /// Checks shapes against `sys` and invertibility of every factor.
    fn check(&self, sys: &MatrixSystem) -> Result<RMatrix> {
        let (l, r, codim) = (sys.l(), sys.r(), sys.codim());
        let shapes = [
            (&self.r, r, "R"),
            (&self.q, r, "Q"),
            (&self.a, l + 1, "A"),
            (&self.g, codim, "G"),
        ];
        for (m, n, name) in shapes {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::Dimension(format!(
                    "frame factor {name} is {}x{}, expected {n}x{n}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        for (m, name) in [(&self.q, "Q"), (&self.a, "A"), (&self.g, "G")] {
            if m.det()?.is_zero() {
                return Err(Error::Domain(format!("frame factor {name} is singular")));
            }
        }
        self.r
            .inverse()
            .ok_or_else(|| Error::Domain("frame factor R is singular".into()))
    }

    pub fn apply(&self, sys: &MatrixSystem) -> Result<MatrixSystem> {
        let r_inv = self.check(sys)?;
        let qt = self.q.transpose();
        let c = (0..=sys.l())
            .map(|j| {
                let mix = Matrix::combination(sys.c(), &self.a.column(j));
                &(&self.r * &mix) * &self.q
            })
            .collect();
        let b = (0..sys.codim())
            .map(|k| {
                let mix = Matrix::combination(sys.b(), &self.g.column(k));
                &(&qt * &mix) * &r_inv
            })
            .collect();
        MatrixSystem::new(sys.l(), sys.r(), sys.codim(), c, b)
    }

    /// The frame equal to applying `self` first and then `next`.
    pub fn then(&self, next: &Frame) -> Frame {
        Frame {
            r: &next.r * &self.r,
            q: &self.q * &next.q,
            a: &self.a * &next.a,
            g: &self.g * &next.g,
        }
    }

    /// `det R * det Q`, the factor in front of the transformed `F`.
    pub fn f_factor(&self) -> Rational {
        self.r.det().expect("square") * self.q.det().expect("square")
    }

    /// `det Q / det R`, the factor in front of the transformed `Phi`.
    pub fn phi_factor(&self) -> Rational {
        self.q.det().expect("square") / self.r.det().expect("square")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn m(rows: &[&[i64]]) -> RMatrix {
        Matrix::from_i64_rows(rows)
    }

    fn sys() -> MatrixSystem {
        MatrixSystem::new(
            1,
            2,
            2,
            vec![m(&[&[1, 0], &[0, 1]]), m(&[&[1, 0], &[0, 2]])],
            vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])],
        )
        .unwrap()
    }

    fn frame() -> Frame {
        Frame {
            r: m(&[&[2, 1], &[1, 1]]),
            q: m(&[&[1, 3], &[0, 1]]),
            a: m(&[&[1, 1], &[1, 2]]),
            g: m(&[&[0, 1], &[1, 1]]),
        }
    }

    #[test]
    fn transform_keeps_validity_and_moves_focal_images() {
        let s = sys();
        let f = frame();
        let t = f.apply(&s).unwrap();
        assert!(t.validate().passed());
        let fa = s.focal_hypersurface().substitute_linear(&f.a).unwrap();
        assert_eq!(t.focal_hypersurface(), fa.scale(&f.f_factor()));
        let pg = s.focal_hypercone().substitute_linear(&f.g).unwrap();
        assert_eq!(t.focal_hypercone(), pg.scale(&f.phi_factor()));
    }

    #[test]
    fn composition_matches_sequential_application() {
        let s = sys();
        let f1 = frame();
        let f2 = Frame {
            r: m(&[&[1, 0], &[4, 1]]),
            q: m(&[&[3, 0], &[1, 1]]),
            a: m(&[&[2, 0], &[1, 1]]),
            g: m(&[&[1, 2], &[0, 1]]),
        };
        let seq = f2.apply(&f1.apply(&s).unwrap()).unwrap();
        assert_eq!(f1.then(&f2).apply(&s).unwrap(), seq);
    }

    #[test]
    fn singular_factors_are_rejected() {
        let mut f = Frame::for_system(&sys());
        f.r = m(&[&[1, 1], &[1, 1]]);
        assert!(matches!(f.apply(&sys()), Err(Error::Domain(_))));
        assert_eq!(Frame::for_system(&sys()).f_factor(), int(1));
    }
}
