//! Matrix data of a plane generator and its tangent subspace, and the
//! quantities read off from it: the symmetry relations, regular points,
//! focal hypersurface and hypercone, second fundamental forms, osculating
//! dimension and characteristic subspace.

mod format;
mod frame;

pub use format::{read_system, write_system};
pub use frame::Frame;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::search::small_integer_points;
use crate::exactmath::{poly_det, Matrix, MPoly};
use crate::{MultiPoly, RMatrix, Rational};

/// Bound on the deterministic regular-point search.
pub const REGULAR_POINT_TRIALS: usize = 10_000;

/// `(l, r, codim; C_0..C_l; B^1..B^codim)` with all matrices `r x r`.
///
/// `C[i]` holds `c^p_{qi}` with `p` the row and `q` the column; `B[a]` holds
/// `b^{a+1}_{pq}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixSystem {
    l: usize,
    r: usize,
    codim: usize,
    c: Vec<RMatrix>,
    b: Vec<RMatrix>,
}

impl MatrixSystem {
    /// Checks the shapes; symmetry and regularity are left to [`validate`](Self::validate).
    pub fn new(l: usize, r: usize, codim: usize, c: Vec<RMatrix>, b: Vec<RMatrix>) -> Result<Self> {
        if r == 0 {
            return Err(Error::Dimension("rank r must be positive".into()));
        }
        if codim == 0 {
            return Err(Error::Dimension("codimension must be positive".into()));
        }
        if c.len() != l + 1 {
            return Err(Error::Dimension(format!(
                "expected {} matrices C_0..C_{l}, found {}",
                l + 1,
                c.len()
            )));
        }
        if b.len() != codim {
            return Err(Error::Dimension(format!(
                "expected {codim} matrices B^1..B^{codim}, found {}",
                b.len()
            )));
        }
        for (name, m) in c
            .iter()
            .enumerate()
            .map(|(i, m)| (format!("C_{i}"), m))
            .chain(b.iter().enumerate().map(|(a, m)| (format!("B^{}", a + 1), m)))
        {
            if m.nrows() != r || m.ncols() != r {
                return Err(Error::Dimension(format!(
                    "{name} is {}x{}, expected {r}x{r}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        Ok(Self { l, r, codim, c, b })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Dimension of the submanifold, `l + r`.
    pub fn n(&self) -> usize {
        self.l + self.r
    }

    /// Ambient dimension, `n + codim`.
    pub fn ambient_dim(&self) -> usize {
        self.n() + self.codim
    }

    pub fn c(&self) -> &[RMatrix] {
        &self.c
    }

    pub fn b(&self) -> &[RMatrix] {
        &self.b
    }

    /// `C(x) = sum_i x^i C_i`.
    pub fn c_pencil(&self, x: &[Rational]) -> RMatrix {
        Matrix::combination(&self.c, x)
    }

    /// `B(xi) = sum_a xi_a B^a`.
    pub fn b_pencil(&self, xi: &[Rational]) -> RMatrix {
        Matrix::combination(&self.b, xi)
    }

    pub fn is_normalized(&self) -> bool {
        self.c[0].is_identity()
    }

    /// Symmetry of every `B^a C_i` plus existence of a regular point and a
    /// regular covector.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (a, b) in self.b.iter().enumerate() {
            for (i, c) in self.c.iter().enumerate() {
                let h = b * c;
                for p in 0..self.r {
                    for q in p + 1..self.r {
                        if h.get(p, q) != h.get(q, p) {
                            violations.push(Violation {
                                alpha: a + 1,
                                i,
                                p: p + 1,
                                q: q + 1,
                            });
                        }
                    }
                }
            }
        }
        ValidationReport {
            violations,
            regular_point: self.regular_point().ok(),
            regular_covector: self.regular_covector().ok(),
        }
    }

    /// Returns the system if it validates, the report otherwise.
    pub fn validated(&self) -> Result<&Self> {
        let report = self.validate();
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::Invalid(Box::new(report)))
        }
    }

    /// First small integer point with `det C(x) != 0`.
    pub fn regular_point(&self) -> Result<Vec<Rational>> {
        regular_search(&self.c)
    }

    /// First small integer covector with `det B(xi) != 0`.
    pub fn regular_covector(&self) -> Result<Vec<Rational>> {
        regular_search(&self.b)
    }

    /// `F = det(sum_i x^i C_i)` in the variables `x0..xl`.
    pub fn focal_hypersurface(&self) -> MultiPoly {
        pencil_det(&self.c)
    }

    /// `Phi = det(sum_a xi_a B^a)` in the variables `xi1..xi_codim`
    /// (stored as indices `0..codim`).
    pub fn focal_hypercone(&self) -> MultiPoly {
        pencil_det(&self.b)
    }

    pub fn focal_images(&self) -> FocalImages {
        FocalImages {
            f: self.focal_hypersurface(),
            phi: self.focal_hypercone(),
        }
    }

    pub fn second_fundamental_forms(&self) -> FundamentalForms {
        FundamentalForms {
            h: self
                .b
                .iter()
                .map(|b| self.c.iter().map(|c| b * c).collect())
                .collect(),
        }
    }

    /// `m`: rank of the matrix whose row `a` lists the upper triangle of
    /// `B^a`. Only meaningful in a frame with `C_0 = I`, where every `B^a`
    /// equals `H^a_0`.
    pub fn osculating_dimension(&self) -> Result<usize> {
        if !self.is_normalized() {
            return Err(Error::Precondition(
                "osculating dimension needs a system with C_0 = I".into(),
            ));
        }
        let width = self.r * (self.r + 1) / 2;
        let rows = Matrix::from_fn(self.codim, width, |a, k| {
            let (p, q) = upper_triangle_index(self.r, k);
            self.b[a].get(p, q).clone()
        });
        Ok(rows.rank())
    }

    /// Solutions of `c^q_{pi} x^i = 0`.
    pub fn characteristic_subspace(&self) -> CharacteristicSubspace {
        let r = self.r;
        let stacked = Matrix::from_fn(r * r, self.l + 1, |row, i| {
            self.c[i].get(row / r, row % r).clone()
        });
        let m_star = stacked.rank();
        CharacteristicSubspace {
            m_star,
            k: self.l as i64 - m_star as i64,
            basis: stacked.nullspace(),
        }
    }

    /// Maps each matrix; shapes must be preserved by `fc` and `fb`.
    pub fn map_matrices(
        &self,
        mut fc: impl FnMut(&RMatrix) -> RMatrix,
        mut fb: impl FnMut(&RMatrix) -> RMatrix,
    ) -> Self {
        Self {
            l: self.l,
            r: self.r,
            codim: self.codim,
            c: self.c.iter().map(&mut fc).collect(),
            b: self.b.iter().map(&mut fb).collect(),
        }
    }

    /// The subsystem on the given (0-based) indices.
    pub fn restrict_to(&self, idx: &[usize]) -> Self {
        Self {
            l: self.l,
            r: idx.len(),
            codim: self.codim,
            c: self.c.iter().map(|m| m.principal(idx)).collect(),
            b: self.b.iter().map(|m| m.principal(idx)).collect(),
        }
    }
}

fn upper_triangle_index(r: usize, k: usize) -> (usize, usize) {
    let mut k = k;
    for p in 0..r {
        let len = r - p;
        if k < len {
            return (p, p + k);
        }
        k -= len;
    }
    unreachable!("index beyond the upper triangle")
}

fn regular_search(family: &[RMatrix]) -> Result<Vec<Rational>> {
    small_integer_points(family.len(), REGULAR_POINT_TRIALS)
        .find(|x| {
            Matrix::combination(family, x)
                .det()
                .is_ok_and(|d| !d.is_zero())
        })
        .ok_or(Error::NoRegularPoint(REGULAR_POINT_TRIALS))
}

fn pencil_det(family: &[RMatrix]) -> MultiPoly {
    let r = family[0].nrows();
    let m = Matrix::from_fn(r, r, |p, q| {
        let coeffs: Vec<Rational> = family.iter().map(|m| m.get(p, q).clone()).collect();
        MPoly::linear(&coeffs)
    });
    poly_det(&m).expect("pencil matrix is square")
}

/// One asymmetric entry pair: `(B^alpha C_i)_{pq} != (B^alpha C_i)_{qp}`,
/// with `alpha`, `p < q` 1-based and `i` 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub alpha: usize,
    pub i: usize,
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(alpha={}, i={}, p={}, q={})",
            self.alpha, self.i, self.p, self.q
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub regular_point: Option<Vec<Rational>>,
    pub regular_covector: Option<Vec<Rational>>,
}

impl ValidationReport {
    pub fn symmetric(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.symmetric() && self.regular_point.is_some() && self.regular_covector.is_some()
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.violations.is_empty() {
            let list: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
            parts.push(format!("asymmetric B^alpha C_i at {}", list.join(", ")));
        }
        if self.regular_point.is_none() {
            parts.push("no regular point (det C(x) vanishes identically)".into());
        }
        if self.regular_covector.is_none() {
            parts.push("no regular covector (det B(xi) vanishes identically)".into());
        }
        if parts.is_empty() {
            "valid".into()
        } else {
            parts.join("; ")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FocalImages {
    /// Focal hypersurface in `x0..xl`.
    pub f: MultiPoly,
    /// Focal hypercone in `xi1..xi_codim`.
    pub phi: MultiPoly,
}

impl FocalImages {
    /// `J(x)`, the value of the focal polynomial at a point of the generator.
    pub fn jacobian(&self, x: &[Rational]) -> Rational {
        self.f.eval(x)
    }
}

/// `H^a_i = B^a C_i`, indexed `[a][i]` with `a` 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalForms {
    pub h: Vec<Vec<RMatrix>>,
}

impl FundamentalForms {
    /// `h_pq(xi, x) = xi_a x^i (H^a_i)_pq`.
    pub fn h_of(&self, xi: &[Rational], x: &[Rational]) -> RMatrix {
        let r = self.h[0][0].nrows();
        let mut out = Matrix::zeros(r, r);
        for (a, row) in self.h.iter().enumerate() {
            for (i, m) in row.iter().enumerate() {
                let w = &xi[a] * &x[i];
                if !w.is_zero() {
                    out = &out + &m.scale(&w);
                }
            }
        }
        out
    }

    pub fn all_symmetric(&self) -> bool {
        self.h.iter().flatten().all(Matrix::is_symmetric)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicSubspace {
    /// Rank of the stacked system `c^q_{pi} x^i = 0`.
    pub m_star: usize,
    /// Projective dimension `l - m_star`; `-1` means empty.
    pub k: i64,
    /// Basis of the solution space.
    pub basis: Vec<Vec<Rational>>,
}

impl CharacteristicSubspace {
    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}

/// `e_k` of length `n`.
pub fn unit(n: usize, k: usize) -> Vec<Rational> {
    (0..n)
        .map(|i| if i == k { Rational::one() } else { Rational::zero() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, variable_names};

    fn m(rows: &[&[i64]]) -> RMatrix {
        Matrix::from_i64_rows(rows)
    }

    fn torsal() -> MatrixSystem {
        MatrixSystem::new(
            1,
            2,
            2,
            vec![m(&[&[1, 0], &[0, 1]]), m(&[&[1, 0], &[0, 2]])],
            vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])],
        )
        .unwrap()
    }

    fn quadric_c() -> Vec<RMatrix> {
        vec![
            m(&[&[1, 0], &[0, 1]]),
            m(&[&[0, 1], &[1, 0]]),
            m(&[&[1, 0], &[0, -1]]),
        ]
    }

    #[test]
    fn validation_examples() {
        assert!(torsal().validate().passed());

        let bad = MatrixSystem::new(
            1,
            2,
            2,
            torsal().c().to_vec(),
            vec![m(&[&[0, 1], &[1, 0]]), m(&[&[0, 0], &[0, 1]])],
        )
        .unwrap();
        let rep = bad.validate();
        assert!(!rep.passed());
        assert_eq!(
            rep.violations,
            vec![Violation {
                alpha: 1,
                i: 1,
                p: 1,
                q: 2
            }]
        );

        let scalar_c = MatrixSystem::new(
            2,
            2,
            3,
            vec![m(&[&[2, 0], &[0, 2]]), m(&[&[-1, 0], &[0, -1]]), m(&[&[0, 0], &[0, 0]])],
            quadric_c(),
        )
        .unwrap();
        assert!(scalar_c.validate().passed());
    }

    #[test]
    fn shape_errors_are_structural() {
        assert!(matches!(
            MatrixSystem::new(1, 2, 1, vec![m(&[&[1, 0], &[0, 1]])], vec![m(&[&[1]])]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn focal_hypersurface_examples() {
        let z = m(&[&[0, 0], &[0, 0]]);
        let id = m(&[&[1, 0], &[0, 1]]);
        let cone = MatrixSystem::new(2, 2, 1, vec![id.clone(), z.clone(), z], vec![id.clone()]).unwrap();
        assert_eq!(cone.focal_hypersurface().to_string(), "x0^2");
        assert_eq!(torsal().focal_hypersurface().to_string(), "x0^2 + 3*x0*x1 + 2*x1^2");
        let hyp = MatrixSystem::new(2, 2, 1, quadric_c(), vec![id]).unwrap();
        assert_eq!(hyp.focal_hypersurface().to_string(), "x0^2 - x1^2 - x2^2");
    }

    #[test]
    fn focal_hypercone_examples() {
        let names = variable_names("xi", 1, 3);
        let id = m(&[&[1, 0], &[0, 1]]);
        let single = MatrixSystem::new(0, 2, 1, vec![id.clone()], vec![id.clone()]).unwrap();
        assert_eq!(
            single.focal_hypercone().display_with(&names).to_string(),
            "xi1^2"
        );
        assert_eq!(
            torsal().focal_hypercone().display_with(&names).to_string(),
            "xi1*xi2"
        );
        let cone = MatrixSystem::new(0, 2, 3, vec![id], quadric_c()).unwrap();
        assert_eq!(
            cone.focal_hypercone().display_with(&names).to_string(),
            "xi1^2 - xi2^2 - xi3^2"
        );
    }

    #[test]
    fn regular_point_examples() {
        let z = m(&[&[0, 0], &[0, 0]]);
        let id = m(&[&[1, 0], &[0, 1]]);
        let s = MatrixSystem::new(1, 2, 1, vec![z.clone(), id.clone()], vec![id.clone()]).unwrap();
        assert_eq!(s.regular_point().unwrap(), vec![int(0), int(1)]);
        let s = MatrixSystem::new(2, 2, 1, vec![id.clone(), z.clone(), z.clone()], vec![id.clone()])
            .unwrap();
        assert_eq!(s.regular_point().unwrap(), vec![int(1), int(0), int(0)]);
        let split = MatrixSystem::new(
            1,
            2,
            1,
            vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])],
            vec![id.clone()],
        )
        .unwrap();
        assert_eq!(split.regular_point().unwrap(), vec![int(1), int(1)]);
        let dead = MatrixSystem::new(1, 2, 1, vec![z.clone(), z], vec![id]).unwrap();
        assert!(matches!(dead.regular_point(), Err(Error::NoRegularPoint(_))));
        assert!(!dead.validate().passed());
    }

    #[test]
    fn osculating_dimension_examples() {
        let id = m(&[&[1, 0], &[0, 1]]);
        let one = MatrixSystem::new(0, 2, 1, vec![id.clone()], vec![id.clone()]).unwrap();
        assert_eq!(one.osculating_dimension().unwrap(), 1);
        let t = MatrixSystem::new(0, 2, 2, vec![id.clone()], torsal().b().to_vec()).unwrap();
        assert_eq!(t.osculating_dimension().unwrap(), 2);
        let three = MatrixSystem::new(0, 2, 3, vec![id], quadric_c()).unwrap();
        assert_eq!(three.osculating_dimension().unwrap(), 3);
        let unnormalized = MatrixSystem::new(
            0,
            2,
            1,
            vec![m(&[&[2, 0], &[0, 2]])],
            vec![m(&[&[1, 0], &[0, 1]])],
        )
        .unwrap();
        assert!(matches!(
            unnormalized.osculating_dimension(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn characteristic_subspace_examples() {
        let z = m(&[&[0, 0], &[0, 0]]);
        let id = m(&[&[1, 0], &[0, 1]]);
        let cone = MatrixSystem::new(2, 2, 1, vec![id.clone(), z.clone(), z], vec![id.clone()]).unwrap();
        let ks = cone.characteristic_subspace();
        assert_eq!((ks.m_star, ks.k), (1, 1));
        for v in &ks.basis {
            assert!(v[0].is_zero());
        }
        let ks = torsal().characteristic_subspace();
        assert_eq!((ks.m_star, ks.k), (2, -1));
        assert!(ks.is_empty());
        let c = m(&[&[1, 2], &[3, 4]]);
        let prop = MatrixSystem::new(1, 2, 1, vec![c.clone(), c], vec![id]).unwrap();
        let ks = prop.characteristic_subspace();
        assert_eq!((ks.m_star, ks.k), (1, 0));
    }

    #[test]
    fn fundamental_form_examples() {
        let sff = torsal().second_fundamental_forms();
        assert!(sff.all_symmetric());
        assert_eq!(
            sff.h_of(&[int(1), int(1)], &[int(1), int(0)]),
            Matrix::identity(2)
        );
        let x = torsal().regular_point().unwrap();
        assert!(sff.h_of(&[int(1), int(0)], &x).det().unwrap().is_zero());
        let id = m(&[&[1, 0], &[0, 1]]);
        let s = MatrixSystem::new(0, 2, 1, vec![id.clone()], vec![id]).unwrap();
        assert!(s.second_fundamental_forms().h[0][0].is_identity());
    }
}
