//! Simultaneous diagonalization through the eigenbasis of a generic member
//! of one of the two pencils.
//!
//! On a system with `C_0 = I`, every `B^a` intertwines each `C_i` with its
//! transpose (`B^a C_i = C_i^T B^a`). If `M = sum_{i>=1} t_i C_i` has
//! distinct eigenvalues with eigenbasis `P`, then `P^T B^a P` commutes with
//! the diagonal `P^{-1} M P` and is therefore diagonal as well. The C family
//! becomes diagonal only when it commutes with `M`. The same construction on
//! the dual system diagonalizes the B family instead.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::normalize::normalize;
use crate::duality::{dual_frame, dualize};
use crate::error::{Error, Result};
use crate::exactmath::{eigenvectors, int, rational_eigenvalues, Matrix};
use crate::system::{Frame, MatrixSystem};
use crate::{RMatrix, Rational};

/// Number of pencil combinations tried per route.
pub const DIAGONALIZATION_ATTEMPTS: usize = 16;
const COMBINATION_SEED: u64 = 0x5e_ed0f_d1a6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagonalStatus {
    FullyDiagonal,
    CDiagonalOnly,
    BDiagonalOnly,
    Blocked,
    SpectrumNotRational,
}

impl DiagonalStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::FullyDiagonal => "fully-diagonal",
            Self::CDiagonalOnly => "C-diagonal-only",
            Self::BDiagonalOnly => "B-diagonal-only",
            Self::Blocked => "blocked",
            Self::SpectrumNotRational => "spectrum-not-rational",
        }
    }

    pub fn succeeded(self) -> bool {
        matches!(
            self,
            Self::FullyDiagonal | Self::CDiagonalOnly | Self::BDiagonalOnly
        )
    }
}

impl fmt::Display for DiagonalStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which pencil supplied the eigenbasis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Generator,
    Normal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalizedSystem {
    /// Frame taking the input system to `system`.
    pub frame: Frame,
    /// Base change: the columns of `P` are the new basis vectors, so the C
    /// family is conjugated by `P` (`frame.q == P` on the generator route).
    pub basis: RMatrix,
    pub system: MatrixSystem,
    pub status: DiagonalStatus,
    pub route: Option<Route>,
    /// Pencil weights that produced the eigenbasis.
    pub combination: Option<Vec<Rational>>,
    /// True when some tried combination had an irrational or complex
    /// eigenvalue.
    pub saw_irrational: bool,
}

impl DiagonalizedSystem {
    fn unchanged(sys: &MatrixSystem, status: DiagonalStatus, saw_irrational: bool) -> Self {
        Self {
            frame: Frame::for_system(sys),
            basis: Matrix::identity(sys.r()),
            system: sys.clone(),
            status,
            route: None,
            combination: None,
            saw_irrational,
        }
    }
}

pub fn family_status(sys: &MatrixSystem) -> DiagonalStatus {
    let c = sys.c().iter().all(Matrix::is_diagonal);
    let b = sys.b().iter().all(Matrix::is_diagonal);
    match (c, b) {
        (true, true) => DiagonalStatus::FullyDiagonal,
        (true, false) => DiagonalStatus::CDiagonalOnly,
        (false, true) => DiagonalStatus::BDiagonalOnly,
        (false, false) => DiagonalStatus::Blocked,
    }
}

/// Pencil weights `(1,0,..)`, `(0,1,..)`, `(1,1,..)`, `(1,2,3,..)`, then
/// seeded values in `[-9, 9]`, without repeats or the zero vector.
pub fn combination_seeds(len: usize, count: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    if len == 0 {
        return out;
    }
    let push = |v: Vec<i64>, out: &mut Vec<Vec<i64>>| {
        if out.len() < count && v.iter().any(|x| *x != 0) && !out.contains(&v) {
            out.push(v);
        }
    };
    push((0..len).map(|i| i64::from(i == 0)).collect(), &mut out);
    push((0..len).map(|i| i64::from(i == 1)).collect(), &mut out);
    push(vec![1; len], &mut out);
    push((1..=len as i64).collect(), &mut out);
    let mut rng = ChaCha8Rng::seed_from_u64(COMBINATION_SEED);
    let mut guard = 0;
    while out.len() < count && guard < 10 * count {
        push((0..len).map(|_| rng.random_range(-9..=9)).collect(), &mut out);
        guard += 1;
    }
    out
}

/// Outcome of the eigenbasis search on one pencil.
struct PencilBasis {
    basis: RMatrix,
    weights: Vec<Rational>,
}

/// Looks for a combination of `family` with distinct rational eigenvalues.
/// Returns the eigenbasis (if any) and whether an irrational spectrum was met.
fn pencil_eigenbasis(family: &[RMatrix], r: usize) -> Result<(Option<PencilBasis>, bool)> {
    let mut saw_irrational = false;
    if r == 1 {
        return Ok((
            Some(PencilBasis {
                basis: Matrix::identity(1),
                weights: vec![Rational::one(); family.len()],
            }),
            false,
        ));
    }
    for t in combination_seeds(family.len(), DIAGONALIZATION_ATTEMPTS) {
        let weights: Vec<Rational> = t.into_iter().map(int).collect();
        let m = Matrix::combination(family, &weights);
        let spectrum = rational_eigenvalues(&m)?;
        if !spectrum.complete {
            saw_irrational = true;
            continue;
        }
        if spectrum.roots.len() != r {
            continue;
        }
        let mut vectors: Vec<(usize, Rational, Vec<Rational>)> = spectrum
            .roots
            .iter()
            .map(|(lambda, _)| {
                let v = eigenvectors(&m, lambda)
                    .into_iter()
                    .next()
                    .expect("a simple eigenvalue has an eigenvector");
                let v = primitive(&v);
                let lead = v.iter().position(|c| !c.is_zero()).unwrap_or(0);
                (lead, lambda.clone(), v)
            })
            .collect();
        // keep the basis as close to the original index order as possible
        vectors.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let basis = Matrix::from_fn(r, r, |i, j| vectors[j].2[i].clone());
        return Ok((Some(PencilBasis { basis, weights }), saw_irrational));
    }
    Ok((None, saw_irrational))
}

/// Integer vector with coprime entries and positive first nonzero entry.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    use crate::exactmath::scalar::{denominator_lcm, numerator_gcd};
    let lcm = Rational::from_integer(denominator_lcm(v));
    let scaled: Vec<Rational> = v.iter().map(|c| c * &lcm).collect();
    let g = numerator_gcd(&scaled);
    if g.is_zero() {
        return scaled;
    }
    let mut g = Rational::from_integer(g);
    if scaled.iter().find(|c| !c.is_zero()).is_some_and(|c| *c < Rational::zero()) {
        g = -g;
    }
    scaled.iter().map(|c| c / &g).collect()
}

/// Eigenbasis of a generic generator-pencil member on a normalized system.
fn generator_route(sys: &MatrixSystem) -> Result<(Option<DiagonalizedSystem>, bool)> {
    let pencil: Vec<RMatrix> = sys.c()[1..].to_vec();
    let (found, saw) = pencil_eigenbasis(&pencil, sys.r())?;
    let Some(pb) = found else {
        return Ok((None, saw));
    };
    let p_inv = pb
        .basis
        .inverse()
        .ok_or_else(|| Error::Domain("eigenbasis is singular".into()))?;
    let frame = Frame {
        r: p_inv,
        q: pb.basis.clone(),
        a: Matrix::identity(sys.l() + 1),
        g: Matrix::identity(sys.codim()),
    };
    let system = frame.apply(sys)?;
    let mut weights = vec![Rational::zero()];
    weights.extend(pb.weights);
    Ok((
        Some(DiagonalizedSystem {
            frame,
            basis: pb.basis,
            status: family_status(&system),
            system,
            route: Some(Route::Generator),
            combination: Some(weights),
            saw_irrational: saw,
        }),
        saw,
    ))
}

/// The generator route applied to the dual system, mapped back.
fn normal_route(sys: &MatrixSystem) -> Result<(Option<DiagonalizedSystem>, bool)> {
    let dual = dualize(sys);
    let Ok(nd) = normalize(&dual) else {
        return Ok((None, false));
    };
    let (found, saw) = generator_route(&nd.system)?;
    let Some(dd) = found else {
        return Ok((None, saw));
    };
    let dual_total = nd.frame.then(&dd.frame);
    let frame = dual_frame(&dual_total)?;
    let system = frame.apply(sys)?;
    debug_assert_eq!(system, dualize(&dd.system));
    Ok((
        Some(DiagonalizedSystem {
            basis: frame.q.clone(),
            status: family_status(&system),
            system,
            frame,
            route: Some(Route::Normal),
            combination: dd.combination,
            saw_irrational: saw,
        }),
        saw,
    ))
}

/// Tries the generator pencil first and the normal pencil (through duality)
/// when the first does not make both families diagonal.
pub fn simultaneous_diagonalize(sys: &MatrixSystem) -> Result<DiagonalizedSystem> {
    if !sys.is_normalized() {
        return Err(Error::Precondition(
            "simultaneous diagonalization needs a system with C_0 = I".into(),
        ));
    }
    let initial = family_status(sys);
    if initial == DiagonalStatus::FullyDiagonal {
        return Ok(DiagonalizedSystem::unchanged(sys, initial, false));
    }
    let (gen, saw_gen) = generator_route(sys)?;
    if let Some(d) = &gen {
        if d.status == DiagonalStatus::FullyDiagonal {
            return Ok(d.clone());
        }
    }
    let (nor, saw_nor) = normal_route(sys)?;
    let saw = saw_gen || saw_nor;
    let best = match (gen, nor) {
        (_, Some(n)) if n.status == DiagonalStatus::FullyDiagonal => Some(n),
        (Some(g), _) => Some(g),
        (None, Some(n)) => Some(n),
        (None, None) => None,
    };
    Ok(match best {
        Some(mut d) => {
            d.saw_irrational = saw;
            d
        }
        None if saw => DiagonalizedSystem::unchanged(sys, DiagonalStatus::SpectrumNotRational, true),
        None => DiagonalizedSystem::unchanged(sys, DiagonalStatus::Blocked, false),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RMatrix {
        Matrix::from_i64_rows(rows)
    }

    fn sys(c1: RMatrix, b: Vec<RMatrix>) -> MatrixSystem {
        MatrixSystem::new(1, 2, b.len(), vec![Matrix::identity(2), c1], b).unwrap()
    }

    #[test]
    fn diagonal_input_is_left_alone() {
        let s = sys(
            m(&[&[1, 0], &[0, 2]]),
            vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[0, 1]])],
        );
        let d = simultaneous_diagonalize(&s).unwrap();
        assert_eq!(d.status, DiagonalStatus::FullyDiagonal);
        assert!(d.basis.is_identity());
    }

    #[test]
    fn triangular_pencil_member() {
        let b = m(&[&[1, -1], &[-1, 2]]);
        let s = sys(m(&[&[1, 1], &[0, 2]]), vec![b]);
        assert!(s.validate().passed());
        let d = simultaneous_diagonalize(&s).unwrap();
        assert_eq!(d.basis, m(&[&[1, 1], &[0, 1]]));
        assert_eq!(d.system.c()[1], m(&[&[1, 0], &[0, 2]]));
        assert_eq!(d.status, DiagonalStatus::FullyDiagonal);
        assert_eq!(d.route, Some(Route::Generator));
    }

    #[test]
    fn rotation_spectrum_is_not_rational() {
        let s = sys(m(&[&[0, 1], &[-1, 0]]), vec![m(&[&[1, 0], &[0, -1]])]);
        assert!(s.validate().passed());
        let d = simultaneous_diagonalize(&s).unwrap();
        assert_eq!(d.status, DiagonalStatus::SpectrumNotRational);
        assert!(d.saw_irrational);
    }

    #[test]
    fn repeated_spectrum_is_blocked() {
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![Matrix::identity(2), m(&[&[3, 0], &[0, 3]])],
            vec![m(&[&[1, 1], &[1, 2]])],
        )
        .unwrap();
        assert_eq!(
            simultaneous_diagonalize(&s).unwrap().status,
            DiagonalStatus::Blocked
        );
    }

    #[test]
    fn normal_route_diagonalizes_scalar_generators() {
        // cone-like: C's scalar, B's commuting with distinct spectra
        let s = MatrixSystem::new(
            1,
            2,
            2,
            vec![Matrix::identity(2), m(&[&[2, 0], &[0, 2]])],
            vec![m(&[&[1, 0], &[0, 1]]), m(&[&[1, 1], &[1, 1]])],
        )
        .unwrap();
        let d = simultaneous_diagonalize(&s).unwrap();
        assert_eq!(d.status, DiagonalStatus::FullyDiagonal);
        assert_eq!(d.route, Some(Route::Normal));
        assert!(d.frame.apply(&s).unwrap() == d.system);
    }

    #[test]
    fn seeds_follow_the_documented_prefix() {
        let s = combination_seeds(3, 16);
        assert_eq!(s.len(), 16);
        assert_eq!(&s[..4], &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1], vec![1, 2, 3]]);
        assert!(s[4..].iter().flatten().all(|v| (-9..=9).contains(v)));
        assert_eq!(combination_seeds(1, 16)[0], vec![1]);
    }
}
