//! Seeded matrix systems with a prescribed structure.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::commutant::commutant_basis;
use crate::error::{Error, Result};
use crate::exactmath::{has_multiple_components, has_rational_linear_factor, int, Matrix};
use crate::system::{Frame, MatrixSystem};
use crate::{MultiPoly, RMatrix, Rational};

/// Draws per generator call before giving up.
pub const GENERATION_ATTEMPTS: usize = 32;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn draw(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    int(rng.random_range(lo..=hi))
}

fn random_symmetric(rng: &mut ChaCha8Rng, r: usize, bound: i64) -> RMatrix {
    let mut m = Matrix::zeros(r, r);
    for p in 0..r {
        for q in p..r {
            let v = draw(rng, -bound, bound);
            m.set(p, q, v.clone());
            m.set(q, p, v);
        }
    }
    m
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RMatrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| draw(rng, -2, 2));
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

fn quadric_triple() -> Vec<RMatrix> {
    vec![
        Matrix::identity(2),
        Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
        Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]),
    ]
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    (0..a.len()).all(|i| (i..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

fn pairwise_independent(vectors: &[Vec<Rational>]) -> bool {
    vectors.iter().all(|v| v.iter().any(|x| !x.is_zero()))
        && vectors
            .iter()
            .enumerate()
            .all(|(i, a)| vectors[i + 1..].iter().all(|b| !proportional(a, b)))
}

fn diagonal_system(l: usize, codim: usize, rows: &[Vec<Rational>], cols: &[Vec<Rational>]) -> MatrixSystem {
    let r = rows.len();
    let c = (0..=l)
        .map(|i| Matrix::diagonal(&rows.iter().map(|row| row[i].clone()).collect::<Vec<_>>()))
        .collect();
    let b = (0..codim)
        .map(|a| Matrix::diagonal(&cols.iter().map(|col| col[a].clone()).collect::<Vec<_>>()))
        .collect();
    MatrixSystem::new(l, r, codim, c, b).expect("diagonal shapes agree")
}

/// Rank-one system with `F = x_l` and `Phi = xi_1`.
pub fn torse_system(l: usize, codim: usize) -> Result<MatrixSystem> {
    if codim == 0 {
        return Err(Error::Domain("a torse needs codim >= 1".into()));
    }
    let c = (0..=l).map(|i| Matrix::from_i64_rows(&[&[i64::from(i == l)]])).collect();
    let b = (0..codim).map(|a| Matrix::from_i64_rows(&[&[i64::from(a == 0)]])).collect();
    MatrixSystem::new(l, 1, codim, c, b)
}

/// Diagonal system whose focal hypersurface and hypercone split into `r`
/// distinct rational hyperplanes. Seed 0 uses `c^p_i = (p+1)^i` and the
/// normal eigenvalue columns `e_1, .., e_codim, (1, 2, 4, ..), ..`.
pub fn gen_torsal(l: usize, r: usize, codim: usize, seed: u64) -> Result<MatrixSystem> {
    if r == 1 {
        return torse_system(l, codim);
    }
    if l < 1 || r < 2 || codim < 2 {
        return Err(Error::Domain(format!(
            "torsal generator needs l >= 1, r >= 2, codim >= 2 (got l = {l}, r = {r}, codim = {codim})"
        )));
    }
    if seed == 0 {
        let rows: Vec<Vec<Rational>> = (0..r)
            .map(|p| (0..=l as u32).map(|i| int((p as i64 + 1).pow(i))).collect())
            .collect();
        let cols: Vec<Vec<Rational>> = (0..r)
            .map(|p| {
                if p < codim {
                    (0..codim).map(|a| int(i64::from(a == p))).collect()
                } else {
                    let k = (p - codim + 2) as i64;
                    (0..codim as u32).map(|a| int(k.pow(a))).collect()
                }
            })
            .collect();
        return Ok(diagonal_system(l, codim, &rows, &cols));
    }
    let mut rng = rng(seed);
    for _ in 0..GENERATION_ATTEMPTS {
        let rows: Vec<Vec<Rational>> = (0..r)
            .map(|_| (0..=l).map(|i| if i == 0 { draw(&mut rng, 1, 3) } else { draw(&mut rng, -3, 3) }).collect())
            .collect();
        let cols: Vec<Vec<Rational>> = (0..r)
            .map(|_| (0..codim).map(|_| draw(&mut rng, -3, 3)).collect())
            .collect();
        if pairwise_independent(&rows) && pairwise_independent(&cols) {
            return Ok(diagonal_system(l, codim, &rows, &cols));
        }
    }
    Err(Error::Generation(format!(
        "no torsal system in {GENERATION_ATTEMPTS} draws for seed {seed}"
    )))
}

/// Free of rational linear factors and of multiple components.
fn irreducible_enough(p: &MultiPoly) -> Result<bool> {
    Ok(!has_rational_linear_factor(p)? && !has_multiple_components(p)?)
}

/// Cone system: `C_i = c_i I` and a symmetric normal family with
/// `B^1 = I` whose pencil determinant has no rational linear factor and whose
/// commutant is trivial.
pub fn gen_cone(l: usize, r: usize, codim: usize, seed: u64) -> Result<MatrixSystem> {
    if l < 1 || r < 2 || codim < 3 {
        return Err(Error::Domain(format!(
            "cone generator needs l >= 1, r >= 2, codim >= 3 (got l = {l}, r = {r}, codim = {codim})"
        )));
    }
    let mut rng = rng(seed);
    for attempt in 0..GENERATION_ATTEMPTS {
        let c: Vec<Rational> = if seed == 0 {
            (0..=l).map(|i| int(i64::from(i == 0))).collect()
        } else {
            (0..=l).map(|i| if i == 0 { draw(&mut rng, 1, 3) } else { draw(&mut rng, -3, 3) }).collect()
        };
        let b = if seed == 0 && attempt == 0 && r == 2 && codim == 3 {
            quadric_triple()
        } else {
            std::iter::once(Matrix::identity(r))
                .chain((1..codim).map(|_| random_symmetric(&mut rng, r, 3)))
                .collect()
        };
        let gamma: Matrix<Rational> = Matrix::identity(r);
        let cs = c.iter().map(|ci| gamma.scale(ci)).collect();
        let sys = MatrixSystem::new(l, r, codim, cs, b)?;
        if irreducible_enough(&sys.focal_hypercone())? && commutant_basis(&sys).len() == 1 {
            return Ok(sys);
        }
    }
    Err(Error::Generation(format!(
        "no linear-factor-free hypercone in {GENERATION_ATTEMPTS} draws for seed {seed}"
    )))
}

/// Hypersurface system: `codim = 1`, `B^1 = I`, `C_0 = I` and symmetric
/// `C_i` whose pencil determinant has no rational linear factor.
pub fn gen_hypersurface(l: usize, r: usize, seed: u64) -> Result<MatrixSystem> {
    if l < 2 || r < 2 {
        return Err(Error::Domain(format!(
            "hypersurface generator needs l >= 2, r >= 2 (got l = {l}, r = {r})"
        )));
    }
    let mut rng = rng(seed);
    for attempt in 0..GENERATION_ATTEMPTS {
        let c = if seed == 0 && attempt == 0 && l == 2 && r == 2 {
            quadric_triple()
        } else {
            std::iter::once(Matrix::identity(r))
                .chain((1..=l).map(|_| random_symmetric(&mut rng, r, 3)))
                .collect()
        };
        let sys = MatrixSystem::new(l, r, 1, c, vec![Matrix::identity(r)])?;
        if irreducible_enough(&sys.focal_hypersurface())? && commutant_basis(&sys).len() == 1 {
            return Ok(sys);
        }
    }
    Err(Error::Generation(format!(
        "no linear-factor-free focal hypersurface in {GENERATION_ATTEMPTS} draws for seed {seed}"
    )))
}

/// Block-diagonal concatenation of systems sharing `l` and `codim`.
pub fn gen_direct_sum(parts: &[MatrixSystem]) -> Result<MatrixSystem> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Dimension("direct sum of no systems".into()))?;
    let (l, codim) = (first.l(), first.codim());
    if let Some(bad) = parts.iter().find(|s| s.l() != l || s.codim() != codim) {
        return Err(Error::Dimension(format!(
            "summands disagree: (l, codim) = ({l}, {codim}) and ({}, {})",
            bad.l(),
            bad.codim()
        )));
    }
    let r = parts.iter().map(MatrixSystem::r).sum();
    let c = (0..=l)
        .map(|i| Matrix::block_diag(&parts.iter().map(|s| s.c()[i].clone()).collect::<Vec<_>>()))
        .collect();
    let b = (0..codim)
        .map(|a| Matrix::block_diag(&parts.iter().map(|s| s.b()[a].clone()).collect::<Vec<_>>()))
        .collect();
    MatrixSystem::new(l, r, codim, c, b)
}

/// Frame with small random integer factors.
pub fn random_frame(l: usize, r: usize, codim: usize, seed: u64) -> Frame {
    let mut rng = rng(seed);
    Frame {
        r: random_invertible(&mut rng, r),
        q: random_invertible(&mut rng, r),
        a: random_invertible(&mut rng, l + 1),
        g: random_invertible(&mut rng, codim),
    }
}

/// A valid system of any shape: random diagonal families (no zero
/// eigenvalue row or column) moved by a random frame.
pub fn gen_valid(l: usize, r: usize, codim: usize, seed: u64) -> Result<MatrixSystem> {
    if r == 0 || codim == 0 {
        return Err(Error::Domain("valid systems need r >= 1 and codim >= 1".into()));
    }
    let mut rng = rng(seed);
    let mut nonzero_row = |n: usize| loop {
        let v: Vec<Rational> = (0..n).map(|_| draw(&mut rng, -3, 3)).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    };
    let rows: Vec<Vec<Rational>> = (0..r).map(|_| nonzero_row(l + 1)).collect();
    let cols: Vec<Vec<Rational>> = (0..r).map(|_| nonzero_row(codim)).collect();
    let sys = diagonal_system(l, codim, &rows, &cols);
    random_frame(l, r, codim, seed.wrapping_add(1)).apply(&sys)
}
