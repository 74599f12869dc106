//! Splitting a block through the space of its self-adjoint commutants.
//!
//! On a system with `C_0 = I`, a decomposition `V = V_1 + V_2` that every
//! `C_i` preserves and every `B^a` sees as orthogonal has projectors `X`
//! satisfying `X C_i = C_i X` and `X^T B^a = B^a X`. Conversely, for any
//! such `X` the primary components of `X` (generalized eigenspaces, and the
//! kernel of the part of the characteristic polynomial without rational
//! roots) are invariant under the `C_i` and pairwise `B^a`-orthogonal, so
//! they split the block over the rationals.
//!
//! This is used when no pencil member has a simple rational spectrum.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::blocks::block_decompose;
use crate::error::{Error, Result};
use crate::exactmath::{char_poly, int, Matrix, UPoly};
use crate::system::{Frame, MatrixSystem};
use crate::{RMatrix, Rational};

const RANDOM_TRIALS: usize = 12;
const COMMUTANT_SEED: u64 = 0xc0_33_07;

/// Basis of `{X : X C_i = C_i X, X^T B^a = B^a X}`.
pub fn commutant_basis(sys: &MatrixSystem) -> Vec<RMatrix> {
    let r = sys.r();
    let var = |p: usize, q: usize| p * r + q;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for c in &sys.c()[1..] {
        // (X C - C X)_{pq} = sum_s x_{ps} c_{sq} - c_{ps} x_{sq}
        for p in 0..r {
            for q in 0..r {
                let mut row = vec![Rational::zero(); r * r];
                for s in 0..r {
                    row[var(p, s)] += c.get(s, q);
                    row[var(s, q)] -= c.get(p, s);
                }
                rows.push(row);
            }
        }
    }
    for b in sys.b() {
        // (X^T B - B X)_{pq} = sum_s x_{sp} b_{sq} - b_{ps} x_{sq}
        for p in 0..r {
            for q in 0..r {
                let mut row = vec![Rational::zero(); r * r];
                for s in 0..r {
                    row[var(s, p)] += b.get(s, q);
                    row[var(s, q)] -= b.get(p, s);
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(1, r * r)
    } else {
        Matrix::from_rows(rows).expect("rows share the same length")
    };
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_vec(r, r, v).expect("r*r entries"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refinement {
    /// Columns of the matrix are the new basis; consecutive groups of the
    /// given sizes span the components.
    Split(RMatrix, Vec<usize>),
    /// The commutant is one-dimensional or never yields a rational split
    /// without meeting an irrational spectrum.
    Indecomposable,
    /// Splittings may exist over an extension of the rationals only.
    NotRational,
}

fn eval_at_matrix(p: &UPoly<Rational>, x: &RMatrix) -> RMatrix {
    let n = x.nrows();
    p.coeffs().iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
        &(&acc * x) + &Matrix::identity(n).scale(c)
    })
}

fn primary_components(x: &RMatrix) -> Result<(Vec<Vec<Vec<Rational>>>, bool)> {
    let n = x.nrows();
    let cp = char_poly(x)?;
    let roots = cp.rational_roots();
    let mut rest = cp.clone();
    let mut comps = Vec::new();
    for (lambda, mult) in &roots.roots {
        let shifted = x - &Matrix::identity(n).scale(lambda);
        let mut power = Matrix::identity(n);
        for _ in 0..*mult {
            power = &power * &shifted;
            rest = rest.div_rem(&UPoly::monic_linear(lambda.clone())).0;
        }
        comps.push(power.nullspace());
    }
    let irrational = rest.degree().unwrap_or(0) > 0;
    if irrational {
        comps.push(eval_at_matrix(&rest, x).nullspace());
    }
    Ok((comps, irrational))
}

/// Candidate elements: the basis itself, sums of neighbours, then seeded
/// integer combinations.
fn candidates(basis: &[RMatrix]) -> Vec<RMatrix> {
    let mut out: Vec<RMatrix> = basis.to_vec();
    for w in basis.windows(2) {
        out.push(&w[0] + &w[1]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(COMMUTANT_SEED);
    for _ in 0..RANDOM_TRIALS {
        let weights: Vec<Rational> = basis.iter().map(|_| int(rng.random_range(-9..=9))).collect();
        out.push(Matrix::combination(basis, &weights));
    }
    out
}

pub fn refine_block(sys: &MatrixSystem) -> Result<Refinement> {
    if !sys.is_normalized() {
        return Err(Error::Precondition(
            "commutant refinement needs a system with C_0 = I".into(),
        ));
    }
    let r = sys.r();
    let basis = commutant_basis(sys);
    if r == 1 || basis.len() <= 1 {
        return Ok(Refinement::Indecomposable);
    }
    let mut saw_irrational = false;
    for x in candidates(&basis) {
        let (comps, irrational) = primary_components(&x)?;
        saw_irrational |= irrational;
        if comps.len() >= 2 {
            let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
            let cols: Vec<Vec<Rational>> = comps.into_iter().flatten().collect();
            let q = Matrix::from_fn(r, r, |i, j| cols[j][i].clone());
            return Ok(Refinement::Split(q, sizes));
        }
    }
    Ok(if saw_irrational {
        Refinement::NotRational
    } else {
        Refinement::Indecomposable
    })
}

/// A finest rational block decomposition reached by repeated commutant
/// splits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refined {
    /// Frame (of the form `R = Q^{-1}`) taking the input to `system`.
    pub frame: Frame,
    pub system: MatrixSystem,
    /// 0-based blocks sorted by smallest index.
    pub blocks: Vec<Vec<usize>>,
    /// Per block: true when a splitting might exist over an extension field.
    pub unresolved: Vec<bool>,
}

/// Repeatedly splits the blocks of a normalized system.
pub fn refine(sys: &MatrixSystem) -> Result<Refined> {
    let r = sys.r();
    let mut q_total: RMatrix = Matrix::identity(r);
    let mut cur = sys.clone();
    let mut work = block_decompose(&cur);
    let mut done: Vec<(Vec<usize>, bool)> = Vec::new();
    while let Some(idx) = work.pop() {
        if idx.len() == 1 {
            done.push((idx, false));
            continue;
        }
        match refine_block(&cur.restrict_to(&idx))? {
            Refinement::Indecomposable => done.push((idx, false)),
            Refinement::NotRational => done.push((idx, true)),
            Refinement::Split(qs, _) => {
                let mut qe: RMatrix = Matrix::identity(r);
                for (a, &ia) in idx.iter().enumerate() {
                    for (b, &ib) in idx.iter().enumerate() {
                        qe.set(ia, ib, qs.get(a, b).clone());
                    }
                }
                let step = Frame {
                    r: qe.inverse().ok_or_else(|| Error::Domain("singular split basis".into()))?,
                    q: qe.clone(),
                    a: Matrix::identity(sys.l() + 1),
                    g: Matrix::identity(sys.codim()),
                };
                cur = step.apply(&cur)?;
                q_total = &q_total * &qe;
                let parts = block_decompose(&cur.restrict_to(&idx));
                if parts.len() == 1 {
                    done.push((idx, false));
                } else {
                    work.extend(
                        parts
                            .into_iter()
                            .map(|p| p.into_iter().map(|k| idx[k]).collect::<Vec<usize>>()),
                    );
                }
            }
        }
    }
    done.sort_by_key(|(b, _)| b[0]);
    let frame = Frame {
        r: q_total
            .inverse()
            .ok_or_else(|| Error::Domain("singular split basis".into()))?,
        q: q_total,
        a: Matrix::identity(sys.l() + 1),
        g: Matrix::identity(sys.codim()),
    };
    debug_assert_eq!(frame.apply(sys)?, cur);
    let (blocks, unresolved) = done.into_iter().unzip();
    Ok(Refined {
        frame,
        system: cur,
        blocks,
        unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RMatrix {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn quadric_block_has_scalar_commutant() {
        let s = MatrixSystem::new(
            2,
            2,
            1,
            vec![
                Matrix::identity(2),
                m(&[&[0, 1], &[1, 0]]),
                m(&[&[1, 0], &[0, -1]]),
            ],
            vec![Matrix::identity(2)],
        )
        .unwrap();
        assert_eq!(commutant_basis(&s).len(), 1);
        assert_eq!(refine_block(&s).unwrap(), Refinement::Indecomposable);
    }

    #[test]
    fn rotation_block_is_not_rational() {
        let s = MatrixSystem::new(
            1,
            2,
            1,
            vec![Matrix::identity(2), m(&[&[0, 1], &[-1, 0]])],
            vec![m(&[&[1, 0], &[0, -1]])],
        )
        .unwrap();
        assert_eq!(commutant_basis(&s).len(), 2);
        assert_eq!(refine_block(&s).unwrap(), Refinement::NotRational);
    }

    #[test]
    fn hidden_direct_sum_is_recovered() {
        // diag(1, 2, 2) pencil with a coupled 2x2 part, conjugated by a
        // unipotent matrix so that nothing is visibly block diagonal
        let c1 = m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let c2 = m(&[&[5, 0, 0], &[0, 1, 1], &[0, 1, -1]]);
        let base = MatrixSystem::new(
            2,
            3,
            1,
            vec![Matrix::identity(3), c1, c2],
            vec![Matrix::identity(3)],
        )
        .unwrap();
        let p = m(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let f = Frame {
            r: p.inverse().unwrap(),
            q: p,
            a: Matrix::identity(3),
            g: Matrix::identity(1),
        };
        let hidden = f.apply(&base).unwrap();
        assert_eq!(block_decompose(&hidden).len(), 1);
        let refined = refine(&hidden).unwrap();
        let mut sizes: Vec<usize> = refined.blocks.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
        assert!(refined.unresolved.iter().all(|u| !u));
        assert_eq!(refined.frame.apply(&hidden).unwrap(), refined.system);
    }
}
