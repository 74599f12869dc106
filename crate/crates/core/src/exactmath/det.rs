//! Determinants of polynomial matrices, characteristic polynomials and the
//! rational spectrum of a matrix.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::poly::MPoly;
use super::scalar::Rational;
use super::upoly::{RootSet, UPoly};
use crate::error::{Error, Result};

type P = MPoly<Rational>;

/// Exact determinant of a square matrix of polynomials, by fraction-free
/// elimination; each step divides exactly by the previous pivot.
pub fn poly_det(m: &Matrix<P>) -> Result<P> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    let n = m.nrows();
    let nvars = if n == 0 { 0 } else { m.get(0, 0).nvars() };
    if m.entries().iter().any(|e| e.nvars() != nvars) {
        return Err(Error::Dimension("entries live in different rings".into()));
    }
    if n == 0 {
        return Ok(P::one(nvars));
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = P::one(nvars);
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(P::zero(nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(a.get(i, j) * a.get(k, k)) - &(a.get(i, k) * a.get(k, j));
                let v = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination divides exactly");
                a.set(i, j, v);
            }
            a.set(i, k, P::zero(nvars));
        }
        prev = a.get(k, k).clone();
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { -d } else { d })
}

/// `det(lambda I - M)` by the Faddeev-LeVerrier recursion, lowest degree first.
pub fn char_poly(m: &Matrix<Rational>) -> Result<UPoly<Rational>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    let n = m.nrows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = Matrix::<Rational>::zeros(n, n);
    for k in 1..=n {
        let shifted = &mk + &Matrix::identity(n).scale(&coeffs[n - k + 1]);
        mk = m * &shifted;
        coeffs[n - k] = -mk.trace() / Rational::from_integer((k as i64).into());
    }
    Ok(UPoly::new(coeffs))
}

/// Rational eigenvalues with algebraic multiplicities; `complete` is false
/// when part of the spectrum is irrational or complex.
pub fn rational_eigenvalues(m: &Matrix<Rational>) -> Result<RootSet> {
    Ok(char_poly(m)?.rational_roots())
}

/// Basis of the eigenspace of `m` for `lambda`.
pub fn eigenvectors(m: &Matrix<Rational>, lambda: &Rational) -> Vec<Vec<Rational>> {
    let n = m.nrows();
    (m - &Matrix::identity(n).scale(lambda)).nullspace()
}

/// `t -> p(point + t * direction)`.
pub fn restrict(p: &P, point: &[Rational], direction: &[Rational]) -> Result<UPoly<Rational>> {
    let n = p.nvars();
    if point.len() != n || direction.len() != n {
        return Err(Error::Dimension(format!(
            "restriction line in {} coordinates for a {n}-variable polynomial",
            point.len().max(direction.len())
        )));
    }
    if direction.iter().all(Zero::is_zero) {
        return Err(Error::Domain("zero direction".into()));
    }
    // substitute x = A (1, t) with A = [point | direction]
    let a = Matrix::from_fn(n, 2, |i, j| {
        if j == 0 {
            point[i].clone()
        } else {
            direction[i].clone()
        }
    });
    let q = p.substitute_linear(&a)?;
    let mut coeffs = vec![Rational::zero(); q.total_degree().unwrap_or(0) as usize + 1];
    for (m, c) in q.terms() {
        let k = m.exponents()[1] as usize;
        coeffs[k] = &coeffs[k] + c;
    }
    Ok(UPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::scalar::{int, rat};

    fn x(n: usize, i: usize) -> P {
        P::var(n, i)
    }

    #[test]
    fn symmetric_two_by_two() {
        let m = Matrix::from_rows(vec![vec![x(2, 0), x(2, 1)], vec![x(2, 1), x(2, 0)]]).unwrap();
        assert_eq!(
            poly_det(&m).unwrap(),
            &(&x(2, 0) * &x(2, 0)) - &(&x(2, 1) * &x(2, 1))
        );
    }

    #[test]
    fn diagonal_pencil() {
        let z = P::zero(2);
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) + &x(2, 1).scale(&int(2));
        let m = Matrix::from_rows(vec![vec![a.clone(), z.clone()], vec![z, b.clone()]]).unwrap();
        assert_eq!(poly_det(&m).unwrap(), &a * &b);
        assert_eq!(
            poly_det(&m).unwrap().to_string(),
            "x0^2 + 3*x0*x1 + 2*x1^2"
        );
    }

    #[test]
    fn zero_pivot_needs_a_swap() {
        let z = P::zero(2);
        let m = Matrix::from_rows(vec![vec![z.clone(), x(2, 0)], vec![x(2, 1), z]]).unwrap();
        assert_eq!(poly_det(&m).unwrap(), -(&x(2, 0) * &x(2, 1)));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = Matrix::from_rows(vec![vec![x(1, 0), x(1, 0)]]).unwrap();
        assert!(poly_det(&m).is_err());
    }

    #[test]
    fn spectra() {
        let rs = rational_eigenvalues(&Matrix::diagonal(&[int(1), int(2)])).unwrap();
        assert_eq!(rs.roots, vec![(int(1), 1), (int(2), 1)]);
        assert!(rs.complete);

        let swap = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&swap).unwrap().coeffs(), &[int(-1), int(0), int(1)]);
        let rs = rational_eigenvalues(&swap).unwrap();
        assert_eq!(rs.roots, vec![(int(-1), 1), (int(1), 1)]);

        let rot = Matrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        assert_eq!(char_poly(&rot).unwrap().coeffs(), &[int(1), int(0), int(1)]);
        let rs = rational_eigenvalues(&rot).unwrap();
        assert!(rs.roots.is_empty() && !rs.complete);
    }

    #[test]
    fn triangular_eigenvectors() {
        let m = Matrix::from_i64_rows(&[&[1, 1], &[0, 2]]);
        assert_eq!(eigenvectors(&m, &int(2)), vec![vec![int(1), int(1)]]);
        assert_eq!(eigenvectors(&m, &int(1)), vec![vec![int(1), int(0)]]);
    }

    #[test]
    fn restriction_examples() {
        let p = &(&x(2, 0) * &x(2, 0)) - &(&x(2, 1) * &x(2, 1));
        assert!(restrict(&p, &[int(0), int(0)], &[int(1), int(1)]).unwrap().is_zero());
        let r = restrict(&p, &[int(1), int(0)], &[int(0), int(1)]).unwrap();
        assert_eq!(r.coeffs(), &[int(1), int(0), int(-1)]);
        let q = &(&x(2, 0) + &x(2, 1)) * &(&x(2, 0) + &x(2, 1).scale(&int(2)));
        let r = restrict(&q, &[int(1), int(0)], &[int(0), int(1)]).unwrap();
        assert_eq!(r.coeffs(), &[int(1), int(3), int(2)]);
        assert_eq!(r.rational_roots().distinct(), vec![int(-1), rat(-1, 2)]);
        assert!(restrict(&q, &[int(1), int(0)], &[int(0), int(0)]).is_err());
    }
}
