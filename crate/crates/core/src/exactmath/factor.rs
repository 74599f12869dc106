//! Rational linear factors of homogeneous polynomials.
//!
//! After a linear change of coordinates making `p(e_0) != 0`, every linear
//! factor can be written `y_0 + sum a_k y_k`, and each `-a_k` is a rational
//! root of `p` restricted to the line `t e_0 + e_k`. The candidate factors are
//! the finitely many combinations of those roots, each tested by exact
//! division.

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::poly::MPoly;
use super::scalar::Rational;
use crate::error::{Error, Result};

type P = MPoly<Rational>;

const COMBINATION_CAP: usize = 100_000;

/// Linear factors with multiplicities plus the cofactor free of rational
/// linear factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactorization {
    /// Normalized linear forms and their multiplicities, sorted.
    pub factors: Vec<(P, u32)>,
    /// `p / prod factors^mult`, normalized up to the constant in `unit`.
    pub rest: P,
    /// Constant making `p = unit * rest * prod factors^mult` exact.
    pub unit: Rational,
    /// False when the candidate enumeration was truncated.
    pub exhaustive: bool,
}

impl LinearFactorization {
    pub fn has_linear_factor(&self) -> bool {
        !self.factors.is_empty()
    }

    /// True when `p` is a product of linear forms.
    pub fn splits(&self) -> bool {
        self.rest.is_constant()
    }

    pub fn splits_into_distinct(&self) -> bool {
        self.splits() && self.factors.iter().all(|(_, m)| *m == 1)
    }

    pub fn linear_degree(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

/// Finds all rational linear factors of a nonzero homogeneous polynomial.
pub fn linear_factors(p: &P) -> Result<LinearFactorization> {
    if p.is_zero() {
        return Err(Error::Domain("factoring the zero polynomial".into()));
    }
    if !p.is_homogeneous() {
        return Err(Error::Precondition(
            "linear factor search needs a homogeneous polynomial".into(),
        ));
    }
    let n = p.nvars();
    let mut rest = p.clone();
    let mut factors: Vec<(P, u32)> = Vec::new();
    let mut exhaustive = true;
    while rest.total_degree().unwrap_or(0) > 0 {
        let (found, complete) = find_linear_factor(&rest)?;
        exhaustive &= complete;
        let Some(f) = found else { break };
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&f) {
            rest = q;
            mult += 1;
        }
        factors.push((f, mult));
    }
    factors.sort_by(|a, b| a.0.leading_term().cmp(&b.0.leading_term()));
    let rest_norm = rest.normalized();
    let unit = if rest.is_constant() {
        rest.constant_value().unwrap_or_else(Rational::one)
    } else {
        rest.leading_coeff() / rest_norm.leading_coeff()
    };
    Ok(LinearFactorization {
        factors,
        rest: if rest.is_constant() {
            P::one(n)
        } else {
            rest_norm
        },
        unit,
        exhaustive,
    })
}

pub fn has_rational_linear_factor(p: &P) -> Result<bool> {
    Ok(linear_factors(p)?.has_linear_factor())
}

/// One normalized linear factor of a homogeneous `p` of positive degree,
/// together with whether the search was exhaustive.
fn find_linear_factor(p: &P) -> Result<(Option<P>, bool)> {
    let n = p.nvars();
    let d = p.total_degree().unwrap_or(0);
    let v = nonvanishing_point(p)?;
    let j0 = v.iter().position(|c| !c.is_zero()).expect("nonzero point");
    // columns: v, then the unit vectors other than e_{j0}
    let others: Vec<usize> = (0..n).filter(|&k| k != j0).collect();
    let a = Matrix::from_fn(n, n, |i, j| {
        if j == 0 {
            v[i].clone()
        } else if i == others[j - 1] {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let q = p.substitute_linear(&a)?;
    let mut candidates: Vec<Vec<Rational>> = Vec::with_capacity(n - 1);
    for k in 1..n {
        let mut dir = vec![Rational::zero(); n];
        dir[0] = Rational::one();
        let mut base = vec![Rational::zero(); n];
        base[k] = Rational::one();
        // q(t e_0 + e_k) has degree d with leading coefficient q(e_0) != 0
        let line = super::det::restrict(&q, &base, &dir)?;
        debug_assert_eq!(line.degree(), Some(d as usize));
        let roots = line.rational_roots();
        if roots.roots.is_empty() {
            return Ok((None, true));
        }
        candidates.push(roots.distinct().into_iter().map(|r| -r).collect());
    }
    let total: usize = candidates
        .iter()
        .map(Vec::len)
        .try_fold(1usize, |acc, c| acc.checked_mul(c))
        .unwrap_or(usize::MAX);
    let exhaustive = total <= COMBINATION_CAP;
    let a_inv = a.inverse().expect("frame is invertible");
    let mut idx = vec![0usize; n - 1];
    for _ in 0..total.min(COMBINATION_CAP) {
        let mut coeffs = vec![Rational::one(); n];
        for k in 1..n {
            coeffs[k] = candidates[k - 1][idx[k - 1]].clone();
        }
        let lin = P::linear(&coeffs);
        if q.div_exact(&lin).is_some() {
            // L(y) with y = A^{-1} x
            let back: Vec<Rational> = (0..n)
                .map(|j| {
                    (0..n).fold(Rational::zero(), |acc, i| {
                        acc + coeffs[i].clone() * a_inv.get(i, j).clone()
                    })
                })
                .collect();
            return Ok((Some(P::linear(&back).normalized()), true));
        }
        for k in 0..idx.len() {
            idx[k] += 1;
            if idx[k] < candidates[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
    Ok((None, exhaustive))
}

/// Small integer point where `p` does not vanish.
pub fn nonvanishing_point(p: &P) -> Result<Vec<Rational>> {
    let n = p.nvars();
    super::search::small_integer_points(n, 10_000)
        .find(|x| !p.eval(x).is_zero())
        .ok_or_else(|| Error::Domain("polynomial vanishes on every probed point".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::scalar::int;

    fn x(i: usize) -> P {
        P::var(3, i)
    }

    #[test]
    fn splits_product_of_planes() {
        let a = &x(0) + &x(1);
        let b = &x(0) + &x(1).scale(&int(2));
        let lf = linear_factors(&(&a * &b)).unwrap();
        assert!(lf.splits_into_distinct());
        let fs: Vec<P> = lf.factors.iter().map(|(f, _)| f.clone()).collect();
        assert!(fs.contains(&a) && fs.contains(&b));
    }

    #[test]
    fn multiplicity_and_cofactor() {
        let q = &(&(&x(0) * &x(0)) - &(&x(1) * &x(1))) - &(&x(2) * &x(2));
        let l = &x(1) - &x(2).scale(&int(3));
        let p = (&(&q * &l) * &l).scale(&int(-5));
        let lf = linear_factors(&p).unwrap();
        assert_eq!(lf.factors, vec![(l.clone(), 2)]);
        assert_eq!(lf.rest, q);
        let rebuilt = (&(&lf.rest * &l) * &l).scale(&lf.unit);
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn irreducible_quadric_has_none() {
        let q = &(&(&x(0) * &x(0)) - &(&x(1) * &x(1))) - &(&x(2) * &x(2));
        assert!(!has_rational_linear_factor(&q).unwrap());
    }

    #[test]
    fn factor_through_a_vanishing_corner() {
        // x1 x2 vanishes at every unit vector
        let p = &x(1) * &x(2);
        let lf = linear_factors(&p).unwrap();
        assert!(lf.splits_into_distinct());
        assert_eq!(lf.linear_degree(), 2);
    }

    #[test]
    fn pure_power() {
        let p = x(0).pow(3).scale(&int(7));
        let lf = linear_factors(&p).unwrap();
        assert_eq!(lf.factors, vec![(x(0), 3)]);
        assert_eq!(lf.unit, int(7));
    }
}
