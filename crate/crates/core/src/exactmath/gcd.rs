//! Multivariate gcd over the rationals and square-free decomposition.
//!
//! The gcd recurses on the highest variable present: polynomials are viewed
//! as univariate in that variable with coefficients in the remaining ones,
//! contents are split off recursively and the primitive parts go through a
//! subresultant remainder sequence, which keeps coefficient growth polynomial
//! without leaving the polynomial ring.

use num_traits::Zero;

use super::poly::MPoly;
use super::scalar::Rational;
use crate::error::{Error, Result};

type P = MPoly<Rational>;

/// Greatest common divisor, integer-primitive with positive leading
/// coefficient. `gcd(a, 0)` is the normalized `a`; `gcd(0, 0)` is zero.
pub fn poly_gcd(a: &P, b: &P) -> P {
    assert_eq!(a.nvars(), b.nvars(), "polynomials live in different rings");
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let n = a.nvars();
    let Some(v) = (0..n).rev().find(|&i| a.depends_on(i) || b.depends_on(i)) else {
        return P::one(n);
    };
    let ca = a.coefficients_in(v);
    let cb = b.coefficients_in(v);
    let cont_a = content(&ca);
    let cont_b = content(&cb);
    let cont = poly_gcd(&cont_a, &cont_b);

    let mut pa = divide_all(&ca, &cont_a);
    let mut pb = divide_all(&cb, &cont_b);
    trim(&mut pa);
    trim(&mut pb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = if pb.len() == 1 {
        // one side is free of v after removing its content
        P::one(n)
    } else {
        let last = subresultant_last(pa, pb);
        let c = content(&last);
        P::from_coefficients_in(n, v, &divide_all(&last, &c))
    };
    (&cont * &g).normalized()
}

/// Gcd of a list of coefficient polynomials.
fn content(coeffs: &[P]) -> P {
    let n = coeffs.first().map_or(0, P::nvars);
    let mut g = P::zero(n);
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, c);
        if g.is_constant() {
            return P::one(n);
        }
    }
    g
}

fn divide_all(coeffs: &[P], d: &P) -> Vec<P> {
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(p: &mut Vec<P>) {
    while p.len() > 1 && p.last().is_some_and(P::is_zero) {
        p.pop();
    }
}

fn lc(p: &[P]) -> &P {
    p.last().expect("nonzero polynomial")
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &[P], b: &[P]) -> Vec<P> {
    let db = b.len() - 1;
    let lb = lc(b).clone();
    let mut r = a.to_vec();
    let mut steps = 0;
    let delta = a.len() - b.len() + 1;
    while r.len() > db && !r.iter().all(P::is_zero) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in &mut r {
            *c = &*c * &lb;
        }
        for (j, c) in b.iter().enumerate() {
            let k = dr - db + j;
            r[k] = &r[k] - &(&lr * c);
        }
        r.pop();
        steps += 1;
        while r.len() > 1 && r.last().is_some_and(P::is_zero) {
            r.pop();
        }
    }
    for _ in steps..delta {
        for c in &mut r {
            *c = &*c * &lb;
        }
    }
    if r.iter().all(P::is_zero) {
        r.clear();
    }
    r
}

/// Last nonzero member of the subresultant sequence of `a`, `b` (both
/// primitive, `deg a >= deg b >= 1`). Returns a constant vector of length one
/// when the polynomials are coprime.
fn subresultant_last(mut a: Vec<P>, mut b: Vec<P>) -> Vec<P> {
    let n = a[0].nvars();
    let mut g = P::one(n);
    let mut h = P::one(n);
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![P::one(n)];
        }
        let denom = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| c.div_exact(&denom).expect("subresultant division is exact"))
            .collect();
        g = lc(&a).clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
}

/// Square-free analysis of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFree {
    /// True iff some nonconstant factor occurs with multiplicity above one.
    pub has_multiple_components: bool,
    /// `p` divided by all repeated factors, normalized.
    pub squarefree_part: P,
    /// `gcd(p, dp/dx_0, ..., dp/dx_n)`: the product of the repeated factors,
    /// each to one less than its multiplicity.
    pub repeated: P,
}

/// In characteristic zero a factor `f` of multiplicity `e` divides every
/// partial derivative exactly `e - 1` times, so the gcd of `p` with all its
/// partials collects the repeated part.
pub fn square_free(p: &P) -> Result<SquareFree> {
    if p.is_zero() {
        return Err(Error::Domain("square-free part of the zero polynomial".into()));
    }
    let mut g = p.clone();
    for i in 0..p.nvars() {
        if p.depends_on(i) {
            g = poly_gcd(&g, &p.derivative(i));
        }
    }
    let g = g.normalized();
    let part = p
        .div_exact(&g)
        .expect("gcd divides the polynomial")
        .normalized();
    Ok(SquareFree {
        has_multiple_components: !g.is_constant(),
        squarefree_part: part,
        repeated: g,
    })
}

pub fn has_multiple_components(p: &P) -> Result<bool> {
    Ok(square_free(p)?.has_multiple_components)
}

pub fn squarefree_part(p: &P) -> Result<P> {
    Ok(square_free(p)?.squarefree_part)
}

/// True when `a` and `b` agree up to a nonzero rational factor.
pub fn are_associates(a: &P, b: &P) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.normalized() == b.normalized()
}

/// Exact ratio `a / b` when `a = c * b` for a constant `c`.
pub fn constant_ratio(a: &P, b: &P) -> Option<Rational> {
    if b.is_zero() {
        return None;
    }
    let q = a.div_exact(b)?;
    let c = q.constant_value()?;
    (!c.is_zero() || a.is_zero()).then_some(c)
}
