//! Sparse multivariate polynomials in graded-lexicographic order.
//!
//! Variables are indexed `0..nvars`; variable 0 is the largest in the term
//! order. Terms are kept in a `BTreeMap` keyed by [`Monomial`], so iteration
//! is ascending and the leading term is the last entry.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::scalar::{
    denominator_lcm, format_rational, numerator_gcd, parse_rational, ExactScalar, Rational,
    Scalar,
};
use crate::error::{Error, Result};

/// Exponent vector. Ordered by total degree, then lexicographically with
/// variable 0 most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> MPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, T::one())
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(e), T::one());
        p
    }

    /// Linear form `sum_i coeffs[i] * x_i`.
    pub fn linear(coeffs: &[T]) -> Self {
        let n = coeffs.len();
        coeffs
            .iter()
            .enumerate()
            .fold(Self::zero(n), |acc, (i, c)| acc + Self::var(n, i).scale(c))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} in a {nvars}-variable polynomial",
                    e.len()
                )));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> T {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<T> {
        if self.is_constant() {
            Some(self.coefficient(&vec![0; self.nvars]))
        } else {
            None
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.degree_in(var) > 0
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &T)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> T {
        self.leading_term().map_or_else(T::zero, |(_, c)| c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        self.terms.iter().fold(T::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc + t
        })
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            out.add_term(m2, c.clone() * T::from_int(i64::from(e)));
        }
        out
    }

    pub fn map_coeffs<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> MPoly<U> {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Coefficients with respect to `var`, indexed by power; the results do
    /// not involve `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.nvars); d + 1];
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = std::mem::replace(&mut m2.0[var], 0) as usize;
            out[e].add_term(m2, c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(nvars: usize, var: usize, coeffs: &[Self]) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut m2 = m.clone();
                m2.0[var] += k as u32;
                out.add_term(m2, v.clone());
            }
        }
        out
    }

    /// Linear substitution `p(A y)`: every `x_i` becomes `sum_j A[i][j] y_j`.
    /// `A` has `nvars` rows; the result has `A.ncols()` variables.
    pub fn substitute_linear(&self, a: &Matrix<T>) -> Result<Self> {
        if a.nrows() != self.nvars {
            return Err(Error::Dimension(format!(
                "substitution matrix has {} rows for {} variables",
                a.nrows(),
                self.nvars
            )));
        }
        let m = a.ncols();
        let images: Vec<Self> = (0..self.nvars).map(|i| MPoly::linear(a.row(i))).collect();
        let mut out = Self::zero(m);
        for (mono, c) in &self.terms {
            let mut t = Self::constant(m, c.clone());
            for (img, &e) in images.iter().zip(&mono.0) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = out + t;
        }
        Ok(out)
    }

    /// Same polynomial viewed in a larger ring; variable `i` maps to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    fn check_nvars(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "polynomials live in different rings");
    }

    /// Renders with explicit variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a, T> {
        PolyDisplay { poly: self, names }
    }
}

impl<T: ExactScalar> MPoly<T> {
    /// Division with remainder by the graded-lex leading term of `d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_nvars(d);
        let Some((dm, dc)) = d.leading_term() else {
            return Err(Error::Domain("division by the zero polynomial".into()));
        };
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut q = Self::zero(self.nvars);
        let mut r = Self::zero(self.nvars);
        let mut p = self.clone();
        while let Some((pm, pc)) = p.leading_term() {
            let (pm, pc) = (pm.clone(), pc.clone());
            if dm.divides(&pm) {
                let f = pc / dc.clone();
                let m = pm.div(&dm);
                let mut t = Self::zero(self.nvars);
                t.add_term(m, f);
                p = p - &t * d;
                q = q + t;
            } else {
                p.terms.remove(&pm);
                r.add_term(pm, pc);
            }
        }
        Ok((q, r))
    }

    /// `Some(self / d)` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }
}

impl MPoly<Rational> {
    /// Integer-primitive associate with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = Rational::from_integer(denominator_lcm(self.terms.values()));
        let scaled = self.scale(&lcm);
        let g = Rational::from_integer(numerator_gcd(scaled.terms.values()));
        let mut out = scaled.scale(&(Rational::one() / g));
        if out.leading_coeff() < Rational::zero() {
            out = -out;
        }
        out
    }

    /// Serializable term list in descending graded-lex order.
    pub fn to_terms(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermRepr {
                exponents: m.0.clone(),
                coefficient: format_rational(c),
            })
            .collect()
    }

    pub fn from_term_reprs(nvars: usize, terms: &[TermRepr]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| Ok((t.exponents.clone(), parse_rational(&t.coefficient)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(nvars, parsed)
    }

    /// Evaluates at a floating-point point.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.map_coeffs(Scalar::to_f64_lossy).eval(point)
    }
}

/// One term of a serialized polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

impl<T: Scalar> Add for MPoly<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.check_nvars(&rhs);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<T: Scalar> Add for &MPoly<T> {
    type Output = MPoly<T>;
    fn add(self, rhs: Self) -> MPoly<T> {
        self.clone() + rhs.clone()
    }
}

impl<T: Scalar> Neg for MPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<T: Scalar> Sub for MPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Sub for &MPoly<T> {
    type Output = MPoly<T>;
    fn sub(self, rhs: Self) -> MPoly<T> {
        self.clone() - rhs.clone()
    }
}

impl<T: Scalar> Mul for &MPoly<T> {
    type Output = MPoly<T>;
    fn mul(self, rhs: Self) -> MPoly<T> {
        self.check_nvars(rhs);
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Mul for MPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

pub struct PolyDisplay<'a, T> {
    poly: &'a MPoly<T>,
    names: &'a [String],
}

impl<T: Scalar> fmt::Display for PolyDisplay<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let negative = *c < T::zero();
            let mag = c.abs_val();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.names[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Display for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = variable_names("x", 0, self.nvars);
        write!(f, "{}", self.display_with(&names))
    }
}

impl<T: Scalar> fmt::Debug for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `prefix{start}, prefix{start+1}, ...`
pub fn variable_names(prefix: &str, start: usize, n: usize) -> Vec<String> {
    (start..start + n).map(|i| format!("{prefix}{i}")).collect()
}
