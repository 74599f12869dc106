//! Dense univariate polynomials, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{denominator_lcm, numerator_gcd, Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `t - a`
    pub fn monic_linear(a: T) -> Self {
        Self::new(vec![-a, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading_coeff();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![T::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = r[k + dd].clone() / lc.clone();
            if f.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - f.clone() * c.clone();
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> UPoly<U> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> UPolyDisplay<'a, T> {
        UPolyDisplay { poly: self, var }
    }
}

impl UPoly<Rational> {
    /// Associate with coprime integer coefficients and positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = denominator_lcm(&self.coeffs);
        let scaled: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| c * Rational::from_integer(lcm.clone()))
            .collect();
        let g = numerator_gcd(&scaled);
        let sign = if self.leading_coeff().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        scaled
            .iter()
            .map(|c| c.numer() / &g * &sign)
            .collect()
    }

    /// All rational roots with multiplicities, and whether they account for
    /// the full degree. Candidates come from the rational-root theorem on the
    /// primitive integer form; divisor enumeration is capped, in which case
    /// the result may be incomplete but never wrong.
    pub fn rational_roots(&self) -> RootSet {
        let Some(deg) = self.degree() else {
            return RootSet {
                roots: Vec::new(),
                complete: false,
            };
        };
        let mut rest = self.clone();
        let mut roots = Vec::new();
        let zero_mult = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
            rest = Self::new(rest.coeffs[zero_mult..].to_vec());
        }
        let ints = rest.primitive_integer();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let num_divs = divisors(&a0);
        let den_divs = divisors(&an);
        let mut candidates: Vec<Rational> = Vec::new();
        for p in &num_divs {
            for q in &den_divs {
                if p.gcd(q).is_one() {
                    let c = Rational::new(p.clone(), q.clone());
                    candidates.push(c.clone());
                    candidates.push(-c);
                }
            }
        }
        candidates.sort();
        for c in candidates {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let lin = Self::monic_linear(c.clone());
            let mut mult = 0;
            loop {
                let (q, r) = rest.div_rem(&lin);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        let found: usize = roots.iter().map(|(_, m)| m).sum();
        RootSet {
            complete: found == deg,
            roots,
        }
    }
}

/// Rational roots of a univariate polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    /// Distinct roots in ascending order with multiplicities.
    pub roots: Vec<(Rational, usize)>,
    /// True when the multiplicities sum to the degree.
    pub complete: bool,
}

impl RootSet {
    pub fn distinct(&self) -> Vec<Rational> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.roots.iter().all(|(_, m)| *m == 1)
    }
}

const DIVISOR_TRIAL_CAP: u64 = 2_000_000;

/// Positive divisors of `n > 0` by trial division. A truncated search can only
/// lose roots, which the multiplicity count then reports as incomplete.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    let mut trials = 0u64;
    while &d * &d <= *n && trials < DIVISOR_TRIAL_CAP {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
        trials += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

impl<T: Scalar> Add for &UPoly<T> {
    type Output = UPoly<T>;
    fn add(self, rhs: Self) -> UPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &UPoly<T> {
    type Output = UPoly<T>;
    fn sub(self, rhs: Self) -> UPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &UPoly<T> {
    type Output = UPoly<T>;
    fn mul(self, rhs: Self) -> UPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(out)
    }
}

impl<T: Scalar> Neg for &UPoly<T> {
    type Output = UPoly<T>;
    fn neg(self) -> UPoly<T> {
        UPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

pub struct UPolyDisplay<'a, T> {
    poly: &'a UPoly<T>,
    var: &'a str,
}

impl<T: Scalar> fmt::Display for UPolyDisplay<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let mag = c.abs_val();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            if power.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}*{power}")?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Display for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_var("t"))
    }
}

impl<T: Scalar> fmt::Debug for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::scalar::{int, rat};

    fn up(c: &[i64]) -> UPoly<Rational> {
        UPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn trims_and_displays() {
        let p = up(&[1, 0, -1, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "-t^2 + 1");
        assert_eq!(up(&[0]).degree(), None);
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = up(&[-1, 0, 1]).div_rem(&up(&[1, 1]));
        assert_eq!(q, up(&[-1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (2t - 1)^2 (t + 3) t
        let p = &(&up(&[-1, 2]) * &up(&[-1, 2])) * &(&up(&[3, 1]) * &up(&[0, 1]));
        let rs = p.rational_roots();
        assert!(rs.complete);
        assert_eq!(
            rs.roots,
            vec![(int(-3), 1), (int(0), 1), (rat(1, 2), 2)]
        );
    }

    #[test]
    fn irrational_roots_are_incomplete() {
        let rs = up(&[1, 0, 1]).rational_roots();
        assert!(rs.roots.is_empty());
        assert!(!rs.complete);
        let rs = (&up(&[-2, 0, 1]) * &up(&[-1, 1])).rational_roots();
        assert_eq!(rs.roots, vec![(int(1), 1)]);
        assert!(!rs.complete);
    }
}
