//! Parametric models with linear plane generators, matched to the matrix
//! generators where a match exists.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generators::torse_system;
use crate::classify::block::proportional_family;
use crate::error::{Error, Result};
use crate::exactmath::int;
use crate::oracle::ParametricModel;
use crate::system::MatrixSystem;
use crate::{MultiPoly, RMatrix};

/// Variables `u_1..u_r, s_0..s_l` as polynomials.
struct Vars {
    nvars: usize,
    u: Vec<MultiPoly>,
    s: Vec<MultiPoly>,
}

impl Vars {
    fn new(r: usize, l: usize) -> Self {
        let nvars = r + l + 1;
        Self {
            nvars,
            u: (0..r).map(|p| MultiPoly::var(nvars, p)).collect(),
            s: (0..=l).map(|k| MultiPoly::var(nvars, r + k)).collect(),
        }
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.nvars)
    }

    fn constant(&self, c: i64) -> MultiPoly {
        MultiPoly::constant(self.nvars, int(c))
    }

    /// `u^T m u`.
    fn quadratic(&self, m: &RMatrix) -> MultiPoly {
        let mut out = self.zero();
        for p in 0..self.u.len() {
            for q in 0..self.u.len() {
                out = &out + &(&self.u[p] * &self.u[q]).scale(m.get(p, q));
            }
        }
        out
    }

    /// `sum_k w_k s_k`.
    fn s_form(&self, w: &[crate::Rational]) -> MultiPoly {
        self.s
            .iter()
            .zip(w)
            .fold(self.zero(), |acc, (s, c)| &acc + &s.scale(c))
    }
}

/// The plane `x = (s_0, .., s_l, 0, .., 0)` in `P^N`.
pub fn plane_model(l: usize, ambient: usize) -> Result<ParametricModel> {
    let v = Vars::new(0, l);
    let comps = (0..=ambient)
        .map(|k| v.s.get(k).cloned().unwrap_or_else(|| v.zero()))
        .collect();
    ParametricModel::new(ambient, l, 0, comps)
}

/// Osculating `l`-planes of the rational normal curve in `P^N`:
/// `x(t, s) = sum_i s_i g^(i)(t)` with `g(t) = (1, t, .., t^N)`, together with
/// the rank-one matrix data whose focal hyperplane is `x_l = 0`.
pub fn gen_torse_curve(ambient: usize, l: usize) -> Result<(ParametricModel, MatrixSystem)> {
    if l < 1 || l + 2 > ambient {
        return Err(Error::Domain(format!(
            "osculating planes need 1 <= l <= N - 2 (got N = {ambient}, l = {l})"
        )));
    }
    let v = Vars::new(1, l);
    let t = &v.u[0];
    let comps = (0..=ambient)
        .map(|k| {
            let mut out = v.zero();
            for i in 0..=l.min(k) {
                // d^i/dt^i t^k = k!/(k-i)! t^(k-i)
                let falling: i64 = ((k - i + 1)..=k).map(|j| j as i64).product();
                let term = &t.pow((k - i) as u32) * &v.s[i];
                out = &out + &term.scale(&int(falling));
            }
            out
        })
        .collect();
    let model = ParametricModel::new(ambient, l, 1, comps)?;
    Ok((model, torse_system(l, ambient - l - 1)?))
}

/// Cone over a quadratic graph `y(u) = (1, u, |u|^2, g_2(u), ..)` with the
/// vertex spanned by the first `l` coordinate points. The generator through
/// `u` is `(c . s) y(u) + sum_{k != j} s_k e_k`, so its singular points are
/// the vertex hyperplane `c . s = 0` of the matched system.
pub fn cone_model(sys: &MatrixSystem, seed: u64) -> Result<ParametricModel> {
    let (c, _) = proportional_family(sys.c())
        .ok_or_else(|| Error::Precondition("cone model needs a proportional C family".into()))?;
    let (l, r, codim) = (sys.l(), sys.r(), sys.codim());
    let j0 = c
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Domain("all generator scalars vanish".into()))?;
    let v = Vars::new(r, l);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graph = vec![v.constant(1)];
    graph.extend(v.u.iter().cloned());
    graph.push(v.quadratic(&RMatrix::identity(r)));
    for _ in 1..codim {
        let m = RMatrix::from_fn(r, r, |_, _| int(rng.random_range(-2..=2)));
        graph.push(v.quadratic(&m));
    }
    let weight = v.s_form(&c);
    let mut comps: Vec<MultiPoly> = (0..=l).filter(|&k| k != j0).map(|k| v.s[k].clone()).collect();
    comps.extend(graph.iter().map(|g| &weight * g));
    ParametricModel::new(l + r + codim, l, r, comps)
}

/// Envelope of the hyperplanes `xi(u) = (1, u, q_0(u), .., q_l(u))` with
/// `q_k = u^T C_k u`. On the generator through `u` the coordinates of the
/// last block are `s`, and the tangent span drops rank exactly where
/// `det(sum s_k C_k) = 0`.
pub fn hypersurface_model(sys: &MatrixSystem) -> Result<ParametricModel> {
    if sys.codim() != 1 || sys.c().iter().any(|m| !m.is_symmetric()) {
        return Err(Error::Precondition(
            "hypersurface model needs codim 1 and a symmetric C family".into(),
        ));
    }
    let (l, r) = (sys.l(), sys.r());
    let v = Vars::new(r, l);
    let q: Vec<MultiPoly> = sys.c().iter().map(|m| v.quadratic(m)).collect();
    let mut comps = vec![v.s.iter().zip(&q).fold(v.zero(), |acc, (s, qk)| &acc + &(s * qk))];
    for p in 0..r {
        let slope = v
            .s
            .iter()
            .zip(&q)
            .fold(v.zero(), |acc, (s, qk)| &acc + &(s * &qk.derivative(p)));
        comps.push(-slope);
    }
    comps.extend(v.s.iter().cloned());
    ParametricModel::new(l + r + 1, l, r, comps)
}

/// Join of two conics in complementary planes of `P^5`,
/// `x = (s_0 + s_1) g_2(u_2) - (s_0 + 2 s_1) g_1(u_1)`, matched to the
/// seed-0 torsal system with `F = (x0 + x1)(x0 + 2 x1)`.
pub fn torsal_model() -> ParametricModel {
    let v = Vars::new(2, 1);
    let a = -(&v.s[0] + &v.s[1].scale(&int(2)));
    let b = &v.s[0] + &v.s[1];
    let conic = |t: &MultiPoly, w: &MultiPoly| vec![w.clone(), t * w, &(t * t) * w];
    let mut comps = conic(&v.u[0], &a);
    comps.extend(conic(&v.u[1], &b));
    ParametricModel::new(5, 1, 2, comps).expect("fixed shape")
}

/// Rank-two symmetric matrices with kernel containing `(1, u_1, u_2)`:
/// `A = s_0 w_1 w_1^T + s_1 (w_1 w_2^T + w_2 w_1^T) + s_2 w_2 w_2^T` with
/// `w_1 = (-u_1, 1, 0)` and `w_2 = (-u_2, 0, 1)`, written in the coordinates
/// `(a00, a01, a02, a11, a12, a22)` of `P^5`.
pub fn symmetroid_patch() -> ParametricModel {
    let v = Vars::new(2, 2);
    let w1 = [-v.u[0].clone(), v.constant(1), v.zero()];
    let w2 = [-v.u[1].clone(), v.zero(), v.constant(1)];
    let entry = |i: usize, j: usize| {
        let a = &(&w1[i] * &w1[j]) * &v.s[0];
        let b = &(&(&w1[i] * &w2[j]) + &(&w2[i] * &w1[j])) * &v.s[1];
        let c = &(&w2[i] * &w2[j]) * &v.s[2];
        &(&a + &b) + &c
    };
    let comps = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
        .iter()
        .map(|&(i, j)| entry(i, j))
        .collect();
    ParametricModel::new(5, 2, 2, comps).expect("fixed shape")
}
