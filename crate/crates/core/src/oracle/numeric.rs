//! Floating-point measurements on parametric models: tangent spans, the
//! rank of the Gauss map, constancy of the tangent span along generators
//! and the points of a generator where the span degenerates.

use nalgebra::{DMatrix, DVector};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::model::ParametricModel;
use crate::error::{Error, Result};
use crate::exactmath::restrict;
use crate::{MultiPoly, Rational};

/// Relative singular value below which a sample counts as singular.
const REGULAR_TOL: f64 = 1e-6;
/// Absolute floor for Plücker derivative singular values.
const NOISE_FLOOR: f64 = 1e-9;
/// Fraction of samples allowed to disagree with the modal rank.
const OUTLIER_FRACTION: f64 = 0.1;
const SCAN_POINTS: usize = 720;

pub const DEFAULT_STEP: f64 = 1e-5;
pub const DEFAULT_TOL: f64 = 1e-6;
pub const MIN_SAMPLES: usize = 20;

/// Thin SVD through faer; the nalgebra bidiagonal iteration returns
/// inaccurate factors on some of the tangent matrices met here.
fn thin_svd(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let k = m.nrows().min(m.ncols());
    if k == 0 {
        return (Vec::new(), DMatrix::zeros(m.nrows(), 0));
    }
    let a = faer::Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)]);
    let svd = a.thin_svd().expect("svd of a finite matrix converges");
    let (s, u) = (svd.S(), svd.U());
    let values = (0..k).map(|j| s[j]).collect();
    (values, DMatrix::from_fn(m.nrows(), k, |i, j| u[(i, j)]))
}

/// Singular values in decreasing order with the matching left singular
/// vectors as columns.
fn sorted_svd(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let (values, u) = thin_svd(m);
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let sorted = order.iter().map(|&k| values[k]).collect();
    (sorted, u.select_columns(&order))
}

fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    let mut v = thin_svd(m).0;
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Exact first derivatives of a model, evaluated in floating point.
struct Jets<'a> {
    model: &'a ParametricModel,
    first: Vec<Vec<MultiPoly>>,
}

impl<'a> Jets<'a> {
    fn new(model: &'a ParametricModel) -> Self {
        Self {
            model,
            first: model.derivatives(),
        }
    }

    /// Columns `x` (optionally), `dx/ds_i` and `dx/du_p`. They are left
    /// unscaled: on a cone the `u` derivatives degenerate only in length.
    fn spanning(&self, u: &[f64], s: &[f64], with_point: bool) -> DMatrix<f64> {
        let m = self.model;
        let point = m.point(u, s);
        let mut cols: Vec<DVector<f64>> = Vec::new();
        if with_point {
            cols.push(DVector::from_vec(m.eval(u, s)));
        }
        for i in 0..=m.l() {
            cols.push(self.column(m.s_var(i), &point));
        }
        for p in 0..m.r() {
            cols.push(self.column(p, &point));
        }
        DMatrix::from_columns(&cols)
    }

    fn column(&self, var: usize, point: &[f64]) -> DVector<f64> {
        DVector::from_iterator(
            self.model.ambient() + 1,
            self.first[var].iter().map(|p| p.eval_f64(point)),
        )
    }
}

/// Orthonormal basis of the affine cone over the tangent space.
#[derive(Clone, Debug)]
pub struct TangentSpace {
    pub basis: DMatrix<f64>,
    pub singular_values: Vec<f64>,
}

impl TangentSpace {
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }
}

fn tangent_from_jets(jets: &Jets, u: &[f64], s: &[f64]) -> Result<TangentSpace> {
    let dim = jets.model.n() + 1;
    let (values, u_mat) = sorted_svd(&jets.spanning(u, s, true));
    if values.len() < dim || values[dim - 1] <= REGULAR_TOL * values[0] {
        return Err(Error::Domain(format!(
            "tangent span degenerates at u = {u:?}, s = {s:?}"
        )));
    }
    Ok(TangentSpace {
        basis: u_mat.columns(0, dim).into_owned(),
        singular_values: values,
    })
}

/// Span of `x`, `dx/ds_i` and `dx/du_p` at a regular point.
pub fn tangent_space(model: &ParametricModel, u: &[f64], s: &[f64]) -> Result<TangentSpace> {
    tangent_from_jets(&Jets::new(model), u, s)
}

/// Largest principal angle between two subspaces given by orthonormal
/// bases of equal dimension.
pub fn max_principal_angle(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    let residual = b - a * (a.transpose() * b);
    let sin = singular_values(&residual).first().copied().unwrap_or(0.0);
    sin.min(1.0).asin()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Unit Plücker vector of the column span of `m`.
fn plucker(m: &DMatrix<f64>, subsets: &[Vec<usize>]) -> DVector<f64> {
    let v = DVector::from_iterator(
        subsets.len(),
        subsets.iter().map(|rows| m.select_rows(rows).determinant()),
    );
    let norm = v.norm();
    if norm > 0.0 {
        v / norm
    } else {
        v
    }
}

fn aligned(v: DVector<f64>, reference: &DVector<f64>) -> DVector<f64> {
    if v.dot(reference) < 0.0 {
        -v
    } else {
        v
    }
}

fn uniform(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
}

#[derive(Clone, Copy, Debug)]
pub struct RankOptions {
    pub samples: usize,
    /// Relative singular value threshold.
    pub tol: f64,
    /// Central difference step.
    pub step: f64,
    pub seed: u64,
}

impl Default for RankOptions {
    fn default() -> Self {
        Self {
            samples: MIN_SAMPLES,
            tol: DEFAULT_TOL,
            step: DEFAULT_STEP,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussRank {
    /// Modal rank over the samples.
    pub rank: usize,
    /// Smallest ratio between the last kept and the first dropped singular
    /// value among samples of modal rank; infinite when nothing is dropped.
    pub gap: f64,
    pub ranks: Vec<usize>,
    /// Samples discarded as singular.
    pub rejected: usize,
}

/// Rank of the derivative of the Plücker image of the tangent span along
/// the `u` directions, by central differences.
pub fn gauss_rank(model: &ParametricModel, opts: &RankOptions) -> Result<GaussRank> {
    if opts.samples < MIN_SAMPLES {
        return Err(Error::Precondition(format!(
            "gauss rank needs at least {MIN_SAMPLES} samples"
        )));
    }
    let jets = Jets::new(model);
    let (r, l) = (model.r(), model.l());
    let subsets = combinations(model.ambient() + 1, model.n() + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut ranks = Vec::new();
    let mut gaps = Vec::new();
    let mut rejected = 0;
    while ranks.len() < opts.samples {
        if rejected > 50 * opts.samples {
            return Err(Error::Domain("too many singular samples".into()));
        }
        let u = uniform(&mut rng, r);
        let s = uniform(&mut rng, l + 1);
        let base = jets.spanning(&u, &s, false);
        let sv = singular_values(&base);
        if sv.last().copied().unwrap_or(0.0) <= REGULAR_TOL * sv[0] {
            rejected += 1;
            continue;
        }
        let center = plucker(&base, &subsets);
        let mut cols = Vec::with_capacity(r);
        for p in 0..r {
            let mut up = u.clone();
            let mut down = u.clone();
            up[p] += opts.step;
            down[p] -= opts.step;
            let plus = aligned(plucker(&jets.spanning(&up, &s, false), &subsets), &center);
            let minus = aligned(plucker(&jets.spanning(&down, &s, false), &subsets), &center);
            cols.push((plus - minus) / (2.0 * opts.step));
        }
        let values = if cols.is_empty() {
            Vec::new()
        } else {
            singular_values(&DMatrix::from_columns(&cols))
        };
        let top = values.first().copied().unwrap_or(0.0);
        let rank = values
            .iter()
            .filter(|&&v| v > opts.tol * top && v > NOISE_FLOOR)
            .count();
        let gap = if rank == 0 || rank == values.len() {
            f64::INFINITY
        } else {
            values[rank - 1] / values[rank].max(f64::MIN_POSITIVE)
        };
        ranks.push(rank);
        gaps.push(gap);
    }
    let mut counts = vec![0usize; r + 1];
    for &k in &ranks {
        counts[k] += 1;
    }
    let (rank, &hits) = counts
        .iter()
        .enumerate()
        .max_by_key(|&(k, c)| (*c, std::cmp::Reverse(k)))
        .expect("at least one rank value");
    let allowed = (OUTLIER_FRACTION * ranks.len() as f64).floor() as usize;
    if ranks.len() - hits > allowed {
        return Err(Error::AmbiguousRank(format!(
            "rank histogram {counts:?} over {} samples",
            ranks.len()
        )));
    }
    let gap = ranks
        .iter()
        .zip(&gaps)
        .filter(|(k, _)| **k == rank)
        .map(|(_, g)| *g)
        .fold(f64::INFINITY, f64::min);
    Ok(GaussRank {
        rank,
        gap,
        ranks,
        rejected,
    })
}

/// Largest principal angle (radians) between the tangent span at a first
/// regular point of the generator through `u` and those at further random
/// points of the same generator.
pub fn verify_leaf_linearity(
    model: &ParametricModel,
    u: &[f64],
    n_samples: usize,
    seed: u64,
) -> Result<f64> {
    let jets = Jets::new(model);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spans: Vec<TangentSpace> = Vec::new();
    let mut attempts = 0;
    while spans.len() < n_samples.max(2) {
        attempts += 1;
        if attempts > 50 * n_samples.max(2) {
            return Err(Error::Domain("generator has too few regular points".into()));
        }
        let s = uniform(&mut rng, model.l() + 1);
        if let Ok(t) = tangent_from_jets(&jets, u, &s) {
            spans.push(t);
        }
    }
    Ok(spans[1..]
        .iter()
        .map(|t| max_principal_angle(&spans[0].basis, &t.basis))
        .fold(0.0, f64::max))
}

/// Projective line `cos(t) p + sin(t) q`, `t` in `[0, pi)`, inside a
/// generator.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanLine {
    pub p: Vec<Rational>,
    pub q: Vec<Rational>,
}

impl ScanLine {
    /// `p_i = 1/(i+1)`, `q_i = (-1)^i (i+1)`: a fixed line in general
    /// position for the generators used here.
    pub fn default_for(l: usize) -> Self {
        let p = (0..=l as i64).map(|i| Rational::new(1.into(), (i + 1).into())).collect();
        let q = (0..=l as i64)
            .map(|i| Rational::from_integer(if i % 2 == 0 { i + 1 } else { -(i + 1) }.into()))
            .collect();
        Self { p, q }
    }

    fn at(&self, t: f64) -> Vec<f64> {
        let (c, s) = (t.cos(), t.sin());
        self.p
            .iter()
            .zip(&self.q)
            .map(|(a, b)| c * a.to_f64().unwrap_or(0.0) + s * b.to_f64().unwrap_or(0.0))
            .collect()
    }
}

/// Unit vector with its largest-magnitude entry positive.
pub fn projective_normalize(v: &[f64]) -> Vec<f64> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return v.to_vec();
    }
    let lead = v
        .iter()
        .copied()
        .max_by(|a, b| a.abs().total_cmp(&b.abs()))
        .unwrap_or(1.0);
    let sign = if lead < 0.0 { -1.0 } else { 1.0 };
    v.iter().map(|x| sign * x / norm).collect()
}

/// Distance between two points of projective space represented by vectors.
pub fn projective_distance(a: &[f64], b: &[f64]) -> f64 {
    let (a, b) = (projective_normalize(a), projective_normalize(b));
    let plus: f64 = a.iter().zip(&b).map(|(x, y)| (x - y).powi(2)).sum::<f64>();
    let minus: f64 = a.iter().zip(&b).map(|(x, y)| (x + y).powi(2)).sum::<f64>();
    plus.min(minus).sqrt()
}

/// Generator points on the scan line where the tangent span loses rank,
/// located by minimizing the relative smallest singular value of the
/// spanning matrix and refined by golden-section search to `tol` in the
/// line parameter.
pub fn singular_locus_on_generator(
    model: &ParametricModel,
    u: &[f64],
    line: &ScanLine,
    tol: f64,
) -> Result<Vec<Vec<f64>>> {
    if line.p.len() != model.l() + 1 || line.q.len() != model.l() + 1 {
        return Err(Error::Dimension("scan line does not fit the generator".into()));
    }
    let jets = Jets::new(model);
    let g = |t: f64| {
        let sv = singular_values(&jets.spanning(u, &line.at(t), false));
        let top = sv[0];
        if top == 0.0 {
            0.0
        } else {
            sv[sv.len() - 1] / top
        }
    };
    let h = std::f64::consts::PI / SCAN_POINTS as f64;
    let grid: Vec<f64> = (0..SCAN_POINTS).map(|k| g(k as f64 * h)).collect();
    let mut found: Vec<f64> = Vec::new();
    for k in 0..SCAN_POINTS {
        let prev = grid[(k + SCAN_POINTS - 1) % SCAN_POINTS];
        let next = grid[(k + 1) % SCAN_POINTS];
        if grid[k] > prev || grid[k] > next || grid[k] > 0.05 {
            continue;
        }
        let (mut a, mut b) = ((k as f64 - 1.0) * h, (k as f64 + 1.0) * h);
        let ratio = (5f64.sqrt() - 1.0) / 2.0;
        let mut c = b - ratio * (b - a);
        let mut d = a + ratio * (b - a);
        let (mut gc, mut gd) = (g(c), g(d));
        while b - a > tol {
            if gc < gd {
                b = d;
                d = c;
                gd = gc;
                c = b - ratio * (b - a);
                gc = g(c);
            } else {
                a = c;
                c = d;
                gc = gd;
                d = a + ratio * (b - a);
                gd = g(d);
            }
        }
        let t = (a + b) / 2.0;
        if g(t) < REGULAR_TOL {
            let t = t.rem_euclid(std::f64::consts::PI);
            let period = std::f64::consts::PI;
            let close = |x: &f64| {
                let d = (x - t).abs();
                d.min(period - d) < 1e-6
            };
            if !found.iter().any(close) {
                found.push(t);
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|t| projective_normalize(&line.at(t)))
        .collect())
}

/// Exact zeros of a focal polynomial on the scan line, as normalized
/// floating-point vectors. Only rational parameters are found; the flag
/// reports whether the list is complete.
pub fn exact_focal_points(f: &MultiPoly, line: &ScanLine) -> Result<(Vec<Vec<f64>>, bool)> {
    let restricted = restrict(f, &line.p, &line.q)?;
    if restricted.is_zero() {
        return Err(Error::Domain("scan line lies in the focal locus".into()));
    }
    let roots = restricted.rational_roots();
    let to_f64 = |v: &[Rational]| -> Vec<f64> {
        v.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    };
    let mut points: Vec<Vec<f64>> = roots
        .distinct()
        .iter()
        .map(|t| {
            let s: Vec<Rational> = line.p.iter().zip(&line.q).map(|(a, b)| a + t * b).collect();
            projective_normalize(&to_f64(&s))
        })
        .collect();
    let full = f.total_degree().unwrap_or(0) as usize;
    let at_infinity = restricted.degree().unwrap_or(0) < full && !f.is_zero();
    if at_infinity {
        points.push(projective_normalize(&to_f64(&line.q)));
    }
    Ok((points, roots.complete))
}

/// Largest distance from an exact point to its nearest numeric point;
/// infinite when the counts differ.
pub fn match_points(numeric: &[Vec<f64>], exact: &[Vec<f64>]) -> f64 {
    if numeric.len() != exact.len() {
        return f64::INFINITY;
    }
    exact
        .iter()
        .map(|e| {
            numeric
                .iter()
                .map(|n| projective_distance(n, e))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn var(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    /// The line `x = (s0, s1, 0, 0)` in `P^3`.
    fn plane() -> ParametricModel {
        ParametricModel::new(3, 1, 0, vec![var(2, 0), var(2, 1), MultiPoly::zero(2), MultiPoly::zero(2)])
            .unwrap()
    }

    /// Tangent developable of the twisted cubic, `x = s0 g(t) + s1 g'(t)`.
    fn developable() -> ParametricModel {
        let (t, s0, s1) = (var(3, 0), var(3, 1), var(3, 2));
        let t2 = &t * &t;
        let t3 = &t2 * &t;
        let comps = vec![
            s0.clone(),
            &(&s0 * &t) + &s1,
            &(&s0 * &t2) + &(&s1 * &t).scale(&int(2)),
            &(&s0 * &t3) + &(&s1 * &t2).scale(&int(3)),
        ];
        ParametricModel::new(3, 1, 1, comps).unwrap()
    }

    #[test]
    fn combinations_enumerate_subsets() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn plane_has_rank_zero_and_constant_span() {
        let m = plane();
        let t = tangent_space(&m, &[], &[0.3, 0.7]).unwrap();
        assert_eq!(t.dim(), 2);
        assert_eq!(gauss_rank(&m, &RankOptions::default()).unwrap().rank, 0);
        assert!(verify_leaf_linearity(&m, &[], 5, 1).unwrap() < 1e-12);
    }

    #[test]
    fn developable_has_rank_one() {
        let m = developable();
        let t = tangent_space(&m, &[0.3], &[0.7, 0.2]).unwrap();
        assert_eq!(t.dim(), 3);
        let g = gauss_rank(&m, &RankOptions::default()).unwrap();
        assert_eq!(g.rank, 1);
        assert!(g.gap > 1e6);
        assert!(verify_leaf_linearity(&m, &[0.4], 6, 2).unwrap() < 1e-8);
        assert!(verify_leaf_linearity(&m.corrupted(), &[0.4], 6, 2).unwrap() > 1e-3);
    }

    #[test]
    fn developable_degenerates_at_the_curve_point() {
        let m = developable();
        let line = ScanLine::default_for(1);
        let pts = singular_locus_on_generator(&m, &[0.25], &line, 1e-12).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(projective_distance(&pts[0], &[1.0, 0.0]) < 1e-6);
        let f = var(2, 1);
        let (exact, complete) = exact_focal_points(&f, &line).unwrap();
        assert!(complete);
        assert!(match_points(&pts, &exact) < 1e-6);
    }

    #[test]
    fn too_few_samples_is_a_precondition_error() {
        let opts = RankOptions {
            samples: 5,
            ..RankOptions::default()
        };
        assert!(matches!(gauss_rank(&plane(), &opts), Err(Error::Precondition(_))));
    }

    #[test]
    fn principal_angle_of_orthogonal_lines() {
        let a = DMatrix::from_column_slice(2, 1, &[1.0, 0.0]);
        let b = DMatrix::from_column_slice(2, 1, &[0.0, 1.0]);
        assert!((max_principal_angle(&a, &b) - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }
}
