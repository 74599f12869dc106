//! The classification report and its JSON and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::block::{ConeWitness, HypersurfaceWitness};
use super::diagonalize::{DiagonalStatus, Route};
use super::BlockType;
use crate::error::{Error, Result};
use crate::exactmath::{format_rational, linear_factors, square_free, variable_names};
use crate::system::{Frame, MatrixSystem};
use crate::{MultiPoly, RMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OverallLabel {
    Plane,
    Torse,
    Torsal,
    Cone,
    Hypersurface,
    Reducible,
    OutsideTheory,
    Nondegenerate,
}

impl OverallLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Plane => "Plane",
            Self::Torse => "Torse",
            Self::Torsal => "Torsal",
            Self::Cone => "Cone",
            Self::Hypersurface => "Hypersurface",
            Self::Reducible => "Reducible",
            Self::OutsideTheory => "OutsideTheory",
            Self::Nondegenerate => "Nondegenerate",
        }
    }

    /// Theorem governing the label, if any.
    pub fn theorem(self) -> Option<u32> {
        match self {
            Self::Torsal => Some(2),
            Self::Hypersurface => Some(3),
            Self::Cone => Some(4),
            Self::Reducible => Some(5),
            _ => None,
        }
    }
}

fn block_theorem(t: BlockType) -> Option<u32> {
    match t {
        BlockType::Torse => Some(2),
        BlockType::HypersurfaceType => Some(3),
        BlockType::ConeType => Some(4),
        BlockType::IrreducibleUnclassified => None,
    }
}

/// Three-valued answer to "is this focal polynomial decomposable?".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decomposability {
    VerifiedDecomposable,
    NoRationalLinearFactor,
    Inconclusive,
}

impl Decomposability {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::VerifiedDecomposable => "verified-decomposable",
            Self::NoRationalLinearFactor => "no-rational-linear-factor",
            Self::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FocalFacts {
    pub polynomial: MultiPoly,
    pub square_free: bool,
    pub multiple_nonlinear_component: bool,
    pub linear_factors: Vec<(MultiPoly, u32)>,
    pub decomposability: Decomposability,
}

impl FocalFacts {
    /// A block decomposition into two or more pieces factors the focal
    /// polynomials accordingly.
    pub fn mark_block_decomposable(&mut self) {
        if self.polynomial.total_degree().unwrap_or(0) >= 2 {
            self.decomposability = Decomposability::VerifiedDecomposable;
        }
    }
}

pub fn analyze_focal(p: &MultiPoly) -> Result<FocalFacts> {
    let sf = square_free(p)?;
    let multiple_nonlinear_component = if sf.repeated.is_constant() {
        false
    } else {
        !linear_factors(&sf.repeated)?.rest.is_constant()
    };
    let lf = linear_factors(p)?;
    let decomposability = if lf.has_linear_factor() && p.total_degree().unwrap_or(0) >= 2 {
        Decomposability::VerifiedDecomposable
    } else if lf.exhaustive {
        Decomposability::NoRationalLinearFactor
    } else {
        Decomposability::Inconclusive
    };
    Ok(FocalFacts {
        polynomial: p.clone(),
        square_free: !sf.has_multiple_components,
        multiple_nonlinear_component,
        linear_factors: lf.factors,
        decomposability,
    })
}

/// Proportionality witness of a block, in the block frame and mapped back
/// to the input frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Hypersurface {
        b: Vec<Rational>,
        b_pq: RMatrix,
        b_input: Vec<Rational>,
        /// `b_pq` in the input frame; only when the block is the whole system.
        b_pq_input: Option<RMatrix>,
        hypercone_verified: bool,
    },
    Cone {
        c: Vec<Rational>,
        gamma: RMatrix,
        c_input: Vec<Rational>,
        gamma_input: Option<RMatrix>,
        hypersurface_verified: bool,
    },
}

fn inverse(m: &RMatrix) -> Result<RMatrix> {
    m.inverse()
        .ok_or_else(|| Error::Domain("singular frame factor".into()))
}

impl Witness {
    /// `B'^b = Q^T (sum_a G_ab B^a) R^{-1}` gives `b' = G^T b` and
    /// `b_pq' = Q^T b_pq R^{-1}`.
    pub(super) fn hypersurface(w: HypersurfaceWitness, frame: &Frame, whole: bool) -> Result<Self> {
        let b_input = inverse(&frame.g)?.transpose().mul_vec(&w.b);
        let b_pq_input = if whole {
            Some(&(&inverse(&frame.q)?.transpose() * &w.b_pq) * &frame.r)
        } else {
            None
        };
        Ok(Self::Hypersurface {
            b: w.b,
            b_pq: w.b_pq,
            b_input,
            b_pq_input,
            hypercone_verified: w.hypercone_verified,
        })
    }

    /// `C'_j = R (sum_i A_ij C_i) Q` gives `c' = A^T c` and
    /// `gamma' = R gamma Q`.
    pub(super) fn cone(w: ConeWitness, frame: &Frame, whole: bool) -> Result<Self> {
        let c_input = inverse(&frame.a)?.transpose().mul_vec(&w.c);
        let gamma_input = if whole {
            Some(&(&inverse(&frame.r)? * &w.gamma) * &inverse(&frame.q)?)
        } else {
            None
        };
        Ok(Self::Cone {
            c: w.c,
            gamma: w.gamma,
            c_input,
            gamma_input,
            hypersurface_verified: w.hypersurface_verified,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    /// 0-based indices in the final frame.
    pub indices: Vec<usize>,
    pub block_type: Option<BlockType>,
    pub witness: Option<Witness>,
    /// The block might split over an extension of the rationals.
    pub unresolved: bool,
}

impl BlockReport {
    pub(super) fn new(
        indices: Vec<usize>,
        block_type: Option<BlockType>,
        witness: Option<Witness>,
        unresolved: bool,
    ) -> Self {
        Self {
            indices,
            block_type,
            witness,
            unresolved,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub l: usize,
    pub r: usize,
    pub codim: usize,
    /// `None` when the structure could not be settled over the rationals.
    pub label: Option<OverallLabel>,
    pub status: DiagonalStatus,
    pub route: Option<Route>,
    pub blocks: Vec<BlockReport>,
    pub m: usize,
    pub m_star: usize,
    pub k: i64,
    pub rank_b: Option<usize>,
    pub rank_c: Option<usize>,
    pub eigen_b: Option<RMatrix>,
    pub eigen_c: Option<RMatrix>,
    pub ambient_reduction: Option<usize>,
    pub vertex_dim: Option<i64>,
    pub torsal_remark: bool,
    pub f: FocalFacts,
    pub phi: FocalFacts,
    /// Frame from the input to `system`.
    pub frame: Frame,
    /// The input in its final, block diagonal frame.
    pub system: MatrixSystem,
    pub warnings: Vec<String>,
}

fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_rational(x))).collect())
}

fn matrix(m: &RMatrix) -> Value {
    Value::Array((0..m.nrows()).map(|i| rationals(m.row(i))).collect())
}

fn opt<T>(v: Option<T>, f: impl FnOnce(T) -> Value) -> Value {
    v.map_or(Value::Null, f)
}

fn poly_text(p: &MultiPoly, names: &[String]) -> String {
    p.display_with(names).to_string()
}

impl StructureReport {
    pub fn n(&self) -> usize {
        self.l + self.r
    }

    /// 1-based blocks sorted by smallest index.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.indices.iter().map(|i| i + 1).collect())
            .collect()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.indices.len()).collect()
    }

    pub fn label_str(&self) -> &'static str {
        self.label.map_or("Unresolved", OverallLabel::as_str)
    }

    fn x_names(&self) -> Vec<String> {
        variable_names("x", 0, self.l + 1)
    }

    fn xi_names(&self) -> Vec<String> {
        variable_names("xi", 1, self.codim)
    }

    fn focal_json(facts: &FocalFacts, names: &[String]) -> Value {
        json!({
            "polynomial": poly_text(&facts.polynomial, names),
            "terms": facts.polynomial.to_terms(),
            "square_free": facts.square_free,
            "multiple_nonlinear_component": facts.multiple_nonlinear_component,
            "linear_factors": facts.linear_factors.iter().map(|(p, e)| json!({
                "factor": poly_text(p, names),
                "multiplicity": e,
            })).collect::<Vec<_>>(),
            "decomposability": facts.decomposability.as_str(),
        })
    }

    fn witness_json(w: &Witness) -> Value {
        match w {
            Witness::Hypersurface {
                b,
                b_pq,
                b_input,
                b_pq_input,
                hypercone_verified,
            } => json!({
                "kind": "proportional-B",
                "b": rationals(b),
                "b_pq": matrix(b_pq),
                "b_input": rationals(b_input),
                "b_pq_input": opt(b_pq_input.as_ref(), matrix),
                "hypercone_verified": hypercone_verified,
            }),
            Witness::Cone {
                c,
                gamma,
                c_input,
                gamma_input,
                hypersurface_verified,
            } => json!({
                "kind": "proportional-C",
                "c": rationals(c),
                "gamma": matrix(gamma),
                "c_input": rationals(c_input),
                "gamma_input": opt(gamma_input.as_ref(), matrix),
                "hypersurface_verified": hypersurface_verified,
            }),
        }
    }

    pub fn to_json(&self) -> Value {
        let blocks: Vec<Value> = self
            .blocks
            .iter()
            .map(|b| {
                json!({
                    "indices": b.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "type": b.block_type.map(BlockType::as_str),
                    "theorem": b.block_type.and_then(block_theorem),
                    "unresolved": b.unresolved,
                    "witness": opt(b.witness.as_ref(), Self::witness_json),
                })
            })
            .collect();
        json!({
            "l": self.l,
            "r": self.r,
            "codim": self.codim,
            "n": self.n(),
            "label": self.label.map(OverallLabel::as_str),
            "theorem": self.label.and_then(OverallLabel::theorem),
            "status": self.status.as_str(),
            "route": self.route.map(|r| match r {
                Route::Generator => "generator",
                Route::Normal => "normal",
            }),
            "partition": self.partition(),
            "block_sizes": self.block_sizes(),
            "blocks": blocks,
            "m": self.m,
            "m_star": self.m_star,
            "k": self.k,
            "rank_B": self.rank_b,
            "rank_C": self.rank_c,
            "eigenvalue_matrix_B": opt(self.eigen_b.as_ref(), matrix),
            "eigenvalue_matrix_C": opt(self.eigen_c.as_ref(), matrix),
            "ambient_reduction": self.ambient_reduction,
            "vertex_dim": self.vertex_dim,
            "torsal_remark": self.torsal_remark,
            "focal_hypersurface": Self::focal_json(&self.f, &self.x_names()),
            "focal_hypercone": Self::focal_json(&self.phi, &self.xi_names()),
            "frame": {
                "R": matrix(&self.frame.r),
                "Q": matrix(&self.frame.q),
                "A": matrix(&self.frame.a),
                "G": matrix(&self.frame.g),
            },
            "warnings": self.warnings,
        })
    }

    /// Headline such as `Cone — Theorem 4, vertex dimension 1`.
    pub fn headline(&self) -> String {
        let Some(label) = self.label else {
            return format!("Unresolved: {}, focal-image facts only", self.status);
        };
        let sizes = self.block_sizes();
        match label {
            OverallLabel::Torsal => {
                format!("Torsal — Theorem 2, {} families of torses", self.r)
            }
            OverallLabel::Hypersurface => format!(
                "Hypersurface — Theorem 3, rank {} hypersurface in P^{}",
                self.r,
                self.n() + 1
            ),
            OverallLabel::Cone => {
                let dim = self.vertex_dim.unwrap_or(self.k);
                format!("Cone — Theorem 4, vertex dimension {dim}")
            }
            OverallLabel::Reducible => format!("Reducible — Theorem 5, blocks {sizes:?}"),
            OverallLabel::Torse => "Torse — rank 1".into(),
            OverallLabel::OutsideTheory => {
                if self.f.multiple_nonlinear_component || self.phi.multiple_nonlinear_component {
                    "OutsideTheory — a focal image has a multiple nonlinear component".into()
                } else {
                    "OutsideTheory — irreducible block of unknown type".into()
                }
            }
            OverallLabel::Nondegenerate => "Nondegenerate — point generators (l = 0)".into(),
            OverallLabel::Plane => "Plane — rank 0".into(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let xs = self.x_names();
        let xis = self.xi_names();
        let _ = writeln!(out, "{}", self.headline());
        let _ = writeln!(
            out,
            "l = {}, r = {}, codim = {}, n = {}",
            self.l,
            self.r,
            self.codim,
            self.n()
        );
        let _ = writeln!(out, "status: {}", self.status);
        for (k, b) in self.blocks.iter().enumerate() {
            let idx: Vec<usize> = b.indices.iter().map(|i| i + 1).collect();
            let kind = match (b.block_type, b.unresolved) {
                (_, true) => "unresolved".to_string(),
                (Some(t), _) => match block_theorem(t) {
                    Some(th) => format!("{} (Theorem {th})", t.as_str()),
                    None => t.as_str().to_string(),
                },
                (None, _) => "unknown".to_string(),
            };
            let _ = writeln!(out, "block {} {:?}: {kind}", k + 1, idx);
        }
        let _ = writeln!(out, "F = {}", poly_text(&self.f.polynomial, &xs));
        let _ = writeln!(
            out,
            "  square-free: {}, multiple nonlinear component: {}, {}",
            self.f.square_free,
            self.f.multiple_nonlinear_component,
            self.f.decomposability.as_str()
        );
        let _ = writeln!(out, "Phi = {}", poly_text(&self.phi.polynomial, &xis));
        let _ = writeln!(
            out,
            "  square-free: {}, multiple nonlinear component: {}, {}",
            self.phi.square_free,
            self.phi.multiple_nonlinear_component,
            self.phi.decomposability.as_str()
        );
        let _ = writeln!(out, "m = {}, m* = {}, k = {}", self.m, self.m_star, self.k);
        let show = |v: Option<usize>| v.map_or("n/a".to_string(), |x| x.to_string());
        let _ = writeln!(out, "r_1 = {}, r_2 = {}", show(self.rank_b), show(self.rank_c));
        if let Some(a) = self.ambient_reduction {
            let _ = writeln!(out, "Theorem 11: contained in P^{a}");
        }
        if let Some(v) = self.vertex_dim {
            let _ = writeln!(out, "Theorem 12: cone with {v}-dimensional vertex");
        }
        if self.torsal_remark {
            let _ = writeln!(out, "Remark after Theorem 11: r_1 = r with codim > r, torsal");
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, MPoly};

    #[test]
    fn squared_linear_factor_is_not_outside_theory() {
        let x = MPoly::linear(&[int(1), int(2)]);
        let facts = analyze_focal(&x.pow(2)).unwrap();
        assert!(!facts.square_free);
        assert!(!facts.multiple_nonlinear_component);
        assert_eq!(facts.linear_factors, vec![(x.normalized(), 2)]);
    }

    #[test]
    fn squared_quadric_is_flagged() {
        let v = |i| MPoly::var(3, i);
        let q = &(&v(0) * &v(0)) - &(&(&v(1) * &v(1)) + &(&v(2) * &v(2)));
        let facts = analyze_focal(&(&q * &q)).unwrap();
        assert!(facts.multiple_nonlinear_component);
        assert_eq!(facts.decomposability, Decomposability::NoRationalLinearFactor);
    }
}
