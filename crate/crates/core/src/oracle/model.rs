//! Polynomial parametrizations with linear plane generators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::TermRepr;
use crate::MultiPoly;

/// `x(u, s)` in `P^N` with variables `u_1..u_r` (indices `0..r`) followed by
/// `s_0..s_l` (indices `r..r+l+1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricModel {
    ambient: usize,
    l: usize,
    r: usize,
    components: Vec<MultiPoly>,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    #[serde(rename = "N")]
    ambient: usize,
    l: usize,
    r: usize,
    components: Vec<Vec<TermRepr>>,
}

impl ParametricModel {
    pub fn new(ambient: usize, l: usize, r: usize, components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() != ambient + 1 {
            return Err(Error::Dimension(format!(
                "{} components for P^{ambient}",
                components.len()
            )));
        }
        if let Some(p) = components.iter().find(|p| p.nvars() != r + l + 1) {
            return Err(Error::Dimension(format!(
                "component in {} variables, expected {}",
                p.nvars(),
                r + l + 1
            )));
        }
        if l + r > ambient {
            return Err(Error::Dimension(format!(
                "dimension {} exceeds P^{ambient}",
                l + r
            )));
        }
        Ok(Self {
            ambient,
            l,
            r,
            components,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.l + self.r
    }

    pub fn nvars(&self) -> usize {
        self.r + self.l + 1
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// Index of `s_i` among the variables.
    pub fn s_var(&self, i: usize) -> usize {
        self.r + i
    }

    /// True when every term has total degree at most one in the `s`
    /// variables, so that each generator is a linear subspace.
    pub fn is_linear_in_s(&self) -> bool {
        self.components.iter().all(|p| {
            p.terms().all(|(m, _)| {
                m.exponents()[self.r..].iter().sum::<u32>() <= 1
            })
        })
    }

    pub fn eval(&self, u: &[f64], s: &[f64]) -> Vec<f64> {
        let point = self.point(u, s);
        self.components.iter().map(|p| p.eval_f64(&point)).collect()
    }

    pub(crate) fn point(&self, u: &[f64], s: &[f64]) -> Vec<f64> {
        u.iter().chain(s).copied().collect()
    }

    /// Componentwise partial derivatives in every variable, `[var][coord]`.
    pub fn derivatives(&self) -> Vec<Vec<MultiPoly>> {
        (0..self.nvars())
            .map(|v| self.components.iter().map(|p| p.derivative(v)).collect())
            .collect()
    }

    /// Adds a multiple of `s_0^2` to the last component, breaking linearity
    /// of the generators.
    pub fn corrupted(&self) -> Self {
        let mut out = self.clone();
        let mut exps = vec![0u32; self.nvars()];
        exps[self.r] = 2;
        let bump = MultiPoly::from_terms(self.nvars(), [(exps, crate::exactmath::int(1))])
            .expect("valid exponent vector");
        let last = out.components.len() - 1;
        out.components[last] = &out.components[last] + &bump;
        out
    }

    pub fn to_json(&self) -> String {
        let file = ModelFile {
            ambient: self.ambient,
            l: self.l,
            r: self.r,
            components: self.components.iter().map(MultiPoly::to_terms).collect(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("model serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text)?;
        let nvars = file.r + file.l + 1;
        let components = file
            .components
            .iter()
            .map(|t| MultiPoly::from_term_reprs(nvars, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.ambient, file.l, file.r, components)
    }
}
