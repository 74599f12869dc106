use std::fmt::Write as _;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use focal_core::classify::{analyze_focal, classify as run_classify, FocalFacts};
use focal_core::duality::dualize as run_dualize;
use focal_core::examples::{
    cone_model, gen_cone, gen_direct_sum, gen_hypersurface, gen_torse_curve, gen_torsal, gen_valid,
    hypersurface_model, plane_model, symmetroid_patch, torsal_model, torse_system,
};
use focal_core::exactmath::variable_names;
use focal_core::oracle::{
    gauss_rank, singular_locus_on_generator, verify_leaf_linearity, ParametricModel, RankOptions,
    ScanLine, DEFAULT_STEP,
};
use focal_core::system::write_system;
use focal_core::{Error, MatrixSystem};

use crate::document::{pretty, report_document, validation_json};
use crate::failure::{Failure, Outcome};
use crate::output::{emit, load_model, load_system};
use crate::Kind;

/// Largest generator-to-generator tangent angle accepted as linear.
const LEAF_TOLERANCE: f64 = 1e-8;
const LEAF_SAMPLES: usize = 8;

pub fn validate(path: &str, as_json: bool) -> Outcome<ExitCode> {
    let (sys, _) = load_system(path)?;
    let report = sys.validate();
    if as_json {
        emit(None, &pretty(&validation_json(&report)))?;
    } else {
        let mut out = String::new();
        if report.passed() {
            let _ = writeln!(out, "valid: l = {}, r = {}, codim = {}", sys.l(), sys.r(), sys.codim());
        } else {
            let _ = writeln!(out, "invalid: {}", report.summary());
            for v in &report.violations {
                let _ = writeln!(out, "  B^{} C_{} not symmetric at ({}, {})", v.alpha, v.i, v.p, v.q);
            }
        }
        emit(None, &out)?;
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn facts_line(name: &str, poly: String, facts: &FocalFacts) -> String {
    let mut notes = vec![if facts.square_free { "square-free" } else { "multiple components" }];
    if facts.multiple_nonlinear_component {
        notes.push("multiple nonlinear component");
    }
    notes.push(facts.decomposability.as_str());
    format!("{name} = {poly}  ({})", notes.join(", "))
}

fn require_valid(sys: &MatrixSystem) -> Outcome {
    sys.validated().map(|_| ()).map_err(Failure::from)
}

pub fn focal(path: &str, as_json: bool) -> Outcome<ExitCode> {
    let (sys, _) = load_system(path)?;
    require_valid(&sys)?;
    let images = sys.focal_images();
    let f = analyze_focal(&images.f)?;
    let phi = analyze_focal(&images.phi)?;
    let xs = variable_names("x", 0, sys.l() + 1);
    let xis = variable_names("xi", 1, sys.codim());
    let f_text = images.f.display_with(&xs).to_string();
    let phi_text = images.phi.display_with(&xis).to_string();
    let text = if as_json {
        pretty(&json!({
            "F": f_text,
            "Phi": phi_text,
            "F_terms": images.f.to_terms(),
            "Phi_terms": images.phi.to_terms(),
            "F_square_free": f.square_free,
            "Phi_square_free": phi.square_free,
            "F_multiple_nonlinear_component": f.multiple_nonlinear_component,
            "Phi_multiple_nonlinear_component": phi.multiple_nonlinear_component,
        }))
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "{}", facts_line("F", f_text, &f));
        let _ = writeln!(out, "{}", facts_line("Phi", phi_text, &phi));
        if f.square_free && phi.square_free {
            let _ = writeln!(out, "both square-free");
        }
        out
    };
    emit(None, &text)?;
    Ok(ExitCode::SUCCESS)
}

pub fn classify(path: &str, as_json: bool, out: Option<&str>) -> Outcome<ExitCode> {
    let (sys, text) = load_system(path)?;
    require_valid(&sys)?;
    let report = run_classify(&sys)?;
    let rendered = if as_json {
        pretty(&report_document(&text, &sys, &report))
    } else {
        report.render_text()
    };
    emit(out, &rendered)?;
    if report.label.is_none() {
        eprintln!("warning: partial report, status {}", report.status.as_str());
    }
    Ok(ExitCode::SUCCESS)
}

pub fn dualize(path: &str, out: Option<&str>) -> Outcome<ExitCode> {
    let (sys, _) = load_system(path)?;
    emit(out, &write_system(&run_dualize(&sys)))?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub l: Option<usize>,
    pub r: Option<usize>,
    pub codim: Option<usize>,
    pub ambient: Option<usize>,
}

fn generated(kind: Kind, s: Shape, seed: u64) -> Result<(Option<MatrixSystem>, Option<ParametricModel>), Error> {
    let l = |d| s.l.unwrap_or(d);
    let r = |d| s.r.unwrap_or(d);
    let codim = |d| s.codim.unwrap_or(d);
    Ok(match kind {
        Kind::Torsal => {
            let sys = gen_torsal(l(1), r(2), codim(2), seed)?;
            let canonical = (sys.l(), sys.r(), sys.codim(), seed) == (1, 2, 2, 0);
            let model = canonical.then(torsal_model);
            (Some(sys), model)
        }
        Kind::Cone => {
            let sys = gen_cone(l(2), r(2), codim(3), seed)?;
            let model = cone_model(&sys, seed)?;
            (Some(sys), Some(model))
        }
        Kind::Hypersurface => {
            let sys = gen_hypersurface(l(2), r(2), seed)?;
            let model = hypersurface_model(&sys)?;
            (Some(sys), Some(model))
        }
        Kind::Torse => {
            let ambient = s.ambient.unwrap_or(3);
            let (model, sys) = gen_torse_curve(ambient, l(1))?;
            (Some(sys), Some(model))
        }
        Kind::Reducible => {
            let l = l(2);
            let sum = gen_direct_sum(&[torse_system(l, 1)?, gen_hypersurface(l, r(2), seed)?])?;
            (Some(sum), None)
        }
        Kind::Valid => (Some(gen_valid(l(1), r(2), codim(2), seed)?), None),
        Kind::Plane => (None, Some(plane_model(l(1), s.ambient.unwrap_or(3))?)),
        Kind::Symmetroid => (None, Some(symmetroid_patch())),
    })
}

pub fn generate(
    kind: Kind,
    shape: Shape,
    seed: u64,
    out: Option<&str>,
    model_out: Option<&str>,
) -> Outcome<ExitCode> {
    let (sys, model) = generated(kind, shape, seed)?;
    match (sys, model) {
        (Some(sys), model) => {
            emit(out, &write_system(&sys))?;
            if let Some(path) = model_out {
                let model = model.ok_or_else(|| {
                    Failure::Domain(format!("no parametric model for {kind:?} with these parameters"))
                })?;
                emit(Some(path), &model.to_json())?;
            }
        }
        (None, Some(model)) => emit(model_out.or(out), &model.to_json())?,
        (None, None) => unreachable!("every kind yields a system or a model"),
    }
    Ok(ExitCode::SUCCESS)
}

fn fmt_point(v: &[f64]) -> String {
    let cells: Vec<String> = v.iter().map(|x| format!("{:.9}", x + 0.0)).collect();
    format!("({})", cells.join(", "))
}

pub fn oracle_check(path: &str, tol: f64, samples: usize, seed: u64, as_json: bool) -> Outcome<ExitCode> {
    let model = load_model(path)?;
    if !model.is_linear_in_s() {
        return Err(Failure::Domain("model components are not linear in s".into()));
    }
    let opts = RankOptions {
        samples,
        tol,
        step: DEFAULT_STEP,
        seed,
    };
    let rank = gauss_rank(&model, &opts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u: Vec<f64> = (0..model.r()).map(|_| rng.random_range(-1.0..1.0)).collect();
    let deviation = verify_leaf_linearity(&model, &u, LEAF_SAMPLES, seed)?;
    let line = ScanLine::default_for(model.l());
    let singular = if model.l() >= 1 {
        singular_locus_on_generator(&model, &u, &line, 1e-12)?
    } else {
        Vec::new()
    };
    let linear = deviation < LEAF_TOLERANCE;
    let text = if as_json {
        pretty(&json!({
            "N": model.ambient(),
            "l": model.l(),
            "r": model.r(),
            "gauss_rank": rank.rank,
            "gap": if rank.gap.is_finite() { json!(rank.gap) } else { json!(null) },
            "samples": rank.ranks.len(),
            "rejected": rank.rejected,
            "u": u,
            "leaf_deviation": deviation,
            "leaf_linear": linear,
            "singular_points": singular,
        }))
    } else {
        let mut out = String::new();
        let gap = if rank.gap.is_finite() { format!("{:.3e}", rank.gap) } else { "inf".into() };
        let _ = writeln!(
            out,
            "gauss rank {} (gap {gap}, {} samples, {} rejected)",
            rank.rank,
            rank.ranks.len(),
            rank.rejected
        );
        let _ = writeln!(
            out,
            "generator at u = {}: max tangent angle {deviation:.3e} rad ({})",
            fmt_point(&u),
            if linear { "linear" } else { "NOT linear" }
        );
        let _ = writeln!(out, "singular points on the scan line: {}", singular.len());
        for p in &singular {
            let _ = writeln!(out, "  {}", fmt_point(p));
        }
        out
    };
    emit(None, &text)?;
    Ok(if linear { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
