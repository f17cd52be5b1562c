//! Machine-readable analysis reports. Polynomial coefficients are rendered
//! exactly (finite decimals where possible, `p/q` otherwise), so loading a
//! report reproduces the coefficients bit for bit.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use delaystab::polycore::{format_rat, parse_rat, rat_to_f64, BiPoly, Rat, UniPoly, Var};
use delaystab::stability::StabilityVerdict;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PolyJson {
    pub variable: String,
    /// Ascending coefficients, exact.
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BiPolyJson {
    /// grid[i][j] is the exact coefficient of z^i y^j.
    pub grid: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionIJson {
    pub passed: bool,
    pub f: PolyJson,
    pub g: PolyJson,
    pub resultant: Option<String>,
    pub pole_ok: bool,
    pub common_real_roots: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionIIJson {
    pub passed: bool,
    pub char_poly: PolyJson,
    pub hurwitz_minors: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub z: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConditionIIIJson {
    pub passed: bool,
    #[serde(rename = "F")]
    pub f: BiPolyJson,
    #[serde(rename = "G")]
    pub g: BiPolyJson,
    pub res_y: PolyJson,
    pub res_z: PolyJson,
    pub witnesses: Vec<WitnessJson>,
    pub common_component: bool,
    pub pole_witness: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub delay_independent_stable: bool,
    pub bound_applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delay_bound: Option<f64>,
    pub condition_i: ConditionIJson,
    pub condition_ii: ConditionIIJson,
    pub condition_iii: ConditionIIIJson,
}

pub fn poly_to_json(p: &UniPoly) -> PolyJson {
    PolyJson {
        variable: p.var().to_string(),
        coefficients: p.coeffs().iter().map(format_rat).collect(),
    }
}

pub fn poly_from_json(j: &PolyJson) -> Result<UniPoly> {
    let var = match j.variable.as_str() {
        "z" => Var::Z,
        "y" => Var::Y,
        "lambda" => Var::Lambda,
        other => bail!("unknown variable tag '{other}'"),
    };
    let coeffs: std::result::Result<Vec<Rat>, _> =
        j.coefficients.iter().map(|s| parse_rat(s)).collect();
    Ok(UniPoly::new(var, coeffs.context("polynomial coefficient")?))
}

pub fn bipoly_to_json(p: &BiPoly) -> BiPolyJson {
    let grid = (0..=p.deg_z())
        .map(|i| (0..=p.deg_y()).map(|j| format_rat(&p.coeff(i, j))).collect())
        .collect();
    BiPolyJson { grid }
}

pub fn bipoly_from_json(j: &BiPolyJson) -> Result<BiPoly> {
    let grid: std::result::Result<Vec<Vec<Rat>>, _> = j
        .grid
        .iter()
        .map(|row| row.iter().map(|s| parse_rat(s)).collect())
        .collect();
    Ok(BiPoly::new(grid.context("bivariate coefficient")?))
}

pub fn build_report(label: Option<String>, v: &StabilityVerdict) -> ReportFile {
    ReportFile {
        label,
        delay_independent_stable: v.delay_independent_stable,
        bound_applicable: v.bound_applicable,
        delay_bound: v.delay_bound,
        condition_i: ConditionIJson {
            passed: v.condition_i.passed,
            f: poly_to_json(&v.condition_i.f),
            g: poly_to_json(&v.condition_i.g),
            resultant: v.condition_i.resultant.as_ref().map(format_rat),
            pole_ok: v.condition_i.pole_ok,
            common_real_roots: v.condition_i.common_real_roots.clone(),
        },
        condition_ii: ConditionIIJson {
            passed: v.condition_ii.passed,
            char_poly: poly_to_json(&v.condition_ii.char_poly),
            hurwitz_minors: v.condition_ii.hurwitz_minors.iter().map(format_rat).collect(),
        },
        condition_iii: ConditionIIIJson {
            passed: v.condition_iii.passed,
            f: bipoly_to_json(&v.condition_iii.f),
            g: bipoly_to_json(&v.condition_iii.g),
            res_y: poly_to_json(&v.condition_iii.res_y),
            res_z: poly_to_json(&v.condition_iii.res_z),
            witnesses: v
                .condition_iii
                .witnesses
                .iter()
                .map(|w| WitnessJson { z: w.z, y: w.y })
                .collect(),
            common_component: v.condition_iii.common_component,
            pole_witness: v.condition_iii.pole_witness,
        },
    }
}

pub fn load_report(path: &std::path::Path) -> Result<ReportFile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    Ok(serde_json::from_str(&text)?)
}

fn fmt_poly_line(p: &UniPoly) -> String {
    format!("{p}")
}

/// Human-readable rendering of a verdict.
pub fn render_text(label: Option<&str>, v: &StabilityVerdict) -> String {
    let mut out = String::new();
    use std::fmt::Write;
    if let Some(l) = label {
        let _ = writeln!(out, "system: {l}");
    }
    let c1 = &v.condition_i;
    let _ = writeln!(out, "condition (i): {}", pass(c1.passed));
    let _ = writeln!(out, "  f(z) = {}", fmt_poly_line(&c1.f));
    let _ = writeln!(out, "  g(z) = {}", fmt_poly_line(&c1.g));
    if let Some(r) = &c1.resultant {
        let _ = writeln!(out, "  resultant R(f,g) = {} (~{:.6e})", format_rat(r), rat_to_f64(r));
    }
    if !c1.pole_ok {
        let _ = writeln!(out, "  difference operator singular at theta = pi");
    }
    if !c1.common_real_roots.is_empty() {
        let _ = writeln!(out, "  common real roots: {:?}", c1.common_real_roots);
    }
    let c2 = &v.condition_ii;
    let _ = writeln!(out, "condition (ii): {}", pass(c2.passed));
    let _ = writeln!(out, "  pencil characteristic polynomial: {}", fmt_poly_line(&c2.char_poly));
    let minors: Vec<String> = c2.hurwitz_minors.iter().map(|m| format!("{:.6}", rat_to_f64(m))).collect();
    let _ = writeln!(out, "  Hurwitz minors: [{}]", minors.join(", "));
    let c3 = &v.condition_iii;
    let _ = writeln!(out, "condition (iii): {}", pass(c3.passed));
    let _ = writeln!(out, "  deg R(F,G)(y) = {}, deg R~(F,G)(z) = {}", c3.res_y.degree(), c3.res_z.degree());
    if c3.common_component {
        let _ = writeln!(out, "  F and G share a polynomial factor (common component)");
    }
    if c3.pole_witness {
        let _ = writeln!(out, "  common root at the theta = pi point");
    }
    for w in &c3.witnesses {
        let _ = writeln!(out, "  witness: z = {:.6}, y = {:.6}", w.z, w.y);
    }
    if v.delay_independent_stable {
        let _ = writeln!(out, "verdict: delay-independent stable");
    } else {
        let _ = writeln!(out, "verdict: NOT delay-independent stable");
        match v.delay_bound {
            Some(t) => {
                let _ = writeln!(out, "maximal delay bound T = {t:.5}");
            }
            None if v.bound_applicable => {
                let _ = writeln!(out, "maximal delay bound not computable (no isolated witnesses)");
            }
            None => {
                let _ = writeln!(out, "delay bound not applicable (condition (i) or (ii) failed)");
            }
        }
    }
    out
}

fn pass(b: bool) -> &'static str {
    if b {
        "passed"
    } else {
        "FAILED"
    }
}
