//! Browser bindings: spectra, bound slack, and mass-parameter curves as JSON.
//!
//! Three operations back the static demo page: a spectrum-plus-bounds report
//! for a conformal image of the disk, the same report for a concentric
//! annulus, and the mass-parameter curve of a cover. Inputs and outputs are
//! JSON strings, so the JavaScript side stays free of binding glue.

use num_complex::Complex64;
use serde_json::json;
use wasm_bindgen::prelude::*;

use steklov::conformal::ConformalMap;
use steklov::harness::{self, BoundReport, SolveOptions};
use steklov::hps;
use steklov::io::DomainInput;

fn parse_taylor(taylor: &str) -> steklov::Result<Vec<Complex64>> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(taylor)
        .map_err(|e| steklov::Error::DomainParse(e.to_string()))?;
    Ok(pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect())
}

fn report_payload(report: &BoundReport) -> serde_json::Value {
    json!({
        "solver": report.solver.to_string(),
        "length": report.length,
        "rows": report.singles.iter().map(|row| json!({
            "k": row.k,
            "sigma": row.sigma,
            "sigmaL": row.sigma_l,
            "bound": row.bound,
            "slack": row.slack,
            "equality": row.equality,
        })).collect::<Vec<_>>(),
    })
}

fn conformal_report_json(taylor: &str, kmax: usize) -> steklov::Result<String> {
    let map = ConformalMap::univalent(parse_taylor(taylor)?)?;
    let input = DomainInput::Conformal(map.clone());
    let report = harness::verify_domain(&input, "domain", &SolveOptions::default(), kmax, 1)?;

    let samples = map.boundary_curve()?.sample(256);
    let boundary: Vec<[f64; 2]> = samples.z.iter().map(|z| [z.re, z.im]).collect();
    let mut payload = report_payload(&report);
    payload["boundary"] = json!(boundary);
    Ok(payload.to_string())
}

fn annulus_report_json(epsilon: f64, kmax: usize) -> steklov::Result<String> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(steklov::Error::EpsilonOutOfRange { epsilon });
    }
    let input = DomainInput::Annulus(epsilon);
    let report = harness::verify_domain(&input, "annulus", &SolveOptions::default(), kmax, 1)?;
    Ok(report_payload(&report).to_string())
}

fn mass_curve_json(taylor: &str, degree: usize) -> steklov::Result<String> {
    let map = ConformalMap::univalent(parse_taylor(taylor)?)?;
    let cover = hps::CoverMap::new(map, degree)?;
    let mu = hps::mass_parameter(&cover, 1024)?;

    // Every fourth node is plenty for plotting.
    let theta: Vec<f64> = (0..=256)
        .map(|j| std::f64::consts::TAU * j as f64 / 256.0)
        .collect();
    let m: Vec<f64> = (0..=256).map(|j| mu.samples()[4 * j]).collect();
    let density: Vec<f64> = (0..256).map(|j| mu.density()[4 * j]).collect();
    Ok(json!({
        "length": mu.total(),
        "theta": theta,
        "m": m,
        "density": density,
    })
    .to_string())
}

fn err(e: steklov::Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Spectrum, bound rows, and boundary polyline for the domain Φ(𝔻).
///
/// `taylor` is a JSON array `[[re,im], ...]`; entry `k` multiplies `z^{k+1}`.
#[wasm_bindgen]
pub fn conformal_report(taylor: &str, kmax: usize) -> Result<String, JsValue> {
    conformal_report_json(taylor, kmax).map_err(err)
}

/// Spectrum and bound rows for the annulus ε < |z| < 1.
#[wasm_bindgen]
pub fn annulus_report(epsilon: f64, kmax: usize) -> Result<String, JsValue> {
    annulus_report_json(epsilon, kmax).map_err(err)
}

/// Mass parameter m(θ) and its density for the degree-`degree` cover of the
/// disk over Φ(𝔻).
#[wasm_bindgen]
pub fn mass_curve(taylor: &str, degree: usize) -> Result<String, JsValue> {
    mass_curve_json(taylor, degree).map_err(err)
}
