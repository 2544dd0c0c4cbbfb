//! Domain descriptions and corpus configuration on disk.
//!
//! Three JSON shapes are accepted wherever a domain is expected:
//!
//! ```json
//! { "genus": 0, "curves": [ { "orientation": "+", "coeffs": [[re,im], ...], "offset": -K } ] }
//! { "type": "conformal", "taylor": [[re,im], ...] }
//! { "type": "annulus", "epsilon": 0.5 }
//! ```
//!
//! In the curves form the first curve is the outer boundary and `coeffs[k]`
//! multiplies `e^{i(offset+k)t}`; in the conformal form `taylor[k]` multiplies
//! `z^{k+1}`. Field names are fixed.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::conformal::ConformalMap;
use crate::error::{Error, Result};
use crate::geometry::{BoundaryCurve, DomainSpec, Orientation};

/// A parsed domain description, before solver dispatch.
#[derive(Debug, Clone)]
pub enum DomainInput {
    /// Multi-curve domain, solved by the layer-potential route.
    Curves(DomainSpec),
    /// Simply connected domain given as Φ(𝔻).
    Conformal(ConformalMap),
    /// Concentric annulus ε < |z| < 1.
    Annulus(f64),
}

impl DomainInput {
    /// Curve-level geometry of the domain, for layer-potential solves and
    /// length/topology reporting.
    pub fn to_domain_spec(&self) -> Result<DomainSpec> {
        match self {
            DomainInput::Curves(spec) => Ok(spec.clone()),
            DomainInput::Conformal(map) => {
                DomainSpec::assemble(map.boundary_curve()?, Vec::new(), 0)
            }
            DomainInput::Annulus(epsilon) => {
                if !(*epsilon > 0.0 && *epsilon < 1.0) {
                    return Err(Error::EpsilonOutOfRange { epsilon: *epsilon });
                }
                DomainSpec::assemble(
                    BoundaryCurve::circle(Complex64::ZERO, 1.0, Orientation::Positive),
                    vec![BoundaryCurve::circle(
                        Complex64::ZERO,
                        *epsilon,
                        Orientation::Negative,
                    )],
                    0,
                )
            }
        }
    }

    /// Number of boundary components.
    pub fn component_count(&self) -> usize {
        match self {
            DomainInput::Curves(spec) => spec.component_count(),
            DomainInput::Conformal(_) => 1,
            DomainInput::Annulus(_) => 2,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawDomain {
    Typed(RawTyped),
    Curves(RawCurves),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawTyped {
    Conformal { taylor: Vec<[f64; 2]> },
    Annulus { epsilon: f64 },
}

#[derive(Serialize, Deserialize)]
struct RawCurves {
    genus: usize,
    curves: Vec<RawCurve>,
}

#[derive(Serialize, Deserialize)]
struct RawCurve {
    orientation: String,
    coeffs: Vec<[f64; 2]>,
    offset: i64,
}

fn complex_pairs(pairs: &[[f64; 2]]) -> Vec<Complex64> {
    pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect()
}

fn pair_list(values: &[Complex64]) -> Vec<[f64; 2]> {
    values.iter().map(|c| [c.re, c.im]).collect()
}

/// Parses any of the three accepted domain shapes, validating the geometry.
pub fn parse_domain(json: &str) -> Result<DomainInput> {
    let raw: RawDomain =
        serde_json::from_str(json).map_err(|e| Error::DomainParse(e.to_string()))?;
    match raw {
        RawDomain::Typed(RawTyped::Conformal { taylor }) => Ok(DomainInput::Conformal(
            ConformalMap::univalent(complex_pairs(&taylor))?,
        )),
        RawDomain::Typed(RawTyped::Annulus { epsilon }) => {
            if !(epsilon > 0.0 && epsilon < 1.0) {
                return Err(Error::EpsilonOutOfRange { epsilon });
            }
            Ok(DomainInput::Annulus(epsilon))
        }
        RawDomain::Curves(raw) => {
            if raw.curves.is_empty() {
                return Err(Error::DomainParse("curves list is empty".into()));
            }
            let mut curves = Vec::with_capacity(raw.curves.len());
            for c in &raw.curves {
                let orientation = match c.orientation.as_str() {
                    "+" => Orientation::Positive,
                    "-" => Orientation::Negative,
                    other => {
                        return Err(Error::DomainParse(format!(
                            "orientation must be \"+\" or \"-\", got {other:?}"
                        )))
                    }
                };
                curves.push(BoundaryCurve::from_fourier(
                    c.offset,
                    complex_pairs(&c.coeffs),
                    orientation,
                )?);
            }
            let outer = curves.remove(0);
            Ok(DomainInput::Curves(DomainSpec::assemble(
                outer, curves, raw.genus,
            )?))
        }
    }
}

/// Reads and parses a domain file.
pub fn load_domain(path: &Path) -> Result<DomainInput> {
    parse_domain(&std::fs::read_to_string(path)?)
}

/// Serializes a domain back to its JSON shape (pretty-printed).
pub fn domain_to_json(input: &DomainInput) -> String {
    let raw = match input {
        DomainInput::Conformal(map) => RawDomain::Typed(RawTyped::Conformal {
            taylor: pair_list(map.taylor()),
        }),
        DomainInput::Annulus(epsilon) => RawDomain::Typed(RawTyped::Annulus { epsilon: *epsilon }),
        DomainInput::Curves(spec) => RawDomain::Curves(RawCurves {
            genus: spec.genus(),
            curves: spec
                .curves()
                .map(|curve| {
                    let pairs: Vec<(i64, Complex64)> = curve.coefficients().collect();
                    RawCurve {
                        orientation: match curve.orientation() {
                            Orientation::Positive => "+".into(),
                            Orientation::Negative => "-".into(),
                        },
                        offset: pairs.first().map(|(f, _)| *f).unwrap_or(0),
                        coeffs: pairs.iter().map(|(_, c)| [c.re, c.im]).collect(),
                    }
                })
                .collect(),
        }),
    };
    serde_json::to_string_pretty(&raw).expect("serialization cannot fail")
}

/// Corpus run configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusConfig {
    /// Largest single-bound index checked per domain.
    #[serde(default = "default_kmax")]
    pub kmax: usize,
    /// Largest pair-bound index checked per domain.
    #[serde(default = "default_pqmax")]
    pub pqmax: usize,
    pub domains: Vec<CorpusEntry>,
}

fn default_kmax() -> usize {
    8
}

fn default_pqmax() -> usize {
    6
}

/// One corpus domain: exactly one of `builtin`, `file`, or an inline
/// `domain` object, plus an optional solver override.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<serde_json::Value>,
    /// `fourier`, `annulus`, `bem`, or `auto` (default).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver: Option<String>,
}

/// Parses a corpus configuration.
pub fn parse_corpus_config(json: &str) -> Result<CorpusConfig> {
    serde_json::from_str(json).map_err(|e| Error::ConfigParse(e.to_string()))
}

/// Reads and parses a corpus configuration file.
pub fn load_corpus_config(path: &Path) -> Result<CorpusConfig> {
    parse_corpus_config(&std::fs::read_to_string(path)?)
}
