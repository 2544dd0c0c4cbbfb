//! Corpus runner: computes spectra across a domain corpus, evaluates the
//! eigenvalue bounds, checks cross-solver agreement, and writes CSV reports.
//!
//! Report CSVs carry the fixed columns `domain,solver,k,sigma,sigmaL,bound,
//! slack` with numbers printed to 15 significant digits, so identical
//! configurations produce byte-identical files. Domains are solved in
//! parallel (capped by `STEKLOV_THREADS`); report assembly is ordered.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_complex::Complex64;

use crate::conformal::ConformalMap;
use crate::error::{Error, Result};
use crate::geometry::{BoundaryCurve, DomainSpec, Orientation, SolverKind, Spectrum};
use crate::hps;
use crate::io::{CorpusConfig, CorpusEntry, DomainInput};
use crate::solver;

/// Default Fourier mode cutoff; trusts eigenvalues through index 16.
pub const DEFAULT_MODES: usize = 64;
/// Default boundary nodes per component for the layer solver.
pub const DEFAULT_NODES: usize = 256;
/// Bounds must hold up to this relative slack.
const SLACK_FLOOR: f64 = -1e-8;
/// Relative slack under which a bound is flagged as attained.
const EQUALITY_FLAG: f64 = 1e-6;

/// Solver resolutions used by [`verify_domain`] and the corpus runner.
#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Explicit solver; `None` picks the natural one for the domain shape.
    pub solver: Option<SolverKind>,
    /// Fourier mode cutoff `N`.
    pub modes: usize,
    /// Layer-solver nodes per boundary component `M`.
    pub nodes: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            solver: None,
            modes: DEFAULT_MODES,
            nodes: DEFAULT_NODES,
        }
    }
}

/// One single-eigenvalue bound row: `σ_k L ≤ 2π(γ+l)k`.
#[derive(Debug, Clone, Copy)]
pub struct SingleRow {
    pub k: usize,
    pub sigma: f64,
    pub sigma_l: f64,
    pub bound: f64,
    pub slack: f64,
    pub equality: bool,
}

/// One pair bound row: `σ_p σ_q L² ≤ π²(γ+l)²(p+q)²` (even; `(p+q−1)²` odd).
#[derive(Debug, Clone, Copy)]
pub struct PairRow {
    pub p: usize,
    pub q: usize,
    pub product_l2: f64,
    pub bound: f64,
    pub slack: f64,
    pub equality: bool,
}

/// All bound rows for one domain and solver.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub domain: String,
    pub solver: SolverKind,
    pub length: f64,
    pub singles: Vec<SingleRow>,
    pub pairs: Vec<PairRow>,
    /// Smallest relative slack across single rows; `< 1e-6` marks a bound
    /// attained to numerical precision.
    pub equality_within: f64,
}

impl BoundReport {
    /// Rows violating their bound beyond the numerical floor.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for row in &self.singles {
            if row.slack < SLACK_FLOOR * row.bound {
                out.push(format!(
                    "{} ({}): sigma_{} L = {:.6e} exceeds bound {:.6e}",
                    self.domain, self.solver, row.k, row.sigma_l, row.bound
                ));
            }
        }
        for row in &self.pairs {
            if row.slack < SLACK_FLOOR * row.bound {
                out.push(format!(
                    "{} ({}): sigma_{} sigma_{} L^2 = {:.6e} exceeds bound {:.6e}",
                    self.domain, self.solver, row.p, row.q, row.product_l2, row.bound
                ));
            }
        }
        out
    }

    pub fn all_hold(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Natural solver for a domain shape: conformal images go through the
/// Fourier route, concentric annuli through the closed form, everything
/// else through layer potentials.
pub fn auto_solver(input: &DomainInput) -> SolverKind {
    match input {
        DomainInput::Conformal(_) => SolverKind::Fourier,
        DomainInput::Annulus(_) => SolverKind::Annulus,
        DomainInput::Curves(_) => SolverKind::Bem,
    }
}

/// Solves the spectrum of a domain with the chosen (or natural) solver.
pub fn solve_spectrum(
    input: &DomainInput,
    options: &SolveOptions,
    k_max: usize,
) -> Result<Spectrum> {
    let kind = options.solver.unwrap_or_else(|| auto_solver(input));
    match (kind, input) {
        (SolverKind::Fourier, DomainInput::Conformal(map)) => {
            solver::fourier::steklov_spectrum_fourier(map, options.modes, k_max)
        }
        (SolverKind::Annulus, DomainInput::Annulus(eps)) => {
            solver::annulus::steklov_spectrum(*eps, k_max)
        }
        (SolverKind::Bem, _) => {
            solver::bem::steklov_spectrum_bem(&input.to_domain_spec()?, options.nodes, k_max)
        }
        (kind, _) => Err(Error::BadParameters {
            reason: format!("solver {kind} does not apply to this domain shape"),
        }),
    }
}

/// Boundary length of a domain, matching the geometry used by the solvers.
pub fn boundary_length(input: &DomainInput) -> Result<f64> {
    match input {
        DomainInput::Annulus(eps) => Ok(solver::annulus::boundary_length(*eps)),
        _ => Ok(input.to_domain_spec()?.total_length()),
    }
}

fn build_report(
    name: &str,
    spectrum: &Spectrum,
    length: f64,
    gamma: usize,
    l: usize,
    k_max: usize,
    pq_max: usize,
) -> Result<BoundReport> {
    let k_top = k_max.min(spectrum.trusted_count());
    let pq_top = pq_max.min(spectrum.trusted_count());

    let mut singles = Vec::new();
    let mut equality_within = f64::INFINITY;
    for k in 1..=k_top {
        // Bound evaluated at L = 1 so the row compares sigma * L directly.
        let bound = hps::hps_bound_single(k, gamma, l, 1.0)?;
        let sigma = spectrum.sigma(k);
        let sigma_l = sigma * length;
        let slack = bound - sigma_l;
        equality_within = equality_within.min(slack / bound);
        singles.push(SingleRow {
            k,
            sigma,
            sigma_l,
            bound,
            slack,
            equality: slack / bound < EQUALITY_FLAG,
        });
    }

    let mut pairs = Vec::new();
    for p in 1..=pq_top {
        for q in p..=pq_top {
            let bound = hps::hps_bound_pair(p, q, gamma, l, 1.0)?;
            let product_l2 = spectrum.sigma(p) * spectrum.sigma(q) * length * length;
            let slack = bound - product_l2;
            pairs.push(PairRow {
                p,
                q,
                product_l2,
                bound,
                slack,
                equality: slack / bound < EQUALITY_FLAG,
            });
        }
    }

    Ok(BoundReport {
        domain: name.to_string(),
        solver: spectrum.solver(),
        length,
        singles,
        pairs,
        equality_within,
    })
}

/// Solves a domain and evaluates every bound row through `k_max` and
/// `pq_max` (indices above the trusted range are skipped).
pub fn verify_domain(
    input: &DomainInput,
    name: &str,
    options: &SolveOptions,
    k_max: usize,
    pq_max: usize,
) -> Result<BoundReport> {
    verify_domain_with(input, name, options, k_max, pq_max, None)
}

/// [`verify_domain`] with a fault-injection hook: eigenvalues are multiplied
/// by `fault` after the solve, for exercising the violation path.
fn verify_domain_with(
    input: &DomainInput,
    name: &str,
    options: &SolveOptions,
    k_max: usize,
    pq_max: usize,
    fault: Option<f64>,
) -> Result<BoundReport> {
    let spec_geometry = input.to_domain_spec()?;
    let gamma = spec_geometry.genus();
    let l = spec_geometry.component_count();
    let length = boundary_length(input)?;

    let mut spectrum = solve_spectrum(input, options, k_max.max(pq_max))?;
    if let Some(factor) = fault {
        let values: Vec<f64> = spectrum.values().iter().map(|v| v * factor).collect();
        spectrum = Spectrum::new(
            values,
            spectrum.solver(),
            spectrum.resolution(),
            spectrum.trusted_count(),
        )?;
    }
    build_report(name, &spectrum, length, gamma, l, k_max, pq_max)
}

/// Maximum relative discrepancy of the trusted eigenvalues between the two
/// solvers applicable to the domain.
///
/// Conformal domains compare Fourier vs layer potentials; annuli compare the
/// closed form vs layer potentials. Multi-curve domains have a single
/// applicable solver.
pub fn cross_solver_check(
    input: &DomainInput,
    name: &str,
    options: &SolveOptions,
    k_max: usize,
) -> Result<f64> {
    let (first, second) = match input {
        DomainInput::Conformal(map) => (
            solver::fourier::steklov_spectrum_fourier(map, options.modes, k_max)?,
            solver::bem::steklov_spectrum_bem(&input.to_domain_spec()?, options.nodes, k_max)?,
        ),
        DomainInput::Annulus(eps) => (
            solver::annulus::steklov_spectrum(*eps, k_max)?,
            solver::bem::steklov_spectrum_bem(&input.to_domain_spec()?, options.nodes, k_max)?,
        ),
        DomainInput::Curves(_) => {
            return Err(Error::NoSecondSolver {
                domain: name.to_string(),
            })
        }
    };
    let top = k_max
        .min(first.trusted_count())
        .min(second.trusted_count());
    let mut worst: f64 = 0.0;
    for k in 1..=top {
        let a = first.sigma(k);
        let b = second.sigma(k);
        worst = worst.max((a - b).abs() / a.max(b).max(f64::MIN_POSITIVE));
    }
    Ok(worst)
}

/// Scales a domain about the origin by `c`, in a form solvable by the same
/// solver route on both sides of a comparison.
pub fn scaled_input(input: &DomainInput, c: f64) -> Result<DomainInput> {
    Ok(match input {
        DomainInput::Conformal(map) => DomainInput::Conformal(map.scaled(c)),
        DomainInput::Curves(spec) => DomainInput::Curves(spec.scaled(c)),
        DomainInput::Annulus(_) => DomainInput::Curves(input.to_domain_spec()?.scaled(c)),
    })
}

/// Scale-invariance sweep: worst deviation of `σ_k L` between the domain and
/// its rescalings by `c ∈ {0.5, 2}`, over `k ≤ k_max`.
///
/// Annuli are compared through the layer solver on both sides, so the two
/// runs share a discretization and the products cancel to roundoff.
pub fn scale_sweep(input: &DomainInput, options: &SolveOptions, k_max: usize) -> Result<f64> {
    let base_input = match input {
        DomainInput::Annulus(_) => scaled_input(input, 1.0)?,
        _ => input.clone(),
    };
    let base = solve_spectrum(&base_input, options, k_max)?;
    let base_length = boundary_length(&base_input)?;
    let top = k_max.min(base.trusted_count());

    let mut worst: f64 = 0.0;
    for &c in &[0.5, 2.0] {
        let scaled = scaled_input(&base_input, c)?;
        let spectrum = solve_spectrum(&scaled, options, k_max)?;
        let length = boundary_length(&scaled)?;
        for k in 1..=top.min(spectrum.trusted_count()) {
            let a = base.sigma(k) * base_length;
            let b = spectrum.sigma(k) * length;
            worst = worst.max((a - b).abs() / a.max(1.0));
        }
    }
    Ok(worst)
}

/// Builtin domains available to the CLI and the default corpus.
pub fn builtin_domain(name: &str) -> Result<DomainInput> {
    let conformal = |taylor: Vec<f64>| -> Result<DomainInput> {
        Ok(DomainInput::Conformal(ConformalMap::univalent(
            taylor.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
        )?))
    };
    let circle = |center: Complex64, r: f64, orientation| BoundaryCurve::circle(center, r, orientation);
    match name {
        "disk" => conformal(vec![1.0]),
        "cardioid" => conformal(vec![1.0, 0.3]),
        "wavy" => conformal(vec![1.0, 0.2, 0.1]),
        "cubic" => conformal(vec![1.0, 0.0, 0.25]),
        "annulus-0.2" => Ok(DomainInput::Annulus(0.2)),
        "annulus-0.5" => Ok(DomainInput::Annulus(0.5)),
        "annulus-0.8" => Ok(DomainInput::Annulus(0.8)),
        "eccentric" => Ok(DomainInput::Curves(DomainSpec::assemble(
            circle(Complex64::ZERO, 1.0, Orientation::Positive),
            vec![circle(Complex64::new(0.3, 0.0), 0.25, Orientation::Negative)],
            0,
        )?)),
        "twohole-wide" => Ok(DomainInput::Curves(DomainSpec::assemble(
            circle(Complex64::ZERO, 1.0, Orientation::Positive),
            vec![
                circle(Complex64::new(-0.45, 0.0), 0.18, Orientation::Negative),
                circle(Complex64::new(0.45, 0.0), 0.18, Orientation::Negative),
            ],
            0,
        )?)),
        "twohole-offset" => Ok(DomainInput::Curves(DomainSpec::assemble(
            circle(Complex64::ZERO, 1.0, Orientation::Positive),
            vec![
                circle(Complex64::new(-0.4, 0.1), 0.15, Orientation::Negative),
                circle(Complex64::new(0.35, -0.3), 0.2, Orientation::Negative),
            ],
            0,
        )?)),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

/// The default corpus: the disk, three perturbed conformal images, three
/// annuli, and two domains with two holes.
pub fn default_corpus() -> CorpusConfig {
    let entry = |name: &str| CorpusEntry {
        name: name.to_string(),
        builtin: Some(name.to_string()),
        file: None,
        domain: None,
        solver: None,
    };
    CorpusConfig {
        kmax: 8,
        pqmax: 6,
        domains: vec![
            entry("disk"),
            entry("cardioid"),
            entry("wavy"),
            entry("cubic"),
            entry("annulus-0.2"),
            entry("annulus-0.5"),
            entry("annulus-0.8"),
            entry("twohole-wide"),
            entry("twohole-offset"),
        ],
    }
}

/// Options for a corpus run.
#[derive(Debug, Clone, Default)]
pub struct CorpusOptions {
    /// Multiply the named domain's eigenvalues after the solve, to exercise
    /// the violation path.
    pub fault_scale: Option<(String, f64)>,
    /// Parallelism cap; `None` reads `STEKLOV_THREADS` or the machine width.
    pub threads: Option<usize>,
    pub solve: SolveOptions,
}

/// Result of a corpus run; violations make the run fail without being errors.
#[derive(Debug)]
pub struct CorpusOutcome {
    pub reports: Vec<BoundReport>,
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
    /// Files written, summary last.
    pub written: Vec<PathBuf>,
}

/// Parses a thread cap, falling back to the machine width.
pub fn thread_cap(env_value: Option<&str>) -> usize {
    env_value
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn resolve_entry(entry: &CorpusEntry) -> Result<DomainInput> {
    let sources =
        entry.builtin.is_some() as usize + entry.file.is_some() as usize + entry.domain.is_some() as usize;
    if sources != 1 {
        return Err(Error::ConfigParse(format!(
            "domain {:?} must set exactly one of builtin, file, domain",
            entry.name
        )));
    }
    if let Some(name) = &entry.builtin {
        builtin_domain(name)
    } else if let Some(path) = &entry.file {
        crate::io::load_domain(Path::new(path))
    } else {
        let value = entry.domain.as_ref().unwrap();
        crate::io::parse_domain(&value.to_string())
    }
}

fn entry_solver(entry: &CorpusEntry) -> Result<Option<SolverKind>> {
    match entry.solver.as_deref() {
        None | Some("auto") => Ok(None),
        Some("fourier") => Ok(Some(SolverKind::Fourier)),
        Some("annulus") => Ok(Some(SolverKind::Annulus)),
        Some("bem") => Ok(Some(SolverKind::Bem)),
        Some(other) => Err(Error::ConfigParse(format!(
            "unknown solver {other:?} for domain {:?}",
            entry.name
        ))),
    }
}

/// 15 significant digits, fixed format; identical inputs print identically.
fn fmt(x: f64) -> String {
    format!("{x:.14e}")
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '.' || c == '_' || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

const SINGLE_HEADER: &str = "domain,solver,k,sigma,sigmaL,bound,slack\n";
const PAIR_HEADER: &str = "domain,solver,p,q,productL2,bound,slack\n";

fn single_rows_csv(report: &BoundReport) -> String {
    let mut out = String::new();
    for row in &report.singles {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            report.domain,
            report.solver,
            row.k,
            fmt(row.sigma),
            fmt(row.sigma_l),
            fmt(row.bound),
            fmt(row.slack)
        ));
    }
    out
}

fn pair_rows_csv(report: &BoundReport) -> String {
    let mut out = String::new();
    for row in &report.pairs {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            report.domain,
            report.solver,
            row.p,
            row.q,
            fmt(row.product_l2),
            fmt(row.bound),
            fmt(row.slack)
        ));
    }
    out
}

/// CSV renderings of a report, headers included: (single rows, pair rows).
pub fn report_to_csv(report: &BoundReport) -> (String, String) {
    (
        format!("{SINGLE_HEADER}{}", single_rows_csv(report)),
        format!("{PAIR_HEADER}{}", pair_rows_csv(report)),
    )
}

/// Runs the corpus with default options.
pub fn run_corpus(config: &CorpusConfig, out_dir: &Path) -> Result<CorpusOutcome> {
    run_corpus_with(config, out_dir, &CorpusOptions::default())
}

/// Runs every corpus domain, writes one CSV (plus a pair CSV) per domain and
/// a combined summary, and collects bound violations.
///
/// Domains are solved in parallel; the output is assembled in config order,
/// so identical configurations yield byte-identical files.
pub fn run_corpus_with(
    config: &CorpusConfig,
    out_dir: &Path,
    options: &CorpusOptions,
) -> Result<CorpusOutcome> {
    std::fs::create_dir_all(out_dir)?;
    let mut warnings = Vec::new();
    if config.domains.is_empty() {
        warnings.push("corpus is empty; writing an empty summary".to_string());
    }

    let threads = options
        .threads
        .unwrap_or_else(|| thread_cap(std::env::var("STEKLOV_THREADS").ok().as_deref()))
        .min(config.domains.len().max(1));

    let results: Mutex<Vec<Option<Result<BoundReport>>>> =
        Mutex::new((0..config.domains.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= config.domains.len() {
                    break;
                }
                let entry = &config.domains[i];
                let report = (|| {
                    let input = resolve_entry(entry)?;
                    let mut solve = options.solve;
                    solve.solver = entry_solver(entry)?;
                    let fault = options
                        .fault_scale
                        .as_ref()
                        .filter(|(name, _)| *name == entry.name)
                        .map(|(_, factor)| *factor);
                    verify_domain_with(
                        &input,
                        &entry.name,
                        &solve,
                        config.kmax,
                        config.pqmax,
                        fault,
                    )
                })();
                results.lock().unwrap()[i] = Some(report);
            });
        }
    });

    let mut reports = Vec::new();
    for slot in results.into_inner().unwrap() {
        reports.push(slot.expect("worker filled every slot")?);
    }

    let mut violations = Vec::new();
    let mut written = Vec::new();
    let mut summary = String::from(SINGLE_HEADER);
    for report in &reports {
        violations.extend(report.violations());
        let stem = file_stem(&report.domain);

        let single_path = out_dir.join(format!("{stem}.csv"));
        std::fs::write(&single_path, format!("{SINGLE_HEADER}{}", single_rows_csv(report)))?;
        written.push(single_path);

        let pair_path = out_dir.join(format!("{stem}-pairs.csv"));
        std::fs::write(&pair_path, format!("{PAIR_HEADER}{}", pair_rows_csv(report)))?;
        written.push(pair_path);

        summary.push_str(&single_rows_csv(report));
    }
    let summary_path = out_dir.join("summary.csv");
    std::fs::write(&summary_path, summary)?;
    written.push(summary_path);

    Ok(CorpusOutcome {
        reports,
        violations,
        warnings,
        written,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tempdir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("steklov-harness-{tag}-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        dir
    }

    #[test]
    fn disk_attains_the_first_bound() {
        let input = builtin_domain("disk").unwrap();
        let report = verify_domain(&input, "disk", &SolveOptions::default(), 1, 1).unwrap();
        assert!(report.singles[0].equality, "{report:?}");
        assert!(report.equality_within < 1e-6);
        assert!(report.all_hold());
    }

    #[test]
    fn cardioid_bounds_hold_with_strict_slack() {
        let input = builtin_domain("cardioid").unwrap();
        let report = verify_domain(&input, "cardioid", &SolveOptions::default(), 8, 6).unwrap();
        assert_eq!(report.singles.len(), 8);
        assert!(report.singles.iter().all(|row| row.slack > 0.0));
        assert!(report.pairs.iter().all(|row| row.slack > 0.0));
        assert!(report.all_hold());
    }

    #[test]
    fn annulus_rows_use_the_two_component_bound() {
        let input = builtin_domain("annulus-0.5").unwrap();
        let report = verify_domain(&input, "annulus-0.5", &SolveOptions::default(), 8, 6).unwrap();
        for row in &report.singles {
            // gamma = 0, l = 2: bound on sigma_k L is 4 pi k.
            assert!((row.bound - 4.0 * std::f64::consts::PI * row.k as f64).abs() < 1e-12);
            assert!(row.slack >= 0.0);
        }
        assert!(report.all_hold());
    }

    #[test]
    fn cross_solver_agreement_on_disk() {
        let input = builtin_domain("disk").unwrap();
        let worst = cross_solver_check(&input, "disk", &SolveOptions::default(), 8).unwrap();
        assert!(worst < 1e-6, "discrepancy {worst}");
    }

    #[test]
    fn cross_solver_agreement_on_annulus() {
        let input = DomainInput::Annulus(0.3);
        let worst = cross_solver_check(&input, "annulus-0.3", &SolveOptions::default(), 8).unwrap();
        assert!(worst < 1e-6, "discrepancy {worst}");
    }

    #[test]
    fn two_hole_domain_has_no_second_solver() {
        let input = builtin_domain("twohole-wide").unwrap();
        assert!(matches!(
            cross_solver_check(&input, "twohole-wide", &SolveOptions::default(), 4),
            Err(Error::NoSecondSolver { .. })
        ));
    }

    #[test]
    fn scale_sweep_is_tight_across_shapes() {
        for name in ["cardioid", "annulus-0.5", "twohole-wide"] {
            let input = builtin_domain(name).unwrap();
            let worst = scale_sweep(&input, &SolveOptions::default(), 6).unwrap();
            assert!(worst < 1e-8, "{name}: deviation {worst}");
        }
    }

    #[test]
    fn unknown_builtin_is_rejected() {
        assert!(matches!(
            builtin_domain("pentagon"),
            Err(Error::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn thread_cap_parses_and_falls_back() {
        assert_eq!(thread_cap(Some("3")), 3);
        assert_eq!(thread_cap(Some(" 2 ")), 2);
        assert!(thread_cap(Some("0")) >= 1);
        assert!(thread_cap(Some("lots")) >= 1);
        assert!(thread_cap(None) >= 1);
    }

    #[test]
    fn default_corpus_runs_clean_and_deterministically() {
        let config = default_corpus();
        let dir_a = tempdir("corpus-a");
        let dir_b = tempdir("corpus-b");
        let outcome_a = run_corpus(&config, &dir_a).unwrap();
        let outcome_b = run_corpus(&config, &dir_b).unwrap();
        assert!(outcome_a.violations.is_empty(), "{:?}", outcome_a.violations);
        assert_eq!(outcome_a.reports.len(), 9);
        // 2 files per domain + summary.
        assert_eq!(outcome_a.written.len(), 19);
        for (a, b) in outcome_a.written.iter().zip(&outcome_b.written) {
            assert_eq!(
                std::fs::read(a).unwrap(),
                std::fs::read(b).unwrap(),
                "{a:?} differs from {b:?}"
            );
        }
        let summary = std::fs::read_to_string(outcome_a.written.last().unwrap()).unwrap();
        assert!(summary.starts_with("domain,solver,k,sigma,sigmaL,bound,slack\n"));
        assert_eq!(summary.lines().count(), 1 + 9 * 8);
        let _ = std::fs::remove_dir_all(dir_a);
        let _ = std::fs::remove_dir_all(dir_b);
    }

    #[test]
    fn fault_injection_names_the_failing_domain() {
        let mut config = default_corpus();
        config.domains.truncate(2);
        let dir = tempdir("corpus-fault");
        let options = CorpusOptions {
            fault_scale: Some(("cardioid".to_string(), 10.0)),
            ..CorpusOptions::default()
        };
        let outcome = run_corpus_with(&config, &dir, &options).unwrap();
        assert!(!outcome.violations.is_empty());
        assert!(outcome.violations.iter().all(|v| v.contains("cardioid")));
        let _ = std::fs::remove_dir_all(dir);
    }

    #[test]
    fn empty_corpus_warns_and_writes_empty_summary() {
        let config = CorpusConfig {
            kmax: 8,
            pqmax: 6,
            domains: Vec::new(),
        };
        let dir = tempdir("corpus-empty");
        let outcome = run_corpus(&config, &dir).unwrap();
        assert!(outcome.violations.is_empty());
        assert_eq!(outcome.warnings.len(), 1);
        let summary = std::fs::read_to_string(outcome.written.last().unwrap()).unwrap();
        assert_eq!(summary, "domain,solver,k,sigma,sigmaL,bound,slack\n");
        let _ = std::fs::remove_dir_all(dir);
    }

    #[test]
    fn inline_and_file_corpus_entries_resolve() {
        let dir = tempdir("corpus-inline");
        let path = dir.join("domain.json");
        std::fs::write(&path, r#"{ "type": "annulus", "epsilon": 0.4 }"#).unwrap();
        let config = crate::io::parse_corpus_config(&format!(
            r#"{{
                "kmax": 3,
                "pqmax": 2,
                "domains": [
                    {{ "name": "inline", "domain": {{ "type": "conformal", "taylor": [[1,0],[0.2,0]] }} }},
                    {{ "name": "from-file", "file": {path:?} }}
                ]
            }}"#
        ))
        .unwrap();
        let outcome = run_corpus(&config, &dir).unwrap();
        assert!(outcome.violations.is_empty(), "{:?}", outcome.violations);
        assert_eq!(outcome.reports[0].solver, SolverKind::Fourier);
        assert_eq!(outcome.reports[1].solver, SolverKind::Annulus);
        let _ = std::fs::remove_dir_all(dir);
    }

    #[test]
    fn entry_with_two_sources_is_rejected() {
        let entry = CorpusEntry {
            name: "bad".into(),
            builtin: Some("disk".into()),
            file: Some("x.json".into()),
            domain: None,
            solver: None,
        };
        assert!(matches!(resolve_entry(&entry), Err(Error::ConfigParse(_))));
    }
}
