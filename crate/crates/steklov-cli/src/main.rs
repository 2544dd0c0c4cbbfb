//! Command-line interface: spectra, bound verification, identity-chain
//! residuals, and corpus runs.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use steklov::error::{Error, Result};
use steklov::geometry::SolverKind;
use steklov::harness::{self, SolveOptions};
use steklov::hps;
use steklov::io::{self, DomainInput};

#[derive(Parser)]
#[command(
    name = "steklov",
    version,
    about = "Steklov spectra of planar domains and isoperimetric bound checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Steklov spectrum and print it as CSV (k,sigma).
    Spectrum {
        /// Domain JSON file or builtin name (e.g. disk, cardioid, annulus-0.5).
        #[arg(long)]
        domain: String,
        /// fourier | annulus | bem | auto.
        #[arg(long, default_value = "auto")]
        solver: String,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        /// Fourier mode cutoff N.
        #[arg(long, default_value_t = harness::DEFAULT_MODES)]
        modes: usize,
        /// Layer-solver nodes per boundary component M.
        #[arg(long, default_value_t = harness::DEFAULT_NODES)]
        nodes: usize,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every eigenvalue bound for a domain; exits 1 on violation.
    Verify {
        #[arg(long)]
        domain: String,
        #[arg(long, default_value = "auto")]
        solver: String,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long, default_value_t = 6)]
        pqmax: usize,
        #[arg(long, default_value_t = harness::DEFAULT_MODES)]
        modes: usize,
        #[arg(long, default_value_t = harness::DEFAULT_NODES)]
        nodes: usize,
        /// Write the two CSV tables into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the test-function identity chain on a conformal cover and
    /// print the residual table as CSV.
    HpsCheck {
        /// Cover degree d (the cover is z^d over the image of phi).
        #[arg(long, default_value_t = 1)]
        cover_degree: usize,
        /// Taylor coefficients of phi, comma separated; each entry is
        /// `re` or `re:im` and multiplies z^(k+1). Example: 1,0.3
        #[arg(long, default_value = "1")]
        phi: String,
        /// String mode index k.
        #[arg(long, default_value_t = 1)]
        mode: usize,
        /// Also run the pair construction for `p,q` (requires degree 1).
        #[arg(long)]
        pq: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a corpus of domains and write CSV reports; exits 1 on violation.
    Corpus {
        /// Corpus config JSON; defaults to the builtin corpus.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output directory for the CSV reports.
        #[arg(long, default_value = "steklov-report")]
        out: PathBuf,
    },
}

fn parse_solver(name: &str) -> Result<Option<SolverKind>> {
    match name {
        "auto" => Ok(None),
        "fourier" => Ok(Some(SolverKind::Fourier)),
        "annulus" => Ok(Some(SolverKind::Annulus)),
        "bem" => Ok(Some(SolverKind::Bem)),
        other => Err(Error::BadParameters {
            reason: format!("unknown solver {other:?} (expected fourier|annulus|bem|auto)"),
        }),
    }
}

/// A file path if one exists, otherwise a builtin name.
fn resolve_domain(spec: &str) -> Result<DomainInput> {
    let path = Path::new(spec);
    if path.is_file() {
        io::load_domain(path)
    } else {
        harness::builtin_domain(spec)
    }
}

fn parse_taylor(phi: &str) -> Result<Vec<Complex64>> {
    phi.split(',')
        .map(|entry| {
            let entry = entry.trim();
            let parts: Vec<&str> = entry.split(':').collect();
            let bad = || Error::BadParameters {
                reason: format!("bad Taylor coefficient {entry:?} (expected re or re:im)"),
            };
            match parts.as_slice() {
                [re] => Ok(Complex64::new(re.parse().map_err(|_| bad())?, 0.0)),
                [re, im] => Ok(Complex64::new(
                    re.parse().map_err(|_| bad())?,
                    im.parse().map_err(|_| bad())?,
                )),
                _ => Err(bad()),
            }
        })
        .collect()
}

fn parse_pq(pq: &str) -> Result<(usize, usize)> {
    let bad = || Error::BadParameters {
        reason: format!("bad pair {pq:?} (expected p,q)"),
    };
    let parts: Vec<&str> = pq.split(',').collect();
    let [p, q] = parts.as_slice() else {
        return Err(bad());
    };
    Ok((
        p.trim().parse().map_err(|_| bad())?,
        q.trim().parse().map_err(|_| bad())?,
    ))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn fmt(x: f64) -> String {
    format!("{x:.14e}")
}

fn cmd_spectrum(
    domain: &str,
    solver: &str,
    kmax: usize,
    modes: usize,
    nodes: usize,
    out: Option<&Path>,
) -> Result<i32> {
    let input = resolve_domain(domain)?;
    let options = SolveOptions {
        solver: parse_solver(solver)?,
        modes,
        nodes,
    };
    let spectrum = harness::solve_spectrum(&input, &options, kmax)?;
    let mut csv = String::from("k,sigma\n");
    for (k, sigma) in spectrum.values().iter().enumerate().take(kmax + 1) {
        csv.push_str(&format!("{k},{}\n", fmt(*sigma)));
    }
    emit(&csv, out)?;
    Ok(0)
}

fn cmd_verify(
    domain: &str,
    solver: &str,
    kmax: usize,
    pqmax: usize,
    modes: usize,
    nodes: usize,
    out: Option<&Path>,
) -> Result<i32> {
    let input = resolve_domain(domain)?;
    let options = SolveOptions {
        solver: parse_solver(solver)?,
        modes,
        nodes,
    };
    let report = harness::verify_domain(&input, domain, &options, kmax, pqmax)?;
    let (singles, pairs) = harness::report_to_csv(&report);
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join("bounds.csv"), &singles)?;
            std::fs::write(dir.join("bounds-pairs.csv"), &pairs)?;
        }
        None => print!("{singles}\n{pairs}"),
    }
    let violations = report.violations();
    for violation in &violations {
        eprintln!("violation: {violation}");
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

fn cmd_hps_check(
    cover_degree: usize,
    phi: &str,
    mode_index: usize,
    pq: Option<&str>,
    out: Option<&Path>,
) -> Result<i32> {
    let map = steklov::conformal::ConformalMap::univalent(parse_taylor(phi)?)?;
    let cover = hps::CoverMap::new(map.clone(), cover_degree)?;
    let mu = hps::mass_parameter(&cover, 1024)?;
    let mode = hps::string_mode(mode_index, mu.total());
    let report = hps::verify_identity_chain(&cover, &mode)?;

    let mut csv = String::from("quantity,value\n");
    csv.push_str(&format!("energy_equality,{}\n", fmt(report.energy_equality)));
    csv.push_str(&format!("flux_identity,{}\n", fmt(report.flux_identity)));
    csv.push_str(&format!(
        "conjugate_pointwise,{}\n",
        fmt(report.conjugate_pointwise)
    ));
    csv.push_str(&format!(
        "cauchy_schwarz_slack,{}\n",
        fmt(report.cauchy_schwarz_slack)
    ));
    csv.push_str(&format!("cover_energy,{}\n", fmt(report.cover_energy)));
    csv.push_str(&format!(
        "product_identity,{}\n",
        fmt(report.product_identity)
    ));

    if let Some(pq) = pq {
        if cover_degree != 1 {
            return Err(Error::BadParameters {
                reason: "the pair construction runs on the identity cover (degree 1)".into(),
            });
        }
        let (p, q) = parse_pq(pq)?;
        let pair = hps::verify_pair_construction(&map, p, q, 32)?;
        csv.push_str(&format!("rayleigh_alpha,{}\n", fmt(pair.rayleigh_alpha)));
        csv.push_str(&format!("rayleigh_beta,{}\n", fmt(pair.rayleigh_beta)));
        csv.push_str(&format!("sigma_product,{}\n", fmt(pair.sigma_product)));
        csv.push_str(&format!("string_bound,{}\n", fmt(pair.string_bound)));
        csv.push_str(&format!(
            "constraint_residual,{}\n",
            fmt(pair.constraint_residual)
        ));
    }
    emit(&csv, out)?;
    Ok(0)
}

fn cmd_corpus(config: Option<&Path>, out: &Path) -> Result<i32> {
    let config = match config {
        Some(path) => io::load_corpus_config(path)?,
        None => harness::default_corpus(),
    };
    let outcome = harness::run_corpus(&config, out)?;
    for warning in &outcome.warnings {
        eprintln!("warning: {warning}");
    }
    for violation in &outcome.violations {
        eprintln!("violation: {violation}");
    }
    println!(
        "wrote {} files to {}",
        outcome.written.len(),
        out.display()
    );
    Ok(if outcome.violations.is_empty() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<i32> {
    match &cli.command {
        Command::Spectrum {
            domain,
            solver,
            kmax,
            modes,
            nodes,
            out,
        } => cmd_spectrum(domain, solver, *kmax, *modes, *nodes, out.as_deref()),
        Command::Verify {
            domain,
            solver,
            kmax,
            pqmax,
            modes,
            nodes,
            out,
        } => cmd_verify(
            domain,
            solver,
            *kmax,
            *pqmax,
            *modes,
            *nodes,
            out.as_deref(),
        ),
        Command::HpsCheck {
            cover_degree,
            phi,
            mode,
            pq,
            out,
        } => cmd_hps_check(*cover_degree, phi, *mode, pq.as_deref(), out.as_deref()),
        Command::Corpus { config, out } => cmd_corpus(config.as_deref(), out),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
