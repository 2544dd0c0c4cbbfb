//! Acceptance gate: nine end-to-end criteria, each printing one
//! `acceptance N (...): PASS` or `... FAIL` line. Run with
//! `cargo test -p steklov --test acceptance -- --nocapture` to see the lines.

use num_complex::Complex64;
use std::f64::consts::TAU;
use std::sync::OnceLock;

use steklov::conformal::{map_from_pairs, ConformalMap};
use steklov::geometry::{BoundaryCurve, DomainSpec, Orientation};
use steklov::harness::{
    builtin_domain, cross_solver_check, default_corpus, scale_sweep, verify_domain, BoundReport,
    SolveOptions,
};
use steklov::hps::{
    mass_parameter, string_mode, string_rayleigh, verify_identity_chain, verify_pair_construction,
    CoverMap,
};
use steklov::io::DomainInput;
use steklov::solver::{annulus, bem, fourier};

macro_rules! check {
    ($failures:expr, $cond:expr, $($arg:tt)+) => {
        if !$cond {
            $failures.push(format!($($arg)+));
        }
    };
}

fn conclude(number: usize, title: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("acceptance {number} ({title}): PASS");
    } else {
        println!("acceptance {number} ({title}): FAIL");
        for line in &failures {
            println!("  {line}");
        }
        panic!("acceptance {number} failed:\n{}", failures.join("\n"));
    }
}

fn disk_map() -> ConformalMap {
    map_from_pairs(&[[1.0, 0.0]]).unwrap()
}

fn disk_spec() -> DomainSpec {
    let outer = BoundaryCurve::circle(Complex64::ZERO, 1.0, Orientation::Positive);
    DomainSpec::assemble(outer, vec![], 0).unwrap()
}

/// Bound reports for the whole default corpus, solved once and shared by the
/// criteria that sweep it.
fn corpus_reports() -> &'static [BoundReport] {
    static REPORTS: OnceLock<Vec<BoundReport>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let config = default_corpus();
        config
            .domains
            .iter()
            .map(|entry| {
                let input = builtin_domain(entry.builtin.as_deref().unwrap()).unwrap();
                verify_domain(
                    &input,
                    &entry.name,
                    &SolveOptions::default(),
                    config.kmax,
                    config.pqmax,
                )
                .unwrap()
            })
            .collect()
    })
}

/// Sign-change bisection, independent of any closed-form root formula.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(
        f_lo * f(hi) <= 0.0,
        "no sign change on [{lo}, {hi}]"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_lo * f_mid <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
        if hi - lo <= 1e-16 * hi.abs().max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn a1_disk_spectra_are_exact() {
    let mut failures = Vec::new();
    let expected = [0.0, 1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 4.0, 4.0, 5.0, 5.0];

    let galerkin = fourier::steklov_spectrum_fourier(&disk_map(), 64, 10).unwrap();
    for (k, &want) in expected.iter().enumerate() {
        let got = galerkin.sigma(k);
        check!(
            failures,
            (got - want).abs() < 1e-10,
            "fourier sigma_{k} = {got:.3e}, expected {want} (err {:.3e})",
            (got - want).abs()
        );
    }

    let layer = bem::steklov_spectrum_bem(&disk_spec(), 128, 10).unwrap();
    for (k, &want) in expected.iter().enumerate() {
        let got = layer.sigma(k);
        check!(
            failures,
            (got - want).abs() < 1e-7,
            "bem sigma_{k} = {got:.3e}, expected {want} (err {:.3e})",
            (got - want).abs()
        );
    }
    conclude(1, "disk spectra are exact", failures);
}

#[test]
fn a2_weinstock_sharp_on_the_disk_strict_below() {
    let mut failures = Vec::new();
    let reports = corpus_reports();

    let disk = reports.iter().find(|r| r.domain == "disk").unwrap();
    let sigma1_l = disk.singles[0].sigma_l;
    check!(
        failures,
        (sigma1_l - TAU).abs() / TAU < 1e-9,
        "disk sigma_1 L = {sigma1_l:.12e}, expected 2 pi (rel err {:.3e})",
        (sigma1_l - TAU).abs() / TAU
    );

    for name in ["cardioid", "wavy", "cubic"] {
        let report = reports.iter().find(|r| r.domain == name).unwrap();
        let margin = TAU - report.singles[0].sigma_l;
        check!(
            failures,
            margin > 1e-4,
            "{name}: sigma_1 L margin below 2 pi is {margin:.3e}, need > 1e-4"
        );
    }
    conclude(2, "the disk attains sigma_1 L = 2 pi, others stay strictly below", failures);
}

#[test]
fn a3_linear_bounds_hold_across_the_corpus() {
    let mut failures = Vec::new();
    for report in corpus_reports() {
        check!(
            failures,
            report.singles.len() == 8,
            "{}: expected 8 trusted single rows, got {}",
            report.domain,
            report.singles.len()
        );
        for row in &report.singles {
            check!(
                failures,
                row.sigma_l <= row.bound + 1e-8,
                "{}: sigma_{} L = {:.12e} exceeds bound {:.12e}",
                report.domain,
                row.k,
                row.sigma_l,
                row.bound
            );
        }
        for violation in report.violations() {
            check!(failures, false, "violation reported: {violation}");
        }
    }
    conclude(3, "sigma_k L <= 2 pi l k on every corpus domain", failures);
}

#[test]
fn a4_product_bounds_hold_across_the_corpus() {
    let mut failures = Vec::new();
    for report in corpus_reports() {
        check!(
            failures,
            report.pairs.len() == 21,
            "{}: expected 21 trusted pair rows, got {}",
            report.domain,
            report.pairs.len()
        );
        for row in &report.pairs {
            check!(
                failures,
                row.product_l2 <= row.bound + 1e-8,
                "{}: sigma_{} sigma_{} L^2 = {:.12e} exceeds bound {:.12e}",
                report.domain,
                row.p,
                row.q,
                row.product_l2,
                row.bound
            );
        }
    }
    conclude(4, "sigma_p sigma_q L^2 bounds on every corpus domain", failures);
}

#[test]
fn a5_annulus_closed_form_is_an_exactness_anchor() {
    let mut failures = Vec::new();
    for eps in [0.2, 0.5, 0.8] {
        let input = DomainInput::Annulus(eps);
        let worst =
            cross_solver_check(&input, &format!("annulus-{eps}"), &SolveOptions::default(), 8)
                .unwrap();
        check!(
            failures,
            worst < 1e-6,
            "annulus eps={eps}: closed form vs bem disagree by {worst:.3e}"
        );

        // Independent root oracle: bisection on the 2x2 mode determinant.
        let (_, sigma_plus) = annulus::mode_eigenvalues(eps, 0).unwrap();
        let oracle = bisect(|s| annulus::mode_determinant(eps, 0, s) / s, 1e-3, 100.0);
        check!(
            failures,
            (sigma_plus - oracle).abs() <= 1e-12 * sigma_plus.max(1.0),
            "eps={eps} mode 0: closed form {sigma_plus:.15e} vs oracle {oracle:.15e}"
        );
        for n in 1..=6 {
            let (small, big) = annulus::mode_eigenvalues(eps, n).unwrap();
            let mid = 0.5 * (small + big);
            let small_oracle = bisect(|s| annulus::mode_determinant(eps, n, s), 1e-9, mid);
            let big_oracle = bisect(|s| annulus::mode_determinant(eps, n, s), mid, 10.0 * big);
            check!(
                failures,
                (small - small_oracle).abs() <= 1e-12 * small.max(1.0),
                "eps={eps} mode {n}: small root {small:.15e} vs oracle {small_oracle:.15e}"
            );
            check!(
                failures,
                (big - big_oracle).abs() <= 1e-12 * big.max(1.0),
                "eps={eps} mode {n}: big root {big:.15e} vs oracle {big_oracle:.15e}"
            );
        }
    }
    conclude(5, "annulus closed form matches bem and a root oracle", failures);
}

#[test]
fn a6_identity_chain_residuals_vanish_through_covers() {
    let mut failures = Vec::new();
    let maps = [
        map_from_pairs(&[[1.0, 0.0]]).unwrap(),
        map_from_pairs(&[[1.0, 0.0], [0.3, 0.0]]).unwrap(),
    ];
    for (which, map) in maps.iter().enumerate() {
        for degree in 1..=3 {
            let cover = CoverMap::new(map.clone(), degree).unwrap();
            let mu = mass_parameter(&cover, 1024).unwrap();
            for k in 1..=6 {
                let mode = string_mode(k, mu.total());
                let report = verify_identity_chain(&cover, &mode).unwrap();
                let residual = report.max_residual();
                check!(
                    failures,
                    residual < 1e-9,
                    "map {which}, degree {degree}, h_{k}: max residual {residual:.3e}"
                );
                check!(
                    failures,
                    report.cauchy_schwarz_slack >= -1e-10,
                    "map {which}, degree {degree}, h_{k}: schwarz slack {:.3e}",
                    report.cauchy_schwarz_slack
                );
            }
        }
    }
    conclude(6, "identity chain residuals < 1e-9 for degrees 1..3", failures);
}

#[test]
fn a7_string_mode_rayleigh_quotients_are_exact() {
    let mut failures = Vec::new();
    let grid = 1024;
    for length in [TAU, 1.0, 5.0] {
        for k in 1..=10 {
            let mode = string_mode(k, length);
            let n = k.div_ceil(2) as f64;
            let want = (TAU * n / length).powi(2);
            let samples: Vec<f64> = (0..grid)
                .map(|j| mode.evaluate(j as f64 * length / grid as f64))
                .collect();
            let got = string_rayleigh(&samples, length).unwrap();
            check!(
                failures,
                (got - want).abs() <= 1e-12 * want,
                "L={length}, h_{k}: quotient {got:.15e}, expected {want:.15e}"
            );
            check!(
                failures,
                (mode.rayleigh() - want).abs() <= 1e-12 * want,
                "L={length}, h_{k}: closed form {:.15e}, expected {want:.15e}",
                mode.rayleigh()
            );
        }
    }
    conclude(7, "string modes give (2 pi n / L)^2 to 1e-12", failures);
}

#[test]
fn a8_pair_construction_dominates_eigenvalue_products() {
    let mut failures = Vec::new();
    let oval = ConformalMap::univalent(vec![
        Complex64::ONE,
        Complex64::ZERO,
        Complex64::new(0.1, 0.0),
    ])
    .unwrap();
    for (name, map) in [("disk", disk_map()), ("oval", oval)] {
        for (p, q) in [(1, 1), (1, 2), (2, 2)] {
            let report = verify_pair_construction(&map, p, q, 32).unwrap();
            let product = report.rayleigh_alpha * report.rayleigh_beta;
            check!(
                failures,
                product >= report.sigma_product - 1e-7,
                "{name} (p={p}, q={q}): R(alpha) R(beta) = {product:.12e} \
                 undercuts sigma_p sigma_q = {:.12e}",
                report.sigma_product
            );
        }
    }
    conclude(8, "constrained test pairs never undercut sigma_p sigma_q", failures);
}

#[test]
fn a9_convergence_and_scale_invariance() {
    let mut failures = Vec::new();

    let cardioid = map_from_pairs(&[[1.0, 0.0], [0.3, 0.0]]).unwrap();
    let drift = fourier::convergence_report(&cardioid, 32, 8).unwrap().max_drift;
    check!(
        failures,
        drift < 1e-6,
        "fourier cardioid: doubling the cutoff moves eigenvalues by {drift:.3e}"
    );

    let eccentric = builtin_domain("eccentric")
        .unwrap()
        .to_domain_spec()
        .unwrap();
    for (name, spec) in [("disk", disk_spec()), ("eccentric", eccentric)] {
        let coarse = bem::steklov_spectrum_bem(&spec, 128, 8).unwrap();
        let fine = bem::steklov_spectrum_bem(&spec, 256, 8).unwrap();
        for k in 1..=8 {
            let rel = (fine.sigma(k) - coarse.sigma(k)).abs() / fine.sigma(k).max(1.0);
            check!(
                failures,
                rel < 1e-6,
                "bem {name}: sigma_{k} moves by {rel:.3e} when doubling the grid"
            );
        }
    }

    for name in ["cardioid", "annulus-0.5"] {
        let input = builtin_domain(name).unwrap();
        let worst = scale_sweep(&input, &SolveOptions::default(), 6).unwrap();
        check!(
            failures,
            worst < 1e-8,
            "{name}: sigma_k L drifts by {worst:.3e} under rescaling"
        );
    }
    conclude(9, "solver convergence and scale invariance", failures);
}
