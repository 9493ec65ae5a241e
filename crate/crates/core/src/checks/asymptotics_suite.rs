//! Suite for the asymptotic engines: Stirling-series coefficients by every
//! route, the partition-expansion coefficients exactly and numerically, the
//! two trend validations against exact references, the Gamma Taylor check,
//! the saddle-point correction polynomials, and the Lambert and Laplace
//! kernels they depend on.

use num_traits::ToPrimitive;

use crate::algebra::scalar::{rat, rat_int};
use crate::algebra::Rat;
use crate::asymptotics::partition_asym::{PiForm, QSqrt6};
use crate::asymptotics::{
    a_r_exact, compare_expansion, ell_poly, gamma_taylor_check, lambert_w, laplace_psi,
    partition_asym_coeffs, partition_asym_eval, stirling_gamma, GammaRoute,
};
use crate::asymptotics::ell::ell_poly_series_route;
use crate::asymptotics::gamma_taylor::odd_series_product_check;
use crate::asymptotics::stirling_gamma::stirling_gamma_direct_sum;
use crate::sequences::partitions::partitions_upto;

use super::report::CheckReport;

/// Default cap on the Stirling-series coefficient index.
pub const DEFAULT_MAX_M: u32 = 8;

pub fn run(max_n: Option<u32>) -> CheckReport {
    let cap = max_n.unwrap_or(DEFAULT_MAX_M).clamp(2, 16);
    let mut report = CheckReport::new("asymptotics");

    stirling_routes(&mut report, cap);
    partition_coefficients(&mut report);
    partition_trend(&mut report);
    integral_trend(&mut report);
    gamma_taylor(&mut report);
    saddle_corrections(&mut report);
    kernels(&mut report);

    report.finish()
}

/// The Stirling-series coefficients by the Laplace route, the
/// Bernoulli-tail route, the zeta-tail route, and the literal double sum.
fn stirling_routes(report: &mut CheckReport, max_m: u32) {
    for m in 0..=max_m {
        let perron = stirling_gamma(m, GammaRoute::Perron).unwrap();
        let bernoulli = stirling_gamma(m, GammaRoute::Bernoulli).unwrap();
        let zeta = stirling_gamma(m, GammaRoute::Zeta).unwrap();
        let direct = stirling_gamma_direct_sum(m).unwrap();
        let pass = perron == bernoulli && perron == zeta && perron == direct;
        report.record(
            format!("stirling-gamma/routes/{:02}", m),
            format!("m={}", m),
            "four independent routes produce the same exact rational",
            pass,
            perron.to_string(),
            format!("bernoulli={} zeta={} direct={}", bernoulli, zeta, direct),
        );
    }
    report.record_eq(
        "stirling-gamma/value/01".into(),
        "m=1".into(),
        "first correction to Stirling's formula",
        &stirling_gamma(1, GammaRoute::Bernoulli).unwrap(),
        &rat(1, 12),
    );
    report.record_eq(
        "stirling-gamma/value/02".into(),
        "m=2".into(),
        "second correction to Stirling's formula",
        &stirling_gamma(2, GammaRoute::Bernoulli).unwrap(),
        &rat(1, 288),
    );

    // The series whose exponential generates the coefficients has only odd
    // powers, so its coefficient list is reproduced term by term.
    let exp_tail = odd_series_product_check(12).unwrap();
    for m in 0..=10u32 {
        report.record_eq(
            format!("stirling-gamma/exp-tail/{:02}", m),
            format!("m={}", m),
            "exponentiated odd tail reproduces the coefficient list",
            &exp_tail.coeff(m as usize),
            &stirling_gamma(m, GammaRoute::Bernoulli).unwrap(),
        );
    }
}

fn pi_form(entries: &[(i32, Rat, Rat)]) -> PiForm {
    let mut out = PiForm::zero();
    for (power, rational, surd) in entries {
        out.add_term(
            *power,
            QSqrt6 { rational: rational.clone(), surd: surd.clone() },
        );
    }
    out
}

/// The first partition-expansion coefficients, exactly and as floats to the
/// displayed six significant figures.
fn partition_coefficients(report: &mut CheckReport) {
    let c = partition_asym_coeffs(3).unwrap();

    report.record_eq(
        "partition-coeffs/exact/0".into(),
        "r=0".into(),
        "leading coefficient is 1",
        &c[0],
        &pi_form(&[(0, rat_int(1), rat_int(0))]),
    );
    // C_1 = -(72 + pi^2) / (24 sqrt(6) pi) = -sqrt(6)/(2 pi) - sqrt(6) pi/144.
    report.record_eq(
        "partition-coeffs/exact/1".into(),
        "r=1".into(),
        "closed form -(72 + pi^2)/(24 sqrt(6) pi)",
        &c[1],
        &pi_form(&[(-1, rat_int(0), rat(-1, 2)), (1, rat_int(0), rat(-1, 144))]),
    );
    // C_2 = (432 + pi^2) / 6912.
    report.record_eq(
        "partition-coeffs/exact/2".into(),
        "r=2".into(),
        "closed form (432 + pi^2)/6912",
        &c[2],
        &pi_form(&[(0, rat(1, 16), rat_int(0)), (2, rat(1, 6912), rat_int(0))]),
    );

    for (r, displayed, tol) in [(1usize, -0.443288, 5e-7), (2, 0.0639279, 5e-8)] {
        let value = c[r].eval_f64();
        report.record(
            format!("partition-coeffs/float/{}", r),
            format!("r={}", r),
            "numeric value matches to six significant figures",
            (value - displayed).abs() < tol,
            format!("{:.7}", value),
            format!("{} +- {:.0e}", displayed, tol),
        );
    }
}

/// Relative error of the truncated expansion against exact partition
/// numbers: non-increasing in `n` for each truncation, and below `1e-3` at
/// the largest size with three correction terms.
fn partition_trend(report: &mut CheckReport) {
    let sizes = [100usize, 200, 400, 800];
    let exact = partitions_upto(800);
    for r in 1..=3u32 {
        let errors: Vec<f64> = sizes
            .iter()
            .map(|&n| {
                let approx = partition_asym_eval(n as u64, r).unwrap();
                let truth = exact[n].to_f64().unwrap();
                (approx / truth - 1.0).abs()
            })
            .collect();
        let monotone = errors.windows(2).all(|w| w[1] <= w[0]);
        let tail_ok = r < 3 || errors[sizes.len() - 1] < 1e-3;
        report.record(
            format!("partition-trend/r={}", r),
            format!("n in {:?}", sizes),
            "relative error non-increasing in n; r=3 below 1e-3 at n=800",
            monotone && tail_ok,
            format!("{:?}", errors.iter().map(|e| format!("{:.3e}", e)).collect::<Vec<_>>()),
            "non-increasing".into(),
        );
    }
}

/// Relative error of the log-power integral expansion against adaptive
/// quadrature: strictly decreasing from n=50 to n=200 at each truncation.
fn integral_trend(report: &mut CheckReport) {
    let sizes = [50u32, 100, 200];
    for r in 1..=3u32 {
        let comparisons: Vec<_> = sizes
            .iter()
            .map(|&n| compare_expansion(n, 1.0, r).unwrap())
            .collect();
        let errors: Vec<f64> = comparisons.iter().map(|c| c.rel_error).collect();
        let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
        let converged = comparisons.iter().all(|c| c.quadrature_converged);
        report.record(
            format!("integral-trend/r={}", r),
            format!("alpha=1 n in {:?}", sizes),
            "relative error strictly decreasing in n at fixed truncation",
            decreasing && converged,
            format!("{:?}", errors.iter().map(|e| format!("{:.3e}", e)).collect::<Vec<_>>()),
            "strictly decreasing".into(),
        );
    }
}

/// Taylor expansion of the Gamma function at order 20 against reference
/// values, each sample with its remainder-derived tolerance.
fn gamma_taylor(report: &mut CheckReport) {
    for sample in gamma_taylor_check(20).unwrap() {
        report.record(
            format!("gamma-taylor/sample/{:+.2}", sample.z),
            format!("z={:+.2} tolerance={:.0e}", sample.z, sample.tolerance),
            "series value within the truncation tolerance of the reference",
            sample.passes(),
            format!("{:.15}", sample.computed),
            format!("{:.15} +- {:.0e}", sample.reference, sample.tolerance),
        );
    }
}

/// The correction polynomials of the log-power integral: the two
/// construction routes agree, and the displayed small values come out.
fn saddle_corrections(report: &mut CheckReport) {
    for n in 1..=10u32 {
        let closed = ell_poly(n);
        let series = ell_poly_series_route(n).unwrap();
        report.record_eq(
            format!("saddle/ell-routes/{:02}", n),
            format!("n={}", n),
            "cycle-number closed form matches the series route",
            &closed,
            &series,
        );
    }
    report.record_eq(
        "saddle/ell-value/3".into(),
        "n=3 u=1".into(),
        "third polynomial at u=1",
        &ell_poly(3).eval(&rat_int(1)).unwrap(),
        &rat(7, 6),
    );
    report.record_eq(
        "saddle/ell-value/4".into(),
        "n=4 u=1".into(),
        "fourth polynomial at u=1",
        &ell_poly(4).eval(&rat_int(1)).unwrap(),
        &rat(-35, 24),
    );
    report.record_eq(
        "saddle/a1-at-one".into(),
        "r=1 u=1".into(),
        "first correction term at u=1",
        &a_r_exact(1, &rat_int(1)).unwrap(),
        &rat(35, 192),
    );
}

/// The Lambert function and the Laplace coefficient engine, each against an
/// independent reference.
fn kernels(report: &mut CheckReport) {
    for (i, &x) in [0.5f64, 1.0, std::f64::consts::E, 10.0].iter().enumerate() {
        let w = lambert_w(x).unwrap();
        let residual = (w * w.exp() - x).abs() / x;
        report.record(
            format!("lambert/defining/{}", i),
            format!("x={}", x),
            "w e^w returns the argument",
            residual < 1e-12,
            format!("residual={:.2e}", residual),
            "< 1e-12".into(),
        );
    }

    // The cosine kernel: exact expansion coefficients of the central
    // modified Bessel integral are 1, 1/8, 3/128.
    let a = vec![rat(1, 2), rat_int(0), rat(-1, 24), rat_int(0), rat(1, 720)];
    let mut b = vec![rat_int(0); 5];
    b[0] = rat_int(1);
    for (s, expected) in [(0u32, rat_int(1)), (2, rat(1, 8)), (4, rat(3, 128))] {
        let psi = laplace_psi(s, &a, &b).unwrap();
        report.record_eq(
            format!("laplace/bessel/{}", s),
            format!("s={}", s),
            "cosine-kernel coefficients match the Bessel expansion",
            &psi.coeff,
            &expected,
        );
    }
}
