//! Suite for the integer and polynomial sequences: partition numbers by
//! three routes, Ramanujan tau by two routes plus its divisibility and the
//! three tau/partition inversion identities, Bernoulli numbers and
//! polynomials, Stirling triangles against their polynomial evaluations,
//! cyclotomic polynomials against long division, and the orthogonal families
//! against their three-term recurrences.

use num_integer::Integer;

use crate::algebra::scalar::{rat, rat_int};
use crate::algebra::{Int, Rat, Ring, UniPoly};
use crate::sequences::bernoulli::{
    bernoulli_demoivre, bernoulli_number, bernoulli_poly, norlund_poly, norlund_via_stirling,
    tangent_identity_sides,
};
use crate::sequences::cyclotomic::{cyclotomic, cyclotomic_division_oracle, totient};
use crate::sequences::orthogonal::{
    chebyshev_t_explicit, fibonacci_shifted, orthogonal_poly, OrthogonalKind,
};
use crate::sequences::partitions::{
    partitions_demoivre_upto, partitions_sigma_upto, partitions_upto,
};
use crate::sequences::stirling::{
    cycle_triangle, stirling_cycle_via_demoivre, stirling_subset_via_demoivre, subset_triangle,
};
use crate::sequences::tau::{tau_demoivre_upto, tau_partition_inversions, tau_q_expansion_upto};

use super::report::CheckReport;

/// Default caps per family; `--max-n` lowers any of them.
pub const DEFAULT_PARTITIONS: u32 = 60;
pub const DEFAULT_TAU: u32 = 100;
pub const DEFAULT_INVERSIONS: u32 = 40;
pub const DEFAULT_BERNOULLI: u32 = 24;
pub const DEFAULT_STIRLING: u32 = 20;
pub const DEFAULT_CYCLOTOMIC: u32 = 105;
pub const DEFAULT_ORTHOGONAL: u32 = 10;

fn capped(default: u32, max_n: Option<u32>) -> u32 {
    match max_n {
        Some(m) => default.min(m.max(1)),
        None => default,
    }
}

pub fn run(max_n: Option<u32>) -> CheckReport {
    let mut report = CheckReport::new("sequences");

    partitions(&mut report, capped(DEFAULT_PARTITIONS, max_n));
    tau(&mut report, capped(DEFAULT_TAU, max_n));
    tau_inversions(&mut report, capped(DEFAULT_INVERSIONS, max_n));
    bernoulli(&mut report, capped(DEFAULT_BERNOULLI, max_n));
    stirling(&mut report, capped(DEFAULT_STIRLING, max_n));
    cyclotomic_family(&mut report, capped(DEFAULT_CYCLOTOMIC, max_n));
    orthogonal(&mut report, capped(DEFAULT_ORTHOGONAL, max_n));

    report.finish()
}

/// `p(n)` by the pentagonal recurrence, by the binomial polynomial sum, and
/// by the divisor-sum exponential.
fn partitions(report: &mut CheckReport, max_n: u32) {
    let cap = max_n as usize;
    let direct = partitions_upto(cap);
    let by_demoivre = partitions_demoivre_upto(cap).unwrap();
    let by_sigma = partitions_sigma_upto(cap).unwrap();
    for n in 1..=cap {
        report.record_eq(
            format!("partitions/demoivre/{:03}", n),
            format!("n={}", n),
            "binomial polynomial sum matches the pentagonal recurrence",
            &by_demoivre[n],
            &direct[n],
        );
        report.record_eq(
            format!("partitions/sigma/{:03}", n),
            format!("n={}", n),
            "divisor-sum exponential matches the pentagonal recurrence",
            &by_sigma[n],
            &Rat::from_integer(direct[n].clone()),
        );
    }
}

/// `tau(n)` from the 24th power of the Euler product versus the polynomial
/// route, plus the divisibility by `24/gcd(n+23, 24)`.
fn tau(report: &mut CheckReport, max_n: u32) {
    let cap = max_n as usize;
    let by_q = tau_q_expansion_upto(cap);
    let by_demoivre = tau_demoivre_upto(max_n).unwrap();
    for n in 1..=cap {
        report.record_eq(
            format!("tau/routes/{:03}", n),
            format!("n={}", n),
            "q-expansion and polynomial routes agree",
            &by_q[n],
            &by_demoivre[n],
        );
        let modulus = Int::from(24) / Int::from(n as u32 + 23).gcd(&Int::from(24));
        let remainder = &by_q[n] % &modulus;
        report.record(
            format!("tau/divisibility/{:03}", n),
            format!("n={} modulus={}", n, modulus),
            "tau(n) is divisible by 24/gcd(n+23, 24)",
            remainder == Int::from(0),
            format!("{} mod {} = {}", by_q[n], modulus, remainder),
            "0".into(),
        );
    }
}

/// The three inversion identities tying tau and the partition numbers.
fn tau_inversions(report: &mut CheckReport, max_n: u32) {
    for n in 1..=max_n {
        let outcome = tau_partition_inversions(n).unwrap();
        report.record(
            format!("tau/inversion/{:02}", n),
            format!("n={}", n),
            "tau from p, p from tau, and the log recursion all close",
            outcome.pass(),
            format!(
                "tau_from_partitions={} partitions_from_tau={} tau_recursion={}",
                outcome.tau_from_partitions, outcome.partitions_from_tau, outcome.tau_recursion
            ),
            "all true".into(),
        );
    }
}

/// Bernoulli numbers by two routes, the polynomial specializations, and the
/// tangent/arctangent identity.
fn bernoulli(report: &mut CheckReport, max_n: u32) {
    for n in 0..=max_n {
        report.record_eq(
            format!("bernoulli/routes/{:02}", n),
            format!("n={}", n),
            "polynomial-sum route matches the defining recurrence",
            &bernoulli_demoivre(n).unwrap(),
            &bernoulli_number(n),
        );
    }
    for n in 0..=max_n.min(16) {
        let poly = bernoulli_poly(n).unwrap();
        report.record_eq(
            format!("bernoulli/poly-at-zero/{:02}", n),
            format!("n={}", n),
            "B_n(0) equals the Bernoulli number",
            &poly.eval(&rat_int(0)),
            &bernoulli_number(n),
        );
        let norlund = norlund_poly(n).unwrap();
        report.record_eq(
            format!("bernoulli/norlund-at-one/{:02}", n),
            format!("n={}", n),
            "order-parameter value 1 recovers the Bernoulli number",
            &norlund.eval(&rat_int(1)),
            &bernoulli_number(n),
        );
    }
    for n in 0..=max_n.min(12) {
        report.record_eq(
            format!("bernoulli/norlund-stirling/{:02}", n),
            format!("n={}", n),
            "two constructions of the same polynomial agree",
            &norlund_via_stirling(n).unwrap(),
            &norlund_poly(n).unwrap(),
        );
    }
    for n in (2..=max_n.min(12)).step_by(2) {
        let (lhs, rhs) = tangent_identity_sides(n).unwrap();
        report.record_eq(
            format!("bernoulli/tangent/{:02}", n),
            format!("n={}", n),
            "tangent-number identity: both sides agree",
            &lhs,
            &rhs,
        );
    }
}

/// Stirling triangles against the scaled polynomial evaluations.
fn stirling(report: &mut CheckReport, max_n: u32) {
    let cap = max_n as usize;
    let subset = subset_triangle(cap);
    let cycle = cycle_triangle(cap);
    for n in 1..=max_n {
        for k in 1..=n {
            report.record_eq(
                format!("stirling/subset/{:02}-{:02}", n, k),
                format!("n={} k={}", n, k),
                "polynomial evaluation matches the triangle recurrence",
                &stirling_subset_via_demoivre(n, k).unwrap(),
                &Rat::from_integer(subset[n as usize][k as usize].clone()),
            );
            report.record_eq(
                format!("stirling/cycle/{:02}-{:02}", n, k),
                format!("n={} k={}", n, k),
                "polynomial evaluation matches the triangle recurrence",
                &stirling_cycle_via_demoivre(n, k).unwrap(),
                &Rat::from_integer(cycle[n as usize][k as usize].clone()),
            );
        }
    }
}

/// Cyclotomic polynomials from the exponential construction against long
/// division, with integrality and the degree `phi(n)`. The construction
/// normalizes the constant term to 1, which holds from index 2 on.
fn cyclotomic_family(report: &mut CheckReport, max_n: u32) {
    for n in 2..=max_n as u64 {
        let poly = cyclotomic(n).unwrap();
        let oracle = cyclotomic_division_oracle(n);
        let integral = poly.coeffs().iter().all(|c| c.is_integer());
        let as_ints: Vec<Int> = poly.coeffs().iter().map(|c| c.to_integer()).collect();
        let pass =
            integral && as_ints == oracle && poly.degree() == Some(totient(n) as usize);
        report.record(
            format!("cyclotomic/{:03}", n),
            format!("n={} degree={}", n, totient(n)),
            "exponential construction matches long division, integrally",
            pass,
            poly.to_string(),
            UniPoly::new("x", oracle.into_iter().map(Rat::from_integer).collect()).to_string(),
        );
    }
}

/// Orthogonal families against their three-term recurrences and closed-form
/// cross-identifications.
fn orthogonal(report: &mut CheckReport, max_n: u32) {
    let cap = max_n.max(2);
    let x = UniPoly::var("x");

    let t: Vec<UniPoly> = (0..=cap)
        .map(|n| orthogonal_poly(OrthogonalKind::ChebyshevT, n, None).unwrap())
        .collect();
    let u: Vec<UniPoly> = (0..=cap)
        .map(|n| orthogonal_poly(OrthogonalKind::ChebyshevU, n, None).unwrap())
        .collect();
    let h: Vec<UniPoly> = (0..=cap)
        .map(|n| orthogonal_poly(OrthogonalKind::Hermite, n, None).unwrap())
        .collect();
    let p: Vec<UniPoly> = (0..=cap)
        .map(|n| orthogonal_poly(OrthogonalKind::Legendre, n, None).unwrap())
        .collect();

    for n in 1..cap as usize {
        report.record_eq(
            format!("orthogonal/chebyshev-t/{:02}", n + 1),
            format!("n={}", n + 1),
            "T_{n+1} = 2x T_n - T_{n-1}",
            &t[n + 1],
            &x.scale(&rat_int(2)).mul(&t[n]).sub(&t[n - 1]),
        );
        report.record_eq(
            format!("orthogonal/chebyshev-u/{:02}", n + 1),
            format!("n={}", n + 1),
            "U_{n+1} = 2x U_n - U_{n-1}",
            &u[n + 1],
            &x.scale(&rat_int(2)).mul(&u[n]).sub(&u[n - 1]),
        );
        report.record_eq(
            format!("orthogonal/hermite/{:02}", n + 1),
            format!("n={}", n + 1),
            "H_{n+1} = 2x H_n - 2n H_{n-1}",
            &h[n + 1],
            &x.scale(&rat_int(2))
                .mul(&h[n])
                .sub(&h[n - 1].scale(&rat_int(2 * n as i64))),
        );
        report.record_eq(
            format!("orthogonal/legendre/{:02}", n + 1),
            format!("n={}", n + 1),
            "(n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}",
            &p[n + 1].scale(&rat_int(n as i64 + 1)),
            &x.scale(&rat_int(2 * n as i64 + 1))
                .mul(&p[n])
                .sub(&p[n - 1].scale(&rat_int(n as i64))),
        );
    }

    for n in 0..=cap.min(8) {
        report.record_eq(
            format!("orthogonal/gegenbauer-one/{:02}", n),
            format!("n={}", n),
            "weight-parameter 1 gives the second-kind Chebyshev family",
            &orthogonal_poly(OrthogonalKind::Gegenbauer, n, Some(&rat_int(1))).unwrap(),
            &u[n as usize],
        );
        report.record_eq(
            format!("orthogonal/gegenbauer-half/{:02}", n),
            format!("n={}", n),
            "weight-parameter 1/2 gives the Legendre family",
            &orthogonal_poly(OrthogonalKind::Gegenbauer, n, Some(&rat(1, 2))).unwrap(),
            &p[n as usize],
        );
    }

    for n in 1..=cap.min(8) {
        report.record_eq(
            format!("orthogonal/chebyshev-explicit/{:02}", n),
            format!("n={}", n),
            "kernel route matches the explicit alternating sum",
            &t[n as usize],
            &chebyshev_t_explicit(n),
        );
    }

    // F_{n+2} = F_{n+1} + F_n through the shifted polynomial values.
    let fib: Vec<Int> = (0..=cap.max(3))
        .map(|n| fibonacci_shifted(n).unwrap())
        .collect();
    for n in 0..fib.len() - 2 {
        report.record_eq(
            format!("orthogonal/fibonacci/{:02}", n + 2),
            format!("n={}", n + 2),
            "shifted values satisfy the Fibonacci recurrence",
            &fib[n + 2],
            &(&fib[n + 1] + &fib[n]),
        );
    }
}
