//! Suite for the De Moivre polynomial module: the displayed five-term
//! polynomial at (10, 6), the coefficient-gcd theorem, enumeration versus
//! recursion on random rational arguments, the all-ones closed form, and the
//! coefficient bound.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::scalar::{binomial_int, rat_abs, rat_int, Int, Rat};
use crate::algebra::Ring;
use crate::demoivre::{
    coefficient_gcd, configured_max_n, demoivre_eval, demoivre_eval_recursive, demoivre_symbolic,
};

use super::report::CheckReport;
use super::small_rat_vec;

/// Default cap on `n` for the gcd sweep.
pub const DEFAULT_MAX_N: u32 = 30;

pub fn run(max_n: Option<u32>, seed: u64) -> CheckReport {
    let cap = max_n.unwrap_or(DEFAULT_MAX_N).min(configured_max_n());
    let mut report = CheckReport::new("demoivre");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    displayed_polynomial(&mut report);
    gcd_theorem(&mut report, cap);
    dual_route(&mut report, &mut rng, cap.min(25));
    all_ones_closed_form(&mut report, cap.min(12));
    coefficient_bound(&mut report, &mut rng, cap.min(15));

    report.finish()
}

/// `A_{10,6}` against its five-term expansion written out by hand.
fn displayed_polynomial(report: &mut CheckReport) {
    let got = demoivre_symbolic(10, 6).unwrap().to_multipoly();
    let mut expected = MultiPoly::new();
    for (exps, c) in [
        (vec![5, 0, 0, 0, 1], 6),
        (vec![4, 1, 0, 1], 30),
        (vec![4, 0, 2], 15),
        (vec![3, 2, 1], 60),
        (vec![2, 4], 15),
    ] {
        expected.add_term(exps, rat_int(c));
    }
    report.record_eq(
        "closed-form/10-6".into(),
        "n=10 k=6".into(),
        "five-term expansion of A_{10,6}",
        &got,
        &expected,
    );
}

/// `gcd of the coefficients of A_{n,k} = k / gcd(n,k)` for all pairs.
fn gcd_theorem(report: &mut CheckReport, max_n: u32) {
    for n in 1..=max_n {
        for k in 1..=n {
            let got = coefficient_gcd(n, k).unwrap();
            let expected = Int::from(k) / Int::from(n).gcd(&Int::from(k));
            report.record_eq(
                format!("gcd/{:03}-{:03}", n, k),
                format!("n={} k={}", n, k),
                "coefficient gcd equals k/gcd(n,k)",
                &got,
                &expected,
            );
        }
    }
}

/// Partition enumeration versus the additive recursion on random rational
/// argument sequences.
fn dual_route(report: &mut CheckReport, rng: &mut ChaCha8Rng, max_n: u32) {
    for i in 0..100 {
        let n = rng.random_range(1..=max_n);
        let k = rng.random_range(1..=n);
        let a = small_rat_vec(rng, n as usize);
        let by_enumeration = demoivre_eval(n, k, &a).unwrap();
        let by_recursion = demoivre_eval_recursive(n, k, &a).unwrap();
        report.record_eq(
            format!("dual-route/{:03}", i),
            format!("n={} k={}", n, k),
            "enumeration and recursion agree",
            &by_enumeration,
            &by_recursion,
        );
    }
}

/// `A_{n,k}(1, 1, ...) = C(n-1, n-k)`.
fn all_ones_closed_form(report: &mut CheckReport, max_n: u32) {
    for n in 1..=max_n {
        let ones = vec![Int::from(1); n as usize];
        for k in 1..=n {
            let got = demoivre_eval(n, k, &ones).unwrap();
            let expected = binomial_int((n - 1) as u64, (n - k) as u64);
            report.record_eq(
                format!("all-ones/{:02}-{:02}", n, k),
                format!("n={} k={}", n, k),
                "all-ones value equals C(n-1, n-k)",
                &got,
                &expected,
            );
        }
    }
}

/// `|A_{n,k}(a)| <= C(n-1, n-k) Q^k` for `Q = max |a_j|`.
fn coefficient_bound(report: &mut CheckReport, rng: &mut ChaCha8Rng, max_n: u32) {
    for i in 0..20 {
        let n = rng.random_range(2..=max_n);
        let k = rng.random_range(1..=n);
        let a = small_rat_vec(rng, n as usize);
        let q = a
            .iter()
            .map(rat_abs)
            .max()
            .unwrap_or_else(|| rat_int(0));
        let value = rat_abs(&demoivre_eval(n, k, &a).unwrap());
        let bound =
            Rat::from_integer(binomial_int((n - 1) as u64, (n - k) as u64)) * Ring::pow(&q, k);
        report.record(
            format!("bound/{:02}", i),
            format!("n={} k={} Q={}", n, k, q),
            "absolute value bounded by C(n-1,n-k) Q^k",
            value <= bound,
            value.to_string(),
            format!("<= {}", bound),
        );
    }
}
