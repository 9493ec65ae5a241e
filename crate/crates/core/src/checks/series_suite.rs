//! Suite for formal power series: compositional inversion by two methods,
//! exp/log round trips by two exponentiation algorithms, reciprocals,
//! binomial powers, composition powers against the double-sum formula, and
//! the forward/inverse coefficient transform pair.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::scalar::rat_int;
use crate::algebra::Rat;
use crate::series::{demoivre_compose, moyal_forward, moyal_invert, Series};

use super::report::CheckReport;
use super::{small_rat_nonzero, small_rat_vec};

/// Default cap on the truncation order of random series.
pub const DEFAULT_MAX_ORDER: u32 = 15;

pub fn run(max_n: Option<u32>, seed: u64) -> CheckReport {
    let cap = max_n.unwrap_or(DEFAULT_MAX_ORDER).max(2) as usize;
    let mut report = CheckReport::new("series");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    inversion(&mut report, &mut rng, cap);
    exp_log(&mut report, &mut rng, cap);
    reciprocal(&mut report, &mut rng, cap);
    binomial_power(&mut report, &mut rng, cap);
    compose_power(&mut report, &mut rng, cap.min(10));
    transform_pair(&mut report, &mut rng, cap.min(10));

    report.finish()
}

/// A random series with zero constant term and invertible linear term.
fn random_invertible(rng: &mut ChaCha8Rng, order: usize) -> Series<Rat> {
    let mut coeffs = small_rat_vec(rng, order + 1);
    coeffs[0] = rat_int(0);
    coeffs[1] = small_rat_nonzero(rng);
    Series::new(coeffs)
}

/// Lagrange inversion versus order-by-order solving, plus the round trip
/// `g(f(x)) = x`.
fn inversion(report: &mut CheckReport, rng: &mut ChaCha8Rng, cap: usize) {
    for i in 0..200 {
        let order = rng.random_range(2..=cap);
        let f = random_invertible(rng, order);
        let by_lagrange = f.inverse_lagrange().unwrap();
        let by_recursion = f.inverse_recursive().unwrap();
        let round_trip = by_lagrange.compose(&f).unwrap();
        let pass = by_lagrange == by_recursion && round_trip == Series::x(order);
        report.record(
            format!("inverse/{:03}", i),
            format!("order={} f1={}", order, f.coeff(1)),
            "Lagrange and recursive inverses agree and compose back to x",
            pass,
            format!("{}", by_lagrange),
            format!("{}", by_recursion),
        );
    }
}

/// `exp` by the derivative recurrence versus the explicit sum formula, then
/// `log` takes the result back.
fn exp_log(report: &mut CheckReport, rng: &mut ChaCha8Rng, cap: usize) {
    let one = rat_int(1);
    for i in 0..40 {
        let order = rng.random_range(2..=cap);
        let mut coeffs = small_rat_vec(rng, order + 1);
        coeffs[0] = rat_int(0);
        let f = Series::new(coeffs);
        let by_recurrence = f.exp_recurrence().unwrap();
        let by_sum = f.exp_series(&one).unwrap();
        let back = by_recurrence.sub(&Series::one(order)).log_series(&one).unwrap();
        let pass = by_recurrence == by_sum && back == f;
        report.record(
            format!("exp-log/{:02}", i),
            format!("order={}", order),
            "two exp algorithms agree and log undoes exp",
            pass,
            format!("{}", by_recurrence),
            format!("{}", by_sum),
        );
    }
}

/// `u * (1/u) = 1` for units.
fn reciprocal(report: &mut CheckReport, rng: &mut ChaCha8Rng, cap: usize) {
    for i in 0..30 {
        let order = rng.random_range(2..=cap);
        let mut coeffs = small_rat_vec(rng, order + 1);
        coeffs[0] = small_rat_nonzero(rng);
        let u = Series::new(coeffs);
        let product = u.mul(&u.reciprocal().unwrap());
        report.record_eq(
            format!("reciprocal/{:02}", i),
            format!("order={} u0={}", order, u.coeff(0)),
            "series times its reciprocal is 1",
            &product,
            &Series::one(order),
        );
    }
}

/// `(1+f)^alpha (1+f)^{-alpha} = 1`, and integer binomial powers match
/// repeated multiplication.
fn binomial_power(report: &mut CheckReport, rng: &mut ChaCha8Rng, cap: usize) {
    for i in 0..30 {
        let order = rng.random_range(2..=cap);
        let mut coeffs = small_rat_vec(rng, order + 1);
        coeffs[0] = rat_int(0);
        let f = Series::new(coeffs);
        let alpha = small_rat_nonzero(rng);
        let plus = f.power_binomial(&alpha).unwrap();
        let minus = f.power_binomial(&(-alpha.clone())).unwrap();
        let cancels = plus.mul(&minus) == Series::one(order);

        let one_plus = f.add(&Series::one(order));
        let cubed_binomial = f.power_binomial(&rat_int(3)).unwrap();
        let cubed_direct = one_plus.power_int(3).unwrap();
        let pass = cancels && cubed_binomial == cubed_direct;
        report.record(
            format!("binomial-power/{:02}", i),
            format!("order={} alpha={}", order, alpha),
            "binomial powers cancel and match integer powers",
            pass,
            format!("{}", plus),
            format!("{}", minus),
        );
    }
}

/// `(g(f(x)))^r` by the closed double sum versus composing then powering.
fn compose_power(report: &mut CheckReport, rng: &mut ChaCha8Rng, cap: usize) {
    for i in 0..20 {
        let order = rng.random_range(2..=cap);
        let f = random_invertible(rng, order);
        let g = Series::new(small_rat_vec(rng, order + 1));
        let r = rng.random_range(1..=3u32);
        let by_formula = g.compose_power(&f, r).unwrap();
        let by_steps = g.compose(&f).unwrap().power_int(r as i64).unwrap();
        report.record_eq(
            format!("compose-power/{:02}", i),
            format!("order={} r={}", order, r),
            "double-sum composition power equals compose-then-power",
            &by_formula,
            &by_steps,
        );

        // The same double sum evaluated one coefficient at a time.
        let n = rng.random_range(0..=order as u32 - 1);
        let direct = demoivre_compose(n, r, &f.coeffs()[1..], g.coeffs()).unwrap();
        report.record_eq(
            format!("compose-coeff/{:02}", i),
            format!("n={} r={}", n, r),
            "coefficient formula matches the composed series",
            &direct,
            &by_steps.coeff(n as usize),
        );
    }
}

/// Forward coefficient transform then its inverse returns the input.
fn transform_pair(report: &mut CheckReport, rng: &mut ChaCha8Rng, cap: usize) {
    for i in 0..15 {
        let len = rng.random_range(3..=cap);
        let a = small_rat_vec(rng, len);
        let t = small_rat_nonzero(rng);
        let b = moyal_forward(&a, &t).unwrap();
        let back = moyal_invert(&b, &t).unwrap();
        report.record(
            format!("transform/{:02}", i),
            format!("len={} t={}", len, t),
            "inverse transform undoes the forward transform",
            back == a,
            format!("{:?}", a.iter().map(|q| q.to_string()).collect::<Vec<_>>()),
            format!("{:?}", back.iter().map(|q| q.to_string()).collect::<Vec<_>>()),
        );
    }
}
