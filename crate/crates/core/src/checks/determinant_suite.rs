//! Suite for the band-matrix determinant identities: the three matrix
//! families symbolically at small dimension, with random rational entries at
//! larger dimension, and coefficient extraction from the polynomial
//! determinant.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::poly::Poly;
use crate::algebra::scalar::factorial;
use crate::algebra::{Int, Rat, Ring};
use crate::demoivre::{demoivre_symbolic, demoivre_table};
use crate::determinant::{build, identity_check, BandKind};

use super::report::CheckReport;
use super::{small_rat, small_rat_vec};

/// Default cap on the dimension for the rational-entry cases.
pub const DEFAULT_MAX_N: u32 = 12;

pub fn run(max_n: Option<u32>, seed: u64) -> CheckReport {
    let cap = max_n.unwrap_or(DEFAULT_MAX_N).max(1);
    let mut report = CheckReport::new("determinant");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    symbolic(&mut report, cap.min(6));
    rational(&mut report, &mut rng, cap);
    extraction(&mut report, cap.min(8));

    report.finish()
}

/// Fully symbolic identity for each family: alternating De Moivre sum in a
/// polynomial variable equals the scaled determinant.
fn symbolic(report: &mut CheckReport, max_n: u32) {
    for kind in BandKind::all() {
        for n in 1..=max_n {
            let outcome = identity_check(kind, n).unwrap();
            report.record(
                format!("symbolic/{}/{:02}", kind.label(), n),
                format!("kind={} n={}", kind.label(), n),
                "alternating sum equals the scaled band determinant",
                outcome.pass,
                outcome.lhs,
                outcome.rhs_on_failure.unwrap_or_else(|| "(equal)".into()),
            );
        }
    }
}

/// The same identities with random rational `a` and `t`, each side built by
/// an unrelated pipeline: tabulated polynomial values on the left, the minor
/// recurrence on the right.
fn rational(report: &mut CheckReport, rng: &mut ChaCha8Rng, max_n: u32) {
    for kind in BandKind::all() {
        for n in 1..=max_n {
            let a = small_rat_vec(rng, n as usize);
            let t = small_rat(rng);
            let n_us = n as usize;

            // Arguments of the polynomial values; the factorial-weighted
            // family scales argument i by 1/i.
            let args: Vec<Rat> = match kind {
                BandKind::N => a
                    .iter()
                    .enumerate()
                    .map(|(i, v)| v / Rat::from_integer(Int::from(i as i64 + 1)))
                    .collect(),
                _ => a.clone(),
            };
            let table = demoivre_table(n_us, n_us, &args).unwrap();
            let mut lhs = Rat::zero();
            for k in 1..=n_us {
                let weight = match kind {
                    BandKind::M => Rat::one(),
                    BandKind::N => Rat::new(Int::from(1), factorial(k as u32)),
                    BandKind::O => Rat::new(Int::from(1), Int::from(k as i64)),
                };
                let mut term = weight * Ring::pow(&t, k as u32) * &table[k][n_us];
                if (n_us + k) % 2 == 1 {
                    term = -term;
                }
                lhs += term;
            }

            let det = build(kind, n_us, &t, &a).unwrap().det_exact();
            let rhs = match kind {
                BandKind::M => det,
                BandKind::N => det / Rat::from_integer(factorial(n)),
                BandKind::O => det / Rat::from_integer(Int::from(n as i64)),
            };
            report.record_eq(
                format!("rational/{}/{:02}", kind.label(), n),
                format!("kind={} n={} t={}", kind.label(), n, t),
                "alternating sum equals the scaled band determinant",
                &lhs,
                &rhs,
            );
        }
    }
}

/// `(-1)^{n+k} [t^k] det = A_{n,k}` symbolically: each polynomial value can
/// be read off from one determinant.
fn extraction(report: &mut CheckReport, max_n: u32) {
    for n in 1..=max_n {
        let t: Poly<MultiPoly> = Poly::var("t");
        let a: Vec<Poly<MultiPoly>> = (1..=n as usize)
            .map(|i| Poly::constant("t", MultiPoly::var(i)))
            .collect();
        let det = build(BandKind::M, n as usize, &t, &a).unwrap().det_exact();
        for k in 1..=n {
            let mut coeff = det.coeff(k as usize);
            if (n + k) % 2 == 1 {
                coeff = coeff.neg();
            }
            let expected = demoivre_symbolic(n, k).unwrap().to_multipoly();
            report.record_eq(
                format!("extraction/{:02}-{:02}", n, k),
                format!("n={} k={}", n, k),
                "signed t-coefficient of the determinant recovers A_{n,k}",
                &coeff,
                &expected,
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::DEFAULT_SEED;

    #[test]
    fn full_caps_pass() {
        let report = run(None, DEFAULT_SEED);
        assert!(report.all_pass(), "{}", report.render_plain(false));
        // 18 symbolic + 36 rational + 36 extraction.
        assert_eq!(report.cases.len(), 90);
    }
}
