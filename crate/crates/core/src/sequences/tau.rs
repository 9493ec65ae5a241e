//! Ramanujan's tau function by two routes, plus the inversion identities
//! tying tau to the partition numbers.
//!
//! Route one expands `q prod (1 - q^j)^24` directly, building the 24th
//! power by repeated squaring of exact integer series. Route two evaluates
//! `tau(n) = A_{n+23,24}(1, -1, -1, 0, 0, 1, 0, ...)`, the arguments being
//! the pentagonal product coefficients shifted up one index.

use crate::algebra::scalar::{binomial_i64, binomial_rat, Int, Rat};
use crate::demoivre::{demoivre_table, DemoivreError};
use crate::sequences::partitions::{partitions_upto, pentagonal_coeffs, sigma};

/// Largest `n` accepted by [`ramanujan_tau`]; the De Moivre route works
/// with `A_{n+23,24}`, whose cost grows quadratically in `n`.
pub const DEFAULT_TAU_BOUND: u32 = 200;

/// `tau(1)..tau(n_max)` from the q-expansion of `q prod (1 - q^j)^24`,
/// with the 24th power assembled as `E^16 * E^8` by repeated squaring.
/// Index `n` of the result holds `tau(n)`; index 0 is unused and zero.
pub fn tau_q_expansion_upto(n_max: usize) -> Vec<Int> {
    let order = n_max.saturating_sub(1);
    let e1 = pentagonal_coeffs(order);
    let square = |f: &[Int]| -> Vec<Int> {
        let mut out = vec![Int::from(0); order + 1];
        for i in 0..=order {
            if f[i] == Int::from(0) {
                continue;
            }
            for j in 0..=(order - i) {
                if f[j] != Int::from(0) {
                    out[i + j] += &f[i] * &f[j];
                }
            }
        }
        out
    };
    let e2 = square(&e1);
    let e4 = square(&e2);
    let e8 = square(&e4);
    let e16 = square(&e8);
    let mut e24 = vec![Int::from(0); order + 1];
    for i in 0..=order {
        if e16[i] == Int::from(0) {
            continue;
        }
        for j in 0..=(order - i) {
            if e8[j] != Int::from(0) {
                e24[i + j] += &e16[i] * &e8[j];
            }
        }
    }
    let mut tau = vec![Int::from(0); n_max + 1];
    for n in 1..=n_max {
        tau[n] = e24[n - 1].clone();
    }
    tau
}

/// `tau(1)..tau(n_max)` as `A_{n+23,24}` over the pentagonal product
/// coefficients, sharing one recursion table across all `n`. Index 0 of the
/// result is unused and zero.
pub fn tau_demoivre_upto(n_max: u32) -> Result<Vec<Int>, DemoivreError> {
    if n_max > DEFAULT_TAU_BOUND {
        return Err(DemoivreError::BoundExceeded {
            n: n_max,
            bound: DEFAULT_TAU_BOUND,
        });
    }
    let top = n_max as usize + 23;
    let e = pentagonal_coeffs(top);
    // Argument i of the polynomial is the coefficient of q^{i-1}.
    let args: Vec<Int> = e[..top].to_vec();
    let table = demoivre_table(top, 24, &args)?;
    let mut tau = vec![Int::from(0); n_max as usize + 1];
    for n in 1..=n_max as usize {
        tau[n] = table[24][n + 23].clone();
    }
    Ok(tau)
}

/// `tau(n)` by the De Moivre route.
pub fn ramanujan_tau(n: u32) -> Result<Int, DemoivreError> {
    assert!(n >= 1, "tau is defined for n >= 1");
    Ok(tau_demoivre_upto(n)?.pop().unwrap())
}

/// Outcome of checking the three tau/partition inversion identities at one
/// index: the binomial sum over partition numbers reproducing `tau(n)`, the
/// rational binomial sum over tau values reproducing `p(n)`, and the
/// log-derived recursion giving `tau(n+1)` from divisor sums.
#[derive(Clone, Debug)]
pub struct TauInversionOutcome {
    pub n: u32,
    pub tau_from_partitions: bool,
    pub partitions_from_tau: bool,
    pub tau_recursion: bool,
}

impl TauInversionOutcome {
    pub fn pass(&self) -> bool {
        self.tau_from_partitions && self.partitions_from_tau && self.tau_recursion
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "tau_from_partitions": self.tau_from_partitions,
            "partitions_from_tau": self.partitions_from_tau,
            "tau_recursion": self.tau_recursion,
            "pass": self.pass(),
        })
    }
}

/// Checks, at index `n`, the identities
///
/// ```text
/// tau(n)   = sum_k C(-24, k)   A_{n-1,k}(p(1), p(2), ...)
/// p(n)     = sum_k C(-1/24, k) A_{n,k}(tau(2), tau(3), ...)
/// tau(n+1) = -24 sigma(n)/n
///          + sum_{k=2}^n ((-1)^k / k) A_{n,k}(tau(2), tau(3), ...)
/// ```
///
/// against reference values from the pentagonal recurrence and the
/// q-expansion route. The middle sum runs in exact rationals and is also
/// required to come out integral.
pub fn tau_partition_inversions(n: u32) -> Result<TauInversionOutcome, DemoivreError> {
    assert!(n >= 1, "inversion identities start at n = 1");
    let n_us = n as usize;
    let p = partitions_upto(n_us);
    let tau = tau_q_expansion_upto(n_us + 1);

    // tau(n) from partition numbers.
    let p_args: Vec<Int> = p[1..].to_vec();
    let table_p = demoivre_table(n_us - 1, n_us - 1, &p_args)?;
    let mut tau_sum = Int::from(0);
    for k in 0..n_us {
        let c = binomial_i64(-24, k as u32);
        if c != Int::from(0) && table_p[k][n_us - 1] != Int::from(0) {
            tau_sum += c * &table_p[k][n_us - 1];
        }
    }
    let tau_from_partitions = tau_sum == tau[n_us];

    // p(n) from tau values, in exact rationals.
    let t_args: Vec<Rat> = (2..=n_us + 1).map(|i| Rat::from_integer(tau[i].clone())).collect();
    let table_t = demoivre_table(n_us, n_us, &t_args)?;
    let mut p_sum = Rat::from_integer(Int::from(0));
    for k in 0..=n_us {
        let c = binomial_rat(&Rat::new(Int::from(-1), Int::from(24)), k as u32);
        p_sum += c * &table_t[k][n_us];
    }
    let partitions_from_tau = p_sum.is_integer() && p_sum.to_integer() == p[n_us];

    // tau(n+1) from the log recursion.
    let mut rec = Rat::new(Int::from(-24) * sigma(n as u64), Int::from(n));
    for k in 2..=n_us {
        let term = &table_t[k][n_us] / Rat::from_integer(Int::from(k as i64));
        if k % 2 == 0 {
            rec += term;
        } else {
            rec -= term;
        }
    }
    let tau_recursion = rec.is_integer() && rec.to_integer() == tau[n_us + 1];

    Ok(TauInversionOutcome {
        n,
        tau_from_partitions,
        partitions_from_tau,
        tau_recursion,
    })
}
