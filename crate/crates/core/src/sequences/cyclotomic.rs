//! Cyclotomic polynomials from Ramanujan sums, with a polynomial-division
//! oracle.
//!
//! The main route expands `Phi_n(x) = exp(-sum_j r_j(n) x^j / j)` with
//! `r_j(n)` the Ramanujan sums, truncating at the known degree `phi(n)`.
//! The series is an exact-rational computation whose coefficients must come
//! out integral and whose next few coefficients past the degree must vanish;
//! both facts are asserted, not assumed. The oracle recovers `Phi_n` by
//! repeatedly dividing `x^n - 1` by the lower-order factors.

use num_integer::Integer;
use thiserror::Error;

use crate::algebra::poly::UniPoly;
use crate::algebra::scalar::{rat_int, Int, Rat};
use crate::series::{Series, SeriesError};

#[derive(Debug, Error)]
pub enum CyclotomicError {
    #[error("cyclotomic polynomials are computed here for n >= 2, got {0}")]
    IndexTooSmall(u64),
    #[error("coefficient of x^{idx} is {value}, not an integer")]
    NonIntegralCoefficient { idx: usize, value: String },
    #[error("coefficient of x^{idx} beyond the degree is {value}, not zero")]
    NonzeroTail { idx: usize, value: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Moebius function by trial-division factorization.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1, "moebius needs n >= 1");
    let mut m = n;
    let mut factors = 0i64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if m > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler's totient by trial-division factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient needs n >= 1");
    let mut m = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result
}

/// Ramanujan sum `r_j(m) = sum_{d | gcd(m, j)} mu(m/d) d`.
pub fn ramanujan_sum(j: u64, m: u64) -> Int {
    assert!(j >= 1 && m >= 1, "ramanujan sums need j, m >= 1");
    let g = m.gcd(&j);
    let mut acc = Int::from(0);
    for d in 1..=g {
        if g % d == 0 {
            acc += Int::from(moebius(m / d)) * Int::from(d);
        }
    }
    acc
}

/// `Phi_n(x)` by the exponential of scaled Ramanujan sums, as an exact
/// polynomial with (verified) integer coefficients, ascending degree.
pub fn cyclotomic(n: u64) -> Result<UniPoly, CyclotomicError> {
    if n < 2 {
        return Err(CyclotomicError::IndexTooSmall(n));
    }
    let degree = totient(n) as usize;
    let order = degree + 5;
    let mut coeffs = vec![Rat::from_integer(Int::from(0)); order + 1];
    for j in 1..=order as u64 {
        coeffs[j as usize] = -Rat::new(ramanujan_sum(j, n), Int::from(j));
    }
    let series = Series::new(coeffs).exp_recurrence()?;
    for idx in degree + 1..=order {
        let c = series.coeff(idx);
        if c != rat_int(0) {
            return Err(CyclotomicError::NonzeroTail { idx, value: c.to_string() });
        }
    }
    let mut out = Vec::with_capacity(degree + 1);
    for idx in 0..=degree {
        let c = series.coeff(idx);
        if !c.is_integer() {
            return Err(CyclotomicError::NonIntegralCoefficient { idx, value: c.to_string() });
        }
        out.push(c);
    }
    Ok(UniPoly::new("x", out))
}

/// Exact quotient of monic integer polynomials given by ascending
/// coefficients; panics if the division leaves a remainder.
fn divide_monic(f: &[Int], g: &[Int]) -> Vec<Int> {
    let dg = g.len() - 1;
    assert!(g[dg] == Int::from(1), "divisor must be monic");
    assert!(f.len() > dg, "quotient degree would be negative");
    let mut rem = f.to_vec();
    let dq = rem.len() - 1 - dg;
    let mut q = vec![Int::from(0); dq + 1];
    for i in (0..=dq).rev() {
        let c = rem[i + dg].clone();
        if c != Int::from(0) {
            for (j, gj) in g.iter().enumerate() {
                let sub = &c * gj;
                rem[i + j] -= sub;
            }
        }
        q[i] = c;
    }
    assert!(
        rem.iter().all(|c| *c == Int::from(0)),
        "division left a remainder"
    );
    q
}

/// `Phi_1..Phi_{n_max}` by stripping every proper-divisor factor out of
/// `x^m - 1`, each as ascending integer coefficients; entry `m - 1` holds
/// the index-`m` polynomial.
pub fn cyclotomic_division_table(n_max: u64) -> Vec<Vec<Int>> {
    assert!(n_max >= 1);
    let mut cache: Vec<Vec<Int>> = Vec::new();
    for m in 1..=n_max {
        let mut current = vec![Int::from(0); m as usize + 1];
        current[0] = Int::from(-1);
        current[m as usize] = Int::from(1);
        for d in 1..m {
            if m % d == 0 {
                current = divide_monic(&current, &cache[d as usize - 1]);
            }
        }
        cache.push(current);
    }
    cache
}

/// `Phi_n(x)` by iterated exact division, ascending integer coefficients.
pub fn cyclotomic_division_oracle(n: u64) -> Vec<Int> {
    cyclotomic_division_table(n).pop().unwrap()
}
