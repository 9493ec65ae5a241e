//! Partition counting by independent routes.
//!
//! `p(n)` is computed three ways: the pentagonal-number recurrence, a De
//! Moivre sum over the negated coefficients of `prod (1 - q^j)`, and an
//! exponential sum over scaled divisor sums. `p_k(n)` (partitions into at
//! most `k` parts) gets a dynamic program on `prod_{j<=k} 1/(1 - q^j)` plus
//! a brute-force enumerator for small `n`.

use crate::algebra::scalar::{factorial, Int, Rat};
use crate::demoivre::{demoivre_table, DemoivreError};

/// Coefficients of `prod_{j=1}^{n_max} (1 - q^j)` through `q^{n_max}`,
/// by multiplying the factors out directly.
pub fn euler_product_coeffs(n_max: usize) -> Vec<Int> {
    let mut e = vec![Int::from(0); n_max + 1];
    e[0] = Int::from(1);
    for j in 1..=n_max {
        // Multiply by (1 - q^j) in place, high coefficients first.
        for i in (j..=n_max).rev() {
            let sub = e[i - j].clone();
            e[i] -= sub;
        }
    }
    e
}

/// The same coefficients from the closed form: `(-1)^r` at the generalized
/// pentagonal numbers `r(3r - 1)/2` for integer `r`, zero elsewhere.
pub fn pentagonal_coeffs(n_max: usize) -> Vec<Int> {
    let mut e = vec![Int::from(0); n_max + 1];
    for r in 0i64.. {
        let lower = r * (3 * r - 1) / 2;
        let upper = r * (3 * r + 1) / 2;
        if lower as usize > n_max {
            break;
        }
        let sign = if r % 2 == 0 { Int::from(1) } else { Int::from(-1) };
        e[lower as usize] = sign.clone();
        if upper as usize <= n_max {
            e[upper as usize] = sign;
        }
    }
    e
}

/// `p(0)..p(n_max)` by the pentagonal recurrence
/// `p(n) = sum_{r>=1} (-1)^{r+1} (p(n - r(3r-1)/2) + p(n - r(3r+1)/2))`.
pub fn partitions_upto(n_max: usize) -> Vec<Int> {
    let mut p = Vec::with_capacity(n_max + 1);
    p.push(Int::from(1));
    for n in 1..=n_max as i64 {
        let mut acc = Int::from(0);
        for r in 1i64.. {
            let lower = r * (3 * r - 1) / 2;
            if lower > n {
                break;
            }
            let upper = r * (3 * r + 1) / 2;
            let mut term = p[(n - lower) as usize].clone();
            if upper <= n {
                term += &p[(n - upper) as usize];
            }
            if r % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p
}

pub fn partitions_p(n: u32) -> Int {
    partitions_upto(n as usize).pop().unwrap()
}

/// `p(0)..p(n_max)` by the De Moivre sum
/// `p(n) = sum_k A_{n,k}(1, 1, 0, 0, -1, 0, -1, ...)`, the arguments being
/// the negated tail of the pentagonal product.
pub fn partitions_demoivre_upto(n_max: usize) -> Result<Vec<Int>, DemoivreError> {
    let e = pentagonal_coeffs(n_max);
    let args: Vec<Int> = e[1..].iter().map(|c| -c).collect();
    let table = demoivre_table(n_max, n_max, &args)?;
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = Int::from(0);
        for row in table.iter() {
            acc += &row[n];
        }
        out.push(acc);
    }
    Ok(out)
}

/// `p(0)..p(n_max)` by the divisor-sum exponential
/// `p(n) = sum_k (1/k!) A_{n,k}(sigma(1)/1, sigma(2)/2, ...)`; the exact
/// rational results are returned as computed so callers can assert they are
/// integral.
pub fn partitions_sigma_upto(n_max: usize) -> Result<Vec<Rat>, DemoivreError> {
    let args: Vec<Rat> = (1..=n_max as u64)
        .map(|j| Rat::new(sigma(j), Int::from(j)))
        .collect();
    let table = demoivre_table(n_max, n_max, &args)?;
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = Rat::from_integer(Int::from(0));
        for (k, row) in table.iter().enumerate() {
            acc += &row[n] / Rat::from_integer(factorial(k as u32));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Sum of the divisors of `n` by trial division; `n` must be positive.
pub fn sigma(n: u64) -> Int {
    assert!(n >= 1, "divisor sum needs n >= 1");
    let mut total = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += d;
            if d != n / d {
                total += n / d;
            }
        }
        d += 1;
    }
    Int::from(total)
}

/// Partitions of `0..=n_max` into at most `k` parts, as one dynamic-program
/// row built from `prod_{j=1}^{k} 1/(1 - q^j)`.
pub fn partitions_p_k_row(k: u32, n_max: usize) -> Vec<Int> {
    let mut dp = vec![Int::from(0); n_max + 1];
    dp[0] = Int::from(1);
    for j in 1..=(k as usize).min(n_max) {
        for i in j..=n_max {
            let add = dp[i - j].clone();
            dp[i] += add;
        }
    }
    dp
}

/// Number of partitions of `n` into at most `k` parts.
pub fn partitions_p_k(n: u32, k: u32) -> Int {
    partitions_p_k_row(k, n as usize).pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demoivre::demoivre_symbolic;

    /// Every partition of `n` into parts `<= max_part`, counted by number
    /// of parts: result[j] = partitions with exactly j parts.
    fn count_partitions_by_parts(n: usize) -> Vec<u64> {
        fn descend(remaining: usize, max_part: usize, parts_used: usize, counts: &mut Vec<u64>) {
            if remaining == 0 {
                counts[parts_used] += 1;
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                descend(remaining - part, part, parts_used + 1, counts);
            }
        }
        let mut counts = vec![0u64; n + 1];
        descend(n, n.max(1), 0, &mut counts);
        counts
    }

    #[test]
    fn product_and_closed_form_coefficients_agree() {
        assert_eq!(euler_product_coeffs(250), pentagonal_coeffs(250));
        let e = pentagonal_coeffs(12);
        let expect: Vec<Int> = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
            .iter()
            .map(|&c| Int::from(c))
            .collect();
        assert_eq!(e, expect);
    }

    #[test]
    fn recurrence_matches_brute_force() {
        let p = partitions_upto(30);
        for n in 0..=30usize {
            let total: u64 = count_partitions_by_parts(n).iter().sum();
            assert_eq!(p[n], Int::from(total), "n={}", n);
        }
        assert_eq!(p[10], Int::from(42));
        assert_eq!(p[0], Int::from(1));
    }

    #[test]
    fn demoivre_route_matches_recurrence() {
        let p = partitions_upto(60);
        assert_eq!(partitions_demoivre_upto(60).unwrap(), p);
    }

    #[test]
    fn sigma_route_matches_recurrence() {
        let p = partitions_upto(60);
        let via_sigma = partitions_sigma_upto(60).unwrap();
        for n in 0..=60usize {
            assert!(via_sigma[n].is_integer(), "n={}", n);
            assert_eq!(via_sigma[n].to_integer(), p[n], "n={}", n);
        }
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(sigma(1), Int::from(1));
        assert_eq!(sigma(6), Int::from(12));
        // 12 = 2^2 * 3: divisors 1, 2, 3, 4, 6, 12.
        assert_eq!(sigma(12), Int::from(28));
        let divisors_of_36: u64 = (1..=36).filter(|d| 36 % d == 0).sum();
        assert_eq!(sigma(36), Int::from(divisors_of_36));
    }

    #[test]
    fn bounded_part_counts() {
        assert_eq!(partitions_p_k(5, 2), Int::from(3));
        assert_eq!(partitions_p_k(0, 0), Int::from(1));
        assert_eq!(partitions_p_k(4, 0), Int::from(0));

        // At most k parts, checked against the brute-force enumeration
        // through the conjugate (parts <= k equals at-most-k-parts counts).
        for n in 0..=30usize {
            let by_parts = count_partitions_by_parts(n);
            for k in 0..=n as u32 {
                let expect: u64 = by_parts[..=(k as usize).min(n)].iter().sum();
                assert_eq!(partitions_p_k(n as u32, k), Int::from(expect), "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn bounded_parts_saturate_at_full_count() {
        let p = partitions_upto(25);
        for n in 0..=25u32 {
            assert_eq!(partitions_p_k(n, n), p[n as usize]);
            assert_eq!(partitions_p_k(n, n + 7), p[n as usize]);
        }
    }

    #[test]
    fn four_part_counts_from_demoivre_sum() {
        // prod_{j<=4}(1 - q^j) = 1 - q - q^2 + 2q^5 - q^8 - q^9 + q^10, so
        // the negated tail feeds the same reciprocal sum as the full product.
        let mut args = vec![Int::from(0); 20];
        args[0] = Int::from(1);
        args[1] = Int::from(1);
        args[4] = Int::from(-2);
        args[7] = Int::from(1);
        args[8] = Int::from(1);
        args[9] = Int::from(-1);
        let table = demoivre_table(20, 20, &args).unwrap();
        let row = partitions_p_k_row(4, 20);
        for n in 0..=20usize {
            let mut acc = Int::from(0);
            for r in table.iter() {
                acc += &r[n];
            }
            assert_eq!(acc, row[n], "n={}", n);
        }
    }

    #[test]
    fn term_counts_of_symbolic_polynomials() {
        for n in 1..=12u32 {
            for k in 1..=n {
                let terms = demoivre_symbolic(n, k).unwrap().num_terms();
                let via_difference = partitions_p_k(n, k) - partitions_p_k(n, k - 1);
                assert_eq!(Int::from(terms as i64), via_difference, "n={} k={}", n, k);
                assert_eq!(Int::from(terms as i64), partitions_p_k(n - k, k), "n={} k={}", n, k);
            }
        }
    }
}
