//! Stirling numbers of both kinds.
//!
//! Subset numbers `S(n,k)` count set partitions of an `n`-set into `k`
//! blocks; unsigned cycle numbers `c(n,k)` count permutations of `n` letters
//! with `k` cycles. Both satisfy one-step triangle recurrences, and both fall
//! out of De Moivre evaluations:
//!
//! ```text
//! S(n,k) = (n!/k!) * A_{n,k}(1/1!, 1/2!, 1/3!, ...)
//! c(n,k) = (n!/k!) * A_{n,k}(1/1,  1/2,  1/3,  ...)
//! ```
//!
//! since `(e^x - 1)^k / k!` and `(-log(1-x))^k / k!` generate the respective
//! columns. The two computation routes are kept separate so they can be
//! checked against each other.

use crate::algebra::scalar::{factorial, rat, Int, Rat};
use crate::demoivre::{demoivre_eval, DemoivreError};

/// Rows `0..=n_max` of the subset-number triangle,
/// `S(n,k) = S(n-1,k-1) + k*S(n-1,k)`; row `n` has entries `k = 0..=n`.
pub fn subset_triangle(n_max: usize) -> Vec<Vec<Int>> {
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Int::from(1)]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![Int::from(0); n + 1];
        for k in 1..=n {
            let carry = if k < n { &prev[k] * Int::from(k as u32) } else { Int::from(0) };
            row[k] = &prev[k - 1] + carry;
        }
        rows.push(row);
    }
    rows
}

/// Rows `0..=n_max` of the unsigned cycle-number triangle,
/// `c(n,k) = c(n-1,k-1) + (n-1)*c(n-1,k)`.
pub fn cycle_triangle(n_max: usize) -> Vec<Vec<Int>> {
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Int::from(1)]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![Int::from(0); n + 1];
        for k in 1..=n {
            let carry = if k < n { &prev[k] * Int::from((n - 1) as u32) } else { Int::from(0) };
            row[k] = &prev[k - 1] + carry;
        }
        rows.push(row);
    }
    rows
}

/// `S(n,k)` from the triangle recurrence; `0` outside `0 <= k <= n`.
pub fn stirling_subset(n: u32, k: u32) -> Int {
    if k > n {
        return Int::from(0);
    }
    subset_triangle(n as usize)[n as usize][k as usize].clone()
}

/// Unsigned `c(n,k)` from the triangle recurrence; `0` outside `0 <= k <= n`.
pub fn stirling_cycle(n: u32, k: u32) -> Int {
    if k > n {
        return Int::from(0);
    }
    cycle_triangle(n as usize)[n as usize][k as usize].clone()
}

/// `(n!/k!) * A_{n,k}(1/1!, 1/2!, ...)`, which should equal `S(n,k)` but is
/// computed without the triangle recurrence.
pub fn stirling_subset_via_demoivre(n: u32, k: u32) -> Result<Rat, DemoivreError> {
    let m = if n >= k { n - k + 1 } else { 0 };
    let a: Vec<Rat> = (1..=m).map(|i| Rat::new(Int::from(1), factorial(i))).collect();
    let value: Rat = demoivre_eval(n, k, &a)?;
    Ok(value * Rat::new(factorial(n), factorial(k)))
}

/// `(n!/k!) * A_{n,k}(1/1, 1/2, ...)`, which should equal unsigned `c(n,k)`.
pub fn stirling_cycle_via_demoivre(n: u32, k: u32) -> Result<Rat, DemoivreError> {
    let m = if n >= k { n - k + 1 } else { 0 };
    let a: Vec<Rat> = (1..=m as i64).map(|i| rat(1, i)).collect();
    let value: Rat = demoivre_eval(n, k, &a)?;
    Ok(value * Rat::new(factorial(n), factorial(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Set partitions of an `n`-set into exactly `k` nonempty blocks, counted
    /// by iterating over all block assignments and keeping the canonical
    /// labelings (block labels appear in first-use order).
    fn set_partitions_brute(n: u32, k: u32) -> u64 {
        if n == 0 {
            return (k == 0) as u64;
        }
        let mut count = 0u64;
        let mut assignment = vec![0u32; n as usize];
        loop {
            let mut seen = 0u32;
            let mut canonical = true;
            for &b in &assignment {
                if b > seen {
                    canonical = false;
                    break;
                }
                if b == seen {
                    seen += 1;
                }
            }
            if canonical && seen == k {
                count += 1;
            }
            // Odometer over base-k digits.
            let mut pos = 0;
            loop {
                if pos == assignment.len() {
                    return count;
                }
                assignment[pos] += 1;
                if assignment[pos] < k.max(1) {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Permutations of `n` letters with exactly `k` cycles, counted by
    /// enumerating all permutations and decomposing into cycles.
    fn cycle_counts_brute(n: u32, k: u32) -> u64 {
        fn permutations(prefix: &mut Vec<u32>, used: &mut Vec<bool>, n: u32, k: u32, count: &mut u64) {
            if prefix.len() == n as usize {
                let mut visited = vec![false; n as usize];
                let mut cycles = 0u32;
                for start in 0..n as usize {
                    if !visited[start] {
                        cycles += 1;
                        let mut at = start;
                        while !visited[at] {
                            visited[at] = true;
                            at = prefix[at] as usize;
                        }
                    }
                }
                if cycles == k {
                    *count += 1;
                }
                return;
            }
            for v in 0..n {
                if !used[v as usize] {
                    used[v as usize] = true;
                    prefix.push(v);
                    permutations(prefix, used, n, k, count);
                    prefix.pop();
                    used[v as usize] = false;
                }
            }
        }
        let mut count = 0;
        permutations(&mut Vec::new(), &mut vec![false; n as usize], n, k, &mut count);
        count
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(stirling_subset(4, 2), Int::from(7));
        assert_eq!(stirling_cycle(4, 2), Int::from(11));
        for n in 0..=8u32 {
            assert_eq!(stirling_subset(n, n), Int::from(1));
            assert_eq!(stirling_cycle(n, n), Int::from(1));
        }
        assert_eq!(stirling_subset(3, 7), Int::from(0));
    }

    #[test]
    fn triangles_match_brute_force() {
        for n in 0..=6u32 {
            for k in 0..=n {
                assert_eq!(stirling_subset(n, k), Int::from(set_partitions_brute(n, k)), "S({},{})", n, k);
                assert_eq!(stirling_cycle(n, k), Int::from(cycle_counts_brute(n, k)), "c({},{})", n, k);
            }
        }
    }

    #[test]
    fn demoivre_routes_match_triangles() {
        for n in 0..=12u32 {
            for k in 0..=n {
                assert_eq!(
                    stirling_subset_via_demoivre(n, k).unwrap(),
                    Rat::from_integer(stirling_subset(n, k)),
                    "S({},{})",
                    n,
                    k
                );
                assert_eq!(
                    stirling_cycle_via_demoivre(n, k).unwrap(),
                    Rat::from_integer(stirling_cycle(n, k)),
                    "c({},{})",
                    n,
                    k
                );
            }
        }
    }

    #[test]
    fn row_sums() {
        // Cycle numbers over a full row sum to n!.
        let rows = cycle_triangle(7);
        for (n, row) in rows.iter().enumerate() {
            let total: Int = row.iter().sum();
            assert_eq!(total, factorial(n as u32));
        }
    }
}
