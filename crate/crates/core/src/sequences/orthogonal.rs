//! Classical polynomial families as weighted De Moivre sums over the
//! two-term argument list `(2x, -1, 0, 0, ...)`.
//!
//! Hermite, Gegenbauer (with Legendre and second-kind Chebyshev as special
//! orders), and first-kind Chebyshev polynomials all arise this way, as do
//! the Fibonacci numbers from the list `(1, 1, 0, 0, ...)`. Each family is
//! cross-checked against its three-term recurrence, and the two-variable
//! closed form `A_{n,k}(x, y, 0, ...) = C(k, n-k) x^{2k-n} y^{n-k}` is
//! verified symbolically.

use std::fmt;

use crate::algebra::poly::UniPoly;
use crate::algebra::ring::Ring;
use crate::algebra::scalar::{binomial_general, factorial, rat, rat_int, Int, Rat};
use crate::demoivre::{demoivre_table, DemoivreError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthogonalKind {
    Hermite,
    Gegenbauer,
    ChebyshevT,
    ChebyshevU,
    Legendre,
    Fibonacci,
}

impl OrthogonalKind {
    pub fn label(self) -> &'static str {
        match self {
            OrthogonalKind::Hermite => "hermite",
            OrthogonalKind::Gegenbauer => "gegenbauer",
            OrthogonalKind::ChebyshevT => "chebyshev_T",
            OrthogonalKind::ChebyshevU => "chebyshev_U",
            OrthogonalKind::Legendre => "legendre",
            OrthogonalKind::Fibonacci => "fibonacci",
        }
    }
}

impl fmt::Display for OrthogonalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `A_{j,k}(2x, -1, 0, ...)` for all `j, k <= n`, the shared kernel of the
/// continuous families.
fn chebyshev_kernel(n: u32) -> Result<Vec<Vec<UniPoly>>, DemoivreError> {
    let mut args = vec![UniPoly::zero_poly("x"); n as usize];
    if n >= 1 {
        args[0] = UniPoly::new("x", vec![rat_int(0), rat_int(2)]);
    }
    if n >= 2 {
        args[1] = UniPoly::constant("x", rat_int(-1));
    }
    demoivre_table(n as usize, n as usize, &args)
}

/// The degree-`n` member of `kind`; `lambda` is consumed only by the
/// Gegenbauer family, which requires it.
pub fn orthogonal_poly(
    kind: OrthogonalKind,
    n: u32,
    lambda: Option<&Rat>,
) -> Result<UniPoly, DemoivreError> {
    match kind {
        OrthogonalKind::Hermite => {
            let table = chebyshev_kernel(n)?;
            let mut acc = UniPoly::zero_poly("x");
            for (k, row) in table.iter().enumerate() {
                let weight = Rat::new(factorial(n), factorial(k as u32));
                acc = acc.add(&row[n as usize].scale(&weight));
            }
            Ok(acc)
        }
        OrthogonalKind::Gegenbauer => {
            let lambda = lambda.ok_or(DemoivreError::MissingParameter { family: "gegenbauer" })?;
            gegenbauer(n, lambda)
        }
        OrthogonalKind::ChebyshevU => gegenbauer(n, &rat_int(1)),
        OrthogonalKind::Legendre => gegenbauer(n, &rat(1, 2)),
        OrthogonalKind::ChebyshevT => {
            let table = chebyshev_kernel(n)?;
            let x = UniPoly::var("x");
            let mut acc = UniPoly::zero_poly("x");
            for (k, row) in table.iter().enumerate() {
                acc = acc.add(&row[n as usize]);
                if n >= 1 && k < n as usize {
                    acc = acc.sub(&x.mul(&row[n as usize - 1]));
                }
            }
            Ok(acc)
        }
        OrthogonalKind::Fibonacci => Ok(UniPoly::constant(
            "x",
            Rat::from_integer(fibonacci_shifted(n)?),
        )),
    }
}

fn gegenbauer(n: u32, lambda: &Rat) -> Result<UniPoly, DemoivreError> {
    let table = chebyshev_kernel(n)?;
    let mut acc = UniPoly::zero_poly("x");
    for (k, row) in table.iter().enumerate() {
        // C(k + lambda - 1, k).
        let top = lambda + Rat::from_integer(Int::from(k as i64 - 1));
        let weight = binomial_general(&top, k as u32).map_err(DemoivreError::Algebra)?;
        acc = acc.add(&row[n as usize].scale(&weight));
    }
    Ok(acc)
}

/// `F_{n+1} = sum_k A_{n,k}(1, 1, 0, ...)`, over the integers.
pub fn fibonacci_shifted(n: u32) -> Result<Int, DemoivreError> {
    let mut args = vec![Int::from(0); n as usize];
    if n >= 1 {
        args[0] = Int::from(1);
    }
    if n >= 2 {
        args[1] = Int::from(1);
    }
    let table = demoivre_table(n as usize, n as usize, &args)?;
    let mut acc = Int::from(0);
    for row in table.iter() {
        acc += &row[n as usize];
    }
    Ok(acc)
}

/// First-kind Chebyshev polynomial by the explicit alternating sum
/// `T_n = sum_{k} (-1)^{n-k} (n/2k) C(k, n-k) (2x)^{2k-n}` for `n >= 1`,
/// bypassing the De Moivre kernel entirely.
pub fn chebyshev_t_explicit(n: u32) -> UniPoly {
    assert!(n >= 1, "the explicit sum starts at degree 1");
    let mut acc = UniPoly::zero_poly("x");
    for k in n.div_ceil(2)..=n {
        let c = crate::algebra::scalar::binomial_int(k as u64, (n - k) as u64);
        if c == Int::from(0) {
            continue;
        }
        let mut w = Rat::new(Int::from(n) * c, Int::from(2 * k));
        if (n - k) % 2 == 1 {
            w = -w;
        }
        let deg = (2 * k - n) as usize;
        let two_x_pow = Ring::pow(&Rat::from_integer(Int::from(2)), 2 * k - n);
        acc = acc.add(&UniPoly::monomial("x", w * two_x_pow, deg));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multipoly::MultiPoly;
    use crate::algebra::scalar::binomial_int;
    use crate::demoivre::demoivre_eval_recursive;

    fn poly(coeffs: &[(i64, i64)]) -> UniPoly {
        UniPoly::new("x", coeffs.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn textbook_examples() {
        let t3 = orthogonal_poly(OrthogonalKind::ChebyshevT, 3, None).unwrap();
        assert_eq!(t3, poly(&[(0, 1), (-3, 1), (0, 1), (4, 1)]));

        let h2 = orthogonal_poly(OrthogonalKind::Hermite, 2, None).unwrap();
        assert_eq!(h2, poly(&[(-2, 1), (0, 1), (4, 1)]));

        let u2 = orthogonal_poly(OrthogonalKind::ChebyshevU, 2, None).unwrap();
        assert_eq!(u2, poly(&[(-1, 1), (0, 1), (4, 1)]));

        let p2 = orthogonal_poly(OrthogonalKind::Legendre, 2, None).unwrap();
        assert_eq!(p2, poly(&[(-1, 2), (0, 1), (3, 2)]));

        let t0 = orthogonal_poly(OrthogonalKind::ChebyshevT, 0, None).unwrap();
        assert_eq!(t0, poly(&[(1, 1)]));
        let t1 = orthogonal_poly(OrthogonalKind::ChebyshevT, 1, None).unwrap();
        assert_eq!(t1, poly(&[(0, 1), (1, 1)]));

        assert!(matches!(
            orthogonal_poly(OrthogonalKind::Gegenbauer, 3, None),
            Err(DemoivreError::MissingParameter { .. })
        ));
    }

    #[test]
    fn three_term_recurrences() {
        let x = UniPoly::var("x");

        // H_{n+1} = 2x H_n - 2n H_{n-1}.
        let h: Vec<UniPoly> = (0..=10)
            .map(|n| orthogonal_poly(OrthogonalKind::Hermite, n, None).unwrap())
            .collect();
        for n in 1..10usize {
            let next = x.scale(&rat_int(2)).mul(&h[n]).sub(&h[n - 1].scale(&rat_int(2 * n as i64)));
            assert_eq!(h[n + 1], next, "Hermite n={}", n);
        }

        // T_{n+1} = 2x T_n - T_{n-1}, same for U.
        for kind in [OrthogonalKind::ChebyshevT, OrthogonalKind::ChebyshevU] {
            let f: Vec<UniPoly> = (0..=10)
                .map(|n| orthogonal_poly(kind, n, None).unwrap())
                .collect();
            for n in 1..10usize {
                let next = x.scale(&rat_int(2)).mul(&f[n]).sub(&f[n - 1]);
                assert_eq!(f[n + 1], next, "{} n={}", kind, n);
            }
        }

        // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
        let p: Vec<UniPoly> = (0..=10)
            .map(|n| orthogonal_poly(OrthogonalKind::Legendre, n, None).unwrap())
            .collect();
        for n in 1..10usize {
            let rhs = x
                .scale(&rat_int(2 * n as i64 + 1))
                .mul(&p[n])
                .sub(&p[n - 1].scale(&rat_int(n as i64)));
            assert_eq!(p[n + 1].scale(&rat_int(n as i64 + 1)), rhs, "Legendre n={}", n);
        }

        // (n+1) C_{n+1} = 2(n+lambda) x C_n - (n+2 lambda-1) C_{n-1}.
        let lambda = rat(3, 2);
        let c: Vec<UniPoly> = (0..=10)
            .map(|n| orthogonal_poly(OrthogonalKind::Gegenbauer, n, Some(&lambda)).unwrap())
            .collect();
        for n in 1..10usize {
            let rhs = x
                .scale(&(rat_int(2) * (&lambda + rat_int(n as i64))))
                .mul(&c[n])
                .sub(&c[n - 1].scale(&(rat_int(n as i64 - 1) + rat_int(2) * &lambda)));
            assert_eq!(c[n + 1].scale(&rat_int(n as i64 + 1)), rhs, "Gegenbauer n={}", n);
        }
    }

    #[test]
    fn gegenbauer_special_orders() {
        for n in 0..=8u32 {
            let u = orthogonal_poly(OrthogonalKind::ChebyshevU, n, None).unwrap();
            let via_lambda_one =
                orthogonal_poly(OrthogonalKind::Gegenbauer, n, Some(&rat_int(1))).unwrap();
            assert_eq!(u, via_lambda_one);

            let p = orthogonal_poly(OrthogonalKind::Legendre, n, None).unwrap();
            let via_half = orthogonal_poly(OrthogonalKind::Gegenbauer, n, Some(&rat(1, 2))).unwrap();
            assert_eq!(p, via_half);
        }
    }

    #[test]
    fn explicit_chebyshev_sum_matches_kernel_route() {
        for n in 1..=12u32 {
            let via_kernel = orthogonal_poly(OrthogonalKind::ChebyshevT, n, None).unwrap();
            assert_eq!(via_kernel, chebyshev_t_explicit(n), "n={}", n);
        }
    }

    #[test]
    fn two_variable_closed_form() {
        // A_{n,k}(x, y, 0, ...) = C(k, n-k) x^{2k-n} y^{n-k} symbolically.
        for n in 0..=12u32 {
            let mut args = vec![MultiPoly::new(); n as usize];
            if n >= 1 {
                args[0] = MultiPoly::var(1);
            }
            if n >= 2 {
                args[1] = MultiPoly::var(2);
            }
            for k in 0..=n {
                let direct = demoivre_eval_recursive(n, k, &args).unwrap();
                let mut expect = MultiPoly::new();
                if n == 0 && k == 0 {
                    expect = MultiPoly::constant(rat_int(1));
                } else if k >= 1 && n - k <= k {
                    let c = binomial_int(k as u64, (n - k) as u64);
                    expect.add_term(
                        vec![2 * k - n, n - k],
                        Rat::from_integer(c),
                    );
                }
                assert_eq!(direct, expect, "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn fibonacci_values() {
        let expect = [1i64, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        for (n, &f) in expect.iter().enumerate() {
            assert_eq!(fibonacci_shifted(n as u32).unwrap(), Int::from(f), "n={}", n);
        }
        // Degree-7 sum gives the eighth Fibonacci number.
        assert_eq!(fibonacci_shifted(7).unwrap(), Int::from(21));
        let as_poly = orthogonal_poly(OrthogonalKind::Fibonacci, 7, None).unwrap();
        assert_eq!(as_poly, poly(&[(21, 1)]));
    }
}
