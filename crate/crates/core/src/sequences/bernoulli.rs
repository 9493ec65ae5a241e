//! Bernoulli numbers, Bernoulli polynomials, and Norlund polynomials.
//!
//! The sign convention throughout is the expansion of `t/(e^t - 1)`, so
//! `B_1 = -1/2`. Every object is computed at least twice: the numbers by
//! the classical binomial recurrence and by a De Moivre reciprocal sum, the
//! Norlund polynomials by a binomial De Moivre sum and by a subset-number
//! formula, and the polynomials are put through the translation and
//! reflection identities they must satisfy.

use crate::algebra::poly::UniPoly;
use crate::algebra::ring::Ring;
use crate::algebra::scalar::{
    binomial_general, binomial_int, factorial, rat_int, Int, Rat,
};
use crate::demoivre::{demoivre_table, DemoivreError};
use crate::sequences::stirling::stirling_subset;

/// `B_0..B_{n_max}` from `sum_{j=0}^{n} C(n+1,j) B_j = 0`.
pub fn bernoulli_upto(n_max: u32) -> Vec<Rat> {
    let mut b = Vec::with_capacity(n_max as usize + 1);
    b.push(Rat::from_integer(Int::from(1)));
    for n in 1..=n_max as u64 {
        let mut acc = Rat::from_integer(Int::from(0));
        for j in 0..n {
            acc += Rat::from_integer(binomial_int(n + 1, j)) * &b[j as usize];
        }
        b.push(-acc / Rat::from_integer(Int::from(n + 1)));
    }
    b
}

pub fn bernoulli_number(n: u32) -> Rat {
    bernoulli_upto(n).pop().unwrap()
}

/// `B_n = n! sum_k A_{n,k}(-1/2!, -1/3!, -1/4!, ...)`.
pub fn bernoulli_demoivre(n: u32) -> Result<Rat, DemoivreError> {
    let args: Vec<Rat> = (1..=n)
        .map(|j| -Rat::new(Int::from(1), factorial(j + 1)))
        .collect();
    let table = demoivre_table(n as usize, n as usize, &args)?;
    let mut acc = Rat::from_integer(Int::from(0));
    for row in table.iter() {
        acc += &row[n as usize];
    }
    Ok(acc * Rat::from_integer(factorial(n)))
}

/// `B_n(x) = n! sum_k A_{n,k}(a_1, a_2, ...)` with
/// `a_j = ((-x)^{j+1} - (1-x)^{j+1}) / (j+1)!`, as an exact polynomial.
pub fn bernoulli_poly(n: u32) -> Result<UniPoly, DemoivreError> {
    let x = UniPoly::var("x");
    let one_minus_x = UniPoly::new("x", vec![rat_int(1), rat_int(-1)]);
    let args: Vec<UniPoly> = (1..=n)
        .map(|j| {
            let lhs = Ring::pow(&x.neg(), j + 1);
            let rhs = Ring::pow(&one_minus_x, j + 1);
            lhs.sub(&rhs)
                .scale(&Rat::new(Int::from(1), factorial(j + 1)))
        })
        .collect();
    let table = demoivre_table(n as usize, n as usize, &args)?;
    let mut acc = UniPoly::zero_poly("x");
    for row in table.iter() {
        acc = acc.add(&row[n as usize]);
    }
    Ok(acc.scale(&Rat::from_integer(factorial(n))))
}

/// `B_n^(x) = n! sum_k C(-x,k) A_{n,k}(1/2!, 1/3!, ...)` as a polynomial in
/// the order `x`.
pub fn norlund_poly(n: u32) -> Result<UniPoly, DemoivreError> {
    let args: Vec<Rat> = (1..=n)
        .map(|j| Rat::new(Int::from(1), factorial(j + 1)))
        .collect();
    let table = demoivre_table(n as usize, n as usize, &args)?;
    let minus_x = UniPoly::var("x").neg();
    let mut acc = UniPoly::zero_poly("x");
    for (k, row) in table.iter().enumerate() {
        let a = &row[n as usize];
        if a == &Rat::from_integer(Int::from(0)) {
            continue;
        }
        let binom = binomial_general(&minus_x, k as u32).map_err(DemoivreError::Algebra)?;
        acc = acc.add(&binom.scale(a));
    }
    Ok(acc.scale(&Rat::from_integer(factorial(n))))
}

/// `B_n^(x) = sum_k C(-x,k) C(x+n,n-k) C(n+k,k)^{-1} S(n+k,k)` with `S` the
/// subset (second-kind Stirling) numbers: an independent closed form for
/// the same polynomial.
pub fn norlund_via_stirling(n: u32) -> Result<UniPoly, DemoivreError> {
    let x = UniPoly::var("x");
    let minus_x = x.neg();
    let x_plus_n = x.add(&UniPoly::constant("x", rat_int(n as i64)));
    let mut acc = UniPoly::zero_poly("x");
    for k in 0..=n {
        let first = binomial_general(&minus_x, k).map_err(DemoivreError::Algebra)?;
        let second = binomial_general(&x_plus_n, n - k).map_err(DemoivreError::Algebra)?;
        let weight = Rat::from_integer(stirling_subset(n + k, k))
            / Rat::from_integer(binomial_int((n + k) as u64, k as u64));
        acc = acc.add(&first.mul(&second).scale(&weight));
    }
    Ok(acc)
}

/// Both sides of the tangent/arctangent identity
/// `2^{n+2} (2^{n+2} - 1) B_{n+2} / (n+2)
///  = n! sum_k C(n+k,k) A_{n,k}(0, -1/3, 0, -1/5, 0, ...)`,
/// returned as (left, right) for the caller to compare.
pub fn tangent_identity_sides(n: u32) -> Result<(Rat, Rat), DemoivreError> {
    let pow = Ring::pow(&Rat::from_integer(Int::from(2)), n + 2);
    let lhs = &pow * (&pow - Rat::from_integer(Int::from(1))) * bernoulli_number(n + 2)
        / Rat::from_integer(Int::from(n as i64 + 2));

    let args: Vec<Rat> = (1..=n)
        .map(|j| {
            if j % 2 == 0 {
                -Rat::new(Int::from(1), Int::from(j as i64 + 1))
            } else {
                Rat::from_integer(Int::from(0))
            }
        })
        .collect();
    let table = demoivre_table(n as usize, n as usize, &args)?;
    let mut rhs = Rat::from_integer(Int::from(0));
    for (k, row) in table.iter().enumerate() {
        rhs += Rat::from_integer(binomial_int((n + k as u32) as u64, k as u64)) * &row[n as usize];
    }
    rhs *= Rat::from_integer(factorial(n));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    /// `p(s)`: substitute the polynomial `s` for the variable of `p`.
    fn substitute(p: &UniPoly, s: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero_poly(s.var_name());
        let mut power = UniPoly::constant(s.var_name(), rat_int(1));
        for c in p.coeffs() {
            acc = acc.add(&power.scale(c));
            power = power.mul(s);
        }
        acc
    }

    #[test]
    fn classical_values() {
        let b = bernoulli_upto(12);
        assert_eq!(b[0], rat_int(1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat_int(0));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[12], rat(-691, 2730));
        for n in (3..=11).step_by(2) {
            assert_eq!(b[n], rat_int(0), "odd index {}", n);
        }
    }

    #[test]
    fn demoivre_route_matches_recurrence() {
        let b = bernoulli_upto(25);
        for n in 0..=25u32 {
            assert_eq!(bernoulli_demoivre(n).unwrap(), b[n as usize], "n={}", n);
        }
    }

    #[test]
    fn polynomial_specializations() {
        let b = bernoulli_upto(12);
        for n in 0..=12u32 {
            let p = bernoulli_poly(n).unwrap();
            assert_eq!(p.eval(&rat_int(0)), b[n as usize], "B_{}(0)", n);
            let at_one = p.eval(&rat_int(1));
            let signed = if n % 2 == 0 { b[n as usize].clone() } else { -&b[n as usize] };
            assert_eq!(at_one, signed, "B_{}(1)", n);
            assert_eq!(p.degree(), Some(n as usize), "degree of B_{}", n);
        }
        // B_1(x) = x - 1/2.
        assert_eq!(
            bernoulli_poly(1).unwrap(),
            UniPoly::new("x", vec![rat(-1, 2), rat_int(1)])
        );
    }

    #[test]
    fn reflection_and_translation_identities() {
        let x = UniPoly::var("x");
        let one_minus_x = UniPoly::new("x", vec![rat_int(1), rat_int(-1)]);
        let x_plus_one = UniPoly::new("x", vec![rat_int(1), rat_int(1)]);
        for n in 0..=12u32 {
            let p = bernoulli_poly(n).unwrap();
            let reflected = substitute(&p, &one_minus_x);
            let signed = if n % 2 == 0 { p.clone() } else { p.neg() };
            assert_eq!(reflected, signed, "reflection at n={}", n);

            // B_n(x+1) - B_n(x) = n x^{n-1}.
            if n >= 1 {
                let diff = substitute(&p, &x_plus_one).sub(&p);
                let expect = Ring::pow(&x, n - 1).scale(&rat_int(n as i64));
                assert_eq!(diff, expect, "translation at n={}", n);
            }
        }
    }

    #[test]
    fn norlund_routes_agree() {
        for n in 0..=10u32 {
            let direct = norlund_poly(n).unwrap();
            let via_stirling = norlund_via_stirling(n).unwrap();
            assert_eq!(direct, via_stirling, "n={}", n);
        }
    }

    #[test]
    fn norlund_specializations() {
        let b = bernoulli_upto(12);
        for n in 0..=12u32 {
            let p = norlund_poly(n).unwrap();
            assert_eq!(p.eval(&rat_int(1)), b[n as usize], "order 1 at n={}", n);
            let at_zero = p.eval(&rat_int(0));
            let expect = if n == 0 { rat_int(1) } else { rat_int(0) };
            assert_eq!(at_zero, expect, "order 0 at n={}", n);
            assert_eq!(p.degree(), Some(n as usize).filter(|_| n > 0).or(Some(0)));
        }
    }

    #[test]
    fn tangent_identity() {
        for n in 0..=12u32 {
            let (lhs, rhs) = tangent_identity_sides(n).unwrap();
            assert_eq!(lhs, rhs, "n={}", n);
        }
        let (lhs, _) = tangent_identity_sides(2).unwrap();
        assert_eq!(lhs, rat_int(-2));
    }
}
