//! Exact scalar types and the factorial/binomial helpers used everywhere.
//!
//! `Rat` is an arbitrary-precision rational kept in canonical form (reduced,
//! positive denominator) by construction; `Int` an arbitrary-precision
//! integer. Serialization follows the `Display` forms: `"p/q"`, or `"p"` when
//! the denominator is 1.

use num_traits::Signed;

use super::ring::{AlgebraError, Ring};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// `num/den` as an exact rational. Panics on a zero denominator, so only for
/// literals; parse user input with [`parse_rat`].
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Parses `"p/q"` or `"p"`; rejects zero denominators instead of panicking.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: Int = num
        .parse()
        .map_err(|e| format!("cannot parse {t:?} as a rational: {e}"))?;
    let den: Int = den
        .parse()
        .map_err(|e| format!("cannot parse {t:?} as a rational: {e}"))?;
    if den == Int::from(0) {
        return Err(format!("cannot parse {t:?} as a rational: zero denominator"));
    }
    Ok(Rat::new(num, den))
}

pub fn factorial(n: u32) -> Int {
    let mut acc = Int::from(1);
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Binomial coefficient for integer arguments, zero outside `0 <= k <= n`.
pub fn binomial_int(n: u64, k: u64) -> Int {
    if k > n {
        return Int::from(0);
    }
    let k = k.min(n - k);
    let mut acc = Int::from(1);
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// `C(z, k) = z(z-1)...(z-k+1)/k!` for `z` in any ring that can divide by
/// `k!`; `C(z, 0) = 1`.
pub fn binomial_general<R: Ring>(z: &R, k: u32) -> Result<R, AlgebraError> {
    let mut num = R::one();
    for i in 0..k {
        num = num.mul(&z.sub(&R::from_int(i as i64)));
    }
    num.divide_exact(&R::from_bigint(&factorial(k)))
}

/// `C(p/q, k)` evaluated exactly in the rationals.
pub fn binomial_rat(z: &Rat, k: u32) -> Rat {
    binomial_general(z, k).expect("rationals divide by k!")
}

/// `C(m, k)` for a possibly negative integer `m`: the product of `k`
/// consecutive integers ending at `m` divided by `k!`, always an integer.
pub fn binomial_i64(m: i64, k: u32) -> Int {
    let mut num = Int::from(1);
    for i in 0..k as i64 {
        num *= Int::from(m - i);
    }
    num / factorial(k)
}

/// The odd double factorial `(2k-1)!! = 1*3*5*...*(2k-1) = (2k)!/(2^k k!)`,
/// with the empty product `(-1)!! = 1` at `k = 0`.
pub fn double_factorial_odd(k: u32) -> Int {
    let mut acc = Int::from(1);
    for i in 0..k {
        acc *= Int::from(2 * i + 1);
    }
    acc
}

/// Absolute value of a rational.
pub fn rat_abs(q: &Rat) -> Rat {
    q.abs()
}

/// Nearest double to an exact rational.
pub fn rat_to_f64(q: &Rat) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}
