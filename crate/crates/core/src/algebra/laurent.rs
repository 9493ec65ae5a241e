//! Polynomials in `1/u` with exact rational coefficients.
//!
//! Houses the log-log expansion coefficients and related rational functions:
//! every element is `c_0 + c_1/u + c_2/u^2 + ...` with finitely many terms.
//! Products stay in the same space, so this is a ring; series kernels can run
//! over it with `u` kept symbolic. Inversion is only defined for constants,
//! which is all the series operations need (they divide by integers).

use std::collections::BTreeMap;
use std::fmt;

use super::ring::{AlgebraError, ExactRing, Ring};
use super::scalar::{Int, Rat};

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentInU {
    /// `k -> coefficient of u^{-k}`; `k = 0` is the constant term. Stored
    /// coefficients are nonzero.
    terms: BTreeMap<u32, Rat>,
}

impl LaurentInU {
    pub fn new() -> Self {
        LaurentInU { terms: BTreeMap::new() }
    }

    /// The single term `c * u^{-k}`.
    pub fn term(c: Rat, k: u32) -> Self {
        let mut out = LaurentInU::new();
        out.add_term(c, k);
        out
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, 0)
    }

    /// `1/u`.
    pub fn u_inv() -> Self {
        Self::term(<Rat as Ring>::one(), 1)
    }

    pub fn add_term(&mut self, c: Rat, k: u32) {
        if Ring::is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(<Rat as Ring>::zero);
        *entry += c;
        if Ring::is_zero(entry) {
            self.terms.remove(&k);
        }
    }

    /// Coefficient of `u^{-k}`.
    pub fn coeff(&self, k: u32) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(<Rat as Ring>::zero)
    }

    /// Highest power of `1/u` present, or `None` when zero.
    pub fn degree_in_u_inv(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Exact evaluation at rational `u != 0`.
    pub fn eval(&self, u: &Rat) -> Result<Rat, AlgebraError> {
        if Ring::is_zero(u) {
            return Err(AlgebraError::DivisionByZero);
        }
        let ui = u.recip();
        let mut acc = <Rat as Ring>::zero();
        for (&k, c) in &self.terms {
            acc += c * Ring::pow(&ui, k);
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        let mut acc = 0.0;
        for (&k, c) in &self.terms {
            acc += <f64 as Ring>::from_rat(c).unwrap_or(f64::NAN) * u.powi(-(k as i32));
        }
        acc
    }
}

impl Default for LaurentInU {
    fn default() -> Self {
        Self::new()
    }
}

impl Ring for LaurentInU {
    const NAME: &'static str = "Q[1/u]";

    fn zero() -> Self {
        LaurentInU::new()
    }

    fn one() -> Self {
        LaurentInU::constant(<Rat as Ring>::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(c.clone(), k);
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(-c, k);
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentInU::new();
        for (&k1, c1) in &self.terms {
            for (&k2, c2) in &rhs.terms {
                out.add_term(c1 * c2, k1 + k2);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        LaurentInU {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    fn from_bigint(n: &Int) -> Self {
        LaurentInU::constant(Rat::from_integer(n.clone()))
    }

    fn invert(&self) -> Result<Self, AlgebraError> {
        if self.terms.is_empty() {
            return Err(AlgebraError::DivisionByZero);
        }
        match (self.terms.len(), self.terms.get(&0)) {
            (1, Some(c)) => Ok(LaurentInU::constant(c.recip())),
            _ => Err(AlgebraError::NotInvertible {
                value: self.to_string(),
                ring: Self::NAME,
            }),
        }
    }

    fn divide_exact(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&rhs.invert()?))
    }
}

impl ExactRing for LaurentInU {}

impl fmt::Display for LaurentInU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in &self.terms {
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match k {
                0 => write!(f, "{}", mag)?,
                _ if mag == "1" => write!(f, "u^-{}", k)?,
                _ => write!(f, "{}*u^-{}", mag, k)?,
            }
        }
        Ok(())
    }
}
