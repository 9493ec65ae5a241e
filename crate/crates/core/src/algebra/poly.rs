//! Dense univariate polynomials over a ring.
//!
//! `Poly<R>` is itself a `Ring`, so series and determinant kernels can run
//! with polynomial coefficients (symbolic `t`, symbolic binomial exponents,
//! nested polynomials for two independent symbols). Degrees in this crate
//! stay below ~200, so the dense representation is the right one.
//!
//! The variable-name tag is display metadata only: equality compares
//! coefficients, never tags.

use std::fmt;

use super::ring::{AlgebraError, ExactRing, Ring};
use super::scalar::{Int, Rat};

#[derive(Clone, Debug)]
pub struct Poly<R: Ring> {
    /// Coefficient of degree `i` at index `i`; no trailing zeros (zero
    /// polynomial is the empty vector).
    coeffs: Vec<R>,
    var: &'static str,
}

/// Polynomials with exact rational coefficients, the common instantiation.
pub type UniPoly = Poly<Rat>;

impl<R: Ring> Poly<R> {
    pub fn new(var: &'static str, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    pub fn zero_poly(var: &'static str) -> Self {
        Poly { coeffs: Vec::new(), var }
    }

    pub fn constant(var: &'static str, c: R) -> Self {
        Self::new(var, vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(var: &'static str, c: R, deg: usize) -> Self {
        let mut coeffs = vec![R::zero(); deg];
        coeffs.push(c);
        Self::new(var, coeffs)
    }

    /// The variable itself.
    pub fn var(var: &'static str) -> Self {
        Self::monomial(var, R::one(), 1)
    }

    pub fn var_name(&self) -> &'static str {
        self.var
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, var: &'static str, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(var, self.coeffs.iter().map(|c| f(c)).collect())
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> Ring for Poly<R> {
    const NAME: &'static str = "polynomial ring";

    fn zero() -> Self {
        Poly { coeffs: Vec::new(), var: "x" }
    }

    fn one() -> Self {
        Poly { coeffs: vec![R::one()], var: "x" }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Self::new(self.pick_var(rhs), coeffs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Self::new(self.pick_var(rhs), coeffs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero_poly(self.pick_var(rhs));
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.pick_var(rhs), coeffs)
    }

    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            var: self.var,
        }
    }

    fn from_bigint(n: &Int) -> Self {
        Self::constant("x", R::from_bigint(n))
    }

    fn invert(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Self::constant(self.var, self.coeffs[0].invert()?));
        }
        Err(AlgebraError::NotInvertible {
            value: self.to_string(),
            ring: Self::NAME,
        })
    }

    /// Long division, defined when the remainder is zero and every
    /// leading-coefficient division is exact in `R`.
    fn divide_exact(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero_poly(self.pick_var(rhs)));
        }
        let dr = rhs.coeffs.len() - 1;
        let lead = &rhs.coeffs[dr];
        let mut rem = self.coeffs.clone();
        if rem.len() < rhs.coeffs.len() {
            return Err(self.inexact(rhs));
        }
        let mut quot = vec![R::zero(); rem.len() - dr];
        for qi in (0..quot.len()).rev() {
            let top = rem[qi + dr].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.divide_exact(lead).map_err(|_| self.inexact(rhs))?;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[qi + j] = rem[qi + j].sub(&q.mul(b));
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(self.inexact(rhs));
        }
        Ok(Self::new(self.pick_var(rhs), quot))
    }
}

impl<R: ExactRing> ExactRing for Poly<R> {}

impl<R: Ring> Poly<R> {
    /// Prefer the tag of a non-constant operand, so constants lifted via
    /// `from_bigint` (which carry a placeholder) do not win.
    fn pick_var(&self, other: &Self) -> &'static str {
        if self.coeffs.len() <= 1 && other.coeffs.len() > 1 {
            other.var
        } else {
            self.var
        }
    }

    fn inexact(&self, rhs: &Self) -> AlgebraError {
        AlgebraError::InexactDivision {
            value: self.to_string(),
            divisor: rhs.to_string(),
            ring: Self::NAME,
        }
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let one = R::one();
        let minus_one = one.neg();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = if cs.contains(' ') {
                // multi-term coefficient from a nested ring
                ("+", format!("({cs})"))
            } else if let Some(rest) = cs.strip_prefix('-') {
                ("-", rest.to_string())
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let unsigned_unit = *c == one || *c == minus_one;
            match i {
                0 => write!(f, "{}", mag)?,
                1 if unsigned_unit => write!(f, "{}", self.var)?,
                1 => write!(f, "{}*{}", mag, self.var)?,
                _ if unsigned_unit => write!(f, "{}^{}", self.var, i)?,
                _ => write!(f, "{}*{}^{}", mag, self.var, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{binomial_general, rat, rat_int};

    fn x() -> UniPoly {
        UniPoly::var("x")
    }

    #[test]
    fn product_identity() {
        // (x+1)(x-1) = x^2 - 1
        let p = x().add(&UniPoly::one());
        let q = x().sub(&UniPoly::one());
        let exp = UniPoly::new("x", vec![rat_int(-1), rat_int(0), rat_int(1)]);
        assert_eq!(p.mul(&q), exp);
    }

    #[test]
    fn division_round_trips() {
        let p = x().add(&UniPoly::one());
        let q = x().sub(&UniPoly::constant("x", rat_int(3)));
        let prod = p.mul(&q);
        assert_eq!(prod.divide_exact(&p).unwrap(), q);
        assert_eq!(prod.divide_exact(&q).unwrap(), p);
        assert!(prod.divide_exact(&x().add(&UniPoly::constant("x", rat_int(2)))).is_err());
        assert!(p.divide_exact(&UniPoly::zero()).is_err());
    }

    #[test]
    fn eval_and_display() {
        let p = UniPoly::new("z", vec![rat_int(1), rat_int(-3), rat_int(2)]);
        assert_eq!(p.eval(&rat_int(2)), rat_int(3)); // 2*4 - 6 + 1
        assert_eq!(p.to_string(), "2*z^2 - 3*z + 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
        let q = UniPoly::new("z", vec![rat(1, 2), rat_int(1)]);
        assert_eq!(q.to_string(), "z + 1/2");
    }

    #[test]
    fn var_tag_is_not_part_of_equality() {
        let p = UniPoly::new("x", vec![rat_int(1), rat_int(2)]);
        let q = UniPoly::new("t", vec![rat_int(1), rat_int(2)]);
        assert_eq!(p, q);
    }

    #[test]
    fn symbolic_binomial() {
        // C(alpha, 2) = (alpha^2 - alpha)/2 as a polynomial
        let alpha = UniPoly::var("a");
        let c2 = binomial_general(&alpha, 2).unwrap();
        let exp = UniPoly::new("a", vec![rat_int(0), rat(-1, 2), rat(1, 2)]);
        assert_eq!(c2, exp);
    }

    #[test]
    fn binomial_negation_as_polynomial_identity() {
        // C(-z, k) = (-1)^k C(z+k-1, k) in Q[z] for k <= 10
        let z = UniPoly::var("z");
        for k in 0u32..=10 {
            let lhs = binomial_general(&z.neg(), k).unwrap();
            let shifted = z.add(&UniPoly::constant("z", rat_int(k as i64 - 1)));
            let mut rhs = binomial_general(&shifted, k).unwrap();
            if k % 2 == 1 {
                rhs = rhs.neg();
            }
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn nested_polynomials_give_two_symbols() {
        // (a + b)^2 expanded in Q[a][b]
        type P2 = Poly<UniPoly>;
        let a = P2::constant("b", UniPoly::var("a"));
        let b = P2::var("b");
        let s = a.add(&b).pow(2);
        assert_eq!(s.coeff(0), UniPoly::new("a", vec![rat_int(0), rat_int(0), rat_int(1)]));
        assert_eq!(s.coeff(1), UniPoly::new("a", vec![rat_int(0), rat_int(2)]));
        assert_eq!(s.coeff(2), UniPoly::one());
    }
}
