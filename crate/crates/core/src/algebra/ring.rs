//! The coefficient-ring abstraction.
//!
//! One set of kernels serves symbolic and numeric callers: the same De Moivre
//! evaluation runs over `Rat`, `BigInt`, `f64`, or a polynomial ring. The
//! closed set of instantiations is selected statically so the kernels stay
//! monomorphic; there is no dynamic ring tower.
//!
//! `ExactRing` marks the rings whose arithmetic is exact. Identity checks that
//! must not see rounding (determinants in particular) bound their ring
//! parameter by `ExactRing`, so handing them `f64` is a compile error.

use std::fmt::{Debug, Display};

use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::scalar::{Int, Rat};

/// Errors from ring arithmetic that is partial: inversion and exact division.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{value} is not invertible in {ring}")]
    NotInvertible { value: String, ring: &'static str },
    #[error("{divisor} does not divide {value} exactly in {ring}")]
    InexactDivision {
        value: String,
        divisor: String,
        ring: &'static str,
    },
}

/// A commutative ring with identity, containing the integers.
///
/// `divide_exact` is defined exactly where the divisor divides: always for
/// nonzero divisors in a field, only on multiples in `Int`, coefficientwise
/// for polynomial rings. `invert` is `one().divide_exact(self)`.
pub trait Ring: Clone + PartialEq + Debug + Display {
    /// Short ring name used in error messages.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The canonical image of an integer in this ring.
    fn from_bigint(n: &Int) -> Self;
    fn invert(&self) -> Result<Self, AlgebraError>;
    fn divide_exact(&self, rhs: &Self) -> Result<Self, AlgebraError>;

    fn from_int(n: i64) -> Self {
        Self::from_bigint(&Int::from(n))
    }

    /// The image of a rational number; errors where the ring cannot divide,
    /// e.g. `1/2` in `Int`.
    fn from_rat(q: &Rat) -> Result<Self, AlgebraError> {
        Self::from_bigint(q.numer()).divide_exact(&Self::from_bigint(q.denom()))
    }

    /// Nonnegative power by repeated squaring; `x^0 = 1` including `0^0`.
    fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Integer power; negative exponents require invertibility.
    fn pow_i64(&self, e: i64) -> Result<Self, AlgebraError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.invert()?.pow((-e) as u32))
        }
    }
}

/// Marker for rings with exact (roundoff-free) arithmetic.
pub trait ExactRing: Ring {}

impl Ring for Rat {
    const NAME: &'static str = "Q";

    fn zero() -> Self {
        Rat::from_integer(Int::from(0))
    }

    fn one() -> Self {
        Rat::from_integer(Int::from(1))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn from_bigint(n: &Int) -> Self {
        Rat::from_integer(n.clone())
    }

    fn from_rat(q: &Rat) -> Result<Self, AlgebraError> {
        Ok(q.clone())
    }

    fn invert(&self) -> Result<Self, AlgebraError> {
        if Zero::is_zero(self) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn divide_exact(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if Zero::is_zero(rhs) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

impl ExactRing for Rat {}

impl Ring for Int {
    const NAME: &'static str = "Z";

    fn zero() -> Self {
        Int::from(0)
    }

    fn one() -> Self {
        Int::from(1)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn from_bigint(n: &Int) -> Self {
        n.clone()
    }

    fn invert(&self) -> Result<Self, AlgebraError> {
        if self.abs() == Int::from(1) {
            Ok(self.clone())
        } else if Zero::is_zero(self) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Err(AlgebraError::NotInvertible {
                value: self.to_string(),
                ring: Self::NAME,
            })
        }
    }

    fn divide_exact(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if Zero::is_zero(rhs) {
            return Err(AlgebraError::DivisionByZero);
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision {
                value: self.to_string(),
                divisor: rhs.to_string(),
                ring: Self::NAME,
            })
        }
    }
}

impl ExactRing for Int {}

/// Double precision floats form the one approximate "ring": `divide_exact`
/// is plain division. Not `ExactRing`, so only the numeric evaluation paths
/// in `asymptotics` accept it.
impl Ring for f64 {
    const NAME: &'static str = "R64";

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn from_bigint(n: &Int) -> Self {
        n.to_f64().unwrap_or(f64::NAN)
    }

    fn invert(&self) -> Result<Self, AlgebraError> {
        if *self == 0.0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(1.0 / self)
    }

    fn divide_exact(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if *rhs == 0.0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::rat;

    #[test]
    fn rational_field_ops() {
        let a = rat(1, 2);
        let b = rat(1, 3);
        assert_eq!(a.add(&b), rat(5, 6));
        assert_eq!(a.mul(&b), rat(1, 6));
        assert_eq!(a.sub(&b), rat(1, 6));
        assert_eq!(rat(7, 3).divide_exact(&rat(0, 1)), Err(AlgebraError::DivisionByZero));
        assert_eq!(rat(-2, 4).invert().unwrap(), rat(-2, 1));
    }

    #[test]
    fn rational_canonical_form() {
        let q = rat(6, -8);
        assert_eq!(q.numer(), &Int::from(-3));
        assert_eq!(q.denom(), &Int::from(4));
    }

    #[test]
    fn integer_ring_partial_division() {
        let six = Int::from(6);
        let three = Int::from(3);
        assert_eq!(six.divide_exact(&three).unwrap(), Int::from(2));
        assert!(matches!(
            Int::from(7).divide_exact(&three),
            Err(AlgebraError::InexactDivision { .. })
        ));
        assert!(Int::from(-1).invert().is_ok());
        assert!(Int::from(2).invert().is_err());
    }

    #[test]
    fn pow_and_embeddings() {
        assert_eq!(rat(2, 3).pow(3), rat(8, 27));
        assert_eq!(rat(2, 1).pow_i64(-2).unwrap(), rat(1, 4));
        assert_eq!(Rat::from_rat(&rat(3, 7)).unwrap(), rat(3, 7));
        assert!(Int::from_rat(&rat(1, 2)).is_err());
        assert_eq!(Int::from_rat(&rat(4, 2)).unwrap(), Int::from(2));
        assert_eq!(f64::from_rat(&rat(1, 4)).unwrap(), 0.25);
        assert_eq!(<f64 as Ring>::zero().pow(0), 1.0);
    }
}
