//! Base rings and polynomial containers.
//!
//! The `Ring` trait in `ring` is the abstraction every kernel computes over.
//! `scalar` supplies the two arbitrary-precision scalar types plus factorial
//! and binomial helpers, `poly` a dense univariate polynomial, `multipoly` a
//! multivariate monomial sum over the rationals, and `laurent` a polynomial in
//! `1/u`.

pub mod laurent;
pub mod multipoly;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use laurent::LaurentInU;
pub use multipoly::MultiPoly;
pub use poly::{Poly, UniPoly};
pub use ring::{AlgebraError, ExactRing, Ring};
pub use scalar::{Int, Rat};
