//! Exact arithmetic for De Moivre polynomials `A_{n,k}` (also known as partial
//! ordinary Bell polynomials) and the toolkit built on them:
//!
//! - `algebra`: exact scalars, a small ring abstraction, dense univariate
//!   polynomials, multivariate monomial sums, and Laurent polynomials in `1/u`.
//! - `demoivre`: `A_{n,k}` symbolically and evaluated, by partition enumeration
//!   and by recursion, with closed-form special values and the coefficient-gcd
//!   theorem.
//! - `series`: truncated formal power series with composition, powers,
//!   reciprocal, exp/log, and compositional inversion by two methods.
//! - `determinant`: band-matrix determinant realizations of De Moivre sums.
//! - `sequences`: partitions, Ramanujan tau, Bernoulli, Stirling, orthogonal
//!   and cyclotomic polynomials, each by two independent routes.
//! - `asymptotics`: expansion-coefficient engines (Stirling series, partition
//!   asymptotics, Laplace method) plus numeric validation harnesses.
//! - `checks`: the identity suites behind the `check` subcommand.
//!
//! Everything outside `asymptotics` computes over exact rings only; floats
//! enter at final evaluation of constants like pi and zeta values.

pub mod algebra;
pub mod asymptotics;
pub mod checks;
pub mod demoivre;
pub mod determinant;
pub mod sequences;
pub mod series;

pub use algebra::ring::{AlgebraError, ExactRing, Ring};
pub use algebra::scalar::{Int, Rat};
