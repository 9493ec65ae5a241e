//! Integer and polynomial sequences with De Moivre-polynomial formulas:
//! partition counts, divisor sums, Ramanujan's tau function, Bernoulli
//! numbers and polynomials, Stirling triangles, orthogonal polynomials, and
//! cyclotomic polynomials. Every object here is computed by at least two
//! independent routes so the identities behind them can be checked rather
//! than assumed.

pub mod bernoulli;
pub mod cyclotomic;
pub mod orthogonal;
pub mod partitions;
pub mod stirling;
pub mod tau;
