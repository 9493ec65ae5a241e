//! Coefficient engines for asymptotic expansions, kept exact as far as the
//! mathematics allows.
//!
//! * [`laplace`]: the `Psi_s` correction coefficients of Laplace-type
//!   integrals as exact (rational, half-power-of-`a0`) pairs.
//! * [`stirling_gamma`]: the Stirling-series coefficients `gamma_m` by three
//!   independent routes that must agree exactly.
//! * [`partition_asym`]: the partition-asymptotic corrections `C_r` as exact
//!   elements of `Q(sqrt 6)[pi, 1/pi]`, plus a log-space numeric evaluator.
//! * [`ell`]: the log-log expansion polynomials `l_n(u)` and the derived
//!   corrections `a_r(u)`.
//! * [`lambert`]: Lambert W on the nonnegative reals.
//! * [`integral`]: Gauss-Kronrod adaptive quadrature and validation of the
//!   log-power integral expansion against it.
//! * [`gamma_taylor`]: Taylor coefficients of `Gamma(z+1)` from zeta values,
//!   validated against closed forms and quadrature.

pub mod ell;
pub mod gamma_taylor;
pub mod integral;
pub mod lambert;
pub mod laplace;
pub mod partition_asym;
pub mod stirling_gamma;

pub use ell::{a_r_exact, a_r_f64, ell_poly};
pub use gamma_taylor::{gamma_taylor_check, gamma_taylor_coeffs, gamma_taylor_eval};
pub use integral::{adaptive_quadrature, compare_expansion, integral_i_alpha, integral_log_power};
pub use lambert::lambert_w;
pub use laplace::{laplace_psi, PsiValue};
pub use partition_asym::{partition_asym_coeffs, partition_asym_eval, partition_asym_log};
pub use stirling_gamma::{stirling_gamma, stirling_gamma_upto, GammaRoute};
