//! Identity suites behind the `check` subcommand.
//!
//! Each suite re-verifies one module's central identities at configurable
//! size caps, always comparing two independently computed sides. Randomized
//! cases draw from a seeded ChaCha generator, so a fixed seed reproduces the
//! same report byte for byte; `--max-n` lowers (and, where cheap, raises)
//! the principal size cap of a suite.

pub mod report;

mod asymptotics_suite;
mod demoivre_suite;
mod determinant_suite;
mod sequences_suite;
mod series_suite;

pub use report::{CheckCase, CheckReport};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::scalar::rat;
use crate::algebra::{Rat, Ring};

/// Seed used by every randomized case unless overridden.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Which suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Demoivre,
    Series,
    Determinant,
    Sequences,
    Asymptotics,
}

impl Suite {
    pub fn all() -> [Suite; 5] {
        [
            Suite::Demoivre,
            Suite::Series,
            Suite::Determinant,
            Suite::Sequences,
            Suite::Asymptotics,
        ]
    }

    pub fn label(self) -> &'static str {
        match self {
            Suite::Demoivre => "demoivre",
            Suite::Series => "series",
            Suite::Determinant => "determinant",
            Suite::Sequences => "sequences",
            Suite::Asymptotics => "asymptotics",
        }
    }
}

/// Runs one suite. `max_n` replaces the suite's principal size cap (each
/// suite documents its default); `seed` drives the randomized cases.
pub fn run_suite(suite: Suite, max_n: Option<u32>, seed: u64) -> CheckReport {
    match suite {
        Suite::Demoivre => demoivre_suite::run(max_n, seed),
        Suite::Series => series_suite::run(max_n, seed),
        Suite::Determinant => determinant_suite::run(max_n, seed),
        Suite::Sequences => sequences_suite::run(max_n),
        Suite::Asymptotics => asymptotics_suite::run(max_n),
    }
}

/// Runs every suite in a fixed order.
pub fn run_all(max_n: Option<u32>, seed: u64) -> Vec<CheckReport> {
    Suite::all()
        .iter()
        .map(|&s| run_suite(s, max_n, seed))
        .collect()
}

/// A small random rational with numerator in `[-9, 9]` and denominator in
/// `[1, 9]`.
fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.random_range(-9..=9), rng.random_range(1..=9))
}

/// Like [`small_rat`] but never zero.
fn small_rat_nonzero(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let q = small_rat(rng);
        if !Ring::is_zero(&q) {
            return q;
        }
    }
}

/// `len` small random rationals.
fn small_rat_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| small_rat(rng)).collect()
}
