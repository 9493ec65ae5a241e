//! Exact correction coefficients for the partition asymptotic.
//!
//! The partition numbers satisfy
//!
//! ```text
//! p(n) = (1/(4 sqrt(3) n)) e^{pi sqrt(2n/3)}
//!        (1 + C_1 n^{-1/2} + ... + C_{R-1} n^{-(R-1)/2} + O(n^{-R/2}))
//! ```
//!
//! and each `C_r` is an exact element of `Q(sqrt 6)[pi, 1/pi]`. Writing
//! `x = pi sqrt(2/3)` for the growth constant, the coefficients factor as
//! `C_r = sum_{j=0}^{r} alpha_j(x) beta_{r-j}(x)` with
//!
//! ```text
//! alpha_j(x) = 24^{-j/2}                                   (j even)
//! alpha_j(x) = -24^{(1-j)/2} (1/x) C(j/2, (j-1)/2)         (j odd)
//! beta_l(x)  = sum_{m=ceil(l/2)}^{l} (-24)^{-m} x^{2m-l} / (2m-l)!
//!              * A_{m,2m-l}(C(1/2,1), C(1/2,2), ...)
//! ```
//!
//! The first values are `C_0 = 1`, `C_1 = -(72 + pi^2)/(24 sqrt(6) pi)`,
//! `C_2 = (432 + pi^2)/6912`. Coefficients are kept exact and only converted
//! to floating point for the numeric evaluator, which works in log space.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::scalar::{binomial_rat, factorial, rat, rat_to_f64, Int, Rat};
use crate::algebra::Ring;
use crate::demoivre::{demoivre_eval_recursive, DemoivreError};

/// An element `r + s * sqrt(6)` of the quadratic field `Q(sqrt 6)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QSqrt6 {
    pub rational: Rat,
    pub surd: Rat,
}

impl QSqrt6 {
    pub fn zero() -> Self {
        QSqrt6 { rational: Rat::zero(), surd: Rat::zero() }
    }

    pub fn one() -> Self {
        QSqrt6 { rational: Rat::one(), surd: Rat::zero() }
    }

    pub fn from_rat(q: Rat) -> Self {
        QSqrt6 { rational: q, surd: Rat::zero() }
    }

    pub fn surd_multiple(s: Rat) -> Self {
        QSqrt6 { rational: Rat::zero(), surd: s }
    }

    pub fn is_zero(&self) -> bool {
        Ring::is_zero(&self.rational) && Ring::is_zero(&self.surd)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        QSqrt6 {
            rational: &self.rational + &rhs.rational,
            surd: &self.surd + &rhs.surd,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // (a + b s)(c + d s) with s^2 = 6
        QSqrt6 {
            rational: &self.rational * &rhs.rational + (&self.surd * &rhs.surd) * rat(6, 1),
            surd: &self.rational * &rhs.surd + &self.surd * &rhs.rational,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QSqrt6 { rational: &self.rational * c, surd: &self.surd * c }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.rational) + rat_to_f64(&self.surd) * 6.0f64.sqrt()
    }
}

impl fmt::Display for QSqrt6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Ring::is_zero(&self.rational), Ring::is_zero(&self.surd)) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}*sqrt(6)", self.surd),
            (false, false) => write!(f, "{} + {}*sqrt(6)", self.rational, self.surd),
        }
    }
}

/// A Laurent polynomial in `pi` with `Q(sqrt 6)` coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PiForm {
    /// power of pi -> coefficient; stored coefficients are nonzero.
    terms: BTreeMap<i32, QSqrt6>,
}

impl PiForm {
    pub fn zero() -> Self {
        PiForm { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(0, QSqrt6::one())
    }

    pub fn term(power: i32, c: QSqrt6) -> Self {
        let mut out = Self::zero();
        out.add_term(power, c);
        out
    }

    pub fn add_term(&mut self, power: i32, c: QSqrt6) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(power).or_insert_with(QSqrt6::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn coeff(&self, power: i32) -> QSqrt6 {
        self.terms.get(&power).cloned().unwrap_or_else(QSqrt6::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &QSqrt6)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&k1, c1) in &self.terms {
            for (&k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1.mul(c2));
            }
        }
        out
    }

    pub fn eval_f64(&self) -> f64 {
        let pi = std::f64::consts::PI;
        self.terms
            .iter()
            .map(|(&k, c)| c.to_f64() * pi.powi(k))
            .sum()
    }
}

impl fmt::Display for PiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*pi", c)?,
                _ => write!(f, "({})*pi^{}", c, k)?,
            }
        }
        Ok(())
    }
}

/// `x^k` for the growth constant `x = pi sqrt(2/3) = pi sqrt(6)/3`, as an
/// exact `PiForm`; negative powers use `1/x = (sqrt(6)/2) / pi`.
fn growth_constant_power(k: i32) -> PiForm {
    let base = if k >= 0 {
        QSqrt6::surd_multiple(rat(1, 3))
    } else {
        QSqrt6::surd_multiple(rat(1, 2))
    };
    let mut c = QSqrt6::one();
    for _ in 0..k.unsigned_abs() {
        c = c.mul(&base);
    }
    PiForm::term(k, c)
}

/// `alpha_j(x)` exactly.
pub fn alpha_coeff(j: u32) -> PiForm {
    if j % 2 == 0 {
        let inv = Rat::from_integer(Int::from(24).pow(j / 2));
        PiForm::term(0, QSqrt6::from_rat(Rat::one() / inv))
    } else {
        // -24^{(1-j)/2} C(j/2, (j-1)/2) / x, with (1-j)/2 <= 0 an integer
        let power = Rat::from_integer(Int::from(24).pow((j - 1) / 2));
        let scalar = -binomial_rat(&rat(j as i64, 2), (j - 1) / 2) / power;
        let mut out = PiForm::zero();
        for (k, c) in growth_constant_power(-1).terms() {
            out.add_term(k, c.scale(&scalar));
        }
        out
    }
}

/// `beta_l(x)` exactly.
pub fn beta_coeff(l: u32) -> Result<PiForm, DemoivreError> {
    let args: Vec<Rat> = (1..=l.max(1)).map(|i| binomial_rat(&rat(1, 2), i)).collect();
    let mut out = PiForm::zero();
    for m in l.div_ceil(2)..=l {
        let k = 2 * m - l;
        let a = demoivre_eval_recursive::<Rat>(m, k, &args)?;
        if Ring::is_zero(&a) {
            continue;
        }
        let mut scalar = a / Rat::from_integer(factorial(k));
        let pow24 = Rat::from_integer(Int::from(24).pow(m));
        scalar /= if m % 2 == 0 { pow24 } else { -pow24 };
        for (p, c) in growth_constant_power(k as i32).terms() {
            out.add_term(p, c.scale(&scalar));
        }
    }
    Ok(out)
}

/// `C_0 .. C_{r_max}` exactly: `C_r = sum_j alpha_j beta_{r-j}`.
pub fn partition_asym_coeffs(r_max: u32) -> Result<Vec<PiForm>, DemoivreError> {
    let alphas: Vec<PiForm> = (0..=r_max).map(alpha_coeff).collect();
    let betas: Vec<PiForm> = (0..=r_max).map(beta_coeff).collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(r_max as usize + 1);
    for r in 0..=r_max as usize {
        let mut c = PiForm::zero();
        for j in 0..=r {
            c = c.add(&alphas[j].mul(&betas[r - j]));
        }
        out.push(c);
    }
    Ok(out)
}

/// Natural log of the `R`-term asymptotic approximation to `p(n)`:
/// main term times `sum_{r<R} C_r n^{-r/2}`, assembled in log space.
pub fn partition_asym_log(n: u64, r_terms: u32) -> Result<f64, DemoivreError> {
    assert!(n >= 1, "the asymptotic needs n >= 1");
    assert!(r_terms >= 1, "at least the main term is required");
    let coeffs = partition_asym_coeffs(r_terms - 1)?;
    let nf = n as f64;
    let mut series = 0.0;
    for (r, c) in coeffs.iter().enumerate() {
        series += c.eval_f64() / nf.powf(r as f64 / 2.0);
    }
    let pi = std::f64::consts::PI;
    let main = pi * (2.0 * nf / 3.0).sqrt() - (4.0 * 3.0f64.sqrt() * nf).ln();
    Ok(main + series.ln())
}

/// The `R`-term asymptotic approximation itself.
pub fn partition_asym_eval(n: u64, r_terms: u32) -> Result<f64, DemoivreError> {
    Ok(partition_asym_log(n, r_terms)?.exp())
}
