//! De Moivre polynomials `A_{n,k}`.
//!
//! `A_{n,k}(a_1, a_2, ...)` is the coefficient of `x^n` in the `k`-th power
//! `(a_1 x + a_2 x^2 + a_3 x^3 + ...)^k`. Expanding the power multinomially
//! gives the defining sum
//!
//! ```text
//! A_{n,k}(a) = sum over j_1 + j_2 + ... + j_m = k with 1*j_1 + 2*j_2 + ... + m*j_m = n
//!              of  k!/(j_1! ... j_m!) * a_1^{j_1} * ... * a_m^{j_m},     m = n - k + 1
//! ```
//!
//! so `A_{n,k}` is homogeneous of degree `k`, vanishes for `n < k`, and
//! depends only on `a_1` through `a_{n-k+1}`. This module computes the
//! polynomial symbolically by enumerating the exponent vectors above, and
//! numerically both by that enumeration and by an independent recursion on
//! `k`, plus closed-form special evaluations and argument-shifting formulas.

use std::fmt;

use num_integer::Integer;
use serde_json::json;
use thiserror::Error;

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::ring::{AlgebraError, Ring};
use crate::algebra::scalar::{binomial_general, binomial_int, Int, Rat};

/// Default cap on `n` for symbolic expansion; the term count is the number of
/// partitions of `n - k` into at most `k` parts, which passes one million
/// terms near `n = 177`.
pub const DEFAULT_MAX_N: u32 = 200;

/// Size bound for symbolic expansion: the `DEMOIVRE_MAX_N` environment
/// variable when set and parseable, otherwise [`DEFAULT_MAX_N`].
pub fn configured_max_n() -> u32 {
    std::env::var("DEMOIVRE_MAX_N")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

#[derive(Debug, Error, PartialEq)]
pub enum DemoivreError {
    #[error("n = {n} exceeds the size bound {bound} (raise DEMOIVRE_MAX_N or pass --max-n)")]
    BoundExceeded { n: u32, bound: u32 },
    #[error("sequence supplies {got} coefficients but a_1..a_{needed} are required")]
    InsufficientCoefficients { needed: usize, got: usize },
    #[error("coefficient gcd requires n >= k >= 1, got n = {n}, k = {k}")]
    GcdDomain { n: u32, k: u32 },
    #[error("special family {family} requires the parameter z")]
    MissingParameter { family: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// All exponent vectors `(j_1, ..., j_m)` with `m = n - k + 1`,
/// `sum j_r = k` and `sum r*j_r = n`, in descending lexicographic order.
/// Empty when `n < k`.
pub fn enumerate_exponent_vectors(n: u32, k: u32) -> Vec<Vec<u32>> {
    if n < k {
        return Vec::new();
    }
    let m = (n - k + 1) as usize;
    let mut out = Vec::new();
    let mut current = vec![0u32; m];
    descend(1, n, k, m, &mut current, &mut out);
    out
}

fn descend(r: usize, weight: u32, count: u32, m: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if r == m {
        if (m as u32) * count == weight {
            current[r - 1] = count;
            out.push(current.clone());
            current[r - 1] = 0;
        }
        return;
    }
    let ru = r as u32;
    let max_j = count.min(weight / ru);
    // Descending loop keeps the output in descending lexicographic order.
    for j in (0..=max_j).rev() {
        let w = weight - ru * j;
        let c = count - j;
        // Positions r+1..m each add between r+1 and m to the weight per unit
        // of count, so prune branches that cannot land on (w, c) exactly.
        if (ru + 1) * c <= w && w <= (m as u32) * c {
            current[r - 1] = j;
            descend(r + 1, w, c, m, current, out);
            current[r - 1] = 0;
        }
    }
}

fn factorial_table(max: u32) -> Vec<Int> {
    let mut t = Vec::with_capacity(max as usize + 1);
    t.push(Int::from(1));
    for i in 1..=max {
        let next = t.last().unwrap() * Int::from(i);
        t.push(next);
    }
    t
}

/// `A_{n,k}` held symbolically: one `(exponent vector, multinomial
/// coefficient)` pair per term, in the fixed enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeMoivrePoly {
    n: u32,
    k: u32,
    terms: Vec<(Vec<u32>, Int)>,
}

impl DeMoivrePoly {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(Vec<u32>, Int)] {
        &self.terms
    }

    /// Gcd of all multinomial coefficients; `0` when there are no terms.
    pub fn coefficients_gcd(&self) -> Int {
        let mut g = Int::from(0);
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g == Int::from(1) {
                break;
            }
        }
        g
    }

    fn required_coeffs(&self) -> usize {
        if self.k == 0 || self.n < self.k {
            0
        } else {
            (self.n - self.k + 1) as usize
        }
    }

    /// Substitutes `a_1 = a[0], a_2 = a[1], ...` into the stored terms.
    pub fn eval<R: Ring>(&self, a: &[R]) -> Result<R, DemoivreError> {
        let needed = self.required_coeffs();
        if a.len() < needed {
            return Err(DemoivreError::InsufficientCoefficients { needed, got: a.len() });
        }
        let mut acc = R::zero();
        for (exps, coeff) in &self.terms {
            let mut term = R::from_bigint(coeff);
            for (r, &j) in exps.iter().enumerate() {
                if j > 0 {
                    term = term.mul(&Ring::pow(&a[r], j));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// The same polynomial over `Q[a1,a2,...]`.
    pub fn to_multipoly(&self) -> MultiPoly {
        let mut out = MultiPoly::new();
        for (exps, coeff) in &self.terms {
            out.add_term(exps.clone(), Rat::from_integer(coeff.clone()));
        }
        out
    }

    /// `{"n": ..., "k": ..., "terms": [{"coeff": "...", "exponents": [...]}]}`
    /// with coefficients rendered as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "k": self.k,
            "terms": self.terms.iter().map(|(exps, c)| json!({
                "coeff": c.to_string(),
                "exponents": exps,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for DeMoivrePoly {
    /// One term per line, `coeff * a1^j1 a2^j2 ...`, exponent 1 left
    /// implicit; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut factors = Vec::new();
            for (r, &j) in exps.iter().enumerate() {
                match j {
                    0 => {}
                    1 => factors.push(format!("a{}", r + 1)),
                    _ => factors.push(format!("a{}^{}", r + 1, j)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", coeff)?;
            } else {
                write!(f, "{} * {}", coeff, factors.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Symbolic `A_{n,k}` under the configured size bound.
pub fn demoivre_symbolic(n: u32, k: u32) -> Result<DeMoivrePoly, DemoivreError> {
    demoivre_symbolic_with_bound(n, k, configured_max_n())
}

/// Symbolic `A_{n,k}` with an explicit size bound on `n`.
pub fn demoivre_symbolic_with_bound(n: u32, k: u32, bound: u32) -> Result<DeMoivrePoly, DemoivreError> {
    if n > bound {
        return Err(DemoivreError::BoundExceeded { n, bound });
    }
    let facts = factorial_table(k);
    let terms = enumerate_exponent_vectors(n, k)
        .into_iter()
        .map(|exps| {
            let mut denom = Int::from(1);
            for &j in &exps {
                if j > 1 {
                    denom *= &facts[j as usize];
                }
            }
            let coeff = &facts[k as usize] / denom;
            (exps, coeff)
        })
        .collect();
    Ok(DeMoivrePoly { n, k, terms })
}

fn require_coeffs(n: u32, k: u32, got: usize) -> Result<(), DemoivreError> {
    if k == 0 || n < k {
        return Ok(());
    }
    let needed = (n - k + 1) as usize;
    if got < needed {
        return Err(DemoivreError::InsufficientCoefficients { needed, got });
    }
    Ok(())
}

/// `A_{n,k}(a)` by direct enumeration of the defining sum.
pub fn demoivre_eval<R: Ring>(n: u32, k: u32, a: &[R]) -> Result<R, DemoivreError> {
    require_coeffs(n, k, a.len())?;
    let facts = factorial_table(k);
    let mut acc = R::zero();
    for exps in enumerate_exponent_vectors(n, k) {
        let mut denom = Int::from(1);
        for &j in &exps {
            if j > 1 {
                denom *= &facts[j as usize];
            }
        }
        let mut term = R::from_bigint(&(&facts[k as usize] / denom));
        for (r, &j) in exps.iter().enumerate() {
            if j > 0 {
                term = term.mul(&Ring::pow(&a[r], j));
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `A_{n,k}(a)` by the recursion `A_{n,k+1} = sum_j a_{n-j} A_{j,k}`,
/// independent of the enumeration path.
pub fn demoivre_eval_recursive<R: Ring>(n: u32, k: u32, a: &[R]) -> Result<R, DemoivreError> {
    require_coeffs(n, k, a.len())?;
    if k == 0 {
        return Ok(if n == 0 { R::one() } else { R::zero() });
    }
    if n < k {
        return Ok(R::zero());
    }
    let n = n as usize;
    let k = k as usize;
    // Row kappa holds A_{j,kappa} for j = 0..=jmax(kappa); only entries with
    // kappa <= j <= n - (k - kappa) feed the final A_{n,k}, and restricting to
    // them keeps every argument index at most n - k + 1.
    let mut row = vec![R::zero(); n + 1];
    row[0] = R::one();
    for kappa in 0..k {
        let jmax = n - (k - 1 - kappa);
        let mut next = vec![R::zero(); n + 1];
        for j in (kappa + 1)..=jmax {
            let mut acc = R::zero();
            for i in kappa..j {
                let c = &a[j - i - 1];
                if !Ring::is_zero(c) && !Ring::is_zero(&row[i]) {
                    acc = acc.add(&c.mul(&row[i]));
                }
            }
            next[j] = acc;
        }
        row = next;
    }
    Ok(row.swap_remove(n))
}

/// The full table `A_{j,kappa}(a)` for `j <= n_max`, `kappa <= k_max`, filled
/// by the `k`-recursion; `table[kappa][j] = A_{j,kappa}`. Needs
/// `a_1..a_{n_max}`.
pub fn demoivre_table<R: Ring>(n_max: usize, k_max: usize, a: &[R]) -> Result<Vec<Vec<R>>, DemoivreError> {
    if n_max > 0 && a.len() < n_max {
        return Err(DemoivreError::InsufficientCoefficients { needed: n_max, got: a.len() });
    }
    let mut table = vec![vec![R::zero(); n_max + 1]; k_max + 1];
    table[0][0] = R::one();
    for kappa in 0..k_max {
        for j in (kappa + 1)..=n_max {
            let mut acc = R::zero();
            for i in kappa..j {
                let c = &a[j - i - 1];
                if !Ring::is_zero(c) && !Ring::is_zero(&table[kappa][i]) {
                    acc = acc.add(&c.mul(&table[kappa][i]));
                }
            }
            table[kappa + 1][j] = acc;
        }
    }
    Ok(table)
}

/// Argument families with closed-form values of `A_{n,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialFamily {
    /// `a_i = 1`: value `C(n-1, n-k)`.
    AllOnes,
    /// `a_i = C(z, i-1)`: value `C(kz, n-k)`.
    BinomZ,
    /// `a_i = C(z+i-1, i-1)`: value `C(n+kz-1, n-k)`.
    BinomShiftedZ,
    /// `a_i = 1/(i-1)!`: value `k^m / m!` with `m = n-k`.
    ExpReciprocalFactorials,
    /// `a_i = 1/i!`: value `(k!/n!) * S(n,k)`, Stirling subset numbers.
    StirlingSubset,
    /// `a_i = 1/i`: value `(k!/n!) * c(n,k)`, unsigned Stirling cycle numbers.
    StirlingCycle,
}

impl SpecialFamily {
    pub fn name(self) -> &'static str {
        match self {
            SpecialFamily::AllOnes => "all-ones",
            SpecialFamily::BinomZ => "binom-z",
            SpecialFamily::BinomShiftedZ => "binom-shifted-z",
            SpecialFamily::ExpReciprocalFactorials => "exp-reciprocal-factorials",
            SpecialFamily::StirlingSubset => "stirling-subset",
            SpecialFamily::StirlingCycle => "stirling-cycle",
        }
    }
}

/// Closed-form value of `A_{n,k}` for the given argument family; `z` is
/// required by the two binomial families and ignored otherwise.
pub fn special_eval<R: Ring>(family: SpecialFamily, n: u32, k: u32, z: Option<&R>) -> Result<R, DemoivreError> {
    if n < k {
        return Ok(R::zero());
    }
    let m = n - k;
    match family {
        SpecialFamily::AllOnes => {
            if n == 0 {
                return Ok(R::one());
            }
            Ok(R::from_bigint(&binomial_int((n - 1) as u64, m as u64)))
        }
        SpecialFamily::BinomZ => {
            let z = z.ok_or(DemoivreError::MissingParameter { family: "binom-z" })?;
            let kz = z.mul(&R::from_int(k as i64));
            Ok(binomial_general(&kz, m)?)
        }
        SpecialFamily::BinomShiftedZ => {
            let z = z.ok_or(DemoivreError::MissingParameter { family: "binom-shifted-z" })?;
            let arg = z.mul(&R::from_int(k as i64)).add(&R::from_int(n as i64 - 1));
            Ok(binomial_general(&arg, m)?)
        }
        SpecialFamily::ExpReciprocalFactorials => {
            let num = Ring::pow(&Int::from(k), m);
            let q = Rat::new(num, crate::algebra::scalar::factorial(m));
            Ok(R::from_rat(&q)?)
        }
        SpecialFamily::StirlingSubset => {
            let s = crate::sequences::stirling::stirling_subset(n, k);
            stirling_scaled(n, k, s).map_err(Into::into)
        }
        SpecialFamily::StirlingCycle => {
            let s = crate::sequences::stirling::stirling_cycle(n, k);
            stirling_scaled(n, k, s).map_err(Into::into)
        }
    }
}

fn stirling_scaled<R: Ring>(n: u32, k: u32, s: Int) -> Result<R, AlgebraError> {
    let num = crate::algebra::scalar::factorial(k) * s;
    let q = Rat::new(num, crate::algebra::scalar::factorial(n));
    R::from_rat(&q)
}

/// Gcd of the multinomial coefficients of `A_{n,k}`; equals `k / gcd(n,k)`.
pub fn coefficient_gcd(n: u32, k: u32) -> Result<Int, DemoivreError> {
    if k == 0 || n < k {
        return Err(DemoivreError::GcdDomain { n, k });
    }
    let facts = factorial_table(k);
    let mut g = Int::from(0);
    for exps in enumerate_exponent_vectors(n, k) {
        let mut denom = Int::from(1);
        for &j in &exps {
            if j > 1 {
                denom *= &facts[j as usize];
            }
        }
        g = g.gcd(&(&facts[k as usize] / denom));
        if g == Int::from(1) {
            break;
        }
    }
    Ok(g)
}

/// Which way [`shift_arguments`] moves between `A(a_1, a_2, ...)` and
/// `A(a_{r+1}, a_{r+2}, ...)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftDirection {
    /// Value of `A_{n,k}(a_{r+1}, a_{r+2}, ...)` assembled from evaluations
    /// over the unshifted sequence.
    DropPrefix,
    /// Value of `A_{n,k}(a_1, a_2, ...)` assembled from evaluations over the
    /// shifted sequence `a_{r+1}, a_{r+2}, ...`.
    RestorePrefix,
}

/// Relates `A_{n,k}` over a sequence to `A` over the same sequence with its
/// first `r` entries removed, expanding `(f - p)^k` or `((f - p) + p)^k`
/// binomially for the degree-`r` prefix `p`:
///
/// ```text
/// drop-prefix:    A_{n,k}(a_{r+1},...) = sum  C(k; j_1..j_{r+1})
///                   (-a_1)^{j_1}...(-a_r)^{j_r} A_{n+J+r*j_{r+1}, j_{r+1}}(a_1,...)
/// restore-prefix: A_{n,k}(a_1,...)     = sum  C(k; j_1..j_{r+1})
///                   a_1^{j_1}...a_r^{j_r} A_{n+J-r*k, j_{r+1}}(a_{r+1},...)
/// ```
///
/// summed over `j_1 + ... + j_{r+1} = k`, with `J = sum_{i<r} (r-i)*j_i`.
/// Either way the result must agree with direct evaluation.
pub fn shift_arguments<R: Ring>(
    n: u32,
    k: u32,
    r: u32,
    a: &[R],
    direction: ShiftDirection,
) -> Result<R, DemoivreError> {
    if direction == ShiftDirection::RestorePrefix && a.len() < r as usize {
        return Err(DemoivreError::InsufficientCoefficients { needed: r as usize, got: a.len() });
    }
    let facts = factorial_table(k);
    let mut acc = R::zero();
    let mut composition = vec![0u32; r as usize + 1];
    shift_descend(n, k, r, a, direction, &mut composition, 0, k, &facts, &mut acc)?;
    Ok(acc)
}

fn shift_descend<R: Ring>(
    n: u32,
    k: u32,
    r: u32,
    a: &[R],
    direction: ShiftDirection,
    composition: &mut Vec<u32>,
    pos: usize,
    rem: u32,
    facts: &[Int],
    acc: &mut R,
) -> Result<(), DemoivreError> {
    if pos + 1 == composition.len() {
        composition[pos] = rem;
        *acc = acc.add(&shift_term(n, k, r, a, direction, composition, facts)?);
        composition[pos] = 0;
        return Ok(());
    }
    for j in 0..=rem {
        composition[pos] = j;
        shift_descend(n, k, r, a, direction, composition, pos + 1, rem - j, facts, acc)?;
        composition[pos] = 0;
    }
    Ok(())
}

fn shift_term<R: Ring>(
    n: u32,
    k: u32,
    r: u32,
    a: &[R],
    direction: ShiftDirection,
    composition: &[u32],
    facts: &[Int],
) -> Result<R, DemoivreError> {
    let j_last = composition[r as usize];
    let j_weighted: i64 = composition[..r as usize]
        .iter()
        .enumerate()
        .map(|(i, &j)| (r as i64 - 1 - i as i64) * j as i64)
        .sum();
    let inner_n = match direction {
        ShiftDirection::DropPrefix => n as i64 + j_weighted + r as i64 * j_last as i64,
        ShiftDirection::RestorePrefix => n as i64 + j_weighted - r as i64 * k as i64,
    };
    if inner_n < j_last as i64 || (inner_n > 0 && j_last == 0) {
        return Ok(R::zero());
    }
    let mut denom = Int::from(1);
    for &j in composition {
        if j > 1 {
            denom *= &facts[j as usize];
        }
    }
    let mut term = R::from_bigint(&(&facts[k as usize] / denom));
    for (i, &j) in composition[..r as usize].iter().enumerate() {
        if j == 0 {
            continue;
        }
        if a.len() <= i {
            return Err(DemoivreError::InsufficientCoefficients { needed: i + 1, got: a.len() });
        }
        let factor = match direction {
            ShiftDirection::DropPrefix => a[i].neg(),
            ShiftDirection::RestorePrefix => a[i].clone(),
        };
        term = term.mul(&Ring::pow(&factor, j));
    }
    let inner = match direction {
        ShiftDirection::DropPrefix => demoivre_eval(inner_n as u32, j_last, a)?,
        ShiftDirection::RestorePrefix => demoivre_eval(inner_n as u32, j_last, &a[r as usize..])?,
    };
    Ok(term.mul(&inner))
}
