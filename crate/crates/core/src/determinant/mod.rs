//! Banded lower-Hessenberg matrices whose determinants package alternating
//! De Moivre sums, giving a third computation path independent of both the
//! coefficient enumeration and the triangular recursions.
//!
//! All three shapes place `a_{i-j+1} t` at `(i, j)` on and below the main
//! diagonal and zeros above the superdiagonal. They differ in one band:
//!
//! * kind `M`: superdiagonal all ones;
//!   `det = sum_k (-1)^{n+k} t^k A_{n,k}(a_1, a_2, ...)`.
//! * kind `N`: superdiagonal entry on row `j` is `j`;
//!   `det / n! = sum_k (-1)^{n+k} (t^k / k!) A_{n,k}(a_1/1, a_2/2, ...)`.
//! * kind `O`: first-column entry on row `j` is `j a_j t`;
//!   `det / n = sum_k (-1)^{n+k} (t^k / k) A_{n,k}(a_1, a_2, ...)`.
//!
//! Determinants are evaluated by the leading-minor recurrence for
//! Hessenberg matrices, never by Gaussian elimination, so every entry stays
//! in the original exact ring.

use std::fmt;

use thiserror::Error;

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::poly::Poly;
use crate::algebra::ring::{ExactRing, Ring};
use crate::algebra::scalar::{factorial, Int, Rat};
use crate::demoivre::{demoivre_symbolic, DeMoivrePoly, DemoivreError};

#[derive(Debug, Error)]
pub enum DeterminantError {
    #[error("dimension {n} needs coefficients a_1..a_{n}, got {got}")]
    InsufficientCoefficients { n: usize, got: usize },
    #[error(transparent)]
    Demoivre(#[from] DemoivreError),
}

/// Which band of the matrix carries the row-index scaling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BandKind {
    M,
    N,
    O,
}

impl BandKind {
    pub fn all() -> [BandKind; 3] {
        [BandKind::M, BandKind::N, BandKind::O]
    }

    pub fn label(self) -> &'static str {
        match self {
            BandKind::M => "M",
            BandKind::N => "N",
            BandKind::O => "O",
        }
    }
}

impl fmt::Display for BandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A fully materialized `n x n` matrix of one of the three band shapes.
#[derive(Clone, Debug)]
pub struct BandMatrix<R: Ring> {
    kind: BandKind,
    n: usize,
    rows: Vec<Vec<R>>,
}

/// Lays the matrix out row by row; `a` must supply `a_1..a_n`.
pub fn build<R: Ring>(
    kind: BandKind,
    n: usize,
    t: &R,
    a: &[R],
) -> Result<BandMatrix<R>, DeterminantError> {
    assert!(n >= 1, "band matrices start at dimension 1");
    if a.len() < n {
        return Err(DeterminantError::InsufficientCoefficients { n, got: a.len() });
    }
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let entry = if j == i + 1 {
                match kind {
                    BandKind::N => R::from_int(i as i64),
                    _ => R::one(),
                }
            } else if j > i {
                R::zero()
            } else {
                let mut e = a[i - j].mul(t);
                if kind == BandKind::O && j == 1 {
                    e = e.mul(&R::from_int(i as i64));
                }
                e
            };
            row.push(entry);
        }
        rows.push(row);
    }
    Ok(BandMatrix { kind, n, rows })
}

impl<R: Ring> BandMatrix<R> {
    pub fn kind(&self) -> BandKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at one-indexed `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.rows[i - 1][j - 1]
    }
}

impl<R: ExactRing> BandMatrix<R> {
    pub fn det_exact(&self) -> R {
        lower_hessenberg_det(&self.rows)
    }
}

/// Determinant of a lower Hessenberg matrix (zeros above the superdiagonal)
/// by the leading-minor recurrence
///
/// ```text
/// d_r = sum_{j=1}^r (-1)^{r-j} h[r][j] d_{j-1} prod_{i=j}^{r-1} s_i
/// ```
///
/// where `s_i = h[i][i+1]` and `d_0 = 1`. Entries above the superdiagonal
/// are never read.
pub fn lower_hessenberg_det<R: ExactRing>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    let mut d = Vec::with_capacity(n + 1);
    d.push(R::one());
    for r in 1..=n {
        let mut acc = R::zero();
        let mut super_prod = R::one();
        for j in (1..=r).rev() {
            // super_prod currently holds prod_{i=j}^{r-1} s_i.
            let term = rows[r - 1][j - 1].mul(&d[j - 1]).mul(&super_prod);
            if (r - j) % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
            if j >= 2 {
                super_prod = super_prod.mul(&rows[j - 2][j - 1]);
            }
        }
        d.push(acc);
    }
    d[n].clone()
}

/// Result of checking one determinant identity at one dimension.
#[derive(Clone, Debug)]
pub struct IdentityOutcome {
    pub kind: BandKind,
    pub n: u32,
    pub pass: bool,
    pub lhs: String,
    pub rhs_on_failure: Option<String>,
}

impl IdentityOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.label(),
            "n": self.n,
            "pass": self.pass,
            "lhs": self.lhs,
            "rhs_on_failure": self.rhs_on_failure,
        })
    }
}

type TPoly = Poly<MultiPoly>;

/// `A_{n,k}(a_1/1, a_2/2, ...)` as a polynomial in the unscaled symbols,
/// obtained by dividing each enumerated term by the product of the argument
/// indices it uses.
fn harmonic_scaled_multipoly(p: &DeMoivrePoly) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (exps, c) in p.terms() {
        let mut denom = Int::from(1);
        for (idx, &e) in exps.iter().enumerate() {
            let base = Int::from(idx as i64 + 1);
            for _ in 0..e {
                denom *= &base;
            }
        }
        out.add_term(exps.clone(), Rat::new(c.clone(), denom));
    }
    out
}

/// The alternating sum side of the identity for `kind`, as a polynomial in
/// `t` with symbolic coefficients, computed from the term enumeration.
fn alternating_sum_symbolic(kind: BandKind, n: u32) -> Result<TPoly, DeterminantError> {
    let mut coeffs = vec![MultiPoly::new(); n as usize + 1];
    for k in 0..=n {
        if kind == BandKind::O && k == 0 {
            // The k = 0 term carries A_{n,0} = 0 for n >= 1.
            continue;
        }
        let poly = demoivre_symbolic(n, k)?;
        let mut val = match kind {
            BandKind::N => harmonic_scaled_multipoly(&poly),
            _ => poly.to_multipoly(),
        };
        let weight = match kind {
            BandKind::M => Rat::from_integer(Int::from(1)),
            BandKind::N => Rat::new(Int::from(1), factorial(k)),
            BandKind::O => Rat::new(Int::from(1), Int::from(k as i64)),
        };
        val = val.mul(&MultiPoly::constant(weight));
        if (n + k) % 2 == 1 {
            val = val.neg();
        }
        coeffs[k as usize] = val;
    }
    Ok(Poly::new("t", coeffs))
}

/// The determinant side, scaled to match: `det`, `det/n!`, or `det/n`.
fn scaled_det_symbolic(kind: BandKind, n: u32) -> Result<TPoly, DeterminantError> {
    let t: TPoly = Poly::var("t");
    let a: Vec<TPoly> = (1..=n as usize)
        .map(|i| Poly::constant("t", MultiPoly::var(i)))
        .collect();
    let m = build(kind, n as usize, &t, &a)?;
    let det = m.det_exact();
    let scale = match kind {
        BandKind::M => Rat::from_integer(Int::from(1)),
        BandKind::N => Rat::new(Int::from(1), factorial(n)),
        BandKind::O => Rat::new(Int::from(1), Int::from(n as i64)),
    };
    Ok(det.scale(&MultiPoly::constant(scale)))
}

/// Verifies, with fully symbolic coefficients and a polynomial variable `t`,
/// that the alternating De Moivre sum for `kind` equals the scaled
/// determinant. The two sides come from unrelated pipelines: term
/// enumeration on the left, the Hessenberg minor recurrence on the right.
pub fn identity_check(kind: BandKind, n: u32) -> Result<IdentityOutcome, DeterminantError> {
    let lhs = alternating_sum_symbolic(kind, n)?;
    let rhs = scaled_det_symbolic(kind, n)?;
    let pass = lhs == rhs;
    Ok(IdentityOutcome {
        kind,
        n,
        pass,
        lhs: lhs.to_string(),
        rhs_on_failure: if pass { None } else { Some(rhs.to_string()) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, rat_int};
    use crate::demoivre::demoivre_table;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat_matrix(kind: BandKind, n: usize, t: i64, a: &[i64]) -> BandMatrix<Rat> {
        let a: Vec<Rat> = a.iter().map(|&v| rat_int(v)).collect();
        build(kind, n, &rat_int(t), &a).unwrap()
    }

    #[test]
    fn layout_examples() {
        let m = rat_matrix(BandKind::M, 2, 1, &[2, 3]);
        assert_eq!(
            (m.entry(1, 1), m.entry(1, 2), m.entry(2, 1), m.entry(2, 2)),
            (&rat_int(2), &rat_int(1), &rat_int(3), &rat_int(2))
        );

        // The superdiagonal factor on row 1 is 1, so this shape matches the
        // plain one at dimension 2.
        let n2 = rat_matrix(BandKind::N, 2, 1, &[2, 3]);
        assert_eq!(n2.entry(1, 2), &rat_int(1));
        assert_eq!(n2.entry(2, 1), &rat_int(3));

        let n3 = rat_matrix(BandKind::N, 3, 1, &[2, 3, 5]);
        assert_eq!(n3.entry(2, 3), &rat_int(2));
        assert_eq!(n3.entry(1, 3), &rat_int(0));

        let o2 = rat_matrix(BandKind::O, 2, 1, &[2, 3]);
        assert_eq!(o2.entry(2, 1), &rat_int(6));
        assert_eq!(o2.entry(2, 2), &rat_int(2));

        assert!(matches!(
            build(BandKind::M, 3, &rat_int(1), &[rat_int(1)]),
            Err(DeterminantError::InsufficientCoefficients { n: 3, got: 1 })
        ));
    }

    #[test]
    fn two_by_two_determinant_symbolically() {
        let t = TPoly::constant("t", MultiPoly::constant(rat_int(1)));
        let a: Vec<TPoly> = (1..=2)
            .map(|i| Poly::constant("t", MultiPoly::var(i)))
            .collect();
        let det = build(BandKind::M, 2, &t, &a).unwrap().det_exact();
        let expect = demoivre_symbolic(2, 2)
            .unwrap()
            .to_multipoly()
            .sub(&demoivre_symbolic(2, 1).unwrap().to_multipoly());
        assert_eq!(det.coeff(0), expect);
        assert!(det.is_constant());
    }

    #[test]
    fn diagonal_matrix_determinant() {
        let rows: Vec<Vec<Rat>> = vec![
            vec![rat_int(2), rat_int(0), rat_int(0)],
            vec![rat_int(0), rat_int(3), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat_int(5)],
        ];
        assert_eq!(lower_hessenberg_det(&rows), rat_int(30));
        assert_eq!(lower_hessenberg_det::<Rat>(&[]), rat_int(1));
    }

    #[test]
    fn extraction_recovers_coefficients() {
        // (-1)^{n+k} [t^k] det = A_{n,k} for the plain shape.
        for n in 1..=8u32 {
            let t: TPoly = Poly::var("t");
            let a: Vec<TPoly> = (1..=n as usize)
                .map(|i| Poly::constant("t", MultiPoly::var(i)))
                .collect();
            let det = build(BandKind::M, n as usize, &t, &a).unwrap().det_exact();
            for k in 0..=n {
                let mut c = det.coeff(k as usize);
                if (n + k) % 2 == 1 {
                    c = c.neg();
                }
                assert_eq!(
                    c,
                    demoivre_symbolic(n, k).unwrap().to_multipoly(),
                    "n={} k={}",
                    n,
                    k
                );
            }
        }
    }

    #[test]
    fn identities_hold_symbolically() {
        for kind in BandKind::all() {
            for n in 1..=6u32 {
                let outcome = identity_check(kind, n).unwrap();
                assert!(outcome.pass, "kind {} n {}", kind, n);
                assert!(outcome.rhs_on_failure.is_none());
                let v = outcome.to_json();
                assert_eq!(v["kind"], kind.label());
                assert_eq!(v["pass"], true);
            }
        }
    }

    #[test]
    fn identities_hold_on_random_rationals() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
        for n in 1..=12usize {
            let a: Vec<Rat> = (0..n)
                .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=9)))
                .collect();
            let t = rat(rng.random_range(1..=9), rng.random_range(1..=9));
            let table = demoivre_table(n, n, &a).unwrap();
            let harmonic: Vec<Rat> = a
                .iter()
                .enumerate()
                .map(|(i, v)| v / rat_int(i as i64 + 1))
                .collect();
            let table_h = demoivre_table(n, n, &harmonic).unwrap();

            for kind in BandKind::all() {
                let mut sum = rat_int(0);
                for k in 0..=n {
                    if kind == BandKind::O && k == 0 {
                        continue;
                    }
                    let base = match kind {
                        BandKind::N => &table_h[k][n],
                        _ => &table[k][n],
                    };
                    let weight = match kind {
                        BandKind::M => rat_int(1),
                        BandKind::N => Rat::new(Int::from(1), factorial(k as u32)),
                        BandKind::O => rat(1, k as i64),
                    };
                    let mut term = base * &weight * Ring::pow(&t, k as u32);
                    if (n + k) % 2 == 1 {
                        term = -term;
                    }
                    sum += term;
                }
                let det = build(kind, n, &t, &a).unwrap().det_exact();
                let scaled = match kind {
                    BandKind::M => det,
                    BandKind::N => det / Rat::from_integer(factorial(n as u32)),
                    BandKind::O => det / rat_int(n as i64),
                };
                assert_eq!(sum, scaled, "kind {} n {}", kind, n);
            }
        }
    }

    #[test]
    fn top_row_expansion_recurrence() {
        // det at t = 1 satisfies d_n = a_1 d_{n-1} - a_2 d_{n-2} + ...
        //                              + (-1)^{n-1} a_n.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a: Vec<Rat> = (0..10)
            .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=9)))
            .collect();
        let mut dets = vec![rat_int(1)];
        for n in 1..=10usize {
            dets.push(build(BandKind::M, n, &rat_int(1), &a).unwrap().det_exact());
        }
        for n in 1..=10usize {
            let mut acc = rat_int(0);
            for j in 1..=n {
                let term = &a[j - 1] * &dets[n - j];
                if j % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            assert_eq!(acc, dets[n], "n={}", n);
        }
    }
}
