//! Multivariate polynomials in `a1, a2, ...` with rational coefficients.
//!
//! The symbolic identity checks (closed forms, determinant expansions,
//! argument shifts) need products and sums of De Moivre polynomials as
//! polynomials in the argument symbols. A sorted map from exponent vector to
//! coefficient is enough: term counts stay small and iteration order is
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::{AlgebraError, ExactRing, Ring};
use super::scalar::{Int, Rat};

#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    /// Exponent vector (trailing zeros trimmed) -> nonzero coefficient.
    /// `a1^2 a3` is `[2, 0, 1]`; the constant term has the empty key.
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn new() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    /// The variable `a{i}`, 1-indexed.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-indexed");
        let mut exps = vec![0u32; i];
        exps[i - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, <Rat as Ring>::one());
        MultiPoly { terms }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = MultiPoly::new();
        p.add_term(Vec::new(), c);
        p
    }

    /// Adds `c * prod a_i^exps[i-1]` in place, dropping the term if the total
    /// cancels.
    pub fn add_term(&mut self, mut exps: Vec<u32>, c: Rat) {
        if Ring::is_zero(&c) {
            return;
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if Ring::is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Substitutes rational values for `a1..`, with zero for variables past
    /// the end of `vals` (`vals[i]` is the value of `a{i+1}`).
    pub fn eval(&self, vals: &[Rat]) -> Rat {
        let mut acc = <Rat as Ring>::zero();
        'terms: for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match vals.get(i) {
                    Some(v) => term *= Ring::pow(v, e),
                    None => continue 'terms,
                }
            }
            acc += term;
        }
        acc
    }
}

impl Default for MultiPoly {
    fn default() -> Self {
        Self::new()
    }
}

impl Ring for MultiPoly {
    const NAME: &'static str = "Q[a1,a2,...]";

    fn zero() -> Self {
        MultiPoly::new()
    }

    fn one() -> Self {
        MultiPoly::constant(<Rat as Ring>::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let n = e1.len().max(e2.len());
                let mut e = vec![0u32; n];
                for (i, slot) in e.iter_mut().enumerate() {
                    *slot = e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0);
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    fn from_bigint(n: &Int) -> Self {
        MultiPoly::constant(Rat::from_integer(n.clone()))
    }

    fn invert(&self) -> Result<Self, AlgebraError> {
        match self.as_constant() {
            Some(c) if !Ring::is_zero(&c) => Ok(MultiPoly::constant(c.recip())),
            Some(_) => Err(AlgebraError::DivisionByZero),
            None => Err(AlgebraError::NotInvertible {
                value: self.to_string(),
                ring: Self::NAME,
            }),
        }
    }

    /// Division by a nonzero constant or a single monomial that divides every
    /// term. That covers all uses here (scaling by n!, n, leading factors).
    fn divide_exact(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.terms.is_empty() {
            return Err(AlgebraError::DivisionByZero);
        }
        if rhs.terms.len() != 1 {
            return Err(AlgebraError::InexactDivision {
                value: self.to_string(),
                divisor: rhs.to_string(),
                ring: Self::NAME,
            });
        }
        let (de, dc) = rhs.terms.iter().next().expect("one term");
        let mut out = MultiPoly::new();
        for (e, c) in &self.terms {
            let mut q = e.clone();
            for (i, &d) in de.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let have = q.get(i).copied().unwrap_or(0);
                if have < d {
                    return Err(AlgebraError::InexactDivision {
                        value: self.to_string(),
                        divisor: rhs.to_string(),
                        ring: Self::NAME,
                    });
                }
                q[i] = have - d;
            }
            out.add_term(q, c / dc);
        }
        Ok(out)
    }
}

impl ExactRing for MultiPoly {}

impl MultiPoly {
    fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(<Rat as Ring>::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending lexicographic order in the exponents, so a1-heavy terms
        // come first and the output matches the symbolic printer
        for (exps, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            write!(f, "{}", monomial_string(&mag, exps))?;
        }
        Ok(())
    }
}

/// `"30"` with `[4,1,1]` becomes `30*a1^4*a2*a3`; bare coefficient when all
/// exponents vanish, bare monomial when the coefficient is 1.
pub(crate) fn monomial_string(mag: &str, exps: &[u32]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if mag != "1" || exps.iter().all(|&e| e == 0) {
        parts.push(mag.to_string());
    }
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("a{}", i + 1)),
            _ => parts.push(format!("a{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, rat_int};

    #[test]
    fn arithmetic_and_display() {
        let a1 = MultiPoly::var(1);
        let a2 = MultiPoly::var(2);
        let p = a1.mul(&a1).sub(&a2); // a1^2 - a2
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.to_string(), "a1^2 - a2");
        let q = p.mul(&p);
        // (a1^2 - a2)^2 = a1^4 - 2 a1^2 a2 + a2^2
        assert_eq!(q.num_terms(), 3);
        assert_eq!(q.eval(&[rat_int(2), rat_int(1)]), rat_int(9));
    }

    #[test]
    fn cancellation_drops_terms() {
        let a1 = MultiPoly::var(1);
        let z = a1.sub(&a1);
        assert!(Ring::is_zero(&z));
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn monomial_division() {
        let a1 = MultiPoly::var(1);
        let a2 = MultiPoly::var(2);
        let p = a1.mul(&a2).add(&a1.mul(&a1)); // a1^2 + a1 a2
        let q = p.divide_exact(&a1).unwrap();
        assert_eq!(q, a1.add(&a2));
        assert!(p.divide_exact(&a2).is_err());
        let half = p.divide_exact(&MultiPoly::constant(rat_int(2))).unwrap();
        assert_eq!(half.eval(&[rat_int(1), rat_int(1)]), rat(1, 1));
    }

    #[test]
    fn eval_zero_pads_missing_variables() {
        let a3 = MultiPoly::var(3);
        assert_eq!(a3.eval(&[rat_int(5)]), rat_int(0));
        assert_eq!(a3.eval(&[rat_int(0), rat_int(0), rat(1, 2)]), rat(1, 2));
    }
}
