//! Laurent polynomials in the two ground variables `s` and `c` with
//! arbitrary-precision rational coefficients.
//!
//! Terms are keyed by `(s_exp, c_exp)`; the `BTreeMap` order is exactly the
//! `(s_exp, c_exp)` lexicographic order used for deterministic rendering and
//! for the leading-term conventions of [`crate::scalar::Scalar`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A finite table of terms `coeff * s^i * c^j`. No stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `n * s^se * c^ce`.
    pub fn monomial(n: i64, se: i64, ce: i64) -> Self {
        Self::monomial_rat(BigRational::from_integer(BigInt::from(n)), se, ce)
    }

    pub fn monomial_rat(coeff: BigRational, se: i64, ce: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((se, ce), coeff);
        }
        Self { terms }
    }

    pub fn var_s(exp: i64) -> Self {
        Self::monomial(1, exp, 0)
    }

    pub fn var_c(exp: i64) -> Self {
        Self::monomial(1, 0, exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|q| q.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &BigRational)> {
        self.terms.iter()
    }

    /// The single term `(coeff, s_exp, c_exp)` if there is exactly one.
    pub fn as_monomial(&self) -> Option<(&BigRational, i64, i64)> {
        if self.terms.len() == 1 {
            let ((se, ce), q) = self.terms.iter().next().unwrap();
            Some((q, *se, *ce))
        } else {
            None
        }
    }

    /// Leading term under the `(s_exp, c_exp)` lexicographic order, largest
    /// first.
    pub fn leading_term(&self) -> Option<(&(i64, i64), &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum of all exponents; `(0, 0)` for the zero value.
    pub fn min_exps(&self) -> (i64, i64) {
        let mut it = self.terms.keys();
        let Some(&(s0, c0)) = it.next() else {
            return (0, 0);
        };
        it.fold((s0, c0), |(a, b), &(s, c)| (a.min(s), b.min(c)))
    }

    pub fn max_exps(&self) -> (i64, i64) {
        let mut it = self.terms.keys();
        let Some(&(s0, c0)) = it.next() else {
            return (0, 0);
        };
        it.fold((s0, c0), |(a, b), &(s, c)| (a.max(s), b.max(c)))
    }

    pub fn add_term(&mut self, key: (i64, i64), coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(q) => {
                *q += coeff;
                if q.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, q) in &other.terms {
            out.add_term(*k, q);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, q)| (*k, -q)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((s1, c1), q1) in &self.terms {
            for ((s2, c2), q2) in &other.terms {
                out.add_term((s1 + s2, c1 + c2), &(q1 * q2));
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, r)| (*k, r * q)).collect(),
        }
    }

    /// Multiply by the unit `s^ds * c^dc`.
    pub fn shift(&self, ds: i64, dc: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(s, c), q)| ((s + ds, c + dc), q.clone()))
                .collect(),
        }
    }

    /// Substitute `s -> s^-1, c -> c^-1`.
    pub fn star(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(s, c), q)| ((-s, -c), q.clone()))
                .collect(),
        }
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for q in self.terms.values() {
            l = num_integer::lcm(l, q.denom().clone());
        }
        l
    }

    /// Gcd of all coefficient numerators, assuming integer coefficients.
    /// Returns a positive value; zero only for the zero polynomial.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for q in self.terms.values() {
            debug_assert!(q.denom().is_one());
            g = num_integer::gcd(g, q.numer().clone());
        }
        g.abs()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|q| q.denom().is_one())
    }
}

fn write_coeff_abs(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    let a = q.abs();
    if a.denom().is_one() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for BiLaurent {
    /// Deterministic rendering: terms in `(s_exp, c_exp)` lexicographic
    /// descending order, e.g. `s^2*c - 2*s + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (&(se, ce), q)) in self.terms.iter().rev().enumerate() {
            let neg = q.is_negative();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            let abs = q.abs();
            if !abs.is_one() || (se == 0 && ce == 0) {
                // coefficient part rendered below via write_coeff_abs
                parts.push(String::new());
            }
            if se != 0 {
                parts.push(if se == 1 {
                    "s".into()
                } else {
                    format!("s^{se}")
                });
            }
            if ce != 0 {
                parts.push(if ce == 1 {
                    "c".into()
                } else {
                    format!("c^{ce}")
                });
            }
            let mut first = true;
            for p in &parts {
                if !first {
                    write!(f, "*")?;
                }
                if p.is_empty() {
                    write_coeff_abs(f, q)?;
                } else {
                    write!(f, "{p}")?;
                }
                first = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let s = BiLaurent::var_s(1);
        let s_inv = BiLaurent::var_s(-1);
        let sum = s.add(&s_inv);
        assert_eq!(sum.num_terms(), 2);
        assert!(s.sub(&s).is_zero());
        // (s - s^-1)(s + s^-1) = s^2 - s^-2
        let hbar = s.sub(&s_inv);
        let p = hbar.mul(&s.add(&s_inv));
        assert_eq!(p, BiLaurent::var_s(2).sub(&BiLaurent::var_s(-2)));
    }

    #[test]
    fn star_is_involutive() {
        let p = BiLaurent::monomial(3, 2, -1).add(&BiLaurent::monomial(-1, 0, 4));
        assert_eq!(p.star().star(), p);
    }

    #[test]
    fn rendering() {
        let s = BiLaurent::var_s(1);
        let p = BiLaurent::var_s(2)
            .mul(&BiLaurent::var_c(1))
            .sub(&s.scale(&BigRational::from_integer(2.into())))
            .add(&BiLaurent::one());
        assert_eq!(p.to_string(), "s^2*c - 2*s + 1");
        assert_eq!(BiLaurent::zero().to_string(), "0");
        assert_eq!(BiLaurent::monomial(-1, -1, 0).to_string(), "-s^-1");
    }
}
