//! Laurent polynomials in the commuting variables `x1 .. x<kappa>` over
//! [`Scalar`] — the ambient space of the polynomial representation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A vector of `kappa` integer exponents; `X^a = x1^{a_1} ... xk^{a_k}`.
///
/// Ordering is lexicographic on the entries, which fixes the deterministic
/// term order used everywhere (rendering iterates descending).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec(Vec<i64>);

impl ExpVec {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(!entries.is_empty(), "kappa must be at least 1");
        Self(entries)
    }

    pub fn zero(kappa: usize) -> Self {
        Self::new(vec![0; kappa])
    }

    /// The standard basis exponent of `x_i` (1-based).
    pub fn unit(kappa: usize, i: usize) -> Self {
        let mut v = vec![0; kappa];
        v[i - 1] = 1;
        Self(v)
    }

    pub fn kappa(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total degree `sum a_i`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn l1(&self) -> i64 {
        self.0.iter().map(|e| e.abs()).sum()
    }

    pub fn max_entry(&self) -> i64 {
        *self.0.iter().max().unwrap()
    }

    pub fn min_entry(&self) -> i64 {
        *self.0.iter().min().unwrap()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.kappa(), other.kappa());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    /// Cyclic shift `(a_1, .., a_k) -> (a_2, .., a_k, a_1)`.
    pub fn rotate_left(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_left(1);
        Self(v)
    }

    /// Inverse cyclic shift `(a_1, .., a_k) -> (a_k, a_1, .., a_{k-1})`.
    pub fn rotate_right(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_right(1);
        Self(v)
    }

    /// Entries `i` and `i+1` swapped (1-based `i`).
    pub fn swapped(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Self(v)
    }

    /// Entries sorted weakly decreasing.
    pub fn shape(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// The termination measure of the reduction: `(sum |a_i|, max, #max)`
    /// compared lexicographically.
    pub fn complexity(&self) -> Complexity {
        let max = self.max_entry();
        Complexity {
            l1: self.l1(),
            max,
            max_count: self.0.iter().filter(|&&e| e == max).count(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Complexity {
    pub l1: i64,
    pub max: i64,
    pub max_count: usize,
}

/// An element of the polynomial representation: a finite `ExpVec -> Scalar`
/// table with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyElement {
    kappa: usize,
    terms: BTreeMap<ExpVec, Scalar>,
}

impl PolyElement {
    pub fn zero(kappa: usize) -> Self {
        assert!(kappa >= 1);
        Self {
            kappa,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kappa: usize) -> Self {
        Self::monomial(ExpVec::zero(kappa), Scalar::one())
    }

    pub fn constant(kappa: usize, r: Scalar) -> Self {
        Self::monomial(ExpVec::zero(kappa), r)
    }

    pub fn monomial(exps: ExpVec, coeff: Scalar) -> Self {
        let kappa = exps.kappa();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Self { kappa, terms }
    }

    /// The generator `x_i` (1-based).
    pub fn x(kappa: usize, i: usize) -> Self {
        Self::monomial(ExpVec::unit(kappa, i), Scalar::one())
    }

    pub fn x_pow(kappa: usize, i: usize, e: i64) -> Self {
        let mut v = vec![0; kappa];
        v[i - 1] = e;
        Self::monomial(ExpVec::new(v), Scalar::one())
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExpVec, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &ExpVec) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, exps: ExpVec, coeff: &Scalar) {
        assert_eq!(exps.kappa(), self.kappa, "exponent vector length mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(q) => {
                *q = q.add_ref(coeff);
                if q.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.kappa, other.kappa, "kappa mismatch");
        let mut out = self.clone();
        for (e, q) in &other.terms {
            out.add_term(e.clone(), q);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            kappa: self.kappa,
            terms: self
                .terms
                .iter()
                .map(|(e, q)| (e.clone(), q.neg_ref()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Scalar) -> Self {
        if r.is_zero() {
            return Self::zero(self.kappa);
        }
        Self {
            kappa: self.kappa,
            terms: self
                .terms
                .iter()
                .map(|(e, q)| (e.clone(), q.mul_ref(r)))
                .collect(),
        }
    }

    /// Multiply by the monomial `coeff * X^shift`.
    pub fn mul_monomial(&self, shift: &ExpVec, coeff: &Scalar) -> Self {
        assert_eq!(shift.kappa(), self.kappa);
        if coeff.is_zero() {
            return Self::zero(self.kappa);
        }
        Self {
            kappa: self.kappa,
            terms: self
                .terms
                .iter()
                .map(|(e, q)| (e.add(shift), q.mul_ref(coeff)))
                .collect(),
        }
    }

    /// Map every coefficient, dropping zeros (used by the braid involution).
    pub fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&ExpVec, &Scalar) -> (ExpVec, Scalar),
    {
        let mut out = Self::zero(self.kappa);
        for (e, q) in &self.terms {
            let (e2, q2) = f(e, q);
            out.add_term(e2, &q2);
        }
        out
    }
}

/// Exact product; the coefficient of `X^c` is the convolution over `a+b=c`.
pub fn lx_mul(f: &PolyElement, g: &PolyElement) -> Result<PolyElement> {
    if f.kappa != g.kappa {
        return Err(Error::MismatchedKappa {
            left: f.kappa,
            right: g.kappa,
        });
    }
    let mut out = PolyElement::zero(f.kappa);
    for (ea, qa) in &f.terms {
        for (eb, qb) in &g.terms {
            out.add_term(ea.add(eb), &qa.mul_ref(qb));
        }
    }
    Ok(out)
}

/// The simple transposition `s_i`: exponents `i`, `i+1` swapped (1-based).
pub fn lx_permute(f: &PolyElement, i: usize) -> Result<PolyElement> {
    check_transposition_index(i, f.kappa)?;
    Ok(PolyElement {
        kappa: f.kappa,
        terms: f
            .terms
            .iter()
            .map(|(e, q)| (e.swapped(i), q.clone()))
            .collect(),
    })
}

pub(crate) fn check_transposition_index(i: usize, kappa: usize) -> Result<()> {
    if i == 0 || i >= kappa {
        return Err(Error::IndexOutOfRange {
            kind: "transposition",
            index: i,
            kappa,
        });
    }
    Ok(())
}

pub(crate) fn check_strand_index(i: usize, kappa: usize) -> Result<()> {
    if i == 0 || i > kappa {
        return Err(Error::IndexOutOfRange {
            kind: "strand",
            index: i,
            kappa,
        });
    }
    Ok(())
}

/// Exact division by `(1 - x_i x_{i+1}^-1)`.
///
/// Terms are grouped by the exponents away from slots `i, i+1` and by the
/// slot sum `m = e_i + e_{i+1}`; each group is a Laurent polynomial in
/// `u = x_i / x_{i+1}` scaled by `x_{i+1}^m`, and dividing by `(1 - u)` is a
/// univariate synthetic division. A nonzero remainder (group value at `u = 1`)
/// reports the division inexact.
pub fn lx_div_root(f: &PolyElement, i: usize) -> Result<PolyElement> {
    check_transposition_index(i, f.kappa)?;
    let (a, b) = (i - 1, i); // 0-based slots
    // group key: exponents with slot a replaced by 0 and slot b by the sum
    let mut groups: BTreeMap<Vec<i64>, BTreeMap<i64, Scalar>> = BTreeMap::new();
    for (e, q) in &f.terms {
        let mut key = e.entries().to_vec();
        let p = key[a];
        key[a] = 0;
        key[b] += p;
        groups.entry(key).or_default().insert(p, q.clone());
    }

    let mut quotient = PolyElement::zero(f.kappa);
    let mut remainder = PolyElement::zero(f.kappa);
    for (key, coeffs) in &groups {
        // divide sum_p coeffs[p] u^p by (1 - u), ascending in p: the
        // quotient coefficient of u^p is the partial sum c_lo + .. + c_p,
        // since (1 - u) * sum q_p u^p telescopes.
        let lo = *coeffs.keys().next().unwrap();
        let hi = *coeffs.keys().next_back().unwrap();
        let mut running = Scalar::zero();
        for p in lo..hi {
            if let Some(cp) = coeffs.get(&p) {
                running = running.add_ref(cp);
            }
            if !running.is_zero() {
                let mut v = key.clone();
                v[a] += p;
                v[b] -= p;
                quotient.add_term(ExpVec::new(v), &running);
            }
        }
        // remainder = total sum of the group's coefficients, the value at u = 1
        let total = running.add_ref(&coeffs[&hi]);
        if !total.is_zero() {
            remainder.add_term(ExpVec::new(key.clone()), &total);
        }
    }

    if remainder.is_zero() {
        Ok(quotient)
    } else {
        Err(Error::InexactDivision {
            remainder: remainder.to_string(),
        })
    }
}

/// Split into homogeneous components by total degree.
pub fn lx_total_degree_components(f: &PolyElement) -> BTreeMap<i64, PolyElement> {
    let mut out: BTreeMap<i64, PolyElement> = BTreeMap::new();
    for (e, q) in &f.terms {
        out.entry(e.total())
            .or_insert_with(|| PolyElement::zero(f.kappa))
            .add_term(e.clone(), q);
    }
    out
}

fn monomial_string(e: &ExpVec) -> String {
    let mut parts = Vec::new();
    for (idx, &exp) in e.entries().iter().enumerate() {
        if exp == 0 {
            continue;
        }
        if exp == 1 {
            parts.push(format!("x{}", idx + 1));
        } else {
            parts.push(format!("x{}^{}", idx + 1, exp));
        }
    }
    parts.join("*")
}

impl fmt::Display for PolyElement {
    /// Terms in lexicographic descending order of exponent vectors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let single = self.terms.len() == 1;
        for (pos, (e, q)) in self.terms.iter().rev().enumerate() {
            let mono = monomial_string(e);
            // split a leading sign off simple coefficients
            let (sign, mag) = match q.as_monomial() {
                Some((c, se, ce)) => {
                    use num_traits::Signed;
                    let neg = c.is_negative();
                    let abs = Scalar::from_rational(c.abs())
                        .mul_ref(&Scalar::s_pow(se))
                        .mul_ref(&Scalar::c_pow(ce));
                    let m = if mono.is_empty() {
                        abs.to_string()
                    } else if abs.is_one() {
                        mono
                    } else {
                        format!("{abs}*{mono}")
                    };
                    (if neg { "-" } else { "+" }, m)
                }
                None if mono.is_empty() => {
                    ("+", if single { q.to_string() } else { format!("({q})") })
                }
                None => ("+", format!("({q})*{mono}")),
            };
            match (pos, sign) {
                (0, "-") => write!(f, "-{mag}")?,
                (0, _) => write!(f, "{mag}")?,
                (_, "-") => write!(f, " - {mag}")?,
                (_, _) => write!(f, " + {mag}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExpVec {
        ExpVec::new(v.to_vec())
    }

    #[test]
    fn mul_examples() {
        let k = 2;
        // x1 * x1^-1 = 1
        let a = PolyElement::x_pow(k, 1, 1);
        let b = PolyElement::x_pow(k, 1, -1);
        assert_eq!(lx_mul(&a, &b).unwrap(), PolyElement::one(k));
        // x1 * x2 = x1 x2
        let p = lx_mul(&PolyElement::x(k, 1), &PolyElement::x(k, 2)).unwrap();
        assert_eq!(p, PolyElement::monomial(ev(&[1, 1]), Scalar::one()));
        // (x1 + x2)(x1 - x2) = x1^2 - x2^2
        let sum = PolyElement::x(k, 1).add(&PolyElement::x(k, 2));
        let diff = PolyElement::x(k, 1).sub(&PolyElement::x(k, 2));
        let expect = PolyElement::x_pow(k, 1, 2).sub(&PolyElement::x_pow(k, 2, 2));
        assert_eq!(lx_mul(&sum, &diff).unwrap(), expect);
    }

    #[test]
    fn mul_kappa_mismatch() {
        let r = lx_mul(&PolyElement::one(2), &PolyElement::one(3));
        assert!(matches!(r, Err(Error::MismatchedKappa { .. })));
    }

    #[test]
    fn permute_examples() {
        let k = 2;
        // s1(x1^2 x2) = x1 x2^2
        let f = PolyElement::monomial(ev(&[2, 1]), Scalar::one());
        assert_eq!(
            lx_permute(&f, 1).unwrap(),
            PolyElement::monomial(ev(&[1, 2]), Scalar::one())
        );
        // symmetric monomial fixed
        let g = PolyElement::monomial(ev(&[1, 1]), Scalar::one());
        assert_eq!(lx_permute(&g, 1).unwrap(), g);
        // s1(x1 + c x2) = x2 + c x1
        let h = PolyElement::x(k, 1).add(&PolyElement::x(k, 2).scale(&Scalar::c()));
        let expect = PolyElement::x(k, 2).add(&PolyElement::x(k, 1).scale(&Scalar::c()));
        assert_eq!(lx_permute(&h, 1).unwrap(), expect);
        assert!(lx_permute(&h, 2).is_err());
    }

    #[test]
    fn div_root_examples() {
        let k = 2;
        // (x1 - x2) / (1 - x1 x2^-1) = -x2
        let f = PolyElement::x(k, 1).sub(&PolyElement::x(k, 2));
        let q = lx_div_root(&f, 1).unwrap();
        assert_eq!(q, PolyElement::x(k, 2).neg());
        // 0 divides
        assert_eq!(
            lx_div_root(&PolyElement::zero(k), 1).unwrap(),
            PolyElement::zero(k)
        );
        // (x1 x2^-1 - x1^-1 x2) / (1 - x1 x2^-1) = -(1 + x1^-1 x2)
        let g = PolyElement::monomial(ev(&[1, -1]), Scalar::one())
            .sub(&PolyElement::monomial(ev(&[-1, 1]), Scalar::one()));
        let q2 = lx_div_root(&g, 1).unwrap();
        let expect = PolyElement::one(k)
            .add(&PolyElement::monomial(ev(&[-1, 1]), Scalar::one()))
            .neg();
        assert_eq!(q2, expect);
        // multiply back
        let root = PolyElement::one(k).sub(&PolyElement::monomial(ev(&[1, -1]), Scalar::one()));
        assert_eq!(lx_mul(&q2, &root).unwrap(), g);
        // inexact division reports a remainder
        let bad = PolyElement::x(k, 1);
        assert!(matches!(
            lx_div_root(&bad, 1),
            Err(Error::InexactDivision { .. })
        ));
    }

    #[test]
    fn degree_components() {
        let k = 2;
        // x1 + x1 x2 splits into degrees 1 and 2
        let f = PolyElement::x(k, 1).add(&PolyElement::monomial(ev(&[1, 1]), Scalar::one()));
        let parts = lx_total_degree_components(&f);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&1], PolyElement::x(k, 1));
        assert_eq!(
            parts[&2],
            PolyElement::monomial(ev(&[1, 1]), Scalar::one())
        );
        // constant sits in degree 0
        let parts1 = lx_total_degree_components(&PolyElement::one(k));
        assert_eq!(parts1.len(), 1);
        assert!(parts1.contains_key(&0));
        // x1 x2^-1 + 1 is all degree 0
        let g = PolyElement::monomial(ev(&[1, -1]), Scalar::one()).add(&PolyElement::one(k));
        let parts0 = lx_total_degree_components(&g);
        assert_eq!(parts0.len(), 1);
        assert_eq!(parts0[&0], g);
    }

    #[test]
    fn rendering() {
        let k = 2;
        let f = PolyElement::x(k, 2)
            .scale(&Scalar::hbar())
            .add(&PolyElement::x(k, 1).scale(&Scalar::s_pow(-1)));
        assert_eq!(f.to_string(), "s^-1*x1 + (s - s^-1)*x2");
        assert_eq!(PolyElement::zero(k).to_string(), "0");
        let g = PolyElement::monomial(ev(&[1, -1]), Scalar::from_int(-1))
            .add(&PolyElement::one(k).neg());
        assert_eq!(g.to_string(), "-x1*x2^-1 - 1");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(kappa: usize) -> impl Strategy<Value = PolyElement> {
            proptest::collection::vec(
                (
                    proptest::collection::vec(-3i64..=3, kappa),
                    -4i64..=4,
                    -2i64..=2,
                ),
                1..5,
            )
            .prop_map(move |terms| {
                let mut p = PolyElement::zero(kappa);
                for (exps, k, se) in terms {
                    let coeff = Scalar::from_int(k).mul_ref(&Scalar::s_pow(se));
                    p.add_term(ExpVec::new(exps), &coeff);
                }
                p
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn ring_laws(f in arb_poly(3), g in arb_poly(3), h in arb_poly(3)) {
                let fg = lx_mul(&f, &g).unwrap();
                prop_assert_eq!(fg.clone(), lx_mul(&g, &f).unwrap());
                let lhs = lx_mul(&fg, &h).unwrap();
                let rhs = lx_mul(&f, &lx_mul(&g, &h).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                let dist = lx_mul(&f, &g.add(&h)).unwrap();
                prop_assert_eq!(dist, fg.add(&lx_mul(&f, &h).unwrap()));
            }

            #[test]
            fn permute_is_a_ring_involution(f in arb_poly(3), g in arb_poly(3), i in 1usize..3) {
                prop_assert_eq!(lx_permute(&lx_permute(&f, i).unwrap(), i).unwrap(), f.clone());
                let lhs = lx_permute(&lx_mul(&f, &g).unwrap(), i).unwrap();
                let rhs = lx_mul(&lx_permute(&f, i).unwrap(), &lx_permute(&g, i).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn div_root_inverts_multiplication(f in arb_poly(3), i in 1usize..3) {
                // f - s_i(f) always divides, and the quotient multiplies back
                let diff = f.sub(&lx_permute(&f, i).unwrap());
                let q = lx_div_root(&diff, i).unwrap();
                let mut root_exps = vec![0i64; 3];
                root_exps[i - 1] = 1;
                root_exps[i] = -1;
                let root = PolyElement::one(3)
                    .sub(&PolyElement::monomial(ExpVec::new(root_exps), Scalar::one()));
                prop_assert_eq!(lx_mul(&q, &root).unwrap(), diff);
            }

            #[test]
            fn degree_components_resum(f in arb_poly(3)) {
                let parts = lx_total_degree_components(&f);
                let mut sum = PolyElement::zero(3);
                for (d, part) in &parts {
                    for (e, _) in part.iter() {
                        prop_assert_eq!(e.total(), *d);
                    }
                    sum = sum.add(part);
                }
                prop_assert_eq!(sum, f);
            }
        }
    }
}
