//! The coefficient field Q(s,c) with exact arithmetic and the conjugation
//! `s -> s^-1, c -> c^-1`.
//!
//! A [`Scalar`] is a reduced fraction of integer-coefficient polynomials in
//! `s` and `c`. Canonical form, which makes equality a structural comparison:
//!
//! * the denominator is a genuine polynomial (no negative exponents) not
//!   divisible by `s` or `c` — all Laurent units live in the numerator;
//! * numerator and denominator have integer coefficients, their polynomial
//!   parts share no nonunit factor, and their integer contents are coprime;
//! * the denominator's leading coefficient under the `(s_exp, c_exp)`
//!   lexicographic order is positive.

mod bilaurent;
mod gcd;

pub use bilaurent::BiLaurent;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use gcd::BPoly;

/// An element of Q(s,c) in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    num: BiLaurent,
    den: BiLaurent,
}

fn to_bpoly(p: &BiLaurent) -> BPoly {
    debug_assert!(p.has_integer_coeffs());
    debug_assert!(p.min_exps() >= (0, 0));
    let (max_s, max_c) = p.max_exps();
    let mut out: BPoly = vec![vec![BigInt::zero(); max_s as usize + 1]; max_c as usize + 1];
    for (&(se, ce), q) in p.iter() {
        out[ce as usize][se as usize] = q.numer().clone();
    }
    for c in out.iter_mut() {
        gcd::u_trim(c);
    }
    gcd::b_trim(&mut out);
    out
}

fn from_bpoly(p: &BPoly) -> BiLaurent {
    let mut out = BiLaurent::zero();
    for (ce, coeff) in p.iter().enumerate() {
        for (se, k) in coeff.iter().enumerate() {
            out.add_term(
                (se as i64, ce as i64),
                &BigRational::from_integer(k.clone()),
            );
        }
    }
    out
}

impl Scalar {
    /// Build `num / den` and reduce to canonical form.
    pub fn new(num: BiLaurent, den: BiLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: BiLaurent, den: BiLaurent) -> Self {
        if num.is_zero() {
            return Self {
                num: BiLaurent::zero(),
                den: BiLaurent::one(),
            };
        }

        // Move all Laurent units onto the numerator.
        let (ns, nc) = num.min_exps();
        let (ds, dc) = den.min_exps();
        let mut n = num.shift(-ns, -nc);
        let mut d = den.shift(-ds, -dc);
        let unit = (ns - ds, nc - dc);

        // Clear rational coefficients: the pair may be scaled freely.
        let ln = n.denominator_lcm();
        let ld = d.denominator_lcm();
        n = n.scale(&BigRational::from_integer(ln.clone()));
        d = d.scale(&BigRational::from_integer(ld.clone()));
        // value now carried: unit * (ld/ln) * n/d; fold ld/ln into the pair
        n = n.scale(&BigRational::from_integer(ld));
        d = d.scale(&BigRational::from_integer(ln));

        let cn = n.integer_content();
        let cd = d.integer_content();
        let k = cn.gcd(&cd);
        if !k.is_one() {
            let inv = BigRational::new(BigInt::one(), k);
            n = n.scale(&inv);
            d = d.scale(&inv);
        }

        // Cancel the common polynomial factor. A single-term denominator is
        // a plain integer here (its units are gone), so nothing to cancel.
        if d.num_terms() > 1 {
            let (bn, bd) = (to_bpoly(&n), to_bpoly(&d));
            let (g, qn, qd) = gcd::b_gcd_cofactors(&bn, &bd);
            if !gcd::b_is_one(&g) {
                n = from_bpoly(&qn);
                d = from_bpoly(&qd);
            }
        }

        // Dividing by the gcd cannot reintroduce units into the denominator,
        // but may flip signs; pin the leading coefficient positive.
        debug_assert_eq!(d.min_exps(), (0, 0));
        if d.leading_term().unwrap().1.is_negative() {
            n = n.neg();
            d = d.neg();
        }

        Self {
            num: n.shift(unit.0, unit.1),
            den: d,
        }
    }

    pub fn zero() -> Self {
        Self {
            num: BiLaurent::zero(),
            den: BiLaurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self {
            num: BiLaurent::monomial(n, 0, 0),
            den: BiLaurent::one(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::canonicalize(BiLaurent::monomial_rat(q, 0, 0), BiLaurent::one())
    }

    /// `s^k`.
    pub fn s_pow(k: i64) -> Self {
        Self {
            num: BiLaurent::var_s(k),
            den: BiLaurent::one(),
        }
    }

    /// `c^k`.
    pub fn c_pow(k: i64) -> Self {
        Self {
            num: BiLaurent::var_c(k),
            den: BiLaurent::one(),
        }
    }

    pub fn s() -> Self {
        Self::s_pow(1)
    }

    pub fn c() -> Self {
        Self::c_pow(1)
    }

    /// `s - s^-1`, the skein weight of a crossing change.
    pub fn hbar() -> Self {
        Self {
            num: BiLaurent::var_s(1).sub(&BiLaurent::var_s(-1)),
            den: BiLaurent::one(),
        }
    }

    pub fn numer(&self) -> &BiLaurent {
        &self.num
    }

    pub fn denom(&self) -> &BiLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some((coeff, s_exp, c_exp))` when the value is a single term with
    /// trivial denominator.
    pub fn as_monomial(&self) -> Option<(BigRational, i64, i64)> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_monomial().map(|(q, se, ce)| (q.clone(), se, ce))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self {
                num: self.num.add(&other.num),
                den: BiLaurent::one(),
            };
        }
        if self.den == other.den {
            return Self::canonicalize(self.num.add(&other.num), self.den.clone());
        }
        // reduce over the denominator gcd so the product denominator and the
        // final cancellation stay small
        let (g, qa, qb) = gcd::b_gcd_cofactors(&to_bpoly(&self.den), &to_bpoly(&other.den));
        if !gcd::b_is_one(&g) {
            let (qa, qb) = (from_bpoly(&qa), from_bpoly(&qb));
            let num = self.num.mul(&qb).add(&other.num.mul(&qa));
            return Self::canonicalize(num, self.den.mul(&qb));
        }
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        Self::canonicalize(num, self.den.mul(&other.den))
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            let num = self.num.mul(&other.num);
            // Integer contents may meet, but no denominator exists to
            // reduce against; the product is already canonical.
            return Self {
                num,
                den: BiLaurent::one(),
            };
        }
        // scaling by a single integer-coefficient term cannot create a new
        // polynomial factor against the denominator, only integer content
        if let Some((q, se, ce)) = other.as_monomial() {
            return self.scaled_by_term(&q, se, ce);
        }
        if let Some((q, se, ce)) = self.as_monomial() {
            return other.scaled_by_term(&q, se, ce);
        }
        Self::canonicalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn scaled_by_term(&self, q: &BigRational, se: i64, ce: i64) -> Self {
        let num = self.num.shift(se, ce).scale(q);
        if num.has_integer_coeffs() {
            let cn = num.integer_content();
            let cd = self.den.integer_content();
            let k = cn.gcd(&cd);
            if k.is_one() {
                return Self {
                    num,
                    den: self.den.clone(),
                };
            }
            let inv = BigRational::new(BigInt::one(), k);
            return Self {
                num: num.scale(&inv),
                den: self.den.scale(&inv),
            };
        }
        Self::canonicalize(num, self.den.clone())
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonicalize(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().div_ref(self)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Ok(acc)
    }

    /// The conjugation `s -> s^-1, c -> c^-1`, renormalized.
    pub fn star(&self) -> Self {
        Self::canonicalize(self.num.star(), self.den.star())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.num_terms() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_ref);
impl_binop!(Sub, sub, sub_ref);
impl_binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// Panicking division for expressions whose divisor is known nonzero;
/// fallible callers use [`Scalar::div_ref`].
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.div_ref(rhs).expect("division by zero")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.div_ref(&rhs).expect("division by zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Scalar {
        Scalar::s()
    }

    fn si() -> Scalar {
        Scalar::s_pow(-1)
    }

    #[test]
    fn arith_examples() {
        // add(s, s^-1) = s + s^-1
        let sum = s() + si();
        assert_eq!(sum.to_string(), "s + s^-1");
        // mul(s - s^-1, s + s^-1) = s^2 - s^-2
        let prod = Scalar::hbar() * (s() + si());
        assert_eq!(prod, Scalar::s_pow(2) - Scalar::s_pow(-2));
        // div(s^2 - 1, s - 1) = s + 1
        let a = Scalar::s_pow(2) - Scalar::one();
        let b = s() - Scalar::one();
        assert_eq!(a.div_ref(&b).unwrap(), s() + Scalar::one());
    }

    #[test]
    fn div_by_zero() {
        assert_eq!(
            Scalar::one().div_ref(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn is_zero_examples() {
        assert!(Scalar::zero().is_zero());
        assert!((s() - s()).is_zero());
        assert!(!Scalar::hbar().is_zero());
    }

    #[test]
    fn star_examples() {
        assert_eq!(s().star(), si());
        // star(s - s^-1) = -(s - s^-1)
        assert_eq!(Scalar::hbar().star(), -Scalar::hbar());
        // star((s - s^-1)/(s^-1 c^2 - s)) = (s^-1 - s)/(s c^-2 - s^-1),
        // then star is an involution.
        let den = Scalar::s_pow(-1) * Scalar::c_pow(2) - s();
        let r = Scalar::hbar() / den;
        let expected = (si() - s()) / (s() * Scalar::c_pow(-2) - si());
        assert_eq!(r.star(), expected);
        assert_eq!(r.star().star(), r);
    }

    #[test]
    fn canonical_form_is_unique() {
        // same element along different expression trees
        let a = (s() + Scalar::one()) * (s() - Scalar::one());
        let b = Scalar::s_pow(2) - Scalar::one();
        assert_eq!(a, b);
        let r1 = Scalar::hbar() / (s() * Scalar::c() - Scalar::one());
        let r2 = (Scalar::hbar() * Scalar::c_pow(3))
            / ((s() * Scalar::c() - Scalar::one()) * Scalar::c_pow(3));
        assert_eq!(r1, r2);
    }

    #[test]
    fn denominator_invariants() {
        // units move to the numerator, leading coefficient positive
        let r = Scalar::one() / (Scalar::s_pow(-1) * Scalar::c_pow(2) - s());
        assert_eq!(r.denom().min_exps(), (0, 0));
        assert!(r.denom().leading_term().unwrap().1.is_positive());
        // 1/2 keeps its integer denominator
        let half = Scalar::one() / Scalar::from_int(2);
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn field_inverse() {
        let r = Scalar::hbar() / (s() * Scalar::c() - Scalar::from_int(3));
        assert!((r.inv().unwrap() * r).is_one());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_bilaurent() -> impl Strategy<Value = BiLaurent> {
            proptest::collection::vec(((-3i64..=3, -3i64..=3), -5i64..=5), 1..4).prop_map(
                |terms| {
                    let mut p = BiLaurent::zero();
                    for ((se, ce), k) in terms {
                        p = p.add(&BiLaurent::monomial(k, se, ce));
                    }
                    p
                },
            )
        }

        fn arb_scalar() -> impl Strategy<Value = Scalar> {
            (arb_bilaurent(), arb_bilaurent())
                .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
                .prop_map(|(n, d)| Scalar::new(n, d).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
                prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
                if !a.is_zero() {
                    prop_assert!((a.inv().unwrap() * &a).is_one());
                }
            }

            #[test]
            fn canonical_equality(a in arb_scalar(), b in arb_scalar()) {
                // the same element along two expression trees has one
                // representation: structural equality is field equality
                if !b.is_zero() {
                    let direct = a.div_ref(&b).unwrap();
                    let round = direct.mul_ref(&b);
                    prop_assert_eq!(round, a);
                }
            }

            #[test]
            fn star_is_a_field_involution(a in arb_scalar(), b in arb_scalar()) {
                prop_assert_eq!(a.star().star(), a.clone());
                prop_assert_eq!((&a * &b).star(), a.star() * b.star());
                prop_assert_eq!((&a + &b).star(), a.star() + b.star());
            }

            #[test]
            fn reduced_fractions_are_coprime(a in arb_scalar()) {
                // re-canonicalizing a canonical value is the identity,
                // so numerator and denominator share no factor
                if !a.is_zero() {
                    let again = Scalar::new(a.numer().clone(), a.denom().clone()).unwrap();
                    prop_assert_eq!(again, a);
                }
            }
        }
    }
}
