//! The polynomial representation: `T_i` acts by Demazure–Lusztig operators,
//! `g` by a twisted cyclic substitution, and `Y_i` through `g` and the `T`'s.
//!
//! Conventions, pinned by the invariant suite in [`crate::verify`]:
//!
//! * `T_i f = s * s_i(f) + (s - s^-1) * (f - s_i f) / (1 - x_i x_{i+1}^-1)`,
//!   so `T_i . 1 = s`, the quadratic `T_i^2 = (s - s^-1) T_i + 1` holds, and
//!   `T_i X_i T_i = X_{i+1}` as operators;
//! * `g` sends the monomial `X^b` to `c^{2 b_k} X^{(b_k, b_1, .., b_{k-1})}`,
//!   which conjugates multiplication operators by the twisted cyclic shift;
//! * `Y_k = T_{k-1}^-1 ∘ .. ∘ T_1^-1 ∘ g` and `Y_i = T_i ∘ Y_{i+1} ∘ T_i`,
//!   giving `Y_i . 1 = s^{k+1-2i}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{
    check_strand_index, check_transposition_index, lx_div_root, lx_permute, ExpVec, PolyElement,
};
use crate::scalar::Scalar;

/// The kinds of primitive generator letters an operator word may contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    T,
    X,
    Y,
    G,
}

/// One letter `kind_index^exponent`; `G` carries no index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpLetter {
    pub kind: GenKind,
    /// 1-based; ignored for `G`.
    pub index: usize,
    /// Nonzero.
    pub exponent: i64,
}

impl fmt::Display for OpLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::T => write!(f, "T{}", self.index)?,
            GenKind::X => write!(f, "x{}", self.index)?,
            GenKind::Y => write!(f, "y{}", self.index)?,
            GenKind::G => write!(f, "g")?,
        }
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// A composition of generator letters; the leftmost letter acts last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorWord {
    pub kappa: usize,
    pub letters: Vec<OpLetter>,
}

impl OperatorWord {
    pub fn identity(kappa: usize) -> Self {
        Self {
            kappa,
            letters: Vec::new(),
        }
    }

    /// Validate index ranges for every letter.
    pub fn validate(&self) -> Result<()> {
        for l in &self.letters {
            match l.kind {
                GenKind::T => check_transposition_index(l.index, self.kappa)?,
                GenKind::X | GenKind::Y => check_strand_index(l.index, self.kappa)?,
                GenKind::G => {}
            }
            if l.exponent == 0 {
                return Err(Error::Internal("zero exponent in operator word".into()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The Demazure–Lusztig action of `T_i`.
pub fn apply_t(i: usize, f: &PolyElement) -> Result<PolyElement> {
    let swapped = lx_permute(f, i)?;
    let quotient = lx_div_root(&f.sub(&swapped), i).expect("f - s_i(f) always divides exactly");
    Ok(swapped
        .scale(&Scalar::s())
        .add(&quotient.scale(&Scalar::hbar())))
}

/// `T_i^-1 = T_i - (s - s^-1)`.
pub fn apply_t_inv(i: usize, f: &PolyElement) -> Result<PolyElement> {
    Ok(apply_t(i, f)?.sub(&f.scale(&Scalar::hbar())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GDirection {
    Forward,
    Inverse,
}

/// The cyclic-shift generator: forward maps `X^b` to
/// `c^{2 b_k} X^{(b_k, b_1, .., b_{k-1})}`, inverse maps `X^a` to
/// `c^{-2 a_1} X^{(a_2, .., a_k, a_1)}`.
pub fn apply_g(f: &PolyElement, dir: GDirection) -> PolyElement {
    f.map_terms(|e, q| match dir {
        GDirection::Forward => {
            let last = e.get(e.kappa() - 1);
            (e.rotate_right(), q.mul_ref(&Scalar::c_pow(2 * last)))
        }
        GDirection::Inverse => {
            let first = e.get(0);
            (e.rotate_left(), q.mul_ref(&Scalar::c_pow(-2 * first)))
        }
    })
}

/// The commuting family `Y_i`, built from `g` and the `T`'s; `exponent`
/// must be `+1` or `-1`.
pub fn apply_y(i: usize, f: &PolyElement, exponent: i64) -> Result<PolyElement> {
    let kappa = f.kappa();
    check_strand_index(i, kappa)?;
    assert!(
        exponent == 1 || exponent == -1,
        "apply_y exponent must be +/-1"
    );
    if exponent == 1 {
        if i == kappa {
            // Y_k = T_{k-1}^-1 ∘ .. ∘ T_1^-1 ∘ g
            let mut h = apply_g(f, GDirection::Forward);
            for j in 1..kappa {
                h = apply_t_inv(j, &h)?;
            }
            Ok(h)
        } else {
            // Y_i = T_i ∘ Y_{i+1} ∘ T_i
            let h = apply_t(i, f)?;
            let h = apply_y(i + 1, &h, 1)?;
            apply_t(i, &h)
        }
    } else if i == kappa {
        // Y_k^-1 = g^-1 ∘ T_1 ∘ .. ∘ T_{k-1}
        let mut h = f.clone();
        for j in (1..kappa).rev() {
            h = apply_t(j, &h)?;
        }
        Ok(apply_g(&h, GDirection::Inverse))
    } else {
        // Y_i^-1 = T_i^-1 ∘ Y_{i+1}^-1 ∘ T_i^-1
        let h = apply_t_inv(i, f)?;
        let h = apply_y(i + 1, &h, -1)?;
        apply_t_inv(i, &h)
    }
}

fn apply_letter(l: &OpLetter, f: &PolyElement) -> Result<PolyElement> {
    let kappa = f.kappa();
    let mut out = f.clone();
    match l.kind {
        GenKind::T => {
            check_transposition_index(l.index, kappa)?;
            for _ in 0..l.exponent.unsigned_abs() {
                out = if l.exponent > 0 {
                    apply_t(l.index, &out)?
                } else {
                    apply_t_inv(l.index, &out)?
                };
            }
        }
        GenKind::X => {
            check_strand_index(l.index, kappa)?;
            let mut v = vec![0i64; kappa];
            v[l.index - 1] = l.exponent;
            out = out.mul_monomial(&ExpVec::new(v), &Scalar::one());
        }
        GenKind::Y => {
            let sign = l.exponent.signum();
            for _ in 0..l.exponent.unsigned_abs() {
                out = apply_y(l.index, &out, sign)?;
            }
        }
        GenKind::G => {
            let dir = if l.exponent > 0 {
                GDirection::Forward
            } else {
                GDirection::Inverse
            };
            for _ in 0..l.exponent.unsigned_abs() {
                out = apply_g(&out, dir);
            }
        }
    }
    Ok(out)
}

/// Apply a word to `f`, rightmost letter first, so that the word `uv` acts
/// as the composition `u ∘ v`.
pub fn apply_word(w: &OperatorWord, f: &PolyElement) -> Result<PolyElement> {
    if w.kappa != f.kappa() {
        return Err(Error::MismatchedKappa {
            left: w.kappa,
            right: f.kappa(),
        });
    }
    let mut out = f.clone();
    for l in w.letters.iter().rev() {
        out = apply_letter(l, &out)?;
    }
    Ok(out)
}

/// The value of the one-dimensional character of the finite-and-`X` part:
/// a monomial `±s^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiValue {
    pub value: Scalar,
}

/// The character sending `T_i -> s` and `X_i -> s^{2i-1-kappa}`; undefined
/// on `Y` and `g` letters.
pub fn phi_char(w: &OperatorWord) -> Result<PhiValue> {
    let kappa = w.kappa as i64;
    let mut exp = 0i64;
    for l in &w.letters {
        match l.kind {
            GenKind::T => {
                check_transposition_index(l.index, w.kappa)?;
                exp += l.exponent;
            }
            GenKind::X => {
                check_strand_index(l.index, w.kappa)?;
                exp += l.exponent * (2 * l.index as i64 - 1 - kappa);
            }
            GenKind::Y | GenKind::G => {
                return Err(Error::UnsupportedLetter {
                    letter: l.to_string(),
                });
            }
        }
    }
    let value = Scalar::s_pow(exp);
    debug_assert!(value.as_monomial().is_some());
    Ok(PhiValue { value })
}
