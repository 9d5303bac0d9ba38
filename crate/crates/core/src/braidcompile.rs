//! Braid words on the torus and their compilation to normal form.
//!
//! Letters: `T<i>` a positive crossing of strands `i, i+1`; `x<i>` / `y<i>`
//! the two loop directions of strand `i`; `g` the cyclic shift. Optional
//! `^<signed-int>` exponents, `*` or whitespace separators, case-insensitive.
//! The leftmost letter acts last, so concatenation composes on the left.
//!
//! A word evaluates by acting on the constant braid class through the
//! polynomial representation; the corner relations are built into that module
//! structure, which is what makes the evaluation well defined on skein
//! classes.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{
    check_strand_index, check_transposition_index, lx_total_degree_components, PolyElement,
};
use crate::polyrep::{apply_word, GenKind, OpLetter, OperatorWord};
use crate::qreduce::box_monomials;
use crate::scalar::Scalar;

/// The kinds of braid letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    /// Crossing of strands `i` and `i+1`.
    Sigma,
    /// Loop of strand `i` in the x direction.
    XLoop,
    /// Loop of strand `i` in the y direction.
    YLoop,
    /// Cyclic shift of all strands.
    GShift,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidLetter {
    pub kind: TokenKind,
    /// 1-based strand or crossing index; 0 for the shift.
    pub index: usize,
    /// Nonzero.
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub kappa: usize,
    pub letters: Vec<BraidLetter>,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match l.kind {
                TokenKind::Sigma => write!(f, "T{}", l.index)?,
                TokenKind::XLoop => write!(f, "x{}", l.index)?,
                TokenKind::YLoop => write!(f, "y{}", l.index)?,
                TokenKind::GShift => write!(f, "g")?,
            }
            if l.exponent != 1 {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}

/// The class of a braid word in normal form: an element of the polynomial
/// representation together with its total-degree decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub element: PolyElement,
    pub degree_components: BTreeMap<i64, PolyElement>,
}

fn parse_err(pos: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position: pos,
        message: message.into(),
    }
}

/// Tokenize a braid word, validating index ranges against `kappa`.
pub fn parse_braid(text: &str, kappa: usize) -> Result<BraidWord> {
    assert!(kappa >= 1);
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut letters = Vec::new();
    loop {
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b'*') {
            pos += 1;
        }
        if pos >= bytes.len() {
            break;
        }
        let at = pos;
        let kind = match bytes[pos].to_ascii_lowercase() {
            b't' => TokenKind::Sigma,
            b'x' => TokenKind::XLoop,
            b'y' => TokenKind::YLoop,
            b'g' => TokenKind::GShift,
            other => {
                return Err(parse_err(
                    at,
                    format!("unexpected character '{}'", other as char),
                ))
            }
        };
        pos += 1;
        let index = if kind == TokenKind::GShift {
            0
        } else {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == start {
                return Err(parse_err(start, "expected a strand index"));
            }
            let s = std::str::from_utf8(&bytes[start..pos]).unwrap();
            let i: usize = s
                .parse()
                .map_err(|_| parse_err(start, "index too large"))?;
            match kind {
                TokenKind::Sigma => check_transposition_index(i, kappa)?,
                _ => check_strand_index(i, kappa)?,
            }
            i
        };
        let exponent = if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == start || !bytes[pos - 1].is_ascii_digit() {
                return Err(parse_err(start, "expected an exponent"));
            }
            let s = std::str::from_utf8(&bytes[start..pos]).unwrap();
            let e: i64 = s
                .parse()
                .map_err(|_| parse_err(start, "exponent too large"))?;
            if e == 0 {
                return Err(parse_err(start, "zero exponent is not a letter"));
            }
            e
        } else {
            1
        };
        letters.push(BraidLetter {
            kind,
            index,
            exponent,
        });
    }
    Ok(BraidWord { kappa, letters })
}

/// The operator word realizing a braid word on the polynomial representation.
pub fn compile(w: &BraidWord) -> OperatorWord {
    OperatorWord {
        kappa: w.kappa,
        letters: w
            .letters
            .iter()
            .map(|l| OpLetter {
                kind: match l.kind {
                    TokenKind::Sigma => GenKind::T,
                    TokenKind::XLoop => GenKind::X,
                    TokenKind::YLoop => GenKind::Y,
                    TokenKind::GShift => GenKind::G,
                },
                index: l.index,
                exponent: l.exponent,
            })
            .collect(),
    }
}

/// Evaluate a braid word on the constant braid class and split the result by
/// total degree.
pub fn eval_class(w: &BraidWord) -> Result<NormalForm> {
    let element = apply_word(&compile(w), &PolyElement::one(w.kappa))?;
    let degree_components = lx_total_degree_components(&element);
    Ok(NormalForm {
        element,
        degree_components,
    })
}

/// The relation families a witness can certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// Appending a crossing at the far end scales the class by `s`.
    A1,
    /// Appending a y-loop of strand `i` scales the class by `s^{kappa+1-2i}`.
    A2,
    /// The corrected finite relation `T_i ∘ M_{x_i} ∘ T_i = M_{x_{i+1}}`,
    /// cross-checked through the one-dimensional character.
    CornerTypoCheck,
    /// A full cycle of the shift conjugation accumulates exactly `c^-2` on a
    /// single strand loop.
    MarkedPoint,
}

/// A deterministic sample of prefix words over the generators.
fn sample_words(kappa: usize) -> Vec<BraidWord> {
    let mut texts: Vec<String> = vec![String::new(), "g".into(), "g^-1".into()];
    for i in 1..kappa {
        texts.push(format!("T{i}"));
        texts.push(format!("T{i}^-1"));
    }
    for i in 1..=kappa {
        texts.push(format!("x{i}"));
        texts.push(format!("x{i}^-1"));
        texts.push(format!("y{i}"));
    }
    if kappa >= 2 {
        texts.push("T1 x1".into());
        texts.push("x1^-2 y2".into());
        texts.push("g T1 x2".into());
    }
    texts
        .into_iter()
        .map(|t| parse_braid(&t, kappa).expect("sample words are well formed"))
        .collect()
}

fn append(w: &BraidWord, l: BraidLetter) -> BraidWord {
    let mut out = w.clone();
    out.letters.push(l);
    out
}

/// Certify one relation family exactly over the built-in samples.
pub fn relation_witness(kind: WitnessKind, i: usize, kappa: usize) -> Result<bool> {
    match kind {
        WitnessKind::A1 => {
            check_transposition_index(i, kappa)?;
            for w in sample_words(kappa) {
                let base = eval_class(&w)?.element;
                let extended = eval_class(&append(
                    &w,
                    BraidLetter {
                        kind: TokenKind::Sigma,
                        index: i,
                        exponent: 1,
                    },
                ))?
                .element;
                if extended != base.scale(&Scalar::s()) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        WitnessKind::A2 => {
            check_strand_index(i, kappa)?;
            let weight = Scalar::s_pow(kappa as i64 + 1 - 2 * i as i64);
            for w in sample_words(kappa) {
                let base = eval_class(&w)?.element;
                let extended = eval_class(&append(
                    &w,
                    BraidLetter {
                        kind: TokenKind::YLoop,
                        index: i,
                        exponent: 1,
                    },
                ))?
                .element;
                if extended != base.scale(&weight) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        WitnessKind::CornerTypoCheck => {
            check_transposition_index(i, kappa)?;
            // phi(T_i x_i T_i x_{i+1}^-1) = 1
            let word = parse_braid(&format!("T{i} x{i} T{i} x{}^-1", i + 1), kappa)?;
            if !crate::polyrep::phi_char(&compile(&word))?.value.is_one() {
                return Ok(false);
            }
            // operator form on a window of monomials
            let conj = compile(&word);
            for d in -1..=1 {
                for a in box_monomials(kappa, 1, d) {
                    let f = PolyElement::monomial(a, Scalar::one());
                    if apply_word(&conj, &f)? != f {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        WitnessKind::MarkedPoint => {
            // g^-kappa x1 g^kappa = c^-2 x1 as operators
            let word = parse_braid(&format!("g^-{kappa} x1 g^{kappa}"), kappa)?;
            let conj = compile(&word);
            let expect_scale = Scalar::c_pow(-2);
            for d in -1..=1 {
                for a in box_monomials(kappa, 1, d) {
                    let f = PolyElement::monomial(a, Scalar::one());
                    let lhs = apply_word(&conj, &f)?;
                    let rhs = f
                        .mul_monomial(&crate::laurent::ExpVec::unit(kappa, 1), &expect_scale);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }
}
