//! Recursive-descent parser for scalar and polynomial expressions.
//!
//! Grammar (case-insensitive, whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-'* atom ('^' signed-int)?
//! atom   := integer | 's' | 'c' | 'x' integer | '(' expr ')'
//! ```
//!
//! Division requires a constant (scalar) divisor. Errors carry the byte
//! position of the offending token.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::laurent::{check_strand_index, lx_mul, PolyElement};
use crate::scalar::Scalar;

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
    kappa: usize,
}

fn err(pos: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position: pos,
        message: message.into(),
    }
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unsigned_int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(err(start, "expected an integer"));
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn signed_small_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat(b'-');
        let n = self.unsigned_int()?;
        let n: i64 = i64::try_from(&n).map_err(|_| err(start, "exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn expr(&mut self) -> Result<PolyElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = lx_mul(&acc, &self.factor()?)?;
                }
                Some(b'/') => {
                    let at = self.pos;
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let divisor = constant_scalar(&rhs)
                        .ok_or_else(|| err(at, "division requires a scalar divisor"))?;
                    if divisor.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    let inv = divisor.inv()?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<PolyElement> {
        let mut negate = false;
        while self.eat(b'-') {
            negate = !negate;
        }
        let mut base = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.signed_small_int()?;
            base = poly_pow(&base, e).map_err(|_| err(at, "cannot invert this base"))?;
        }
        Ok(if negate { base.neg() } else { base })
    }

    fn atom(&mut self) -> Result<PolyElement> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                Ok(inner)
            }
            Some(b's') | Some(b'S') => {
                self.pos += 1;
                Ok(PolyElement::constant(self.kappa, Scalar::s()))
            }
            Some(b'c') | Some(b'C') => {
                self.pos += 1;
                Ok(PolyElement::constant(self.kappa, Scalar::c()))
            }
            Some(b'x') | Some(b'X') => {
                self.pos += 1;
                let n = self.unsigned_int()?;
                let i = usize::try_from(&n).map_err(|_| err(at, "variable index too large"))?;
                check_strand_index(i, self.kappa)?;
                Ok(PolyElement::x(self.kappa, i))
            }
            Some(d) if d.is_ascii_digit() => {
                let n = self.unsigned_int()?;
                Ok(PolyElement::constant(
                    self.kappa,
                    Scalar::from_rational(BigRational::from_integer(n)),
                ))
            }
            Some(other) => Err(err(at, format!("unexpected character '{}'", other as char))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

fn constant_scalar(p: &PolyElement) -> Option<Scalar> {
    if p.is_zero() {
        return Some(Scalar::zero());
    }
    if p.num_terms() != 1 {
        return None;
    }
    let (e, q) = p.iter().next().unwrap();
    if e.is_zero() {
        Some(q.clone())
    } else {
        None
    }
}

fn poly_pow(base: &PolyElement, e: i64) -> Result<PolyElement> {
    let kappa = base.kappa();
    if e == 0 {
        return Ok(PolyElement::one(kappa));
    }
    let positive = if e < 0 {
        // invertible bases only: a single term
        if base.num_terms() != 1 {
            return Err(Error::Internal("non-monomial inverse".into()));
        }
        let (exps, q) = base.iter().next().unwrap();
        PolyElement::monomial(exps.neg(), q.inv()?)
    } else {
        base.clone()
    };
    let mut acc = PolyElement::one(kappa);
    for _ in 0..e.unsigned_abs() {
        acc = lx_mul(&acc, &positive)?;
    }
    Ok(acc)
}

/// Parse a polynomial expression in `x1 .. x<kappa>` over `Q(s,c)`.
pub fn parse_poly(text: &str, kappa: usize) -> Result<PolyElement> {
    assert!(kappa >= 1);
    let mut cur = Cursor {
        text: text.as_bytes(),
        pos: 0,
        kappa,
    };
    cur.skip_ws();
    if cur.pos == cur.text.len() {
        return Err(err(0, "empty expression"));
    }
    let out = cur.expr()?;
    cur.skip_ws();
    if cur.pos != cur.text.len() {
        return Err(err(cur.pos, "trailing input"));
    }
    Ok(out)
}

/// Parse a scalar expression (no `x` variables allowed).
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let p = parse_poly(text, 1)?;
    constant_scalar(&p).ok_or_else(|| err(0, "expected a scalar expression without variables"))
}

/// Parse a comma-separated composition like `1,0,-2`; must have `kappa`
/// entries.
pub fn parse_composition(text: &str, kappa: usize) -> Result<crate::laurent::ExpVec> {
    let mut entries = Vec::new();
    for (i, piece) in text.split(',').enumerate() {
        let t = piece.trim();
        let v: i64 = t
            .parse()
            .map_err(|_| err(i, format!("bad composition entry '{t}'")))?;
        entries.push(v);
    }
    if entries.len() != kappa {
        return Err(err(
            0,
            format!("composition has {} entries, expected {kappa}", entries.len()),
        ));
    }
    Ok(crate::laurent::ExpVec::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ExpVec;

    #[test]
    fn poly_round_trip() {
        let k = 2;
        let f = parse_poly("x1*x2^-1 + (s - s^-1)*x2 - 3", k).unwrap();
        let expect = PolyElement::monomial(ExpVec::new(vec![1, -1]), Scalar::one())
            .add(&PolyElement::x(k, 2).scale(&Scalar::hbar()))
            .sub(&PolyElement::constant(k, Scalar::from_int(3)));
        assert_eq!(f, expect);
        // the rendered form parses back to the same value
        let again = parse_poly(&f.to_string(), k).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn scalar_round_trip() {
        let r = Scalar::hbar() / (Scalar::s_pow(-1) * Scalar::c_pow(2) - Scalar::s());
        let again = parse_scalar(&r.to_string()).unwrap();
        assert_eq!(again, r);
        assert_eq!(parse_scalar("1/2").unwrap(), Scalar::one() / Scalar::from_int(2));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x1 + ?", 2) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_poly("x7", 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(parse_scalar("x1").is_err());
        assert!(matches!(parse_poly("1/0", 2), Err(Error::DivisionByZero)));
        // division by a polynomial is rejected
        assert!(parse_poly("1/(x1 + 1)", 2).is_err());
    }

    #[test]
    fn compositions() {
        assert_eq!(
            parse_composition("1, 0, -2", 3).unwrap(),
            ExpVec::new(vec![1, 0, -2])
        );
        assert!(parse_composition("1,2", 3).is_err());
    }
}
