//! Text syntax for elements.
//!
//! ```text
//! sum    := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'] power)*          juxtaposition is the noncommutative product
//! power  := atom ['^' exponent]
//! atom   := integer | 'q' | 'a' | 'b' | symbol | '(' sum ')'
//! symbol := 't' label | 's' digits | 's{' label (',' label)* '}'
//! ```
//!
//! `a` is `α = q + q⁻¹`, `b` is `β = α⁻¹`, and `q` accepts half-integer
//! exponents written `q^{m/2}`. `s` symbols with two equal indices expand to
//! `α − β t_i²`, four-index symbols expand through the four-point macro.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{expand_sii, s4_macro, Element, Gen, Label, SymbolError};
use crate::qring::RingElem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid symbol at byte {offset}: {message}")]
    InvalidSymbol { offset: usize, message: String },
    #[error("index {label} out of range 1..={n} at byte {offset}")]
    IndexOutOfRange { offset: usize, label: u32, n: u32 },
}

/// Parses an element over labels `1..=n`.
pub fn parse(input: &str, n: u32) -> Result<Element, ParseError> {
    parse_with(input, n, &|l| Some(l))
}

/// Parses with every written label passed through `relabel` first; `None`
/// rejects the label. Range checks against `n` apply after relabeling.
pub fn parse_with(input: &str, n: u32, relabel: &dyn Fn(u32) -> Option<u32>) -> Result<Element, ParseError> {
    let mut p = Parser { src: input.as_bytes(), pos: 0, n, relabel };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(e)
}

/// Parses a single generator symbol such as `t3`, `s24`, `s{3,12}`.
pub fn parse_gen(s: &str) -> Result<Gen, ParseError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, n: Label::MAX as u32, relabel: &|l| Some(l) };
    let start = p.pos;
    let labels = match p.peek() {
        Some(b't') | Some(b's') => {
            p.pos += 1;
            p.labels(p.src[start] == b't')?
        }
        _ => return Err(p.syntax("expected a generator symbol".into())),
    };
    if p.pos != p.src.len() {
        return Err(p.syntax("trailing characters after symbol".into()));
    }
    let is_t = p.src[start] == b't';
    if !is_t && labels.len() < 2 {
        return Err(ParseError::InvalidSymbol { offset: start, message: "s needs at least two indices".into() });
    }
    Gen::make(&labels, p.n).map_err(|e| p.symbol_error(start, e))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: u32,
    relabel: &'a dyn Fn(u32) -> Option<u32>,
}

impl Parser<'_> {
    fn syntax(&self, message: String) -> ParseError {
        ParseError::Syntax { offset: self.pos, message }
    }

    fn symbol_error(&self, offset: usize, e: SymbolError) -> ParseError {
        match e {
            SymbolError::InvalidSymbol(message) => ParseError::InvalidSymbol { offset, message },
            SymbolError::IndexOutOfRange { label, n } => ParseError::IndexOutOfRange { offset, label, n },
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_ws(&mut self) -> Option<u8> {
        self.skip_ws();
        self.peek()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek_ws() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Element, ParseError> {
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(c: u8) -> bool {
        c.is_ascii_digit() || matches!(c, b'q' | b'a' | b'b' | b't' | b's' | b'(')
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') || self.peek_ws().is_some_and(Self::starts_atom) {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an integer".into()));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat(b'-');
        let at = self.pos;
        let v = self.integer()?;
        let v: i64 = v.try_into().map_err(|_| ParseError::Syntax { offset: at, message: "exponent too large".into() })?;
        Ok(if neg { -v } else { v })
    }

    /// Exponent as a doubled integer; half-integers only when `half_ok`.
    fn exponent(&mut self, half_ok: bool) -> Result<i64, ParseError> {
        if self.eat(b'{') {
            let num = self.small_int()?;
            let doubled = if self.eat(b'/') {
                let at = self.pos;
                let d = self.integer()?;
                if d != BigInt::from(2) {
                    return Err(ParseError::Syntax { offset: at, message: "only /2 denominators allowed".into() });
                }
                num
            } else {
                2 * num
            };
            if !self.eat(b'}') {
                return Err(self.syntax("expected '}'".into()));
            }
            if doubled % 2 != 0 && !half_ok {
                return Err(self.syntax("half-integer exponent only allowed on q".into()));
            }
            Ok(doubled)
        } else {
            Ok(2 * self.small_int()?)
        }
    }

    fn power(&mut self) -> Result<Element, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'q') && !self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
            let e = if self.eat(b'^') { self.exponent(true)? } else { 2 };
            let e: i32 = e.try_into().map_err(|_| ParseError::Syntax { offset: start, message: "exponent too large".into() })?;
            return Ok(Element::scalar(RingElem::q_half_pow(e)));
        }
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let k = self.exponent(false)? / 2;
        let base = if k < 0 {
            let unit = match base.terms().next() {
                Some((w, c)) if base.len() == 1 && w.is_empty() && c.is_unit() => c.unit_inverse().unwrap(),
                _ => {
                    return Err(ParseError::Syntax { offset: at, message: "negative power of a non-unit".into() });
                }
            };
            Element::scalar(unit)
        } else {
            base
        };
        let mut acc = Element::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Element, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Element::scalar(RingElem::from_bigint(self.integer()?))),
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected ')'".into()));
                }
                Ok(e)
            }
            Some(b'a') => {
                self.pos += 1;
                Ok(Element::scalar(RingElem::alpha()))
            }
            Some(b'b') => {
                self.pos += 1;
                Ok(Element::scalar(RingElem::beta()))
            }
            Some(b't') => {
                self.pos += 1;
                let ls = self.labels(true)?;
                if ls.len() != 1 {
                    return Err(ParseError::InvalidSymbol { offset: start, message: "t takes one index".into() });
                }
                let ls = self.resolve(&ls, start)?;
                Ok(Element::gen(Gen::make(&ls, self.n).map_err(|e| self.symbol_error(start, e))?))
            }
            Some(b's') => {
                self.pos += 1;
                let ls = self.labels(false)?;
                let ls = self.resolve(&ls, start)?;
                self.s_symbol(&ls, start)
            }
            Some(c) => Err(self.syntax(format!("unexpected {:?}", c as char))),
            None => Err(self.syntax("unexpected end of input".into())),
        }
    }

    /// Raw labels after `t`/`s`: a braced comma list or single-digit shorthand.
    fn labels(&mut self, single: bool) -> Result<Vec<u32>, ParseError> {
        if self.peek() == Some(b'{') {
            self.pos += 1;
            let mut out = Vec::new();
            loop {
                let at = self.pos;
                let v = self.integer()?;
                out.push(v.try_into().map_err(|_| ParseError::IndexOutOfRange { offset: at, label: u32::MAX, n: self.n })?);
                if self.eat(b',') {
                    continue;
                }
                if self.eat(b'}') {
                    return Ok(out);
                }
                return Err(self.syntax("expected ',' or '}'".into()));
            }
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected indices".into()));
        }
        let digits = &self.src[start..self.pos];
        if single {
            let text = std::str::from_utf8(digits).unwrap();
            return text
                .parse()
                .map(|v| vec![v])
                .map_err(|_| ParseError::IndexOutOfRange { offset: start, label: u32::MAX, n: self.n });
        }
        Ok(digits.iter().map(|d| (d - b'0') as u32).collect())
    }

    fn resolve(&self, ls: &[u32], offset: usize) -> Result<Vec<u32>, ParseError> {
        ls.iter()
            .map(|&l| {
                if l == 0 {
                    return Err(ParseError::IndexOutOfRange { offset, label: 0, n: self.n });
                }
                let m = (self.relabel)(l).ok_or(ParseError::IndexOutOfRange { offset, label: l, n: self.n })?;
                if m == 0 || m > self.n {
                    return Err(ParseError::IndexOutOfRange { offset, label: m, n: self.n });
                }
                Ok(m)
            })
            .collect()
    }

    fn s_symbol(&self, ls: &[u32], offset: usize) -> Result<Element, ParseError> {
        let invalid = |message: String| ParseError::InvalidSymbol { offset, message };
        match ls.len() {
            2 if ls[0] == ls[1] => Ok(expand_sii(ls[0] as Label)),
            2 | 3 => Ok(Element::gen(Gen::s(ls, self.n).map_err(|e| self.symbol_error(offset, e))?)),
            4 => {
                let mut v = ls.to_vec();
                v.sort_unstable();
                if v.windows(2).any(|w| w[0] == w[1]) {
                    return Err(invalid(format!("repeated index in s{ls:?}")));
                }
                let l = |i: usize| v[i] as Label;
                s4_macro(l(0), l(1), l(2), l(3)).map_err(|e| self.symbol_error(offset, e))
            }
            k => Err(invalid(format!("s takes 2 to 4 indices, got {k}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Word;

    fn w(gens: &[Gen]) -> Word {
        Word::from_gens(gens)
    }

    #[test]
    fn juxtaposition_is_ordered_product() {
        let e = parse("s24 s13", 4).unwrap();
        assert_eq!(e, Element::word(w(&[Gen::S2(2, 4), Gen::S2(1, 3)])));
        let e = parse("s123 s123", 3).unwrap();
        assert_eq!(e, Element::word(w(&[Gen::S3(1, 2, 3), Gen::S3(1, 2, 3)])));
    }

    #[test]
    fn sii_macro_matches_explicit_form() {
        assert_eq!(parse("a - b * t2 t2", 3).unwrap(), parse("s22", 3).unwrap());
        assert_eq!(parse("s22", 3).unwrap(), expand_sii(2));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse("q^{3/2}", 1).unwrap(), Element::scalar(RingElem::q_half_pow(3)));
        assert_eq!(parse("q^-2", 1).unwrap(), Element::scalar(RingElem::q_pow(-2)));
        assert_eq!(parse("q^{-1/2}", 1).unwrap(), Element::scalar(RingElem::q_half_pow(-1)));
        assert_eq!(parse("a*b", 1).unwrap(), Element::one());
        assert_eq!(parse("b^-1", 1).unwrap(), Element::scalar(RingElem::alpha()));
        assert_eq!(parse("q + q^-1 - a", 1).unwrap(), Element::zero());
        assert_eq!(parse("(q - q^-1)(q + q^-1)", 1).unwrap(), parse("q^2 - q^-2", 1).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("s12 +", 3), Err(ParseError::Syntax { offset: 5, .. })));
        assert!(matches!(parse("s15", 4), Err(ParseError::IndexOutOfRange { label: 5, n: 4, .. })));
        assert!(matches!(parse("s1", 4), Err(ParseError::InvalidSymbol { .. })));
        assert!(matches!(parse("s121", 4), Err(ParseError::InvalidSymbol { .. })));
        assert!(matches!(parse("s12 ?", 4), Err(ParseError::Syntax { offset: 4, .. })));
        assert!(matches!(parse("q^{1/3}", 4), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("s12^{1/2}", 4), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn braced_and_four_index() {
        assert_eq!(parse("s{10,12}", 12).unwrap(), Element::gen(Gen::S2(10, 12)));
        assert_eq!(parse("t10", 12).unwrap(), Element::gen(Gen::T(10)));
        assert_eq!(parse("s1234", 4).unwrap(), s4_macro(1, 2, 3, 4).unwrap());
        assert_eq!(parse_gen("s{3,12}").unwrap(), Gen::S2(3, 12));
        assert!(parse_gen("s11").is_err());
    }

    #[test]
    fn relabeling() {
        let e = parse_with("s13", 6, &|l| Some(l + 2)).unwrap();
        assert_eq!(e, Element::gen(Gen::S2(3, 5)));
        let e = parse_with("s13", 4, &|l| Some(5 - l)).unwrap();
        assert_eq!(e, Element::gen(Gen::S2(2, 4)));
    }

    #[test]
    fn print_parse_round_trip() {
        let src = "s24 s13 + (q^2 - q^-2)*s14 s23 - q^2*s12 s34 + (q^{3/2} + 1)*b^2*t1 s123";
        let e = parse(src, 4).unwrap();
        assert_eq!(parse(&e.to_string(), 4).unwrap(), e);
    }
}
