//! Text syntax for divisor classes.
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := [INT ['*']] atom
//! atom  := GEN | coord | torsion | '(' expr ')'
//! GEN   := A0..A3 | B0..B3 | C0..C3 | K
//! coord := '[' INT ';' slot ',' slot ',' slot [';' slot ',' slot ',' slot] ']'
//! slot  := INT ':' BIT BIT
//! torsion := '(' six bits, whitespace allowed ')'
//! ```
//!
//! Starred slots in a coordinate literal are checked against the derived ones.

use std::str::FromStr;

use super::bits::{Bit2, Torsion};
use super::class::{DivisorClass, Slot};
use super::label::CurveLabel;
use super::{canonical_class, generator};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<DivisorClass> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let d = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(d)
}

/// Parses a torsion literal such as `(10 01 11)` or `(1 0 0 1 1 1)`.
pub fn parse_torsion(text: &str) -> Result<Torsion> {
    let d = parse(text)?;
    d.as_torsion().ok_or(Error::Parse { pos: 0, msg: format!("{text:?} is not a torsion class") })
}

impl FromStr for DivisorClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected {:?}", c as char)))
        }
    }

    fn expr(&mut self) -> Result<DivisorClass> {
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        let mut acc = DivisorClass::ZERO;
        loop {
            let t = self.term()?;
            acc = acc.checked_add(&t.checked_mul(sign)?)?;
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse().map_err(|_| Error::Parse { pos: start, msg: format!("expected integer, found {txt:?}") })
    }

    fn term(&mut self) -> Result<DivisorClass> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.int()?;
            if k == 0 && matches!(self.peek(), None | Some(b'+' | b'-' | b')')) {
                return Ok(DivisorClass::ZERO);
            }
            self.eat(b'*');
            k
        } else {
            1
        };
        self.atom()?.checked_mul(coeff)
    }

    fn atom(&mut self) -> Result<DivisorClass> {
        match self.peek() {
            Some(b'[') => self.coord(),
            Some(b'(') => {
                if self.looks_like_torsion() {
                    self.torsion()
                } else {
                    self.pos += 1;
                    let e = self.expr()?;
                    self.expect(b')')?;
                    Ok(e)
                }
            }
            Some(b'K') => {
                self.pos += 1;
                Ok(canonical_class())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let end = (start + 2).min(self.s.len());
                let txt = std::str::from_utf8(&self.s[start..end]).unwrap_or("");
                let l = CurveLabel::from_str(txt)
                    .map_err(|_| Error::Parse { pos: start, msg: format!("unknown generator {txt:?}") })?;
                self.pos = end;
                Ok(generator(l))
            }
            Some(c) => Err(self.err(format!("unexpected {:?}", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn looks_like_torsion(&self) -> bool {
        let rest = &self.s[self.pos + 1..];
        match rest.iter().position(|&c| c == b')') {
            Some(end) => {
                let body = &rest[..end];
                body.iter().any(|c| matches!(c, b'0' | b'1'))
                    && body.iter().all(|c| matches!(c, b'0' | b'1') || c.is_ascii_whitespace())
            }
            None => false,
        }
    }

    fn torsion(&mut self) -> Result<DivisorClass> {
        self.expect(b'(')?;
        let mut bits = Vec::with_capacity(6);
        loop {
            match self.peek() {
                Some(b')') => break,
                Some(c @ (b'0' | b'1')) => {
                    bits.push(c == b'1');
                    self.pos += 1;
                }
                _ => return Err(self.err("expected torsion bit")),
            }
        }
        if bits.len() != 6 {
            return Err(self.err(format!("torsion literal needs 6 bits, found {}", bits.len())));
        }
        self.pos += 1;
        let b = |i: usize| Bit2::new(bits[i], bits[i + 1]);
        Ok(DivisorClass::from_torsion(Torsion([b(0), b(2), b(4)])))
    }

    fn slot(&mut self) -> Result<Slot> {
        let deg = self.int()?;
        self.expect(b':')?;
        self.ws();
        let start = self.pos;
        let end = (start + 2).min(self.s.len());
        let tor: Bit2 = std::str::from_utf8(&self.s[start..end])
            .unwrap_or("")
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "expected two torsion bits".into() })?;
        self.pos = end;
        Ok(Slot::new(deg, tor))
    }

    fn three_slots(&mut self) -> Result<[Slot; 3]> {
        let a = self.slot()?;
        self.expect(b',')?;
        let b = self.slot()?;
        self.expect(b',')?;
        let c = self.slot()?;
        Ok([a, b, c])
    }

    fn coord(&mut self) -> Result<DivisorClass> {
        self.expect(b'[')?;
        let start = self.pos;
        let d = self.int()?;
        self.expect(b';')?;
        let t = self.three_slots()?;
        let starred = if self.eat(b';') { Some(self.three_slots()?) } else { None };
        self.expect(b']')?;
        let class = DivisorClass::from_truncated(d, t).map_err(|e| match e {
            Error::Membership { sum } => {
                Error::Parse { pos: start, msg: format!("not in Pic X: d + a + b + c = {sum} is not divisible by 3") }
            }
            e => e,
        })?;
        if let Some(st) = starred {
            DivisorClass::from_full(d, [t[0], t[1], t[2], st[0], st[1], st[2]])?;
        }
        Ok(class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_and_coefficients() {
        let d = parse("A0 + 2*B3 - C1").unwrap();
        let e = generator(CurveLabel::A0) + generator(CurveLabel::B3).times(2) - generator(CurveLabel::C1);
        assert_eq!(d, e);
        assert_eq!(parse("2B3").unwrap(), parse("2*B3").unwrap());
        assert_eq!(parse("-A0+A0").unwrap(), DivisorClass::ZERO);
        assert_eq!(parse("K").unwrap(), canonical_class());
        assert_eq!(parse("2(A0+C3+B0)").unwrap(), parse("2A0+2C3+2B0").unwrap());
    }

    #[test]
    fn coordinate_literal() {
        let d = parse("[7; 1:10, 2:01, 2:11]").unwrap();
        assert_eq!(d.d(), 7);
        assert_eq!(d.torsion_bits(), Torsion::from_bits(0b10, 0b01, 0b11));
        assert_eq!(parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn starred_part_is_validated() {
        assert_eq!(parse("[1; -1:00, 0:00, 0:00; 0:00, 1:10, 1:00]").unwrap(), generator(CurveLabel::A0));
        assert!(matches!(parse("[1; -1:00, 0:00, 0:00; 0:00, 1:00, 1:00]"), Err(Error::StarredMismatch { .. })));
    }

    #[test]
    fn torsion_literals() {
        let t = parse_torsion("(1 0 0 0 0 0)").unwrap();
        assert_eq!(t, Torsion::from_bits(0b10, 0, 0));
        assert_eq!(parse_torsion("(10 10 10)").unwrap(), Torsion::from_bits(0b10, 0b10, 0b10));
        assert!(parse("(1 0 1)").is_err());
        assert_eq!(parse("K + (00 00 10)").unwrap(), canonical_class().twist(Torsion::from_bits(0, 0, 0b10)));
    }

    #[test]
    fn error_positions() {
        match parse("A0 + D1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        match parse("[1; 0:00, 0:00, 0:00]") {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 1);
                assert!(msg.contains("divisible by 3"));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse("A0 +").is_err());
        assert!(parse("A0 A1").is_err());
        assert!(parse("").is_err());
    }
}
