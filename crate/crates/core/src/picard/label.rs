use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Letter {
        Letter::ALL[i % 3]
    }

    /// The cyclic shift `A -> B -> C -> A`, applied `k` times.
    pub fn rotate(self, k: u8) -> Letter {
        Letter::from_index(self.index() + k as usize)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "A",
            Letter::B => "B",
            Letter::C => "C",
        })
    }
}

/// One of the twelve generator curves `A0..A3, B0..B3, C0..C3`.
///
/// Indices 0 and 3 are the elliptic (-1)-curves; 1 and 2 the genus-2 curves.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveLabel {
    letter: Letter,
    index: u8,
}

impl CurveLabel {
    pub const fn new(letter: Letter, index: u8) -> Self {
        assert!(index < 4);
        CurveLabel { letter, index }
    }

    pub const A0: CurveLabel = CurveLabel::new(Letter::A, 0);
    pub const A1: CurveLabel = CurveLabel::new(Letter::A, 1);
    pub const A2: CurveLabel = CurveLabel::new(Letter::A, 2);
    pub const A3: CurveLabel = CurveLabel::new(Letter::A, 3);
    pub const B0: CurveLabel = CurveLabel::new(Letter::B, 0);
    pub const B1: CurveLabel = CurveLabel::new(Letter::B, 1);
    pub const B2: CurveLabel = CurveLabel::new(Letter::B, 2);
    pub const B3: CurveLabel = CurveLabel::new(Letter::B, 3);
    pub const C0: CurveLabel = CurveLabel::new(Letter::C, 0);
    pub const C1: CurveLabel = CurveLabel::new(Letter::C, 1);
    pub const C2: CurveLabel = CurveLabel::new(Letter::C, 2);
    pub const C3: CurveLabel = CurveLabel::new(Letter::C, 3);

    /// Letter-major order `A0, A1, A2, A3, B0, ..., C3`.
    pub const ALL: [CurveLabel; 12] = [
        Self::A0,
        Self::A1,
        Self::A2,
        Self::A3,
        Self::B0,
        Self::B1,
        Self::B2,
        Self::B3,
        Self::C0,
        Self::C1,
        Self::C2,
        Self::C3,
    ];

    /// The elliptic curves in canonical slot order `A0, B0, C0, A3, B3, C3`.
    pub const ELLIPTIC: [CurveLabel; 6] = [Self::A0, Self::B0, Self::C0, Self::A3, Self::B3, Self::C3];

    pub fn letter(self) -> Letter {
        self.letter
    }

    pub fn index(self) -> u8 {
        self.index
    }

    /// Position in [`CurveLabel::ALL`].
    pub fn ordinal(self) -> usize {
        self.letter.index() * 4 + self.index as usize
    }

    pub fn is_elliptic(self) -> bool {
        self.index == 0 || self.index == 3
    }

    /// Position in the canonical six-slot order, for elliptic curves.
    pub fn slot(self) -> Option<usize> {
        match self.index {
            0 => Some(self.letter.index()),
            3 => Some(3 + self.letter.index()),
            _ => None,
        }
    }

    pub fn from_slot(slot: usize) -> CurveLabel {
        CurveLabel::ELLIPTIC[slot]
    }

    pub fn with_index(self, index: u8) -> CurveLabel {
        CurveLabel::new(self.letter, index)
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.index)
    }
}

impl fmt::Debug for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CurveLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let b = s.as_bytes();
        let err = || Error::Parse { pos: 0, msg: format!("unknown curve label {s:?}") };
        if b.len() != 2 {
            return Err(err());
        }
        let letter = match b[0] {
            b'A' => Letter::A,
            b'B' => Letter::B,
            b'C' => Letter::C,
            _ => return Err(err()),
        };
        match b[1] {
            b'0'..=b'3' => Ok(CurveLabel::new(letter, b[1] - b'0')),
            _ => Err(err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_labels() {
        for (i, l) in CurveLabel::ALL.iter().enumerate() {
            assert_eq!(l.ordinal(), i);
            assert_eq!(l.to_string().parse::<CurveLabel>().unwrap(), *l);
        }
        assert_eq!(CurveLabel::ALL.iter().filter(|l| l.is_elliptic()).count(), 6);
        for (s, l) in CurveLabel::ELLIPTIC.iter().enumerate() {
            assert_eq!(l.slot(), Some(s));
        }
        assert!("D0".parse::<CurveLabel>().is_err());
        assert!("A4".parse::<CurveLabel>().is_err());
    }
}
