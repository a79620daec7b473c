use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of (Z/2)^2, written `e1e2`.
///
/// Identifies the 2-torsion points of an elliptic generator curve. `00` is the
/// chosen origin; addition is componentwise XOR.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bit2(u8);

impl Bit2 {
    pub const ZERO: Bit2 = Bit2(0);
    pub const B01: Bit2 = Bit2(0b01);
    pub const B10: Bit2 = Bit2(0b10);
    pub const B11: Bit2 = Bit2(0b11);

    pub const fn new(e1: bool, e2: bool) -> Self {
        Bit2(((e1 as u8) << 1) | e2 as u8)
    }

    /// Low two bits of `v`, `e1` being the higher one.
    pub const fn from_u8(v: u8) -> Self {
        Bit2(v & 0b11)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn e1(self) -> bool {
        self.0 & 0b10 != 0
    }

    pub const fn e2(self) -> bool {
        self.0 & 0b01 != 0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Bit2 {
    type Output = Bit2;
    fn add(self, rhs: Bit2) -> Bit2 {
        Bit2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Bit2 {
    fn add_assign(&mut self, rhs: Bit2) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for Bit2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.e1() as u8, self.e2() as u8)
    }
}

impl fmt::Debug for Bit2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Bit2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let b = s.as_bytes();
        let bit = |c: u8, pos: usize| match c {
            b'0' => Ok(false),
            b'1' => Ok(true),
            _ => Err(Error::Parse { pos, msg: format!("expected bit, found {:?}", c as char) }),
        };
        if b.len() != 2 {
            return Err(Error::Parse { pos: 0, msg: format!("expected two bits, found {s:?}") });
        }
        Ok(Bit2::new(bit(b[0], 0)?, bit(b[1], 1)?))
    }
}

impl Serialize for Bit2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A numerically trivial class, recorded by its restrictions to `A0`, `B0`, `C0`.
///
/// There are exactly 64 of them. The restrictions to `A3`, `B3`, `C3` are
/// determined by the truncated bits, see [`Torsion::full`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Torsion(pub [Bit2; 3]);

impl Torsion {
    pub const ZERO: Torsion = Torsion([Bit2::ZERO; 3]);

    /// Packs the six bits `a1 a2 b1 b2 c1 c2` with `a1` most significant.
    pub fn from_index(i: u8) -> Self {
        assert!(i < 64, "torsion index out of range");
        Torsion([Bit2::from_u8(i >> 4), Bit2::from_u8(i >> 2), Bit2::from_u8(i)])
    }

    pub fn index(self) -> u8 {
        (self.0[0].bits() << 4) | (self.0[1].bits() << 2) | self.0[2].bits()
    }

    pub fn from_bits(a: u8, b: u8, c: u8) -> Self {
        Torsion([Bit2::from_u8(a), Bit2::from_u8(b), Bit2::from_u8(c)])
    }

    pub fn is_zero(self) -> bool {
        self == Torsion::ZERO
    }

    /// All 64 torsion elements, ordered by [`Torsion::index`].
    pub fn all() -> impl Iterator<Item = Torsion> {
        (0..64u8).map(Torsion::from_index)
    }

    /// The twelve-bit form `(a1a2 b1b2 c1c2 | (a1+b2)a2 (b1+c2)b2 (c1+a2)c2)`.
    pub fn full(self) -> [Bit2; 6] {
        let [a, b, c] = self.0;
        [
            a,
            b,
            c,
            Bit2::new(a.e1() ^ b.e2(), a.e2()),
            Bit2::new(b.e1() ^ c.e2(), b.e2()),
            Bit2::new(c.e1() ^ a.e2(), c.e2()),
        ]
    }
}

impl Add for Torsion {
    type Output = Torsion;
    fn add(self, rhs: Torsion) -> Torsion {
        Torsion([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl fmt::Display for Torsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {} {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Torsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Torsion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit2_group_law() {
        for x in 0..4 {
            for y in 0..4 {
                let (p, q) = (Bit2::from_u8(x), Bit2::from_u8(y));
                assert_eq!(p + q, q + p);
                assert_eq!(p + q + q, p);
            }
            assert_eq!(Bit2::from_u8(x) + Bit2::ZERO, Bit2::from_u8(x));
        }
        assert_eq!(Bit2::B01 + Bit2::B11, Bit2::B10);
    }

    #[test]
    fn bit2_text() {
        assert_eq!(Bit2::B10.to_string(), "10");
        assert_eq!("01".parse::<Bit2>().unwrap(), Bit2::B01);
        assert!("2".parse::<Bit2>().is_err());
        assert!("012".parse::<Bit2>().is_err());
    }

    #[test]
    fn torsion_index_roundtrip() {
        assert_eq!(Torsion::all().count(), 64);
        for t in Torsion::all() {
            assert_eq!(Torsion::from_index(t.index()), t);
        }
        assert_eq!(Torsion::from_index(0b10_00_00).to_string(), "(10 00 00)");
    }

    #[test]
    fn torsion_full_form() {
        // (10 10 10) -> starred part ((1+0)0 (1+0)0 (1+0)0)
        let t = Torsion::from_bits(0b10, 0b10, 0b10);
        assert_eq!(t.full()[3..], [Bit2::B10; 3]);
        // (01 00 00): a2 feeds A3 and C3
        let t = Torsion::from_bits(0b01, 0, 0);
        assert_eq!(t.full()[3..], [Bit2::B01, Bit2::ZERO, Bit2::B10]);
    }
}
