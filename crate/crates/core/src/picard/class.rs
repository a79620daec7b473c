use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use super::bits::{Bit2, Torsion};
use super::label::{CurveLabel, Letter};
use crate::error::{Error, Result};

/// Restriction of a divisor to one elliptic generator: degree plus 2-torsion part.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Slot {
    pub deg: i64,
    pub tor: Bit2,
}

impl Slot {
    pub const fn new(deg: i64, tor: Bit2) -> Self {
        Slot { deg, tor }
    }

    fn checked_add(self, rhs: Slot) -> Result<Slot> {
        Ok(Slot { deg: self.deg.checked_add(rhs.deg).ok_or(Error::Overflow)?, tor: self.tor + rhs.tor })
    }

    fn checked_neg(self) -> Result<Slot> {
        Ok(Slot { deg: self.deg.checked_neg().ok_or(Error::Overflow)?, tor: self.tor })
    }

    fn checked_mul(self, k: i64) -> Result<Slot> {
        let tor = if k.rem_euclid(2) == 1 { self.tor } else { Bit2::ZERO };
        Ok(Slot { deg: self.deg.checked_mul(k).ok_or(Error::Overflow)?, tor })
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.deg, self.tor)
    }
}

impl fmt::Debug for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.deg, self.tor)
    }
}

/// A linear-equivalence class on X in full symmetric coordinates.
///
/// `d` is the degree against the canonical class; `slots` are the restrictions
/// to `A0, B0, C0, A3, B3, C3` in that order. Only values inside Pic X can be
/// constructed, so equality of values is linear equivalence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    d: i64,
    slots: [Slot; 6],
}

/// Numerical class `[d; a, b, c]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct NumClass {
    pub d: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl NumClass {
    pub const fn new(d: i64, a: i64, b: i64, c: i64) -> Self {
        NumClass { d, a, b, c }
    }

    /// `(d + a + b + c) / 3`, when integral.
    pub fn ell(&self) -> Option<i64> {
        let s = self.d + self.a + self.b + self.c;
        (s.rem_euclid(3) == 0).then(|| s.div_euclid(3))
    }

    pub fn ell_or_err(&self) -> Result<i64> {
        self.ell().ok_or(Error::Membership { sum: self.d + self.a + self.b + self.c })
    }

    /// `max{0, a, b, c}`.
    pub fn max_abc(&self) -> i64 {
        self.a.max(self.b).max(self.c).max(0)
    }

    /// Degrees on `A3, B3, C3`: `l-b-c, l-c-a, l-a-b`.
    pub fn starred(&self) -> Option<[i64; 3]> {
        let l = self.ell()?;
        Some([l - self.b - self.c, l - self.c - self.a, l - self.a - self.b])
    }

    pub fn is_zero(&self) -> bool {
        *self == NumClass::new(0, 0, 0, 0)
    }

    pub fn add(&self, o: &NumClass) -> NumClass {
        NumClass::new(self.d + o.d, self.a + o.a, self.b + o.b, self.c + o.c)
    }

    pub fn sub(&self, o: &NumClass) -> NumClass {
        NumClass::new(self.d - o.d, self.a - o.a, self.b - o.b, self.c - o.c)
    }

    /// The representative with all-zero truncated torsion.
    pub fn untwisted(&self) -> Result<DivisorClass> {
        DivisorClass::from_truncated(
            self.d,
            [Slot::new(self.a, Bit2::ZERO), Slot::new(self.b, Bit2::ZERO), Slot::new(self.c, Bit2::ZERO)],
        )
    }

    /// `l^2 - a^2 - b^2 - c^2`.
    pub fn self_intersection(&self) -> Option<i64> {
        let l = self.ell()?;
        Some(l * l - self.a * self.a - self.b * self.b - self.c * self.c)
    }

    /// Riemann-Roch Euler characteristic of any class in this numerical class.
    pub fn chi(&self) -> Option<i64> {
        let sq = self.self_intersection()?;
        Some((sq - self.d) / 2 + 1)
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{},{},{}]", self.d, self.a, self.b, self.c)
    }
}

fn bit(b: bool) -> i64 {
    b as i64
}

/// Starred slots determined by the truncated coordinates.
///
/// Degrees are `l-b-c, l-c-a, l-a-b`. Torsions are
/// `alpha* = (alpha1 + beta2 + c + l, alpha2)` and its rotations, mod 2.
fn derive_starred(ell: i64, t: &[Slot; 3]) -> Result<[Slot; 3]> {
    let [a, b, c] = [t[0].deg, t[1].deg, t[2].deg];
    let [al, be, ga] = [t[0].tor, t[1].tor, t[2].tor];
    let e1 = |x: Bit2, y: Bit2, n: i64| (bit(x.e1()) ^ bit(y.e2()) ^ (n & 1) ^ (ell & 1)) == 1;
    let deg = |x: i64, y: i64| ell.checked_sub(x).and_then(|v| v.checked_sub(y)).ok_or(Error::Overflow);
    Ok([
        Slot::new(deg(b, c)?, Bit2::new(e1(al, be, c), al.e2())),
        Slot::new(deg(c, a)?, Bit2::new(e1(be, ga, a), be.e2())),
        Slot::new(deg(a, b)?, Bit2::new(e1(ga, al, b), ga.e2())),
    ])
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { d: 0, slots: [Slot::new(0, Bit2::ZERO); 6] };

    /// Builds a class from `d` and its restrictions to `A0, B0, C0`.
    pub fn from_truncated(d: i64, truncated: [Slot; 3]) -> Result<Self> {
        let sum = [truncated[0].deg, truncated[1].deg, truncated[2].deg]
            .iter()
            .try_fold(d, |acc, x| acc.checked_add(*x))
            .ok_or(Error::Overflow)?;
        if sum.rem_euclid(3) != 0 {
            return Err(Error::Membership { sum });
        }
        let starred = derive_starred(sum.div_euclid(3), &truncated)?;
        let mut slots = [Slot::default(); 6];
        slots[..3].copy_from_slice(&truncated);
        slots[3..].copy_from_slice(&starred);
        Ok(DivisorClass { d, slots })
    }

    /// Builds a class from all six slots, checking the starred half.
    pub fn from_full(d: i64, slots: [Slot; 6]) -> Result<Self> {
        let c = Self::from_truncated(d, [slots[0], slots[1], slots[2]])?;
        if c.slots[3..] != slots[3..] {
            return Err(Error::StarredMismatch {
                given: format!("{} {} {}", slots[3], slots[4], slots[5]),
                derived: format!("{} {} {}", c.slots[3], c.slots[4], c.slots[5]),
            });
        }
        Ok(c)
    }

    /// Trusted constructor for coordinates already known to lie in Pic X.
    pub(crate) const fn from_raw(d: i64, slots: [Slot; 6]) -> Self {
        DivisorClass { d, slots }
    }

    pub fn from_torsion(t: Torsion) -> Self {
        let full = t.full();
        let mut slots = [Slot::default(); 6];
        for (s, b) in slots.iter_mut().zip(full) {
            s.tor = b;
        }
        DivisorClass { d: 0, slots }
    }

    /// `(D . K)`.
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn slots(&self) -> &[Slot; 6] {
        &self.slots
    }

    pub fn slot(&self, i: usize) -> Slot {
        self.slots[i]
    }

    pub fn truncated(&self) -> (i64, [Slot; 3]) {
        (self.d, [self.slots[0], self.slots[1], self.slots[2]])
    }

    pub fn num_class(&self) -> NumClass {
        NumClass::new(self.d, self.slots[0].deg, self.slots[1].deg, self.slots[2].deg)
    }

    pub fn ell(&self) -> i64 {
        let n = self.num_class();
        (n.d + n.a + n.b + n.c).div_euclid(3)
    }

    /// Truncated torsion bits `(alpha beta gamma)`.
    pub fn torsion_bits(&self) -> Torsion {
        Torsion([self.slots[0].tor, self.slots[1].tor, self.slots[2].tor])
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    pub fn is_numerically_trivial(&self) -> bool {
        self.num_class().is_zero()
    }

    /// `Some(tau)` when the class is a torsion element.
    pub fn as_torsion(&self) -> Option<Torsion> {
        self.is_numerically_trivial().then(|| self.torsion_bits())
    }

    pub fn checked_add(&self, rhs: &DivisorClass) -> Result<DivisorClass> {
        let mut slots = [Slot::default(); 6];
        for (i, slot) in slots.iter_mut().enumerate() {
            *slot = self.slots[i].checked_add(rhs.slots[i])?;
        }
        Ok(DivisorClass { d: self.d.checked_add(rhs.d).ok_or(Error::Overflow)?, slots })
    }

    pub fn checked_neg(&self) -> Result<DivisorClass> {
        let mut slots = [Slot::default(); 6];
        for (i, slot) in slots.iter_mut().enumerate() {
            *slot = self.slots[i].checked_neg()?;
        }
        Ok(DivisorClass { d: self.d.checked_neg().ok_or(Error::Overflow)?, slots })
    }

    pub fn checked_sub(&self, rhs: &DivisorClass) -> Result<DivisorClass> {
        self.checked_add(&rhs.checked_neg()?)
    }

    pub fn checked_mul(&self, k: i64) -> Result<DivisorClass> {
        let mut slots = [Slot::default(); 6];
        for (i, slot) in slots.iter_mut().enumerate() {
            *slot = self.slots[i].checked_mul(k)?;
        }
        Ok(DivisorClass { d: self.d.checked_mul(k).ok_or(Error::Overflow)?, slots })
    }

    /// Multiplication by an integer. Panics on overflow.
    pub fn times(&self, k: i64) -> DivisorClass {
        self.checked_mul(k).expect("divisor arithmetic overflow")
    }

    pub fn twist(&self, t: Torsion) -> DivisorClass {
        *self + DivisorClass::from_torsion(t)
    }

    fn checked_ell(&self) -> Result<i64> {
        let s = self.slots[..3].iter().try_fold(self.d, |acc, s| acc.checked_add(s.deg));
        Ok(s.ok_or(Error::Overflow)?.div_euclid(3))
    }

    /// Intersection pairing `l l' - a a' - b b' - c c'`.
    pub fn checked_intersect(&self, other: &DivisorClass) -> Result<i64> {
        let ov = || Error::Overflow;
        let mut acc = self.checked_ell()?.checked_mul(other.checked_ell()?).ok_or_else(ov)?;
        for i in 0..3 {
            let p = self.slots[i].deg.checked_mul(other.slots[i].deg).ok_or_else(ov)?;
            acc = acc.checked_sub(p).ok_or_else(ov)?;
        }
        Ok(acc)
    }

    /// Panics on overflow.
    pub fn intersect(&self, other: &DivisorClass) -> i64 {
        self.checked_intersect(other).expect("intersection overflow")
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    /// `(D . Z)` from the numerical class alone.
    pub fn restriction_degree(&self, label: CurveLabel) -> i64 {
        let NumClass { a, b, c, .. } = self.num_class();
        let l = self.ell();
        match (label.letter(), label.index()) {
            (Letter::A, 0) => a,
            (Letter::B, 0) => b,
            (Letter::C, 0) => c,
            (Letter::A, 3) => l - b - c,
            (Letter::B, 3) => l - c - a,
            (Letter::C, 3) => l - a - b,
            (Letter::A, _) => l - b,
            (Letter::B, _) => l - c,
            (Letter::C, _) => l - a,
        }
    }

    /// Holomorphic Euler characteristic `(D^2 - D.K)/2 + 1`.
    pub fn chi(&self) -> i64 {
        let twice = self.self_intersection() - self.d;
        assert!(twice % 2 == 0, "odd D^2 - D.K for {self}: membership invariant broken");
        twice / 2 + 1
    }

    pub fn is_nef(&self) -> bool {
        self.slots.iter().all(|s| s.deg >= 0)
    }

    pub fn is_ample(&self) -> bool {
        self.slots.iter().all(|s| s.deg > 0) && self.self_intersection() > 0
    }

    /// First slot (canonical order) with degree zero.
    pub fn first_zero_slot(&self) -> Option<usize> {
        self.slots.iter().position(|s| s.deg == 0)
    }

    /// Nef, positive degree, and every degree-zero slot carries trivial torsion.
    pub fn is_reduced_form(&self) -> bool {
        self.d > 0 && self.is_nef() && self.slots.iter().all(|s| s.deg != 0 || s.tor.is_zero())
    }

    /// Tabular row `(d | a al, b be, c ga | a* .., b* .., c* ..)`.
    pub fn table_row(&self) -> String {
        let s = |x: &Slot| format!("{} {}", x.deg, x.tor);
        format!(
            "({} | {}, {}, {} | {}, {}, {})",
            self.d,
            s(&self.slots[0]),
            s(&self.slots[1]),
            s(&self.slots[2]),
            s(&self.slots[3]),
            s(&self.slots[4]),
            s(&self.slots[5])
        )
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        self.checked_add(&rhs).expect("divisor arithmetic overflow")
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        self.checked_sub(&rhs).expect("divisor arithmetic overflow")
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.checked_neg().expect("divisor arithmetic overflow")
    }
}

impl std::iter::Sum for DivisorClass {
    fn sum<I: Iterator<Item = DivisorClass>>(iter: I) -> DivisorClass {
        iter.fold(DivisorClass::ZERO, |a, b| a + b)
    }
}

/// Canonical text form, accepted back by the parser.
impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.slots;
        write!(f, "[{}; {}, {}, {}; {}, {}, {}]", self.d, s[0], s[1], s[2], s[3], s[4], s[5])
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.table_row())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_is_checked() {
        let z = Slot::default();
        assert!(matches!(DivisorClass::from_truncated(1, [z, z, z]), Err(Error::Membership { sum: 1 })));
        assert_eq!(DivisorClass::from_truncated(0, [z, z, z]).unwrap(), DivisorClass::ZERO);
    }

    #[test]
    fn torsion_embedding_matches_full_form() {
        for t in Torsion::all() {
            let from_trunc =
                DivisorClass::from_truncated(0, [Slot::new(0, t.0[0]), Slot::new(0, t.0[1]), Slot::new(0, t.0[2])])
                    .unwrap();
            assert_eq!(from_trunc, DivisorClass::from_torsion(t));
            assert_eq!(from_trunc.as_torsion(), Some(t));
        }
    }

    #[test]
    fn numclass_ell() {
        assert_eq!(NumClass::new(6, 1, 1, 1).ell(), Some(3));
        assert_eq!(NumClass::new(1, -1, 0, 0).ell(), Some(0));
        assert_eq!(NumClass::new(1, 0, 0, 0).ell(), None);
        assert_eq!(NumClass::new(-4, 0, 0, 1).ell(), Some(-1));
    }

    #[test]
    fn overflow_traps() {
        let big =
            DivisorClass::from_truncated(i64::MAX - 2, [Slot::new(3, Bit2::ZERO), Slot::default(), Slot::default()]);
        // sum overflows while checking membership
        assert_eq!(big, Err(Error::Overflow));
        let k = NumClass::new(6, 1, 1, 1).untwisted().unwrap();
        assert_eq!(k.checked_mul(i64::MAX), Err(Error::Overflow));
    }
}
