//! Families of reduced forms with closed-form `h^0`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::picard::{canonical_class, generator, CurveLabel, DivisorClass, NumClass, Symmetry, Torsion};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum FamilyKind {
    ZeroClass,
    TorsionOnly,
    /// `K + tau`, class `[6;1,1,1]`.
    KTwist,
    /// `2(A0+C3+B0)`, class `[6;0,0,0]`.
    Six000,
    /// `l(A0+B3)`, class `[2l;0,0,l]`.
    L00L,
    /// `l(A0+B3)+C0`, class `[2l+1;0,0,l-1]`.
    L00Lm1,
    /// `(l-1)(A0+B3)+(C0+A3)`, class `[2l;0,1,l-1]`.
    L01Lm1,
    /// `(l-1)(C0+A3)+(A0+B3)`, class `[2l;0,l-1,1]`.
    L0Lm1_1,
    /// `l(A0+B3)+K`, class `[2l+6;1,1,l+1]`.
    L00LPlusK,
    /// `A0+K`, class `[7;0,1,1]`.
    Seven011,
    /// `A0+B0+K`, class `[8;0,0,1]`.
    Eight001,
    /// `A0+A3+K`, class `[8;0,2,2]`.
    Eight022,
}

impl FamilyKind {
    /// Families met by reduced forms whose numerical class is not 64-effective.
    pub const SMALL_E: [FamilyKind; 6] = [
        FamilyKind::KTwist,
        FamilyKind::Six000,
        FamilyKind::L00L,
        FamilyKind::L00Lm1,
        FamilyKind::L01Lm1,
        FamilyKind::L0Lm1_1,
    ];
    pub const AMPLE_BOUNDARY: [FamilyKind; 1] = [FamilyKind::L00LPlusK];
    pub const SMALL_D: [FamilyKind; 3] = [FamilyKind::Seven011, FamilyKind::Eight001, FamilyKind::Eight022];
    /// Priority order used by [`classify_reduced`].
    pub const ALL_REDUCED: [FamilyKind; 10] = [
        FamilyKind::KTwist,
        FamilyKind::Six000,
        FamilyKind::L00L,
        FamilyKind::L00Lm1,
        FamilyKind::L01Lm1,
        FamilyKind::L0Lm1_1,
        FamilyKind::L00LPlusK,
        FamilyKind::Seven011,
        FamilyKind::Eight001,
        FamilyKind::Eight022,
    ];

    /// `l` when `nc` is the numerical class of this family.
    pub fn match_num(self, nc: &NumClass) -> Option<i64> {
        let NumClass { d, a, b, c } = *nc;
        match self {
            FamilyKind::ZeroClass | FamilyKind::TorsionOnly => nc.is_zero().then_some(0),
            FamilyKind::KTwist => (*nc == NumClass::new(6, 1, 1, 1)).then_some(3),
            FamilyKind::Six000 => (*nc == NumClass::new(6, 0, 0, 0)).then_some(2),
            FamilyKind::L00L => (a == 0 && b == 0 && c >= 1 && d == 2 * c).then_some(c),
            FamilyKind::L00Lm1 => (a == 0 && b == 0 && c >= 0 && d == 2 * c + 3).then_some(c + 1),
            FamilyKind::L01Lm1 => (a == 0 && b == 1 && c >= 0 && d == 2 * c + 2).then_some(c + 1),
            FamilyKind::L0Lm1_1 => (a == 0 && c == 1 && b >= 0 && d == 2 * b + 2).then_some(b + 1),
            FamilyKind::L00LPlusK => (a == 1 && b == 1 && c >= 2 && d == 2 * c + 4).then_some(c - 1),
            FamilyKind::Seven011 => (*nc == NumClass::new(7, 0, 1, 1)).then_some(3),
            FamilyKind::Eight001 => (*nc == NumClass::new(8, 0, 0, 1)).then_some(3),
            FamilyKind::Eight022 => (*nc == NumClass::new(8, 0, 2, 2)).then_some(4),
        }
    }

    /// The torsion-free representative the family is measured against.
    pub fn base(self, ell: i64) -> Result<DivisorClass> {
        use CurveLabel as L;
        let g = generator;
        let ab = g(L::A0).checked_add(&g(L::B3))?;
        let ca = g(L::C0).checked_add(&g(L::A3))?;
        let k = canonical_class();
        match self {
            FamilyKind::ZeroClass | FamilyKind::TorsionOnly => Ok(DivisorClass::ZERO),
            FamilyKind::KTwist => Ok(k),
            FamilyKind::Six000 => (g(L::A0) + g(L::C3) + g(L::B0)).checked_mul(2),
            FamilyKind::L00L => ab.checked_mul(ell),
            FamilyKind::L00Lm1 => ab.checked_mul(ell)?.checked_add(&g(L::C0)),
            FamilyKind::L01Lm1 => ab.checked_mul(ell - 1)?.checked_add(&ca),
            FamilyKind::L0Lm1_1 => ca.checked_mul(ell - 1)?.checked_add(&ab),
            FamilyKind::L00LPlusK => ab.checked_mul(ell)?.checked_add(&k),
            FamilyKind::Seven011 => Ok(g(L::A0) + k),
            FamilyKind::Eight001 => Ok(g(L::A0) + g(L::B0) + k),
            FamilyKind::Eight022 => Ok(g(L::A0) + g(L::A3) + k),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::ZeroClass => "zero",
            FamilyKind::TorsionOnly => "torsion",
            FamilyKind::KTwist => "[6;1,1,1]",
            FamilyKind::Six000 => "[6;0,0,0]",
            FamilyKind::L00L => "[2l;0,0,l]",
            FamilyKind::L00Lm1 => "[2l+1;0,0,l-1]",
            FamilyKind::L01Lm1 => "[2l;0,1,l-1]",
            FamilyKind::L0Lm1_1 => "[2l;0,l-1,1]",
            FamilyKind::L00LPlusK => "[2l;0,0,l]+[K]",
            FamilyKind::Seven011 => "[7;0,1,1]",
            FamilyKind::Eight001 => "[8;0,0,1]",
            FamilyKind::Eight022 => "[8;0,2,2]",
        })
    }
}

/// A reduced form identified up to symmetry: `symmetry . D = base(l) + tau`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Family {
    pub kind: FamilyKind,
    pub ell: i64,
    pub tau: Torsion,
    pub symmetry: Symmetry,
}

impl Family {
    /// The normalized divisor `base(l) + tau`.
    pub fn divisor(&self) -> Result<DivisorClass> {
        Ok(self.kind.base(self.ell)?.twist(self.tau))
    }
}

/// Matches a torsion against a pattern like `"00 *1 **"` (A0, B0, C0 bits).
pub fn tau_matches(tau: Torsion, pattern: &str) -> bool {
    let bits = format!("{}{}{}", tau.0[0], tau.0[1], tau.0[2]);
    let pat: Vec<u8> = pattern.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
    debug_assert_eq!(pat.len(), 6);
    bits.bytes().zip(pat).all(|(b, p)| p == b'*' || p == b)
}

fn tau_in(tau: Torsion, set: &[&str]) -> bool {
    set.iter().any(|p| tau_matches(tau, p))
}

/// First match over the symmetry group (outer) and `kinds` (inner).
pub fn classify_with(d: &DivisorClass, kinds: &[FamilyKind]) -> Result<Family> {
    for g in Symmetry::ALL {
        let n = g.apply(d);
        let nc = n.num_class();
        for &kind in kinds {
            if let Some(ell) = kind.match_num(&nc) {
                let tau = n
                    .checked_sub(&kind.base(ell)?)?
                    .as_torsion()
                    .ok_or_else(|| Error::InternalInconsistency(format!("{kind} base is not numerically {nc}")))?;
                return Ok(Family { kind, ell, tau, symmetry: g });
            }
        }
    }
    Err(Error::gap(d))
}

/// Identifies the family of an effective divisor of reduced form.
pub fn classify_reduced(d: &DivisorClass) -> Result<Family> {
    if !d.is_reduced_form() {
        return Err(Error::Precondition(format!("{d} is not of reduced form")));
    }
    classify_with(d, &FamilyKind::ALL_REDUCED)
}

/// `h^0(K + tau)`: 0 for `tau = 0`, 2 for the three flexible torsions, 1 otherwise.
pub fn h0_k_twist(tau: Torsion) -> i64 {
    if tau.is_zero() {
        0
    } else if is_flexible(tau) {
        2
    } else {
        1
    }
}

pub fn is_flexible(tau: Torsion) -> bool {
    tau_in(tau, &["10 00 00", "00 10 00", "00 00 10"])
}

/// `h^0` of a classified reduced form.
pub fn h0_base_case(f: &Family) -> Result<i64> {
    let Family { kind, ell: l, tau, .. } = *f;
    let invalid = || Error::InvalidTau { family: kind.to_string(), tau: tau.to_string() };
    let need = |ok: bool| if ok { Ok(()) } else { Err(invalid()) };
    let is = |p: &str| tau_matches(tau, p);
    if l < 0 {
        return Err(Error::Precondition(format!("negative l = {l} for {kind}")));
    }
    let h = match kind {
        FamilyKind::ZeroClass => {
            need(tau.is_zero())?;
            1
        }
        FamilyKind::TorsionOnly => 0,
        FamilyKind::KTwist => h0_k_twist(tau),
        FamilyKind::Six000 => {
            need(tau.is_zero())?;
            3
        }
        FamilyKind::Seven011 => {
            need(is("00 ** **"))?;
            if is("00 10 00") {
                3
            } else if tau.is_zero() {
                1
            } else {
                2
            }
        }
        FamilyKind::Eight001 => {
            need(is("00 00 **"))?;
            if tau.is_zero() {
                2
            } else {
                3
            }
        }
        FamilyKind::Eight022 => {
            need(is("00 *0 **"))?;
            if is("00 10 00") {
                4
            } else if tau.is_zero() {
                2
            } else {
                3
            }
        }
        FamilyKind::L00L => {
            need(l >= 1)?;
            if l % 2 == 0 {
                need(is("00 00 *0"))?;
                if tau.is_zero() {
                    l / 2 + 1
                } else {
                    l / 2
                }
            } else {
                need(is("00 00 *1"))?;
                (l + 1) / 2
            }
        }
        FamilyKind::L00Lm1 => {
            need(l >= 1)?;
            need(if l == 1 { is("00 00 10") } else { is("00 00 **") })?;
            if tau.is_zero() {
                l / 2 + 1
            } else if is("00 00 *1") {
                (l - 1) / 2 + 1
            } else {
                l / 2
            }
        }
        FamilyKind::L01Lm1 => {
            need(l >= 1)?;
            if l == 1 {
                need(is("00 *1 00"))?;
                1
            } else {
                need(is("00 *1 **"))?;
                l - 1
            }
        }
        FamilyKind::L0Lm1_1 => match l {
            0 => return Err(invalid()),
            1 => return h0_base_case(&Family { kind: FamilyKind::L00L, ..*f }),
            2 => return h0_base_case(&Family { kind: FamilyKind::L01Lm1, ..*f }),
            _ if l % 2 == 0 => {
                need(is("00 *1 **"))?;
                l / 2
            }
            _ => {
                need(is("00 *0 **"))?;
                if tau_in(tau, &["00 00 00", "00 00 01", "00 00 11", "00 10 10"]) {
                    (l + 1) / 2
                } else {
                    (l - 1) / 2
                }
            }
        },
        FamilyKind::L00LPlusK => {
            need(l >= 1)?;
            if is("00 10 00") {
                (3 * l + 4) / 2
            } else if tau_in(tau, &["00 10 *1", "00 00 10"]) {
                (3 * l + 3) / 2
            } else if tau_in(tau, &["00 00 *1", "00 10 *0"]) {
                (3 * l + 2) / 2
            } else if tau.is_zero() {
                (3 * l + 1) / 2
            } else {
                l + 1
            }
        }
    };
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::parse;

    fn fam(kind: FamilyKind, ell: i64, tau: &str) -> Family {
        let t = if tau == "0" { Torsion::ZERO } else { crate::picard::parse_torsion(tau).unwrap() };
        Family { kind, ell, tau: t, symmetry: Symmetry::IDENTITY }
    }

    #[test]
    fn base_divisors_have_the_advertised_classes() {
        for kind in FamilyKind::ALL_REDUCED {
            for ell in 1..8 {
                let b = kind.base(ell).unwrap();
                let l = kind.match_num(&b.num_class()).unwrap();
                assert_eq!(kind.base(l).unwrap().num_class(), b.num_class(), "{kind} l={ell}");
            }
        }
        assert_eq!(FamilyKind::L00L.base(3).unwrap().num_class(), NumClass::new(6, 0, 0, 3));
        assert_eq!(FamilyKind::L00Lm1.base(3).unwrap().num_class(), NumClass::new(7, 0, 0, 2));
        assert_eq!(FamilyKind::L01Lm1.base(3).unwrap().num_class(), NumClass::new(6, 0, 1, 2));
        assert_eq!(FamilyKind::L0Lm1_1.base(3).unwrap().num_class(), NumClass::new(6, 0, 2, 1));
        assert_eq!(FamilyKind::L00LPlusK.base(2).unwrap().num_class(), NumClass::new(10, 1, 1, 3));
    }

    #[test]
    fn classify_examples() {
        let six = parse("2(A0+C3+B0)").unwrap();
        let f = classify_reduced(&six).unwrap();
        assert_eq!((f.kind, f.tau, f.symmetry), (FamilyKind::Six000, Torsion::ZERO, Symmetry::IDENTITY));
        let f = classify_reduced(&parse("A1").unwrap()).unwrap();
        assert_eq!((f.kind, f.ell), (FamilyKind::L01Lm1, 1));
        let e = parse("5(A0+B3) - 2B0 + 2C0").unwrap();
        assert!(e.is_reduced_form());
        assert!(matches!(classify_reduced(&e), Err(Error::ClassificationGap(_))));
        assert!(matches!(classify_reduced(&parse("-A0").unwrap()), Err(Error::Precondition(_))));
    }

    #[test]
    fn stated_values() {
        use FamilyKind::*;
        assert_eq!(h0_base_case(&fam(L00L, 2, "0")).unwrap(), 2);
        assert_eq!(h0_base_case(&fam(L00L, 2, "(00 00 10)")).unwrap(), 1);
        assert_eq!(h0_base_case(&fam(L00L, 3, "(00 00 01)")).unwrap(), 2);
        assert_eq!(h0_base_case(&fam(L00L, 3, "(00 00 11)")).unwrap(), 2);
        assert_eq!(h0_base_case(&fam(Seven011, 3, "(00 10 00)")).unwrap(), 3);
        assert_eq!(h0_base_case(&fam(L00LPlusK, 1, "(10 00 00)")).unwrap(), 2);
        assert_eq!(h0_base_case(&fam(L0Lm1_1, 3, "(00 10 10)")).unwrap(), 2);
        assert!(matches!(h0_base_case(&fam(L00L, 2, "(00 00 01)")), Err(Error::InvalidTau { .. })));
        assert!(matches!(h0_base_case(&fam(Six000, 2, "(10 00 00)")), Err(Error::InvalidTau { .. })));
    }

    #[test]
    fn k_twists() {
        assert_eq!(h0_k_twist(Torsion::ZERO), 0);
        assert_eq!(h0_k_twist(Torsion::from_bits(0b10, 0, 0)), 2);
        assert_eq!(h0_k_twist(Torsion::from_bits(0b10, 0b10, 0b10)), 1);
        assert_eq!(Torsion::all().map(h0_k_twist).sum::<i64>(), 66);
    }
}
