use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::class::{DivisorClass, NumClass, Slot};
use super::label::CurveLabel;

/// Element of the order-6 coordinate symmetry group.
///
/// `rot` applies the letter cycle `A -> B -> C -> A` that many times; `flip`
/// exchanges indices `i <-> 3 - i`. Letters are never transposed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Symmetry {
    pub rot: u8,
    pub flip: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { rot: 0, flip: false };

    /// Rot-major enumeration; searches over the group use this order.
    pub const ALL: [Symmetry; 6] = [
        Symmetry { rot: 0, flip: false },
        Symmetry { rot: 0, flip: true },
        Symmetry { rot: 1, flip: false },
        Symmetry { rot: 1, flip: true },
        Symmetry { rot: 2, flip: false },
        Symmetry { rot: 2, flip: true },
    ];

    pub fn new(rot: u8, flip: bool) -> Self {
        Symmetry { rot: rot % 3, flip }
    }

    /// `self * other`: apply `other` first.
    pub fn compose(self, other: Symmetry) -> Symmetry {
        Symmetry::new(self.rot + other.rot, self.flip ^ other.flip)
    }

    pub fn inverse(self) -> Symmetry {
        Symmetry::new((3 - self.rot) % 3, self.flip)
    }

    pub fn apply_label(self, l: CurveLabel) -> CurveLabel {
        let idx = if self.flip { 3 - l.index() } else { l.index() };
        CurveLabel::new(l.letter().rotate(self.rot), idx)
    }

    /// Slot that lands in position `slot` after applying `self`.
    pub fn source_slot(self, slot: usize) -> usize {
        let (half, letter) = (slot / 3, slot % 3);
        let half = if self.flip { 1 - half } else { half };
        let letter = (letter + 3 - self.rot as usize) % 3;
        half * 3 + letter
    }

    pub fn apply(self, d: &DivisorClass) -> DivisorClass {
        let src = d.slots();
        let mut slots = [Slot::default(); 6];
        for (i, s) in slots.iter_mut().enumerate() {
            *s = src[self.source_slot(i)];
        }
        DivisorClass::from_raw(d.d(), slots)
    }

    pub fn apply_num(self, n: &NumClass) -> NumClass {
        let mut abc = [n.a, n.b, n.c];
        if self.flip {
            let l = n.ell().expect("symmetry applied to a class outside Pic X");
            abc = [l - n.b - n.c, l - n.c - n.a, l - n.a - n.b];
        }
        let r = self.rot as usize;
        let mut out = [0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = abc[(i + 3 - r) % 3];
        }
        NumClass::new(n.d, out[0], out[1], out[2])
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rot, self.flip) {
            (0, false) => f.write_str("id"),
            (r, false) => write!(f, "rot{r}"),
            (0, true) => f.write_str("flip"),
            (r, true) => write!(f, "rot{r}.flip"),
        }
    }
}

impl fmt::Debug for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All numerical classes symmetric to `n`.
pub fn orbit(n: &NumClass) -> BTreeSet<NumClass> {
    Symmetry::ALL.iter().map(|g| g.apply_num(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_structure() {
        for g in Symmetry::ALL {
            assert_eq!(g.compose(g.inverse()), Symmetry::IDENTITY);
            for h in Symmetry::ALL {
                assert_eq!(g.compose(h), h.compose(g));
            }
        }
        let set: BTreeSet<_> = Symmetry::ALL.iter().collect();
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn label_action() {
        let rot = Symmetry::new(1, false);
        assert_eq!(rot.apply_label(CurveLabel::A0), CurveLabel::B0);
        assert_eq!(rot.apply_label(CurveLabel::C2), CurveLabel::A2);
        let flip = Symmetry::new(0, true);
        assert_eq!(flip.apply_label(CurveLabel::C1), CurveLabel::C2);
        assert_eq!(flip.apply_label(CurveLabel::B0), CurveLabel::B3);
    }

    #[test]
    fn source_slots() {
        let rot = Symmetry::new(1, false);
        // new (A0,B0,C0,A3,B3,C3) <- old (C0,A0,B0,C3,A3,B3)
        let src: Vec<_> = (0..6).map(|i| rot.source_slot(i)).collect();
        assert_eq!(src, [2, 0, 1, 5, 3, 4]);
        let flip = Symmetry::new(0, true);
        let src: Vec<_> = (0..6).map(|i| flip.source_slot(i)).collect();
        assert_eq!(src, [3, 4, 5, 0, 1, 2]);
    }

    #[test]
    fn orbit_of_six_zero() {
        let o = orbit(&NumClass::new(6, 0, 0, 0));
        assert_eq!(o.into_iter().collect::<Vec<_>>(), [NumClass::new(6, 0, 0, 0), NumClass::new(6, 2, 2, 2)]);
    }
}
